// Acceptance suite: end-to-end checks over the committed corpora, one
// pass/fail line per criterion. --slow extends the divisibility and
// colouring scans from n<=8 to the n=9 slice.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "forkdiv/canonical.hpp"
#include "forkdiv/divisibility.hpp"
#include "forkdiv/graph6.hpp"
#include "forkdiv/holes.hpp"
#include "forkdiv/patterns.hpp"
#include "forkdiv/scan.hpp"
#include "helpers.hpp"

#ifndef FORKDIV_TEST_DATA
#define FORKDIV_TEST_DATA "tests/data"
#endif

using namespace forkdiv;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void verdict(int criterion, bool pass, const std::string& text, double secs) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", secs);
  std::cout << "criterion " << criterion << " [" << (pass ? "pass" : "FAIL")
            << "] " << text << " (" << buf << "s)" << std::endl;
  if (!pass) ++failures;
}

std::string data_file(const std::string& name) {
  return std::string(FORKDIV_TEST_DATA) + "/" + name;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "missing fixture: " << path << "\n";
    std::exit(2);
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::string concat_fixtures(int max_n, bool with_n9_slice) {
  std::string corpus;
  for (int n = 1; n <= std::min(max_n, 7); ++n)
    for (const auto& l : read_lines(data_file("graphs_n" + std::to_string(n) + ".g6")))
      corpus += l + "\n";
  if (max_n >= 8)
    for (const auto& l : read_lines(data_file("graphs_n8.g6"))) corpus += l + "\n";
  if (with_n9_slice)
    for (const auto& l : read_lines(data_file("forkfree_n9.g6"))) corpus += l + "\n";
  return corpus;
}

harness::ScanOptions base_options() {
  harness::ScanOptions opt;
  opt.jobs = 8;
  opt.cache_path =
      (std::filesystem::temp_directory_path() / "forkdiv-acceptance-cache.tsv")
          .string();
  return opt;
}

harness::ScanReport scan_string(harness::ScanMode mode, const std::string& corpus,
                                const harness::ScanOptions& opt) {
  std::istringstream in(corpus);
  return harness::run_scan(mode, in, opt);
}

// ---------------------------------------------------------------------------

void criterion_1_perfection_agreement() {
  const auto t0 = Clock::now();
  long checked = 0, disagreements = 0;
  for (int n = 1; n <= 7; ++n)
    for (const auto& line : read_lines(data_file("graphs_n" + std::to_string(n) + ".g6"))) {
      const Graph g = parse_graph6(line);
      ++checked;
      if (patterns::is_perfect(g, patterns::PerfectionMode::Spgt).perfect !=
          patterns::is_perfect(g, patterns::PerfectionMode::Brute).perfect)
        ++disagreements;
    }
  const long exhaustive = checked;
  std::mt19937 rng(20260808);
  for (int n : {8, 9, 10})
    for (int i = 0; i < 1000; ++i) {
      const Graph g = testutil::random_graph(n, rng);
      ++checked;
      if (patterns::is_perfect(g, patterns::PerfectionMode::Spgt).perfect !=
          patterns::is_perfect(g, patterns::PerfectionMode::Brute).perfect)
        ++disagreements;
    }
  const double secs = seconds_since(t0);
  verdict(1, disagreements == 0 && secs < 300.0,
          "perfection oracles agree on " + std::to_string(exhaustive) +
              " exhaustive (n<=7) and 3000 random (n=8..10) graphs, " +
              std::to_string(disagreements) + " disagreements",
          secs);
}

void pd_theorem_check(int criterion, const std::string& free_csv,
                      const char* label, bool slow) {
  const auto t0 = Clock::now();
  harness::ScanOptions opt = base_options();
  opt.connected_only = true;
  std::stringstream tokens(free_csv);
  std::string tok;
  while (std::getline(tokens, tok, ','))
    opt.free_patterns.push_back(*patterns::parse_token(tok));
  const auto report =
      scan_string(harness::ScanMode::Pd, concat_fixtures(8, slow), opt);
  const double secs = seconds_since(t0);
  const double budget = slow ? 3600.0 : 600.0;
  const bool pass = report.violations == 0 && report.scanned > 0 &&
                    report.counters.count("pd") &&
                    report.counters.at("pd") == report.scanned && secs < budget;
  verdict(criterion, pass,
          std::string(label) + ": " + std::to_string(report.scanned) +
              " connected graphs (n<=" + (slow ? "9" : "8") +
              ") all certify PD, zero counterexamples",
          secs);
}

void criterion_4_coloring_bound(bool slow) {
  const auto t0 = Clock::now();
  bool pass = true;
  long total = 0;
  for (const char* free_csv : {"fork,p7", "fork,p6k1"}) {
    harness::ScanOptions opt = base_options();
    opt.connected_only = true;
    opt.certify = true;
    std::stringstream tokens{std::string(free_csv)};
    std::string tok;
    while (std::getline(tokens, tok, ','))
      opt.free_patterns.push_back(*patterns::parse_token(tok));
    const auto report =
        scan_string(harness::ScanMode::Color, concat_fixtures(8, slow), opt);
    total += report.scanned;
    if (report.violations != 0 || report.scanned == 0 ||
        !report.counters.count("colored") ||
        report.counters.at("colored") != report.scanned)
      pass = false;
  }
  verdict(4, pass,
          "recursive colouring succeeds on " + std::to_string(total) +
              " graphs from both corpora: proper, within omega(omega+1)/2, "
              "and at least chi",
          seconds_since(t0));
}

void criterion_5_minimal_hunt() {
  const auto t0 = Clock::now();
  // all fork-free graphs up to n=9, disconnected included
  harness::ScanOptions opt = base_options();
  opt.free_patterns = {{patterns::PatternKind::Fork, 0}};
  const auto report =
      scan_string(harness::ScanMode::Conjecture, concat_fixtures(8, true), opt);
  bool hits_claw_free = true;
  for (const auto& c : report.counterexamples)
    if (c.kind == "minimal-non-pd-with-claw") hits_claw_free = false;
  const long hits = report.counters.count("minimal-non-pd")
                        ? report.counters.at("minimal-non-pd")
                        : 0;
  if (!report.counterexamples.empty()) {
    harness::emit_report(report, "json", "acceptance-minimal-hits.json");
    std::cout << "  counterexample artifact: acceptance-minimal-hits.json\n";
  }
  verdict(5, (hits == 0 || hits_claw_free) && report.scanned > 20000,
          "minimal-non-PD hunt over " + std::to_string(report.scanned) +
              " fork-free graphs (n<=9): " + std::to_string(hits) +
              " hits (expected 0)",
          seconds_since(t0));
}

void criteria_6_7_lemma_ledger() {
  const auto t0 = Clock::now();
  harness::ScanOptions opt = base_options();
  opt.free_patterns = {{patterns::PatternKind::Fork, 0}};
  const auto report =
      scan_string(harness::ScanMode::Lemmas, concat_fixtures(8, true), opt);
  long tier1_checks = 0, tier1_violations = 0;
  long tier2_violated = 0, tier2_resolved = 0, tier2_unresolved = 0;
  for (const auto& [id, s] : report.verdicts) {
    if (s.tier == 1) {
      tier1_checks += s.checks;
      tier1_violations += s.violated;
    } else {
      tier2_violated += s.violated;
      tier2_resolved += s.resolved;
      tier2_unresolved += s.unresolved;
    }
  }
  const double secs = seconds_since(t0);
  verdict(6, tier1_violations == 0 && tier1_checks > 0 && secs < 1800.0,
          "tier-1 ledger: " + std::to_string(tier1_checks) +
              " gated checks over all fork-free graphs n<=9, " +
              std::to_string(tier1_violations) + " violations",
          secs);
  verdict(7, tier2_unresolved == 0 && tier2_violated > 0 &&
              tier2_resolved == tier2_violated,
          "tier-2 ledger: " + std::to_string(tier2_violated) +
              " conclusion violations, all " + std::to_string(tier2_resolved) +
              " resolved by non-minimality certificates, 0 unresolved",
          secs);
}

void criterion_8_fast_path() {
  const auto t0 = Clock::now();
  std::mt19937 rng(424242);
  long sampled = 0, valid = 0;
  while (sampled < 1000) {
    const int n = 4 + static_cast<int>(rng() % 7u);  // 4..10
    const Graph g = testutil::random_graph(n, rng);
    int chosen = -1;
    for (int v = 0; v < n && chosen < 0; ++v) {
      const VertexSet m = g.non_neighborhood(v);
      if (m.empty() ||
          patterns::is_perfect(g.induced(m), patterns::PerfectionMode::Spgt)
              .perfect)
        chosen = v;
    }
    if (chosen < 0) continue;
    ++sampled;
    const auto cert = divisibility::fast_path_division(g, chosen);
    if (cert && divisibility::validate_certificate(g, *cert, true)) ++valid;
  }
  verdict(8, valid == 1000,
          "fast-path division validates on " + std::to_string(valid) +
              "/1000 random graphs (n<=10) with a perfect non-neighbourhood",
          seconds_since(t0));
}

void criterion_9_infrastructure() {
  const auto t0 = Clock::now();
  // 9a: graph6 round-trip identity over the full n<=8 fixture
  long lines = 0, round_trip_bad = 0;
  std::vector<std::string> all8;
  for (int n = 1; n <= 8; ++n) {
    const auto file = "graphs_n" + std::to_string(n) + ".g6";
    for (const auto& line : read_lines(data_file(file))) {
      ++lines;
      if (to_graph6(parse_graph6(line)) != line) ++round_trip_bad;
      all8.push_back(line);
    }
  }
  // 9b: canonical invariance on a 1000-graph sample, 50 relabelings each
  std::mt19937 rng(5150);
  long invariance_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Graph g = parse_graph6(all8[rng() % all8.size()]);
    const CanonicalForm expect = canonical_form(g);
    for (int rep = 0; rep < 50; ++rep) {
      const auto perm = testutil::random_permutation(g.size(), rng);
      if (!(canonical_form(g.relabeled(perm)) == expect)) ++invariance_bad;
    }
  }
  // 9c: replay determinism of reports under jobs 1 vs jobs 8
  std::string corpus;
  for (const auto& l : read_lines(data_file("forkfree_n8.g6"))) corpus += l + "\n";
  harness::ScanOptions opt1 = base_options();
  opt1.jobs = 1;
  harness::ScanOptions opt8 = base_options();
  opt8.jobs = 8;
  auto scrub = [](harness::ScanReport r) {
    r.filter_ms = r.scan_ms = r.total_ms = 0;
    return harness::report_to_json(r);
  };
  const bool replay_same =
      scrub(scan_string(harness::ScanMode::Lemmas, corpus, opt1)) ==
      scrub(scan_string(harness::ScanMode::Lemmas, corpus, opt8));

  verdict(9, round_trip_bad == 0 && lines == 13598 && invariance_bad == 0 &&
              replay_same,
          "graph6 round-trip on " + std::to_string(lines) +
              " fixture lines, canonical invariance on 1000x50 relabelings, "
              "jobs-1/jobs-8 reports identical",
          seconds_since(t0));
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--slow") slow = true;

  std::cout << "acceptance suite (" << (slow ? "with" : "without")
            << " the n=9 divisibility extension)\n";
  criterion_1_perfection_agreement();
  pd_theorem_check(2, "fork,p7", "fork- and P7-free graphs are perfectly divisible",
                   slow);
  pd_theorem_check(3, "fork,p6k1",
                   "fork- and (P6+K1)-free graphs are perfectly divisible", slow);
  criterion_4_coloring_bound(slow);
  criterion_5_minimal_hunt();
  criteria_6_7_lemma_ledger();
  criterion_8_fast_path();
  criterion_9_infrastructure();

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
