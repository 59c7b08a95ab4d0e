#include "forkdiv/scan.hpp"

#include <atomic>
#include <chrono>
#include <istream>
#include <ostream>
#include <thread>

#include "forkdiv/cache.hpp"
#include "forkdiv/canonical.hpp"
#include "forkdiv/coloring.hpp"
#include "forkdiv/divisibility.hpp"
#include "forkdiv/graph6.hpp"
#include "forkdiv/holes.hpp"
#include "forkdiv/lemmas.hpp"

namespace forkdiv::harness {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct WorkItem {
  long line = 0;
  std::string graph6;
  Graph graph{1};
};

struct ItemResult {
  GraphRow row;
  std::vector<Counterexample> counterexamples;
  std::vector<lemmas::LemmaVerdict> verdicts;
  long violations = 0;
  bool over_cap = false;
};

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(xs[i]);
  }
  return out;
}

void scan_perfect(const WorkItem& item, const ScanOptions& opt, ItemResult& res) {
  const Graph& g = item.graph;
  auto describe = [](const patterns::PerfectionResult& pr) {
    if (pr.perfect) return std::string("perfect");
    if (pr.hole) {
      const char* kind =
          pr.hole->kind == patterns::HoleKind::Hole ? "odd hole" : "odd antihole";
      return std::string(kind) + " [" + join_ints(pr.hole->cycle) + "]";
    }
    return "chi>omega on [" + join_ints(pr.subgraph->to_vector()) + "]";
  };
  if (opt.perfect_mode == "cross") {
    const auto spgt = patterns::is_perfect(g, patterns::PerfectionMode::Spgt,
                                           opt.caps.perfect_brute,
                                           opt.caps.perfect_spgt);
    const auto brute = patterns::is_perfect(g, patterns::PerfectionMode::Brute,
                                            opt.caps.perfect_brute,
                                            opt.caps.perfect_spgt);
    if (spgt.perfect != brute.perfect) {
      res.violations += 1;
      res.row = {item.line, item.graph6, "disagreement",
                 "spgt=" + describe(spgt) + " brute=" + describe(brute)};
      res.counterexamples.push_back(
          {item.line, item.graph6, "perfect-cross", "", res.row.detail});
      return;
    }
    res.row = {item.line, item.graph6, spgt.perfect ? "perfect" : "imperfect",
               describe(spgt)};
    return;
  }
  const auto mode = opt.perfect_mode == "brute" ? patterns::PerfectionMode::Brute
                                                : patterns::PerfectionMode::Spgt;
  const auto pr = patterns::is_perfect(g, mode, opt.caps.perfect_brute,
                                       opt.caps.perfect_spgt);
  res.row = {item.line, item.graph6, pr.perfect ? "perfect" : "imperfect",
             describe(pr)};
}

void scan_pd(const WorkItem& item, const ScanOptions& opt,
             divisibility::MemoCache& cache, ItemResult& res) {
  const auto st = divisibility::is_perfectly_divisible(item.graph, cache,
                                                       opt.caps.pd);
  if (st.state == divisibility::PDState::PD) {
    res.row = {item.line, item.graph6, "pd", ""};
    return;
  }
  res.violations += 1;
  const std::string witness = st.witness ? st.witness->bytes : "";
  res.row = {item.line, item.graph6, "npd", "minimal witness " + witness};
  res.counterexamples.push_back(
      {item.line, item.graph6, "npd", "", "minimal witness " + witness});
}

void scan_conjecture(const WorkItem& item, const ScanOptions& opt,
                     divisibility::MemoCache& cache, ItemResult& res) {
  const Graph& g = item.graph;
  const auto minimality = divisibility::is_minimal_non_pd(g, cache, opt.caps.pd);
  if (!minimality.minimal_non_pd) {
    std::string how = minimality.division
                          ? "division " +
                                divisibility::certificate_to_json(*minimality.division)
                          : "non-pd subgraph " + minimality.non_pd_subgraph->bytes;
    res.row = {item.line, item.graph6, "not-minimal", how};
    return;
  }
  // A hit. Expected empty; recorded as a counterexample artifact either way,
  // with the claw-freeness post-check alongside.
  res.violations += 1;
  const auto claw = patterns::contains_induced(
      g, patterns::build_named_graph({patterns::PatternKind::Claw, 0}));
  const std::string claw_note =
      claw ? "contains claw [" + join_ints(*claw) + "]" : "claw-free";
  res.row = {item.line, item.graph6, "minimal-non-pd", claw_note};
  res.counterexamples.push_back(
      {item.line, item.graph6, "minimal-non-pd", "", claw_note});
  if (claw)
    res.counterexamples.push_back({item.line, item.graph6,
                                   "minimal-non-pd-with-claw", "", claw_note});
}

void scan_color(const WorkItem& item, const ScanOptions& opt, ItemResult& res) {
  const Graph& g = item.graph;
  const auto outcome = divisibility::color_via_perfect_division(g, opt.caps.division);
  if (!outcome.certificate) {
    res.violations += 1;
    res.row = {item.line, item.graph6, "stuck",
               "no division on [" + join_ints(outcome.stuck.to_vector()) + "]"};
    res.counterexamples.push_back(
        {item.line, item.graph6, "color-stuck", "", res.row.detail});
    return;
  }
  const auto& cert = *outcome.certificate;
  std::string problem;
  if (!coloring_is_proper(g, cert.colors)) problem = "improper coloring";
  if (problem.empty() && cert.colors_used > cert.bound)
    problem = "bound exceeded: " + std::to_string(cert.colors_used) + " > " +
              std::to_string(cert.bound);
  if (problem.empty() && opt.certify && g.size() <= opt.caps.chi_exact) {
    const int chi = chromatic_number_exact(g, opt.caps.chi_exact).chi;
    if (cert.colors_used < chi)
      problem = "below chi: " + std::to_string(cert.colors_used) + " < " +
                std::to_string(chi);
  }
  if (!problem.empty()) {
    res.violations += 1;
    res.row = {item.line, item.graph6, "invalid-certificate", problem};
    res.counterexamples.push_back(
        {item.line, item.graph6, "color-invalid", "", problem});
    return;
  }
  res.row = {item.line, item.graph6, "colored",
             std::to_string(cert.colors_used) + "<=" + std::to_string(cert.bound)};
}

void scan_lemmas(const WorkItem& item, const ScanOptions& opt,
                 divisibility::MemoCache& cache, ItemResult& res) {
  const Graph& g = item.graph;
  res.verdicts = lemmas::check_graph(g, opt.tier, opt.caps.context);

  // One non-minimality certificate per graph discharges every tier-2
  // violation on it.
  bool resolved_known = false;
  divisibility::MinimalityResult minimality;
  long tier1_bad = 0, unresolved = 0;
  for (auto& v : res.verdicts) {
    if (v.conclusion != lemmas::ConclusionStatus::Violated) continue;
    if (v.tier == 1) {
      ++tier1_bad;
      res.counterexamples.push_back({item.line, item.graph6, "tier1-violation",
                                     v.id,
                                     v.detail + " [" + join_ints(v.violating) + "]"});
      continue;
    }
    if (g.size() > opt.caps.pd) {
      v.resolution = lemmas::Resolution::Unresolved;
      v.resolution_detail = "over pd cap";
      ++unresolved;
      res.counterexamples.push_back(
          {item.line, item.graph6, "unresolved-tier2", v.id, v.resolution_detail});
      continue;
    }
    if (!resolved_known) {
      minimality = divisibility::is_minimal_non_pd(g, cache, opt.caps.pd);
      resolved_known = true;
    }
    if (minimality.minimal_non_pd) {
      v.resolution = lemmas::Resolution::Unresolved;
      v.resolution_detail = "graph is minimal non perfectly divisible";
      ++unresolved;
      res.counterexamples.push_back(
          {item.line, item.graph6, "unresolved-tier2", v.id, v.resolution_detail});
    } else {
      v.resolution = lemmas::Resolution::Certified;
      v.resolution_detail =
          minimality.division
              ? "division " + divisibility::certificate_to_json(*minimality.division)
              : "non-pd subgraph " + minimality.non_pd_subgraph->bytes;
    }
  }
  res.violations = tier1_bad + unresolved;
  res.row = {item.line, item.graph6,
             res.violations ? "violations" : "ok",
             res.violations ? std::to_string(tier1_bad) + " tier-1, " +
                                  std::to_string(unresolved) + " unresolved tier-2"
                            : ""};
}

}  // namespace

std::string to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::Filter: return "filter";
    case ScanMode::Lemmas: return "lemmas";
    case ScanMode::Conjecture: return "conjecture";
    case ScanMode::Color: return "color";
    case ScanMode::Perfect: return "perfect";
    case ScanMode::Pd: return "pd";
  }
  return "?";
}

ScanReport run_scan(ScanMode mode, std::istream& corpus, const ScanOptions& opt) {
  const auto t0 = Clock::now();
  ScanReport report;
  report.ledger_version = std::string(lemmas::kLedgerVersion);
  report.corpus_id = opt.corpus_id;
  report.mode = to_string(mode);

  std::vector<Graph> free_graphs;
  for (const auto& name : opt.free_patterns)
    free_graphs.push_back(patterns::build_named_graph(name));

  // Phase 1: parse and filter, sequential.
  std::vector<WorkItem> items;
  std::string raw;
  long line_no = 0;
  while (std::getline(corpus, raw)) {
    ++line_no;
    const std::string_view line = strip_graph6_header(raw);
    if (line.empty()) continue;
    ++report.lines_read;
    Graph g{1};
    try {
      g = parse_graph6(line);
    } catch (const DecodeError& e) {
      ++report.parse_errors;
      report.rows.push_back({line_no, std::string(line), "parse-error", e.what()});
      continue;
    }
    if (opt.max_n > 0 && g.size() > opt.max_n) {
      ++report.filtered_out;
      continue;
    }
    if (opt.connected_only && !g.connected()) {
      ++report.filtered_out;
      continue;
    }
    bool dropped = false;
    for (const auto& h : free_graphs)
      if (patterns::contains_induced(g, h)) {
        dropped = true;
        break;
      }
    if (dropped) {
      ++report.filtered_out;
      continue;
    }
    items.push_back({line_no, std::string(line), std::move(g)});
  }
  report.filter_ms = ms_since(t0);

  // Phase 2: per-mode pipeline, worker pool over items.
  const auto t1 = Clock::now();
  divisibility::MemoCache cache;
  if (!opt.cache_path.empty()) {
    const PDCache persisted = cache_load(opt.cache_path);
    for (const auto& [key, pd] : persisted.entries) cache.insert(key, pd);
    cache.drain_new();  // preloaded entries are not new
  }

  std::vector<ItemResult> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      ItemResult& res = results[i];
      const WorkItem& item = items[i];
      try {
        switch (mode) {
          case ScanMode::Filter:
            res.row = {item.line, item.graph6, "kept", ""};
            break;
          case ScanMode::Perfect:
            scan_perfect(item, opt, res);
            break;
          case ScanMode::Pd:
            scan_pd(item, opt, cache, res);
            break;
          case ScanMode::Conjecture:
            scan_conjecture(item, opt, cache, res);
            break;
          case ScanMode::Color:
            scan_color(item, opt, res);
            break;
          case ScanMode::Lemmas:
            scan_lemmas(item, opt, cache, res);
            break;
        }
      } catch (const CapabilityError& e) {
        res.over_cap = true;
        res.row = {item.line, item.graph6, "over-cap", e.what()};
      }
    }
  };
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Phase 3: ordered merge.
  for (std::size_t i = 0; i < items.size(); ++i) {
    ItemResult& res = results[i];
    if (res.over_cap) {
      ++report.over_cap;
      report.rows.push_back(res.row);
      continue;
    }
    ++report.scanned;
    report.violations += res.violations;
    ++report.counters[res.row.outcome];
    report.rows.push_back(res.row);
    for (auto& c : res.counterexamples)
      report.counterexamples.push_back(std::move(c));
    for (const auto& v : res.verdicts) {
      LemmaSummary& s = report.verdicts[v.id];
      if (s.id.empty()) {
        s.id = v.id;
        s.tier = v.tier;
      }
      ++s.checks;
      if (v.gate_status == lemmas::GateStatus::Fail) {
        ++s.gates_failed;
        continue;
      }
      if (v.conclusion == lemmas::ConclusionStatus::Holds) ++s.holds;
      if (v.conclusion == lemmas::ConclusionStatus::Violated) {
        ++s.violated;
        if (v.tier == 2) {
          if (v.resolution == lemmas::Resolution::Certified) ++s.resolved;
          else ++s.unresolved;
        }
      }
    }
    if (mode == ScanMode::Filter && opt.filter_sink)
      (*opt.filter_sink) << items[i].graph6 << '\n';
  }

  if (!opt.cache_path.empty()) {
    auto fresh = cache.drain_new();
    std::sort(fresh.begin(), fresh.end());
    for (const auto& [key, pd] : fresh) cache_append(opt.cache_path, key, pd);
  }

  report.scan_ms = ms_since(t1);
  report.total_ms = ms_since(t0);
  return report;
}

}  // namespace forkdiv::harness
