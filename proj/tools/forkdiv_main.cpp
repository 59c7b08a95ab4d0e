// forkdiv: batch verification of the odd-hole decomposition apparatus and
// perfect-divisibility searches over graph6 corpora.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "forkdiv/decomp.hpp"
#include "forkdiv/divisibility.hpp"
#include "forkdiv/graph6.hpp"
#include "forkdiv/lemmas.hpp"
#include "forkdiv/scan.hpp"

using namespace forkdiv;

namespace {

std::vector<patterns::PatternName> parse_free_list(const std::string& csv) {
  std::vector<patterns::PatternName> names;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const auto name = patterns::parse_token(token);
    if (!name) throw CLI::ValidationError("--free", "unknown pattern: " + token);
    names.push_back(*name);
  }
  return names;
}

void print_summary(const harness::ScanReport& r, std::ostream& out) {
  out << "mode " << r.mode << ", corpus " << r.corpus_id << "\n";
  out << "  lines " << r.lines_read << ", parse errors " << r.parse_errors
      << ", filtered out " << r.filtered_out << ", over cap " << r.over_cap
      << ", scanned " << r.scanned << "\n";
  for (const auto& [key, count] : r.counters)
    out << "  " << key << ": " << count << "\n";
  if (!r.verdicts.empty()) {
    out << "  lemma ledger (" << r.verdicts.size() << " entries):\n";
    for (const auto& [id, s] : r.verdicts) {
      out << "    tier " << s.tier << " " << id << ": checks " << s.checks
          << ", gates failed " << s.gates_failed << ", holds " << s.holds
          << ", violated " << s.violated;
      if (s.tier == 2)
        out << " (resolved " << s.resolved << ", unresolved " << s.unresolved
            << ")";
      out << "\n";
    }
  }
  if (!r.counterexamples.empty()) {
    out << "  counterexamples:\n";
    for (const auto& c : r.counterexamples)
      out << "    line " << c.line << " [" << c.kind << "] " << c.graph6 << " "
          << (c.lemma_id.empty() ? "" : c.lemma_id + " ") << c.detail << "\n";
  }
  out << "  violations " << r.violations << ", " << r.total_ms << " ms\n";
}

int run_decompose(const std::string& graph_line, bool as_json) {
  const Graph g = parse_graph6(strip_graph6_header(graph_line));
  const auto contexts = decomp::enumerate_hole_contexts(g);
  auto set_json = [](VertexSet s) {
    std::string out = "[";
    bool first = true;
    for (int v : s) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "]";
  };
  auto seq_json = [](const std::vector<int>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(xs[i]);
    }
    return out + "]";
  };
  if (as_json) {
    std::string out = "{\"graph\":\"" + to_graph6(g) + "\",\"contexts\":[";
    for (std::size_t i = 0; i < contexts.size(); ++i) {
      const auto d = decomp::decompose_hole_neighborhood(g, contexts[i]);
      if (i) out += ",";
      out += "{\"base\":" + std::to_string(contexts[i].base) +
             ",\"hole\":" + seq_json(contexts[i].hole) +
             ",\"mc\":" + set_json(d.mc) + ",\"u\":" + set_json(d.u) +
             ",\"u_parts\":[";
      for (std::size_t p = 0; p < d.u_parts.size(); ++p) {
        if (p) out += ",";
        out += set_json(d.u_parts[p]);
      }
      out += "],\"u_prime\":" + set_json(d.u_prime) +
             ",\"residual\":" + set_json(d.residual) + ",\"y\":" + set_json(d.y) +
             ",\"y_prime\":" + set_json(d.y_prime) + ",\"z\":" + set_json(d.z) +
             ",\"z_prime\":" + set_json(d.z_prime) + "}";
    }
    out += "]}";
    std::cout << out << "\n";
    return 0;
  }
  std::cout << "graph " << to_graph6(g) << ": " << contexts.size()
            << " hole context(s)\n";
  for (const auto& ctx : contexts) {
    const auto d = decomp::decompose_hole_neighborhood(g, ctx);
    std::cout << "  base " << ctx.base << ", hole";
    for (int v : ctx.hole) std::cout << " " << v;
    auto show = [&](const char* tag, VertexSet s) {
      std::cout << ", " << tag << " {";
      bool first = true;
      for (int v : s) {
        std::cout << (first ? "" : " ") << v;
        first = false;
      }
      std::cout << "}";
    };
    show("M(C)", d.mc);
    show("U", d.u);
    show("U'", d.u_prime);
    show("Y", d.y);
    show("Y'", d.y_prime);
    show("Z", d.z);
    show("Z'", d.z_prime);
    show("residual", d.residual);
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "structural checks for fork-free perfect divisibility over graph6 corpora"};
  app.require_subcommand(1);

  std::string config_path;
  int jobs = 1;
  std::string corpus_id = "stdin";
  app.add_option("--config", config_path, "key=value file overriding caps");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--corpus-id", corpus_id, "label recorded in reports");

  struct Common {
    std::string free_csv;
    bool connected = false;
    int max_n = 0;
    std::string report_path;
    std::string format = "json";
    std::string cache_path;
  };

  auto add_common = [](CLI::App* cmd, Common& c, bool with_cache) {
    cmd->add_option("--free", c.free_csv,
                    "comma-separated patterns; graphs inducing any are dropped");
    cmd->add_flag("--connected", c.connected, "keep connected graphs only");
    cmd->add_option("--max-n", c.max_n, "drop graphs larger than this");
    cmd->add_option("--report", c.report_path, "write the report here");
    cmd->add_option("--format", c.format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    if (with_cache)
      cmd->add_option("--cache", c.cache_path,
                      "PD cache file (default: FORKDIV_CACHE)");
  };

  Common filter_c, lemmas_c, pd_c, color_c, perfect_c;

  auto* filter_cmd =
      app.add_subcommand("filter", "pass through graphs free of the given patterns");
  add_common(filter_cmd, filter_c, false);

  std::string decompose_graph;
  bool decompose_json = false;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "print the odd-hole decomposition of one graph");
  decompose_cmd->add_option("--graph", decompose_graph, "graph6 line")->required();
  decompose_cmd->add_flag("--json", decompose_json, "machine-readable output");

  std::string tier_text = "all";
  auto* lemmas_cmd =
      app.add_subcommand("lemmas", "run the gated lemma ledger over a corpus");
  lemmas_cmd->add_option("--tier", tier_text, "1, 2 or all")
      ->check(CLI::IsMember({"1", "2", "all"}));
  add_common(lemmas_cmd, lemmas_c, true);

  bool minimal = false;
  auto* pd_cmd = app.add_subcommand("pd", "certify perfect divisibility over a corpus");
  pd_cmd->add_flag("--minimal", minimal,
                   "hunt minimal non perfectly divisible graphs");
  add_common(pd_cmd, pd_c, true);

  bool certify = false;
  auto* color_cmd = app.add_subcommand("color", "colour through perfect divisions");
  color_cmd->add_flag("--certify", certify,
                      "also compare against the exact chromatic number");
  add_common(color_cmd, color_c, false);

  std::string perfect_mode = "spgt";
  auto* perfect_cmd = app.add_subcommand("perfect", "perfection test over a corpus");
  perfect_cmd->add_option("--mode", perfect_mode, "spgt, brute or cross")
      ->check(CLI::IsMember({"spgt", "brute", "cross"}));
  add_common(perfect_cmd, perfect_c, false);

  CLI11_PARSE(app, argc, argv);

  try {
    harness::ScanOptions opt;
    opt.jobs = jobs;
    opt.corpus_id = corpus_id;
    if (!config_path.empty()) opt.caps = harness::load_config_file(config_path);

    if (decompose_cmd->parsed())
      return run_decompose(decompose_graph, decompose_json);

    harness::ScanMode mode = harness::ScanMode::Filter;
    Common* common = &filter_c;
    if (filter_cmd->parsed()) {
      opt.filter_sink = &std::cout;
    } else if (lemmas_cmd->parsed()) {
      mode = harness::ScanMode::Lemmas;
      common = &lemmas_c;
      opt.tier = tier_text == "all" ? 0 : std::stoi(tier_text);
    } else if (pd_cmd->parsed()) {
      mode = minimal ? harness::ScanMode::Conjecture : harness::ScanMode::Pd;
      common = &pd_c;
    } else if (color_cmd->parsed()) {
      mode = harness::ScanMode::Color;
      common = &color_c;
      opt.certify = certify;
    } else if (perfect_cmd->parsed()) {
      mode = harness::ScanMode::Perfect;
      common = &perfect_c;
      opt.perfect_mode = perfect_mode;
    }

    opt.free_patterns = parse_free_list(common->free_csv);
    opt.connected_only = common->connected;
    opt.max_n = common->max_n;
    opt.cache_path = common->cache_path;
    if (opt.cache_path.empty() &&
        (mode == harness::ScanMode::Pd || mode == harness::ScanMode::Conjecture ||
         mode == harness::ScanMode::Lemmas)) {
      if (const char* env = std::getenv("FORKDIV_CACHE")) opt.cache_path = env;
    }

    const harness::ScanReport report = harness::run_scan(mode, std::cin, opt);
    print_summary(report,
                  mode == harness::ScanMode::Filter ? std::cerr : std::cout);
    if (!common->report_path.empty())
      harness::emit_report(report, common->format, common->report_path);
    return harness::exit_code_for(report);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
