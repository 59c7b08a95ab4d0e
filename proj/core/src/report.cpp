#include "forkdiv/report.hpp"

#include <fstream>

#include <json.hpp>

#include "forkdiv/errors.hpp"

namespace forkdiv::harness {

using nlohmann::json;

std::string report_to_json(const ScanReport& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["ledger_version"] = r.ledger_version;
  j["corpus_id"] = r.corpus_id;
  j["mode"] = r.mode;
  j["totals"] = {{"lines_read", r.lines_read},
                 {"parse_errors", r.parse_errors},
                 {"filtered_out", r.filtered_out},
                 {"over_cap", r.over_cap},
                 {"scanned", r.scanned},
                 {"violations", r.violations}};
  j["counters"] = r.counters;
  json verdicts = json::array();
  for (const auto& [id, s] : r.verdicts)
    verdicts.push_back({{"id", s.id},
                        {"tier", s.tier},
                        {"checks", s.checks},
                        {"gates_failed", s.gates_failed},
                        {"holds", s.holds},
                        {"violated", s.violated},
                        {"resolved", s.resolved},
                        {"unresolved", s.unresolved}});
  j["verdicts"] = verdicts;
  json cex = json::array();
  for (const auto& c : r.counterexamples)
    cex.push_back({{"line", c.line},
                   {"graph6", c.graph6},
                   {"kind", c.kind},
                   {"lemma", c.lemma_id},
                   {"detail", c.detail}});
  j["counterexamples"] = cex;
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"line", row.line},
                    {"graph6", row.graph6},
                    {"outcome", row.outcome},
                    {"detail", row.detail}});
  j["rows"] = rows;
  j["timing"] = {{"filter_ms", r.filter_ms},
                 {"scan_ms", r.scan_ms},
                 {"total_ms", r.total_ms}};
  return j.dump(2);
}

ScanReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("report JSON parse failure: ") + e.what());
  }
  ScanReport r;
  r.schema_version = j.at("schema_version").get<std::string>();
  r.ledger_version = j.at("ledger_version").get<std::string>();
  r.corpus_id = j.at("corpus_id").get<std::string>();
  r.mode = j.at("mode").get<std::string>();
  const auto& totals = j.at("totals");
  r.lines_read = totals.at("lines_read").get<long>();
  r.parse_errors = totals.at("parse_errors").get<long>();
  r.filtered_out = totals.at("filtered_out").get<long>();
  r.over_cap = totals.at("over_cap").get<long>();
  r.scanned = totals.at("scanned").get<long>();
  r.violations = totals.at("violations").get<long>();
  for (const auto& [k, v] : j.at("counters").items())
    r.counters[k] = v.get<long>();
  for (const auto& s : j.at("verdicts")) {
    LemmaSummary sum;
    sum.id = s.at("id").get<std::string>();
    sum.tier = s.at("tier").get<int>();
    sum.checks = s.at("checks").get<long>();
    sum.gates_failed = s.at("gates_failed").get<long>();
    sum.holds = s.at("holds").get<long>();
    sum.violated = s.at("violated").get<long>();
    sum.resolved = s.at("resolved").get<long>();
    sum.unresolved = s.at("unresolved").get<long>();
    r.verdicts[sum.id] = sum;
  }
  for (const auto& c : j.at("counterexamples")) {
    Counterexample cx;
    cx.line = c.at("line").get<long>();
    cx.graph6 = c.at("graph6").get<std::string>();
    cx.kind = c.at("kind").get<std::string>();
    cx.lemma_id = c.at("lemma").get<std::string>();
    cx.detail = c.at("detail").get<std::string>();
    r.counterexamples.push_back(std::move(cx));
  }
  for (const auto& row : j.at("rows")) {
    GraphRow gr;
    gr.line = row.at("line").get<long>();
    gr.graph6 = row.at("graph6").get<std::string>();
    gr.outcome = row.at("outcome").get<std::string>();
    gr.detail = row.at("detail").get<std::string>();
    r.rows.push_back(std::move(gr));
  }
  const auto& timing = j.at("timing");
  r.filter_ms = timing.at("filter_ms").get<double>();
  r.scan_ms = timing.at("scan_ms").get<double>();
  r.total_ms = timing.at("total_ms").get<double>();
  return r;
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_to_csv(const ScanReport& r) {
  std::string out = "line,graph6,outcome,detail\n";
  for (const auto& row : r.rows)
    out += std::to_string(row.line) + "," + csv_quote(row.graph6) + "," +
           csv_quote(row.outcome) + "," + csv_quote(row.detail) + "\n";
  return out;
}

void emit_report(const ScanReport& r, const std::string& format,
                 const std::string& path) {
  std::string payload;
  if (format == "json")
    payload = report_to_json(r);
  else if (format == "csv")
    payload = report_to_csv(r);
  else
    throw DomainError("unknown report format: " + format);
  std::ofstream out(path);
  if (!out) throw IoError("cannot open report file: " + path);
  out << payload;
  if (!out) throw IoError("report write failed: " + path);
}

int exit_code_for(const ScanReport& r) {
  if (r.parse_errors > 0) return 3;
  if (r.violations > 0) return 2;
  return 0;
}

}  // namespace forkdiv::harness
