#pragma once

#include <map>
#include <string>
#include <vector>

namespace forkdiv::harness {

/// Corpus-level aggregation for one ledger entry.
struct LemmaSummary {
  std::string id;
  int tier = 0;
  long checks = 0;        // verdicts issued (contexts, or graphs for graph scope)
  long gates_failed = 0;
  long holds = 0;
  long violated = 0;
  long resolved = 0;      // tier-2 violations discharged by a certificate
  long unresolved = 0;
};

struct Counterexample {
  long line = 0;
  std::string graph6;
  std::string kind;      // tier1-violation, unresolved-tier2, minimal-non-pd, ...
  std::string lemma_id;  // when applicable
  std::string detail;
};

struct GraphRow {
  long line = 0;
  std::string graph6;
  std::string outcome;
  std::string detail;
};

struct ScanReport {
  std::string schema_version = "1";
  std::string ledger_version;
  std::string corpus_id;
  std::string mode;
  // totals; parse_errors + filtered_out + over_cap + scanned = lines_read
  long lines_read = 0;
  long parse_errors = 0;
  long filtered_out = 0;
  long over_cap = 0;
  long scanned = 0;
  long violations = 0;
  std::map<std::string, long> counters;  // mode-specific tallies
  std::map<std::string, LemmaSummary> verdicts;
  std::vector<Counterexample> counterexamples;
  std::vector<GraphRow> rows;
  double filter_ms = 0, scan_ms = 0, total_ms = 0;
};

std::string report_to_json(const ScanReport& r);
ScanReport report_from_json(const std::string& text);

/// One row per graph with verdict columns.
std::string report_to_csv(const ScanReport& r);

/// Writes the report in the requested format ("json" or "csv").
void emit_report(const ScanReport& r, const std::string& format,
                 const std::string& path);

/// 0 clean, 2 violations found, 3 input errors.
int exit_code_for(const ScanReport& r);

}  // namespace forkdiv::harness
