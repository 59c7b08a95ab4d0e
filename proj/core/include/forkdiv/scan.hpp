#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "forkdiv/config.hpp"
#include "forkdiv/patterns.hpp"
#include "forkdiv/report.hpp"

namespace forkdiv::harness {

enum class ScanMode { Filter, Lemmas, Conjecture, Color, Perfect, Pd };

std::string to_string(ScanMode mode);

struct ScanOptions {
  std::vector<patterns::PatternName> free_patterns;  // drop graphs inducing any
  bool connected_only = false;
  int max_n = 0;  // 0: only the per-mode caps apply
  int jobs = 1;
  std::string cache_path;  // PD persistence; empty disables
  Caps caps;
  int tier = 0;             // lemmas: 0 both, 1 or 2
  bool certify = false;     // color: also compare against exact chi
  std::string perfect_mode = "spgt";  // spgt | brute | cross
  std::string corpus_id = "stdin";
  std::ostream* filter_sink = nullptr;  // filter mode output
};

/// Batch pipeline: parse + filter each corpus line, run the per-mode check,
/// aggregate into a report. Malformed lines are recorded with their line
/// numbers and skipped. Deterministic up to the timing fields for any job
/// count.
ScanReport run_scan(ScanMode mode, std::istream& corpus, const ScanOptions& opt);

}  // namespace forkdiv::harness
