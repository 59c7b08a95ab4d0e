#pragma once

#include <map>
#include <string>

#include "forkdiv/graph.hpp"

namespace forkdiv::harness {

/// Append-only persistent PD store: one "<canonical-graph6>\tPD|NPD" record
/// per line. Reloading after an append yields a superset; conflicting
/// statuses for one key are treated as corruption.
struct PDCache {
  std::map<std::string, bool> entries;  // canonical graph6 -> is PD
};

/// Loads a cache file; a missing path yields an empty cache. Duplicate
/// identical lines are tolerated; a key with two different statuses throws
/// CorruptionError naming both lines.
PDCache cache_load(const std::string& path);

/// Appends one record, atomic at line granularity. Creates the file when
/// absent. Throws IoError naming the path.
void cache_append(const std::string& path, const std::string& key, bool pd);

}  // namespace forkdiv::harness
