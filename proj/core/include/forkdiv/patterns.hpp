#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forkdiv/graph.hpp"

namespace forkdiv::patterns {

/// Largest pattern the induced-subgraph search accepts.
inline constexpr int kPatternCap = 8;

enum class PatternKind {
  Fork,
  Claw,
  Path,       // parameterised: P_k
  P6K1,       // P6 plus an isolated vertex
  Dart,
  Banner,
  Paw,
  CoDart,
  Bull,
  Diamond,
  CoCricket,
  Hole,       // parameterised: C_k
  Balloon,    // parameterised by hole length
  Parachute,  // parameterised by hole length
  Triad,
};

struct PatternName {
  PatternKind kind;
  int param = 0;  // path length, hole length; unused otherwise

  bool operator==(const PatternName&) const = default;
};

/// CLI token, e.g. "fork", "p7", "c5", "balloon:5", "parachute:7".
std::string to_token(const PatternName& name);
std::optional<PatternName> parse_token(std::string_view token);

/// Catalog constructor with documented deterministic vertex order per name
/// (see the .cpp for the layouts). Throws DomainError on bad parameters.
Graph build_named_graph(const PatternName& name);

/// Injective map phi with u~v in h iff phi(u)~phi(v) in g, or nullopt.
/// Backtracking over pattern vertices in descending-degree order, host
/// candidates ascending, so the first embedding is deterministic.
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h);

struct FreenessEntry {
  PatternName name;
  std::optional<std::vector<int>> witness;  // nullopt means free
  bool free() const { return !witness.has_value(); }
};

std::vector<FreenessEntry> classify_freeness(const Graph& g,
                                             const std::vector<PatternName>& names);

/// True when g has no induced copy of any named pattern.
bool is_free_of(const Graph& g, const std::vector<PatternName>& names);

}  // namespace forkdiv::patterns
