#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "forkdiv/graph.hpp"

namespace forkdiv::patterns {

/// Exactness cap for induced-cycle search.
inline constexpr int kHoleSearchCap = 16;
/// Definition-based perfection test cap (enumerates all induced subgraphs).
inline constexpr int kPerfectBruteCap = 10;
/// Odd-hole-based perfection test cap.
inline constexpr int kPerfectSpgtCap = 16;

enum class HoleKind { Hole, Antihole };

struct HoleWitness {
  std::vector<int> cycle;  // min vertex first, second neighbour < last
  HoleKind kind = HoleKind::Hole;

  int length() const { return static_cast<int>(cycle.size()); }
  bool odd() const { return cycle.size() % 2 == 1; }
  /// A 5-antihole is the same graph as C5.
  bool is_also_c5() const { return kind == HoleKind::Antihole && cycle.size() == 5; }
};

/// Consecutive pairs adjacent, everything else non-adjacent (checked in g
/// for holes, in complement(g) for antiholes), length at least 4, odd ones
/// at least 5.
bool validate_hole_witness(const Graph& g, const HoleWitness& w);

/// Enumerates induced odd cycles of length >= min_length (odd, >= 5), each
/// exactly once in canonical rotation. Callback returning true stops the
/// search. Throws CapabilityError above the cap.
void for_each_odd_hole(const Graph& g,
                       const std::function<bool(const std::vector<int>&)>& visit,
                       int min_length = 5, int cap = kHoleSearchCap);

std::optional<HoleWitness> find_odd_hole(const Graph& g, int cap = kHoleSearchCap);
std::optional<HoleWitness> find_odd_antihole(const Graph& g, int cap = kHoleSearchCap);

enum class PerfectionMode { Spgt, Brute };

struct PerfectionResult {
  bool perfect = false;
  /// Spgt mode: the odd hole or antihole disproving perfection.
  std::optional<HoleWitness> hole;
  /// Brute mode: an induced subgraph with chi > omega, plus its values.
  std::optional<VertexSet> subgraph;
  int witness_omega = 0;
  int witness_chi = 0;
};

/// Spgt mode decides by absence of odd holes in g and complement(g); brute
/// mode checks chi(H) = omega(H) on every induced subgraph.
PerfectionResult is_perfect(const Graph& g, PerfectionMode mode,
                            int brute_cap = kPerfectBruteCap,
                            int spgt_cap = kPerfectSpgtCap);

}  // namespace forkdiv::patterns
