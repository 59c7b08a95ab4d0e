#pragma once

#include <optional>
#include <vector>

#include "forkdiv/graph.hpp"

namespace forkdiv {

/// Exactness cap for chromatic-number search.
inline constexpr int kChiExactCap = 16;

struct ColoringResult {
  int chi = 0;
  std::vector<int> colors;  // proper, colors 0..chi-1, lexicographically least
};

/// Exact chromatic number with a witness colouring. Sequential backtracking
/// over vertex order 0..n-1 with first-use symmetry breaking, so the witness
/// is the lexicographically least proper colouring vector.
/// Throws CapabilityError above the cap.
ColoringResult chromatic_number_exact(const Graph& g, int cap = kChiExactCap);

/// Least proper colouring with at most k colours, or nullopt.
std::optional<std::vector<int>> color_with(const Graph& g, int k);

/// True when every edge joins differently coloured endpoints and every
/// vertex has a colour.
bool coloring_is_proper(const Graph& g, const std::vector<int>& colors);

}  // namespace forkdiv
