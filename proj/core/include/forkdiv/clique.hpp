#pragma once

#include "forkdiv/graph.hpp"

namespace forkdiv {

struct CliqueResult {
  int omega = 0;
  VertexSet witness;  // lexicographically smallest maximum clique
};

/// Exact clique number by branch and bound with a greedy colouring bound.
/// Exact for every graph within the 64-vertex cap.
CliqueResult clique_number(const Graph& g);

/// Clique number of G[mask]; same search without the witness pass.
int clique_number_within(const Graph& g, VertexSet mask);

/// Maximum stable set size, via the complement.
int stability_number(const Graph& g);

}  // namespace forkdiv
