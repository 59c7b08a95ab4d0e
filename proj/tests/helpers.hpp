#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "forkdiv/graph.hpp"

namespace testutil {

inline forkdiv::Graph cycle(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return forkdiv::Graph(k, edges);
}

inline forkdiv::Graph path(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return forkdiv::Graph(k, edges);
}

inline forkdiv::Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return forkdiv::Graph(n, edges);
}

inline forkdiv::Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return forkdiv::Graph(10, edges);
}

inline forkdiv::Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return forkdiv::Graph(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Every labeled graph on n vertices, by edge mask. Keep n <= 6.
inline forkdiv::Graph labeled_graph(int n, std::uint64_t edge_mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (edge_mask & (1ULL << bit)) edges.emplace_back(i, j);
  return forkdiv::Graph(n, edges);
}

inline std::uint64_t labeled_graph_count(int n) {
  return 1ULL << (n * (n - 1) / 2);
}

}  // namespace testutil
