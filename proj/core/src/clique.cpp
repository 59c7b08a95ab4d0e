#include "forkdiv/clique.hpp"

#include <array>

namespace forkdiv {

namespace {

struct Searcher {
  const Graph& g;
  int best = 0;

  // Greedy colouring of cand; vertices come back ordered class by class so
  // the colour index is an upper bound on the clique extension size.
  int order_by_colour(std::uint64_t cand, std::array<int, 64>& verts,
                      std::array<int, 64>& bound) const {
    int k = 0;
    int colour = 0;
    while (cand) {
      ++colour;
      std::uint64_t avail = cand;
      while (avail) {
        int v = std::countr_zero(avail);
        avail &= ~(1ULL << v);
        avail &= ~g.neighbors(v).bits();
        cand &= ~(1ULL << v);
        verts[k] = v;
        bound[k] = colour;
        ++k;
      }
    }
    return k;
  }

  void expand(std::uint64_t cand, int depth) {
    std::array<int, 64> verts, bound;
    int k = order_by_colour(cand, verts, bound);
    for (int i = k - 1; i >= 0; --i) {
      if (depth + bound[i] <= best) return;
      int v = verts[i];
      std::uint64_t next = cand & g.neighbors(v).bits();
      if (depth + 1 > best) best = depth + 1;
      if (next) expand(next, depth + 1);
      cand &= ~(1ULL << v);
    }
  }
};

int omega_of_mask(const Graph& g, std::uint64_t mask) {
  if (mask == 0) return 0;
  Searcher s{g};
  s.best = 0;
  s.expand(mask, 0);
  return s.best;
}

}  // namespace

int clique_number_within(const Graph& g, VertexSet mask) {
  return omega_of_mask(g, mask.bits());
}

int stability_number(const Graph& g) {
  return clique_number(g.complement()).omega;
}

CliqueResult clique_number(const Graph& g) {
  const std::uint64_t all = g.vertices().bits();
  const int omega = omega_of_mask(g, all);

  // Lexicographically smallest witness: force vertices in ascending order
  // whenever the remainder still reaches omega.
  VertexSet witness;
  std::uint64_t cand = all;
  int need = omega;
  for (int v = 0; v < g.size() && need > 0; ++v) {
    if (!(cand & (1ULL << v))) continue;
    std::uint64_t rest = cand & g.neighbors(v).bits();
    if (1 + omega_of_mask(g, rest) >= need) {
      witness = witness.with(v);
      cand = rest;
      --need;
    }
  }
  return {omega, witness};
}

}  // namespace forkdiv
