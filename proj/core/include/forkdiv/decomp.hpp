#pragma once

#include <optional>
#include <vector>

#include "forkdiv/graph.hpp"

namespace forkdiv::decomp {

/// Cap for hole-context enumeration.
inline constexpr int kContextCap = 16;

/// A base vertex v together with an odd hole lying inside M(v).
struct HoleContext {
  int base = -1;
  std::vector<int> hole;  // canonical rotation: min vertex first, second < last

  int length() const { return static_cast<int>(hole.size()); }
  VertexSet hole_set() const {
    VertexSet s;
    for (int v : hole) s = s.with(v);
    return s;
  }
  bool operator==(const HoleContext&) const = default;
};

/// The vertex classes around an odd hole C:
///   mc       M(C), vertices with no neighbour on the hole
///   u        members of N(M(C)) with exactly two consecutive hole neighbours
///   u_parts  u split by which consecutive pair (hole[i], hole[i+1]) they see
///   u_prime  members of N(M(C)) complete to the hole
///   residual members of N(M(C)) fitting neither class (empty when fork-free)
///   y        M(C)-neighbours of U
///   y_prime  vertex set of the components of G[M(C)] that meet y
///   z        hole neighbours outside N(M(C)), not complete to the hole
///   z_prime  hole neighbours outside N(M(C)), complete to the hole
struct Decomposition {
  VertexSet hole;
  VertexSet mc;
  VertexSet n_mc;
  VertexSet u;
  std::vector<VertexSet> u_parts;
  VertexSet u_prime;
  VertexSet residual;
  VertexSet y;
  VertexSet y_prime;
  VertexSet z;
  VertexSet z_prime;
};

/// True when base/hole form a valid context for g: the hole is a chordless
/// odd cycle of length >= 5 inside non_neighborhood(g, base).
bool validate_context(const Graph& g, const HoleContext& ctx);

/// Proper homogeneous set (1 < |X| < n, every outside vertex complete or
/// anticomplete), or nullopt. Module-closure growth from every vertex pair,
/// pairs in lexicographic order. Throws DomainError for n < 3.
std::optional<VertexSet> find_homogeneous_set(const Graph& g);

/// All (base, odd hole) pairs with the hole inside M(base), holes
/// deduplicated up to rotation and reflection. Throws CapabilityError above
/// the cap.
std::vector<HoleContext> enumerate_hole_contexts(const Graph& g,
                                                 int cap = kContextCap);

Decomposition decompose_hole_neighborhood(const Graph& g, const HoleContext& ctx);

}  // namespace forkdiv::decomp
