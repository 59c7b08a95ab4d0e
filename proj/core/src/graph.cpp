#include "forkdiv/graph.hpp"

namespace forkdiv {

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(VertexSet s) const {
  if (s.empty()) throw DomainError("induced: empty vertex set");
  auto keep = s.to_vector();
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j]))
        out.add_edge_checked(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Graph Graph::complement() const {
  Graph out(n_);
  const std::uint64_t all = VertexSet::full(n_).bits();
  for (int v = 0; v < n_; ++v)
    out.rows_[v] = all & ~rows_[v] & ~(1ULL << v);
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw DomainError("relabeled: permutation size mismatch");
  Graph out(n_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.add_edge_checked(perm[u], perm[v]);
  return out;
}

bool Graph::connected() const { return components().size() == 1; }

std::vector<VertexSet> Graph::components_within(VertexSet s) const {
  std::vector<VertexSet> out;
  std::uint64_t rest = s.bits();
  while (rest) {
    std::uint64_t comp = rest & (~rest + 1);  // lowest bit as seed
    for (;;) {
      std::uint64_t grown = comp;
      for (int v : VertexSet::from_bits(comp)) grown |= rows_[v] & s.bits();
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(VertexSet::from_bits(comp));
    rest &= ~comp;
  }
  return out;
}

}  // namespace forkdiv
