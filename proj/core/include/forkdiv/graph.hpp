#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "forkdiv/errors.hpp"

namespace forkdiv {

/// Hard cap on vertex count: one adjacency row fits a machine word.
inline constexpr int kMaxVertices = 64;

/// Subset of the vertices 0..n-1 of some graph, stored as a bit mask.
/// Plain value type; the owning graph's n is not carried along, so
/// complement-within-universe takes n explicitly.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s = s.with(v);
    return s;
  }
  static constexpr VertexSet full(int n) {
    return from_bits(n >= 64 ? ~0ULL : ((1ULL << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1ULL; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool contains_all(VertexSet o) const {
    return (o.bits_ & ~bits_) == 0;
  }

  constexpr VertexSet with(int v) const { return from_bits(bits_ | (1ULL << v)); }
  constexpr VertexSet without(int v) const {
    return from_bits(bits_ & ~(1ULL << v));
  }
  constexpr VertexSet complement_within(int n) const {
    return from_bits(full(n).bits_ & ~bits_);
  }

  /// Smallest member, or -1 when empty.
  constexpr int first() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits_; b; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  constexpr bool operator==(const VertexSet&) const = default;

  /// Iterates members in ascending order.
  class iterator {
   public:
    explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const {
      return rest_ != o.rest_;
    }

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple graph on vertices 0..n-1 with one adjacency word per
/// vertex. Symmetry and irreflexivity hold by construction; all queries are
/// pure, so values can be shared freely between threads.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(check_order(n)), rows_(static_cast<std::size_t>(n), 0) {}

  Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge_checked(u, v);
  }
  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge_checked(u, v);
  }

  int size() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1ULL; }
  VertexSet neighbors(int v) const { return VertexSet::from_bits(rows_[v]); }
  int degree(int v) const { return std::popcount(rows_[v]); }

  int edge_count() const {
    int twice = 0;
    for (std::uint64_t r : rows_) twice += std::popcount(r);
    return twice / 2;
  }
  std::vector<std::pair<int, int>> edges() const;

  /// M(v): vertices other than v with no edge to v.
  VertexSet non_neighborhood(int v) const {
    check_vertex(v);
    return (neighbors(v).with(v)).complement_within(n_);
  }

  /// N(X): vertices outside X with at least one neighbor in X.
  VertexSet neighborhood_of(VertexSet x) const {
    std::uint64_t acc = 0;
    for (int v : x) acc |= rows_[v];
    return VertexSet::from_bits(acc & ~x.bits());
  }

  /// M(X): vertices outside X with no neighbor in X.
  VertexSet anticomplete_set(VertexSet x) const {
    if (x.empty()) throw DomainError("anticomplete_set: empty set");
    return (x | neighborhood_of(x)).complement_within(n_);
  }

  bool complete_to(int v, VertexSet x) const {
    return (x.bits() & ~rows_[v]) == 0;
  }
  bool anticomplete_to(int v, VertexSet x) const {
    return (x.bits() & rows_[v]) == 0;
  }
  bool mixed_on(int v, VertexSet x) const {
    return !complete_to(v, x) && !anticomplete_to(v, x);
  }
  bool set_complete_to(VertexSet a, VertexSet b) const {
    for (int v : a)
      if (!complete_to(v, b - VertexSet::of({v}))) return false;
    return true;
  }
  bool set_anticomplete_to(VertexSet a, VertexSet b) const {
    for (int v : a)
      if (!anticomplete_to(v, b)) return false;
    return true;
  }

  bool is_clique(VertexSet s) const {
    for (int v : s)
      if (!complete_to(v, s.without(v))) return false;
    return true;
  }
  bool is_stable_set(VertexSet s) const {
    for (int v : s)
      if (!anticomplete_to(v, s.without(v))) return false;
    return true;
  }

  /// Subgraph induced by s; vertex i of the result is the i-th smallest
  /// member of s.
  Graph induced(VertexSet s) const;

  Graph complement() const;

  /// Relabels: vertex v of this graph becomes perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const;

  bool connected() const;

  /// Connected components of G[s], as subsets of this graph's vertex ids,
  /// ordered by smallest member.
  std::vector<VertexSet> components_within(VertexSet s) const;
  std::vector<VertexSet> components() const { return components_within(vertices()); }

  bool operator==(const Graph& o) const = default;

 private:
  static int check_order(int n) {
    if (n < 1 || n > kMaxVertices)
      throw DomainError("graph order must be in 1..64, got " + std::to_string(n));
    return n;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw DomainError("vertex id " + std::to_string(v) + " out of range");
  }
  void add_edge_checked(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    rows_[u] |= 1ULL << v;
    rows_[v] |= 1ULL << u;
  }

  int n_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace forkdiv
