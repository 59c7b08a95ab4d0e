#include "forkdiv/canonical.hpp"

#include <algorithm>
#include <array>

#include "forkdiv/graph6.hpp"

namespace forkdiv {

namespace {

using Cells = std::vector<std::uint64_t>;  // ordered partition of V

// Equitable refinement: split cells by neighbour counts into other cells,
// sub-cells ordered by ascending count, until stable. Every decision depends
// only on counts and cell positions, never on vertex ids.
void refine(const Graph& g, Cells& cells) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t wi = 0; wi < cells.size() && !changed; ++wi) {
      const std::uint64_t w = cells[wi];
      for (std::size_t xi = 0; xi < cells.size(); ++xi) {
        const std::uint64_t x = cells[xi];
        if (std::popcount(x) <= 1) continue;
        std::array<std::uint64_t, 65> bucket{};
        for (int v : VertexSet::from_bits(x))
          bucket[std::popcount(g.neighbors(v).bits() & w)] |= 1ULL << v;
        int parts = 0;
        for (auto b : bucket) parts += b != 0;
        if (parts <= 1) continue;
        Cells split;
        for (auto b : bucket)
          if (b) split.push_back(b);
        cells.erase(cells.begin() + static_cast<long>(xi));
        cells.insert(cells.begin() + static_cast<long>(xi), split.begin(),
                     split.end());
        changed = true;
        break;
      }
    }
  }
}

// A cell whose members all share the same outside neighbourhood and induce a
// clique or a stable set: any ordering of them is a graph automorphism, so
// it is safe to fix one without branching.
bool interchangeable_cell(const Graph& g, std::uint64_t cell) {
  const int m = std::popcount(cell);
  if (m <= 1) return false;
  const int rep = std::countr_zero(cell);
  const int inside = std::popcount(g.neighbors(rep).bits() & cell);
  if (inside != 0 && inside != m - 1) return false;
  const std::uint64_t outside = g.neighbors(rep).bits() & ~cell;
  for (int v : VertexSet::from_bits(cell)) {
    if (std::popcount(g.neighbors(v).bits() & cell) != inside) return false;
    if ((g.neighbors(v).bits() & ~cell) != outside) return false;
  }
  return true;
}

// Adjacency bits of the relabelled prefix in graph6 order (column-major
// upper triangle), packed MSB-first into bytes.
struct BitKey {
  std::vector<std::uint8_t> bytes;
  int bit_count = 0;

  void push(bool b) {
    if (bit_count % 8 == 0) bytes.push_back(0);
    if (b) bytes.back() |= static_cast<std::uint8_t>(0x80u >> (bit_count % 8));
    ++bit_count;
  }

  // -1 / 0 / +1 comparing the first min(bit_count, o.bit_count) bits.
  int compare_prefix(const BitKey& o) const {
    const int bits = std::min(bit_count, o.bit_count);
    const int full = bits / 8;
    for (int i = 0; i < full; ++i) {
      if (bytes[i] != o.bytes[i]) return bytes[i] < o.bytes[i] ? -1 : 1;
    }
    const int rem = bits % 8;
    if (rem) {
      const std::uint8_t mask = static_cast<std::uint8_t>(0xFF00u >> rem);
      const std::uint8_t a = bytes[full] & mask;
      const std::uint8_t b = o.bytes[full] & mask;
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }
};

struct CanonSearch {
  const Graph& g;
  bool have_best = false;
  BitKey best_key;
  std::vector<int> best_order;  // position -> original vertex

  BitKey key_of_order(const std::vector<int>& order, int upto) const {
    BitKey key;
    for (int col = 1; col < upto; ++col)
      for (int row = 0; row < col; ++row)
        key.push(g.adjacent(order[row], order[col]));
    return key;
  }

  void descend(Cells cells) {
    refine(g, cells);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (std::popcount(cells[i]) > 1 && interchangeable_cell(g, cells[i])) {
        Cells singles;
        for (int v : VertexSet::from_bits(cells[i])) singles.push_back(1ULL << v);
        cells.erase(cells.begin() + static_cast<long>(i));
        cells.insert(cells.begin() + static_cast<long>(i), singles.begin(),
                     singles.end());
        refine(g, cells);
        i = static_cast<std::size_t>(-1);  // rescan from the start
      }
    }

    std::vector<int> order;
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (std::popcount(cells[i]) == 1 && target == cells.size()) {
        order.push_back(std::countr_zero(cells[i]));
      } else if (target == cells.size()) {
        target = i;
      }
    }

    if (have_best) {
      BitKey prefix = key_of_order(order, static_cast<int>(order.size()));
      if (prefix.compare_prefix(best_key) > 0) return;
    }

    if (target == cells.size()) {
      BitKey key = key_of_order(order, g.size());
      if (!have_best || key.compare_prefix(best_key) < 0) {
        have_best = true;
        best_key = std::move(key);
        best_order = order;
      }
      return;
    }

    for (int v : VertexSet::from_bits(cells[target])) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < target; ++i) child.push_back(cells[i]);
      child.push_back(1ULL << v);
      child.push_back(cells[target] & ~(1ULL << v));
      for (std::size_t i = target + 1; i < cells.size(); ++i)
        child.push_back(cells[i]);
      descend(std::move(child));
    }
  }
};

std::vector<int> canonical_order(const Graph& g, int cap) {
  if (g.size() > cap)
    throw CapabilityError("canonical_form: order " + std::to_string(g.size()) +
                          " exceeds cap " + std::to_string(cap));
  CanonSearch search{g};
  search.descend({g.vertices().bits()});
  return search.best_order;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, int cap) {
  auto order = canonical_order(g, cap);
  std::vector<int> old_to_new(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    old_to_new[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
  return old_to_new;
}

CanonicalForm canonical_form(const Graph& g, int cap) {
  return {to_graph6(g.relabeled(canonical_labeling(g, cap)))};
}

bool isomorphic_brute(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.size()));
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  do {
    bool match = true;
    for (int u = 0; u < a.size() && match; ++u)
      for (int v = u + 1; v < a.size() && match; ++v)
        if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace forkdiv
