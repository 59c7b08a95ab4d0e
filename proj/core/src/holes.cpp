#include "forkdiv/holes.hpp"

#include "forkdiv/clique.hpp"
#include "forkdiv/coloring.hpp"

namespace forkdiv::patterns {

bool validate_hole_witness(const Graph& g, const HoleWitness& w) {
  const int k = w.length();
  if (k < 4) return false;
  if (w.odd() && k < 5) return false;
  const Graph host = w.kind == HoleKind::Hole ? g : g.complement();
  std::uint64_t seen = 0;
  for (int v : w.cycle) {
    if (v < 0 || v >= host.size() || (seen & (1ULL << v))) return false;
    seen |= 1ULL << v;
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (host.adjacent(w.cycle[i], w.cycle[j]) != consecutive) return false;
    }
  return true;
}

namespace {

struct HoleSearch {
  const Graph& g;
  const std::function<bool(const std::vector<int>&)>& visit;
  const int min_length;
  std::vector<int> path;
  bool stopped = false;

  // prior = N(p0..p_{k-1}); internal = N(p1..p_{k-1}); both exclude the
  // neighbourhood of the current endpoint.
  void grow(std::uint64_t used, std::uint64_t prior, std::uint64_t internal,
            std::uint64_t eligible) {
    if (stopped) return;
    const int last = path.back();
    const int root = path.front();
    const std::uint64_t last_nbrs = g.neighbors(last).bits();

    if (static_cast<int>(path.size()) + 1 >= min_length &&
        (path.size() + 1) % 2 == 1) {
      std::uint64_t closures = last_nbrs & g.neighbors(root).bits() & eligible &
                               ~used & ~internal;
      // reflection dedupe: the second cycle vertex stays below the closing one
      closures &= ~(VertexSet::full(path[1] + 1).bits());
      for (int c : VertexSet::from_bits(closures)) {
        path.push_back(c);
        if (visit(path)) stopped = true;
        path.pop_back();
        if (stopped) return;
      }
    }

    std::uint64_t ext = last_nbrs & eligible & ~used & ~prior;
    for (int w : VertexSet::from_bits(ext)) {
      path.push_back(w);
      grow(used | (1ULL << w), prior | last_nbrs, internal | last_nbrs, eligible);
      path.pop_back();
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_odd_hole(const Graph& g,
                       const std::function<bool(const std::vector<int>&)>& visit,
                       int min_length, int cap) {
  if (g.size() > cap)
    throw CapabilityError("odd hole search: order " + std::to_string(g.size()) +
                          " exceeds cap " + std::to_string(cap));
  if (min_length < 5 || min_length % 2 == 0)
    throw DomainError("odd hole minimum length must be odd and at least 5");
  HoleSearch search{g, visit, min_length, {}, false};
  for (int root = 0; root + min_length <= g.size() && !search.stopped; ++root) {
    const std::uint64_t eligible = ~VertexSet::full(root + 1).bits();
    for (int second : g.neighbors(root) & VertexSet::from_bits(eligible)) {
      search.path = {root, second};
      search.grow((1ULL << root) | (1ULL << second), g.neighbors(root).bits(),
                  0, eligible);
      if (search.stopped) break;
    }
  }
}

std::optional<HoleWitness> find_odd_hole(const Graph& g, int cap) {
  std::optional<HoleWitness> found;
  for_each_odd_hole(
      g,
      [&](const std::vector<int>& cycle) {
        found = HoleWitness{cycle, HoleKind::Hole};
        return true;
      },
      5, cap);
  return found;
}

std::optional<HoleWitness> find_odd_antihole(const Graph& g, int cap) {
  auto inner = find_odd_hole(g.complement(), cap);
  if (!inner) return std::nullopt;
  return HoleWitness{inner->cycle, HoleKind::Antihole};
}

PerfectionResult is_perfect(const Graph& g, PerfectionMode mode, int brute_cap,
                            int spgt_cap) {
  PerfectionResult result;
  if (mode == PerfectionMode::Spgt) {
    if (g.size() > spgt_cap)
      throw CapabilityError("is_perfect(spgt): order exceeds cap " +
                            std::to_string(spgt_cap));
    if (auto h = find_odd_hole(g, spgt_cap)) {
      result.hole = std::move(h);
      return result;
    }
    if (auto a = find_odd_antihole(g, spgt_cap)) {
      result.hole = std::move(a);
      return result;
    }
    result.perfect = true;
    return result;
  }

  if (g.size() > brute_cap)
    throw CapabilityError("is_perfect(brute): order exceeds cap " +
                          std::to_string(brute_cap));
  const std::uint64_t all = g.vertices().bits();
  for (std::uint64_t s = 1; s <= all; ++s) {
    if ((s & ~all) != 0) continue;
    const VertexSet sub = VertexSet::from_bits(s);
    const int omega = clique_number_within(g, sub);
    if (omega == sub.count()) continue;  // cliques-plus-rest shortcut never taken: omega < |S|
    const Graph h = g.induced(sub);
    if (!color_with(h, omega)) {
      result.subgraph = sub;
      result.witness_omega = omega;
      result.witness_chi = chromatic_number_exact(h).chi;
      return result;
    }
  }
  result.perfect = true;
  return result;
}

}  // namespace forkdiv::patterns
