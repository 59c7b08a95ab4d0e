#include "forkdiv/coloring.hpp"

#include "forkdiv/clique.hpp"

namespace forkdiv {

namespace {

bool extend(const Graph& g, int k, int v, int used, std::vector<int>& colors) {
  if (v == g.size()) return true;
  const int limit = used < k ? used + 1 : k;  // first unused colour breaks ties
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (int u : g.neighbors(v) & VertexSet::full(v))
      if (colors[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    colors[v] = c;
    if (extend(g, k, v + 1, used + (c == used ? 1 : 0), colors)) return true;
  }
  colors[v] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> color_with(const Graph& g, int k) {
  if (k < 1) return std::nullopt;
  std::vector<int> colors(static_cast<std::size_t>(g.size()), -1);
  if (extend(g, k, 0, 0, colors)) return colors;
  return std::nullopt;
}

ColoringResult chromatic_number_exact(const Graph& g, int cap) {
  if (g.size() > cap)
    throw CapabilityError("chromatic_number_exact: order " +
                          std::to_string(g.size()) + " exceeds cap " +
                          std::to_string(cap));
  const int lb = clique_number_within(g, g.vertices());
  for (int k = lb; k <= g.size(); ++k)
    if (auto colors = color_with(g, k)) return {k, std::move(*colors)};
  // unreachable: n colours always suffice
  throw Error("chromatic_number_exact: search fell through");
}

bool coloring_is_proper(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.size()) return false;
  for (int v = 0; v < g.size(); ++v)
    if (colors[v] < 0) return false;
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return true;
}

}  // namespace forkdiv
