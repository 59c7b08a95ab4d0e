#include "forkdiv/patterns.hpp"

#include <algorithm>
#include <charconv>

namespace forkdiv::patterns {

namespace {

Graph path_graph(int k) {
  if (k < 1) throw DomainError("path length must be at least 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph(k, edges);
}

Graph cycle_graph(int k) {
  if (k < 4) throw DomainError("hole length must be at least 4");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph(k, edges);
}

}  // namespace

// Vertex layouts:
//   fork       0 centre; 1,2 leaves; 0-3-4 the subdivided edge
//   claw       0 centre; 1,2,3 leaves
//   paw        0,1,2 triangle; 3 pendant on 0
//   diamond    0-1-2 path; 3 joined to all of them
//   dart       0-1-2 path; 3 isolated in the base; 4 joined to 0..3
//   banner     0-1-2-3-0 square; 4 pendant on 0
//   bull       0,1,2 triangle; 3 pendant on 0; 4 pendant on 1
//   co-dart    paw on 0..3; 4 isolated
//   co-cricket diamond on 0..3; 4 isolated
//   balloon k  hole 0..k-1; k adjacent to 0,1; k+1 pendant on k
//   parachute k  hole 0..k-1; k complete to the hole; k+1 pendant on k
Graph build_named_graph(const PatternName& name) {
  switch (name.kind) {
    case PatternKind::Fork:
      return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    case PatternKind::Claw:
      return Graph(4, {{0, 1}, {0, 2}, {0, 3}});
    case PatternKind::Path:
      return path_graph(name.param);
    case PatternKind::P6K1: {
      Graph p6 = path_graph(6);
      std::vector<std::pair<int, int>> edges = p6.edges();
      return Graph(7, edges);
    }
    case PatternKind::Dart:
      return Graph(5, {{0, 1}, {1, 2}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
    case PatternKind::Banner:
      return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    case PatternKind::Paw:
      return Graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    case PatternKind::CoDart:
      return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    case PatternKind::Bull:
      return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}});
    case PatternKind::Diamond:
      return Graph(4, {{0, 1}, {1, 2}, {3, 0}, {3, 1}, {3, 2}});
    case PatternKind::CoCricket:
      return Graph(5, {{0, 1}, {1, 2}, {3, 0}, {3, 1}, {3, 2}});
    case PatternKind::Hole:
      return cycle_graph(name.param);
    case PatternKind::Balloon: {
      const int k = name.param;
      if (k < 4) throw DomainError("balloon hole length must be at least 4");
      std::vector<std::pair<int, int>> edges = cycle_graph(k).edges();
      edges.emplace_back(k, 0);
      edges.emplace_back(k, 1);
      edges.emplace_back(k, k + 1);
      return Graph(k + 2, edges);
    }
    case PatternKind::Parachute: {
      const int k = name.param;
      if (k < 4) throw DomainError("parachute hole length must be at least 4");
      std::vector<std::pair<int, int>> edges = cycle_graph(k).edges();
      for (int i = 0; i < k; ++i) edges.emplace_back(k, i);
      edges.emplace_back(k, k + 1);
      return Graph(k + 2, edges);
    }
    case PatternKind::Triad:
      return Graph(3);
  }
  throw DomainError("unknown pattern kind");
}

std::string to_token(const PatternName& name) {
  switch (name.kind) {
    case PatternKind::Fork: return "fork";
    case PatternKind::Claw: return "claw";
    case PatternKind::Path: return "p" + std::to_string(name.param);
    case PatternKind::P6K1: return "p6k1";
    case PatternKind::Dart: return "dart";
    case PatternKind::Banner: return "banner";
    case PatternKind::Paw: return "paw";
    case PatternKind::CoDart: return "codart";
    case PatternKind::Bull: return "bull";
    case PatternKind::Diamond: return "diamond";
    case PatternKind::CoCricket: return "cocricket";
    case PatternKind::Hole: return "c" + std::to_string(name.param);
    case PatternKind::Balloon: return "balloon:" + std::to_string(name.param);
    case PatternKind::Parachute: return "parachute:" + std::to_string(name.param);
    case PatternKind::Triad: return "triad";
  }
  return "?";
}

std::optional<PatternName> parse_token(std::string_view token) {
  auto fixed = [&](std::string_view t, PatternKind k) -> std::optional<PatternName> {
    if (token == t) return PatternName{k, 0};
    return std::nullopt;
  };
  if (auto p = fixed("fork", PatternKind::Fork)) return p;
  if (auto p = fixed("claw", PatternKind::Claw)) return p;
  if (auto p = fixed("p6k1", PatternKind::P6K1)) return p;
  if (auto p = fixed("dart", PatternKind::Dart)) return p;
  if (auto p = fixed("banner", PatternKind::Banner)) return p;
  if (auto p = fixed("paw", PatternKind::Paw)) return p;
  if (auto p = fixed("codart", PatternKind::CoDart)) return p;
  if (auto p = fixed("bull", PatternKind::Bull)) return p;
  if (auto p = fixed("diamond", PatternKind::Diamond)) return p;
  if (auto p = fixed("cocricket", PatternKind::CoCricket)) return p;
  if (auto p = fixed("triad", PatternKind::Triad)) return p;

  auto parse_int = [](std::string_view s) -> std::optional<int> {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
  };
  if (token.size() > 1 && token[0] == 'p') {
    if (auto k = parse_int(token.substr(1)); k && *k >= 1)
      return PatternName{PatternKind::Path, *k};
  }
  if (token.size() > 1 && token[0] == 'c') {
    if (auto k = parse_int(token.substr(1)); k && *k >= 4)
      return PatternName{PatternKind::Hole, *k};
  }
  constexpr std::string_view balloon = "balloon:";
  constexpr std::string_view parachute = "parachute:";
  if (token.substr(0, balloon.size()) == balloon) {
    if (auto k = parse_int(token.substr(balloon.size())); k && *k >= 4)
      return PatternName{PatternKind::Balloon, *k};
  }
  if (token.substr(0, parachute.size()) == parachute) {
    if (auto k = parse_int(token.substr(parachute.size())); k && *k >= 4)
      return PatternName{PatternKind::Parachute, *k};
  }
  return std::nullopt;
}

namespace {

struct EmbeddingSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> slot_to_pattern;  // pattern vertices, descending degree
  std::vector<int> phi;              // pattern vertex -> host vertex
  std::uint64_t used = 0;

  bool place(std::size_t slot) {
    if (slot == slot_to_pattern.size()) return true;
    const int p = slot_to_pattern[slot];
    const int pdeg = h.degree(p);
    for (int v = 0; v < g.size(); ++v) {
      if (used & (1ULL << v)) continue;
      if (g.degree(v) < pdeg) continue;
      bool ok = true;
      for (std::size_t s = 0; s < slot && ok; ++s) {
        const int q = slot_to_pattern[s];
        if (h.adjacent(p, q) != g.adjacent(v, phi[q])) ok = false;
      }
      if (!ok) continue;
      phi[p] = v;
      used |= 1ULL << v;
      if (place(slot + 1)) return true;
      used &= ~(1ULL << v);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h) {
  if (h.size() > kPatternCap)
    throw CapabilityError("contains_induced: pattern order " +
                          std::to_string(h.size()) + " exceeds cap " +
                          std::to_string(kPatternCap));
  if (h.size() > g.size()) return std::nullopt;

  EmbeddingSearch search{g, h, {}, {}, 0};
  search.slot_to_pattern.resize(static_cast<std::size_t>(h.size()));
  for (std::size_t i = 0; i < search.slot_to_pattern.size(); ++i)
    search.slot_to_pattern[i] = static_cast<int>(i);
  std::stable_sort(search.slot_to_pattern.begin(), search.slot_to_pattern.end(),
                   [&](int a, int b) { return h.degree(a) > h.degree(b); });
  search.phi.assign(static_cast<std::size_t>(h.size()), -1);
  if (search.place(0)) return search.phi;
  return std::nullopt;
}

std::vector<FreenessEntry> classify_freeness(const Graph& g,
                                             const std::vector<PatternName>& names) {
  std::vector<FreenessEntry> out;
  out.reserve(names.size());
  for (const auto& name : names)
    out.push_back({name, contains_induced(g, build_named_graph(name))});
  return out;
}

bool is_free_of(const Graph& g, const std::vector<PatternName>& names) {
  for (const auto& name : names)
    if (contains_induced(g, build_named_graph(name))) return false;
  return true;
}

}  // namespace forkdiv::patterns
