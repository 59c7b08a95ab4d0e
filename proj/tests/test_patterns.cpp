#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "forkdiv/patterns.hpp"
#include "helpers.hpp"

using namespace forkdiv;
using namespace forkdiv::patterns;
using testutil::cycle;
using testutil::path;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degs;
  for (int v = 0; v < g.size(); ++v) degs.push_back(g.degree(v));
  std::sort(degs.begin(), degs.end());
  return degs;
}

// brute-force oracle: try every injective map
bool brute_contains_induced(const Graph& g, const Graph& h) {
  const int n = g.size(), k = h.size();
  if (k > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> rec = [&](int depth) -> bool {
    if (depth == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int q = 0; q < depth && ok; ++q)
        if (h.adjacent(q, depth) != g.adjacent(pick[q], v)) ok = false;
      if (!ok) continue;
      used[v] = true;
      pick[depth] = v;
      if (rec(depth + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("catalog shapes") {
  const Graph fork = build_named_graph({PatternKind::Fork, 0});
  CHECK(fork.size() == 5);
  CHECK(fork.edge_count() == 4);
  CHECK(degree_sequence(fork) == std::vector<int>{1, 1, 1, 2, 3});

  const Graph dart = build_named_graph({PatternKind::Dart, 0});
  CHECK(dart.size() == 5);
  CHECK(dart.edge_count() == 6);

  const Graph parachute = build_named_graph({PatternKind::Parachute, 5});
  CHECK(parachute.size() == 7);
  CHECK(parachute.complete_to(5, VertexSet::of({0, 1, 2, 3, 4})));
  CHECK(parachute.neighbors(6) == VertexSet::of({5}));

  const Graph balloon = build_named_graph({PatternKind::Balloon, 5});
  CHECK(balloon.size() == 7);
  CHECK(balloon.neighbors(5) == VertexSet::of({0, 1, 6}));
  CHECK(balloon.neighbors(6) == VertexSet::of({5}));

  CHECK(build_named_graph({PatternKind::CoDart, 0}).components().size() == 2);
  CHECK(build_named_graph({PatternKind::CoCricket, 0}).components().size() == 2);
  CHECK(build_named_graph({PatternKind::P6K1, 0}).components().size() == 2);
  CHECK(build_named_graph({PatternKind::Triad, 0}).edge_count() == 0);
  CHECK(build_named_graph({PatternKind::Paw, 0}).edge_count() == 4);
  CHECK(build_named_graph({PatternKind::Banner, 0}).edge_count() == 5);
  CHECK(build_named_graph({PatternKind::Bull, 0}).edge_count() == 5);

  const Graph diamond = build_named_graph({PatternKind::Diamond, 0});
  CHECK(diamond.size() == 4);
  CHECK(diamond.edge_count() == 5);

  CHECK(build_named_graph({PatternKind::Path, 1}).size() == 1);
  CHECK(build_named_graph({PatternKind::Hole, 4}) == cycle(4));
  CHECK_THROWS_AS(build_named_graph({PatternKind::Path, 0}), DomainError);
  CHECK_THROWS_AS(build_named_graph({PatternKind::Hole, 3}), DomainError);
  CHECK_THROWS_AS(build_named_graph({PatternKind::Balloon, 3}), DomainError);
}

TEST_CASE("tokens round-trip") {
  const std::vector<PatternName> names = {
      {PatternKind::Fork, 0},      {PatternKind::Claw, 0},
      {PatternKind::Path, 7},      {PatternKind::P6K1, 0},
      {PatternKind::Dart, 0},      {PatternKind::Banner, 0},
      {PatternKind::Paw, 0},       {PatternKind::CoDart, 0},
      {PatternKind::Bull, 0},      {PatternKind::Diamond, 0},
      {PatternKind::CoCricket, 0}, {PatternKind::Hole, 6},
      {PatternKind::Balloon, 5},   {PatternKind::Parachute, 7},
      {PatternKind::Triad, 0},
  };
  for (const auto& name : names) {
    auto back = parse_token(to_token(name));
    REQUIRE(back.has_value());
    CHECK(*back == name);
  }
  CHECK(!parse_token("p0"));
  CHECK(!parse_token("c3"));
  CHECK(!parse_token("balloon:2"));
  CHECK(!parse_token("frok"));
}

TEST_CASE("fork contains an induced claw") {
  const Graph fork = build_named_graph({PatternKind::Fork, 0});
  const Graph claw = build_named_graph({PatternKind::Claw, 0});
  CHECK(contains_induced(fork, claw).has_value());
}

TEST_CASE("embedding spot checks") {
  const Graph claw = build_named_graph({PatternKind::Claw, 0});
  CHECK(!contains_induced(cycle(5), claw).has_value());
  const Graph p7 = path(7);
  const auto id = contains_induced(p7, p7);
  REQUIRE(id.has_value());
  std::vector<int> identity(7);
  for (int i = 0; i < 7; ++i) identity[static_cast<std::size_t>(i)] = i;
  CHECK(*id == identity);
}

TEST_CASE("embedding cap") {
  std::mt19937 rng(41);
  const Graph big = testutil::random_graph(9, rng);
  CHECK_THROWS_AS(contains_induced(cycle(10), big), CapabilityError);
}

TEST_CASE("embedding agrees with the all-injections oracle") {
  std::mt19937 rng(43);
  const std::vector<PatternName> probes = {
      {PatternKind::Claw, 0}, {PatternKind::Paw, 0},   {PatternKind::Diamond, 0},
      {PatternKind::Path, 4}, {PatternKind::Path, 5},  {PatternKind::Hole, 4},
      {PatternKind::Hole, 5}, {PatternKind::Triad, 0}, {PatternKind::Fork, 0},
  };
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testutil::random_graph(4 + trial % 5, rng);
    for (const auto& name : probes) {
      const Graph h = build_named_graph(name);
      if (h.size() > 5) continue;
      const auto found = contains_induced(g, h);
      CHECK(found.has_value() == brute_contains_induced(g, h));
      if (found) {
        for (int u = 0; u < h.size(); ++u)
          for (int v = u + 1; v < h.size(); ++v)
            CHECK(h.adjacent(u, v) ==
                  g.adjacent((*found)[static_cast<std::size_t>(u)],
                             (*found)[static_cast<std::size_t>(v)]));
      }
    }
  }
}

TEST_CASE("classify freeness") {
  const auto entries = classify_freeness(
      cycle(5),
      {{PatternKind::Fork, 0}, {PatternKind::Claw, 0}, {PatternKind::Path, 7}});
  REQUIRE(entries.size() == 3);
  for (const auto& e : entries) CHECK(e.free());

  const Graph fork = build_named_graph({PatternKind::Fork, 0});
  const auto self = classify_freeness(fork, {{PatternKind::Fork, 0}});
  REQUIRE(self.size() == 1);
  REQUIRE(!self[0].free());
  std::vector<int> identity(5);
  for (int i = 0; i < 5; ++i) identity[static_cast<std::size_t>(i)] = i;
  CHECK(*self[0].witness == identity);

  const Graph balloon = build_named_graph({PatternKind::Balloon, 5});
  CHECK(is_free_of(balloon, {{PatternKind::Fork, 0}}));
}

TEST_CASE("freeness is hereditary under deletion chains") {
  std::mt19937 rng(47);
  const std::vector<PatternName> names = {{PatternKind::Fork, 0}};
  int checked = 0;
  while (checked < 25) {
    Graph g = testutil::random_graph(8, rng, 0.35);
    if (!is_free_of(g, names)) continue;
    ++checked;
    while (g.size() > 1) {
      const int v = static_cast<int>(rng() % static_cast<unsigned>(g.size()));
      g = g.induced(g.vertices().without(v));
      CHECK(is_free_of(g, names));
    }
  }
}
