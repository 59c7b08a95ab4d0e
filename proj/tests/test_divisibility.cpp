#include <doctest.h>

#include <random>

#include "forkdiv/clique.hpp"
#include "forkdiv/coloring.hpp"
#include "forkdiv/divisibility.hpp"
#include "forkdiv/patterns.hpp"
#include "helpers.hpp"

using namespace forkdiv;
using namespace forkdiv::divisibility;
using patterns::PatternKind;
using testutil::complete;
using testutil::cycle;

namespace {

// memo-free definition oracle: every induced subgraph has some partition
// (A, B) with G[A] perfect (brute) and omega(B) < omega(S). Exponential;
// keep n small.
bool brute_is_pd(const Graph& g) {
  const std::uint64_t all = g.vertices().bits();
  for (std::uint64_t s = 1; s <= all; ++s) {
    if (s & ~all) continue;
    const VertexSet sub = VertexSet::from_bits(s);
    const int omega_s = clique_number_within(g, sub);
    bool divided = false;
    const std::uint64_t bits = sub.bits();
    // iterate subsets a of sub
    for (std::uint64_t a = bits;; a = (a - 1) & bits) {
      const VertexSet aset = VertexSet::from_bits(a);
      const VertexSet bset = sub - aset;
      if (clique_number_within(g, bset) < omega_s) {
        const bool a_perfect =
            aset.empty() ||
            patterns::is_perfect(g.induced(aset), patterns::PerfectionMode::Brute)
                .perfect;
        if (a_perfect) {
          divided = true;
          break;
        }
      }
      if (a == 0) break;
    }
    if (!divided) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("perfect graphs divide as (V, empty)") {
  for (const Graph& g : {complete(4), testutil::path(5), Graph(3)}) {
    const auto cert = find_perfect_division(g);
    REQUIRE(cert.has_value());
    CHECK(cert->a == g.vertices());
    CHECK(cert->b.empty());
    CHECK(cert->omega_b == 0);
    CHECK(validate_certificate(g, *cert));
  }
}

TEST_CASE("C5 divides deterministically") {
  const auto cert = find_perfect_division(cycle(5));
  REQUIRE(cert.has_value());
  CHECK(validate_certificate(cycle(5), *cert));
  CHECK(cert->omega_g == 2);
  CHECK(cert->omega_b == 1);
  const auto again = find_perfect_division(cycle(5));
  REQUIRE(again.has_value());
  CHECK(again->a == cert->a);
  CHECK(again->b == cert->b);
}

TEST_CASE("fast path certificates validate whenever M(v) is perfect") {
  std::mt19937 rng(97);
  int hits = 0;
  for (int trial = 0; trial < 200 && hits < 60; ++trial) {
    const Graph g = testutil::random_graph(4 + trial % 7, rng);
    for (int v = 0; v < g.size(); ++v) {
      const VertexSet m = g.non_neighborhood(v);
      const bool m_perfect =
          m.empty() || patterns::is_perfect(g.induced(m),
                                            patterns::PerfectionMode::Brute)
                           .perfect;
      const auto cert = fast_path_division(g, v);
      CHECK(cert.has_value() == m_perfect);
      if (cert) {
        ++hits;
        CHECK(cert->a == m.with(v));
        CHECK(cert->b == g.neighbors(v));
        CHECK(validate_certificate(g, *cert));
      }
    }
  }
  CHECK(hits >= 60);
}

TEST_CASE("certificate json shape") {
  const auto cert = find_perfect_division(cycle(5));
  REQUIRE(cert.has_value());
  const std::string json = certificate_to_json(*cert);
  CHECK(json.find("\"a\":[") != std::string::npos);
  CHECK(json.find("\"omega_g\":2") != std::string::npos);
  CHECK(json.find("\"perfection_mode\":") != std::string::npos);
}

TEST_CASE("perfectly divisible statuses") {
  MemoCache cache;
  CHECK(is_perfectly_divisible(complete(5), cache).state == PDState::PD);
  CHECK(is_perfectly_divisible(cycle(5), cache).state == PDState::PD);
  const Graph fork = patterns::build_named_graph({PatternKind::Fork, 0});
  CHECK(is_perfectly_divisible(fork, cache).state == PDState::PD);
  CHECK(cache.size() > 0);
  std::mt19937 rng(101);
  CHECK_THROWS_AS(is_perfectly_divisible(testutil::random_graph(11, rng), cache),
                  CapabilityError);
}

TEST_CASE("recursion identity against the memo-free oracle") {
  std::mt19937 rng(103);
  MemoCache cache;
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = testutil::random_graph(4 + trial % 3, rng);
    const bool fast = is_perfectly_divisible(g, cache).state == PDState::PD;
    CHECK(fast == brute_is_pd(g));
  }
  for (const Graph& g :
       {testutil::cycle(7), testutil::random_graph(7, rng, 0.4),
        testutil::random_graph(7, rng, 0.6)}) {
    const bool fast = is_perfectly_divisible(g, cache).state == PDState::PD;
    CHECK(fast == brute_is_pd(g));
  }
}

TEST_CASE("minimality search yields certificates on ordinary graphs") {
  MemoCache cache;
  const auto c5 = is_minimal_non_pd(cycle(5), cache);
  CHECK(!c5.minimal_non_pd);
  REQUIRE(c5.division.has_value());
  CHECK(validate_certificate(cycle(5), *c5.division));

  const auto k4 = is_minimal_non_pd(complete(4), cache);
  CHECK(!k4.minimal_non_pd);
  REQUIRE(k4.division.has_value());

  std::mt19937 rng(107);
  const std::vector<patterns::PatternName> fork = {{PatternKind::Fork, 0}};
  int checked = 0;
  for (int trial = 0; trial < 5000 && checked < 30; ++trial) {
    const Graph g = testutil::random_graph(7, rng, 0.35);
    if (!patterns::is_free_of(g, fork)) continue;
    ++checked;
    CHECK(!is_minimal_non_pd(g, cache).minimal_non_pd);
  }
  CHECK(checked == 30);
}

TEST_CASE("coloring through divisions") {
  const auto c5 = color_via_perfect_division(cycle(5));
  REQUIRE(c5.certificate.has_value());
  CHECK(c5.certificate->omega == 2);
  CHECK(c5.certificate->bound == 3);
  CHECK(c5.certificate->colors_used == 3);
  CHECK(coloring_is_proper(cycle(5), c5.certificate->colors));

  const auto k4 = color_via_perfect_division(complete(4));
  REQUIRE(k4.certificate.has_value());
  CHECK(k4.certificate->colors_used == 4);
  CHECK(k4.certificate->bound == 10);
  CHECK(k4.certificate->levels.size() == 1);
}

TEST_CASE("coloring certificates are valid on random graphs") {
  std::mt19937 rng(109);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testutil::random_graph(4 + trial % 6, rng);
    const auto outcome = color_via_perfect_division(g);
    REQUIRE(outcome.certificate.has_value());  // no stuck level expected here
    const auto& cert = *outcome.certificate;
    CHECK(coloring_is_proper(g, cert.colors));
    CHECK(cert.colors_used <= cert.bound);
    CHECK(cert.colors_used >= chromatic_number_exact(g).chi);
    // levels chain through B with omega strictly decreasing
    VertexSet remaining = g.vertices();
    int prev_omega = cert.omega + 1;
    for (const auto& level : cert.levels) {
      CHECK((level.a | level.b) == remaining);
      CHECK(!level.a.intersects(level.b));
      CHECK(level.omega_g == clique_number_within(g, remaining));
      CHECK(level.omega_b == clique_number_within(g, level.b));
      CHECK(level.omega_b < level.omega_g);
      CHECK(level.omega_g < prev_omega);
      if (!level.a.empty())
        CHECK(patterns::is_perfect(g.induced(level.a),
                                   patterns::PerfectionMode::Brute)
                  .perfect);
      prev_omega = level.omega_g;
      remaining = level.b;
    }
    CHECK(remaining.empty());
  }
}

TEST_CASE("memo cache journal") {
  MemoCache cache;
  cache.insert("x", true);
  cache.insert("x", true);
  cache.insert("y", false);
  CHECK(cache.size() == 2);
  const auto fresh = cache.drain_new();
  REQUIRE(fresh.size() == 2);
  CHECK(cache.drain_new().empty());
  CHECK(cache.lookup("x").value() == true);
  CHECK(cache.lookup("z") == std::nullopt);
}
