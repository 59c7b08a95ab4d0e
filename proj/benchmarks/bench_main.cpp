#include <benchmark/benchmark.h>

#include <random>

#include "forkdiv/canonical.hpp"
#include "forkdiv/clique.hpp"
#include "forkdiv/coloring.hpp"
#include "forkdiv/decomp.hpp"
#include "forkdiv/divisibility.hpp"
#include "forkdiv/graph6.hpp"
#include "forkdiv/holes.hpp"
#include "forkdiv/lemmas.hpp"
#include "forkdiv/patterns.hpp"

using namespace forkdiv;

namespace {

Graph random_graph(int n, unsigned seed, double p = 0.5) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph balloon_with_tail() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  edges.emplace_back(5, 0);
  edges.emplace_back(5, 1);
  edges.emplace_back(5, 6);
  edges.emplace_back(6, 7);
  return Graph(8, edges);
}

void bm_graph6_round_trip(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_graph6(to_graph6(g)));
  }
}
BENCHMARK(bm_graph6_round_trip)->Arg(8)->Arg(32)->Arg(64);

void bm_clique_number(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(clique_number(g).omega);
}
BENCHMARK(bm_clique_number)->Arg(16)->Arg(32)->Arg(48);

void bm_chromatic_exact(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number_exact(g).chi);
}
BENCHMARK(bm_chromatic_exact)->Arg(10)->Arg(13)->Arg(16);

void bm_canonical_form(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).bytes.size());
}
BENCHMARK(bm_canonical_form)->Arg(8)->Arg(12)->Arg(16);

void bm_canonical_cycle16(benchmark::State& state) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 16; ++i) edges.emplace_back(i, (i + 1) % 16);
  const Graph c16(16, edges);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(c16).bytes.size());
}
BENCHMARK(bm_canonical_cycle16);

void bm_find_odd_hole(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 5, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(patterns::find_odd_hole(g));
}
BENCHMARK(bm_find_odd_hole)->Arg(10)->Arg(16);

void bm_fork_detection(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 6, 0.3);
  const Graph fork = patterns::build_named_graph({patterns::PatternKind::Fork, 0});
  for (auto _ : state) benchmark::DoNotOptimize(patterns::contains_induced(g, fork));
}
BENCHMARK(bm_fork_detection)->Arg(16)->Arg(32);

void bm_is_perfect_spgt(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 7, 0.4);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        patterns::is_perfect(g, patterns::PerfectionMode::Spgt).perfect);
}
BENCHMARK(bm_is_perfect_spgt)->Arg(10)->Arg(16);

void bm_is_perfect_brute(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 8, 0.4);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        patterns::is_perfect(g, patterns::PerfectionMode::Brute).perfect);
}
BENCHMARK(bm_is_perfect_brute)->Arg(8)->Arg(10);

void bm_decompose(benchmark::State& state) {
  const Graph g = balloon_with_tail();
  const auto ctxs = decomp::enumerate_hole_contexts(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(decomp::decompose_hole_neighborhood(g, ctxs[0]));
}
BENCHMARK(bm_decompose);

void bm_lemma_sweep(benchmark::State& state) {
  const Graph g = balloon_with_tail();
  for (auto _ : state) benchmark::DoNotOptimize(lemmas::check_graph(g).size());
}
BENCHMARK(bm_lemma_sweep);

void bm_find_perfect_division(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 9, 0.4);
  for (auto _ : state)
    benchmark::DoNotOptimize(divisibility::find_perfect_division(g));
}
BENCHMARK(bm_find_perfect_division)->Arg(9)->Arg(12);

void bm_pd_certification(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 10, 0.4);
  for (auto _ : state) {
    divisibility::MemoCache cache;  // cold every iteration
    benchmark::DoNotOptimize(divisibility::is_perfectly_divisible(g, cache));
  }
}
BENCHMARK(bm_pd_certification)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
