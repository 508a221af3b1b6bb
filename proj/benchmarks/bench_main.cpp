#include <benchmark/benchmark.h>

#include "listcomb/compression.hpp"
#include "listcomb/covers.hpp"
#include "listcomb/dims.hpp"
#include "listcomb/learning.hpp"
#include "listcomb/random.hpp"
#include "listcomb/verify.hpp"

namespace {

using namespace listcomb;

std::vector<LabelTuple> cube_tuples(std::size_t n, std::size_t m) {
  std::vector<LabelTuple> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  for (std::size_t c = 0; c < total; ++c) {
    LabelTuple t;
    for (std::size_t i = 0, v = c; i < n; ++i, v /= m) t.push_back(static_cast<LabelIndex>(v % m));
    out.push_back(t);
  }
  return out;
}

void BM_PseudocubePeeling(benchmark::State& state) {
  auto tuples = cube_tuples(static_cast<std::size_t>(state.range(0)), 3);
  // Knock out every fifth tuple so peeling has work to do.
  std::vector<LabelTuple> holed;
  for (std::size_t i = 0; i < tuples.size(); ++i)
    if (i % 5 != 0) holed.push_back(tuples[i]);
  for (auto _ : state) benchmark::DoNotOptimize(max_pseudocube(holed, 1));
  state.counters["tuples"] = static_cast<double>(holed.size());
}
BENCHMARK(BM_PseudocubePeeling)->DenseRange(2, 6);

void BM_DsDimension(benchmark::State& state) {
  auto rng = make_stream(1, {static_cast<std::uint64_t>(state.range(0))});
  const ConceptClass c = random_class(rng, {static_cast<std::size_t>(state.range(0)), 3, 16, 1, 3}, false, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ds_dimension(c, 1));
}
BENCHMARK(BM_DsDimension)->DenseRange(3, 6);

void BM_MinCover(benchmark::State& state) {
  auto rng = make_stream(2, {});
  const ConceptClass c = random_class(rng, {5, 4, static_cast<std::size_t>(state.range(0)), 1, 4}, true, 1);
  for (auto _ : state) benchmark::DoNotOptimize(min_cover(c, 2));
}
BENCHMARK(BM_MinCover)->Arg(6)->Arg(10)->Arg(14);

void BM_LossGame(benchmark::State& state) {
  const std::size_t rows = static_cast<std::size_t>(state.range(0));
  auto rng = make_stream(3, {rows});
  std::vector<std::vector<std::uint8_t>> loss(rows, std::vector<std::uint8_t>(rows));
  for (auto& r : loss)
    for (auto& v : r) v = static_cast<std::uint8_t>(rng() & 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_loss_game(loss));
}
BENCHMARK(BM_LossGame)->RangeMultiplier(2)->Range(8, 128);

void BM_Boost(benchmark::State& state) {
  auto rng = make_stream(4, {});
  const ConceptClass c = random_class(rng, {4, 3, 8, 1, 2}, false, 1);
  Sample s;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    const auto x = static_cast<PointIndex>(rng() % c.domain().size());
    s.push_back({x, c[0].label(x)});
  }
  const LearningRule rule = erm(c);
  BoostConfig cfg;
  cfg.epsilon = default_epsilon(1);
  cfg.d = minimal_block_length(rule, s, cfg.epsilon, s.size(), cfg).value_or(s.size());
  for (auto _ : state) benchmark::DoNotOptimize(boost_compress(rule, c, s, cfg));
}
BENCHMARK(BM_Boost)->Arg(10)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
