#include <benchmark/benchmark.h>

#include "support/generators.hpp"
#include "zzlocal/zzlocal.hpp"

namespace {

using namespace zzlocal;

std::vector<DiagramPoint> spread(testing::Rng& rng, long n) {
  std::vector<DiagramPoint> pts;
  for (long k = 0; k < n; ++k) {
    const Rational b = testing::random_rational(rng, -50, 50);
    pts.emplace_back(b, b + testing::random_rational(rng, 0, 20), static_cast<int>(k % 2));
  }
  return pts;
}

void BM_Bottleneck(benchmark::State& state) {
  testing::Rng rng(5);
  const PersistenceDiagram a(spread(rng, state.range(0)));
  const PersistenceDiagram b(spread(rng, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bottleneck_distance(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Bottleneck)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_IntervalDecomposition(benchmark::State& state) {
  testing::Rng rng(6);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<ArrowDirection> dirs;
  for (std::size_t k = 0; k + 1 < n; ++k) dirs.push_back(k % 2 ? ArrowDirection::Backward : ArrowDirection::Forward);
  std::vector<IndexInterval> intervals;
  for (std::size_t k = 0; k < 3 * n; ++k) {
    auto b = static_cast<std::size_t>(testing::uniform(rng, 1, static_cast<long>(n)));
    auto d = static_cast<std::size_t>(testing::uniform(rng, 1, static_cast<long>(n)));
    if (d < b) std::swap(b, d);
    intervals.push_back({b, d});
  }
  const auto module = testing::scramble(rng, direct_sum_of_intervals(dirs, intervals));
  for (auto _ : state) benchmark::DoNotOptimize(interval_decomposition(module));
}
BENCHMARK(BM_IntervalDecomposition)->Arg(8)->Arg(16)->Arg(24);

MetricGraph ladder(std::size_t rungs) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < 2 * rungs; ++k) names.push_back("v" + std::to_string(k));
  for (std::size_t k = 0; k < rungs; ++k) {
    edges.push_back({2 * k, 2 * k + 1, Rational(static_cast<long>(k % 3) + 2)});
    if (k + 1 < rungs) {
      edges.push_back({2 * k, 2 * k + 2, Rational(3)});
      edges.push_back({2 * k + 1, 2 * k + 3, Rational(static_cast<long>(k % 2) + 4)});
    }
  }
  return MetricGraph(std::move(names), std::move(edges));
}

void BM_LevelSetDiagram(benchmark::State& state) {
  const MetricGraph g = ladder(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(phi(g, GraphPoint::at_vertex(0)));
}
BENCHMARK(BM_LevelSetDiagram)->Arg(2)->Arg(4)->Arg(8);

void BM_Distortion(benchmark::State& state) {
  const MetricGraph g1 = ladder(3);
  const MetricGraph g2 = ladder(4);
  for (auto _ : state) benchmark::DoNotOptimize(persistence_distortion(g1, g2, 1, Rational(4)));
}
BENCHMARK(BM_Distortion)->Unit(benchmark::kMillisecond);

void BM_MatchingDistance(benchmark::State& state) {
  testing::Rng rng(7);
  const auto a = testing::random_bifiltration(rng, 15);
  const auto b = testing::random_bifiltration(rng, 15);
  const auto grid = line_grid(a, b);
  for (auto _ : state) benchmark::DoNotOptimize(matching_distance(a, b, grid, 0));
}
BENCHMARK(BM_MatchingDistance)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
