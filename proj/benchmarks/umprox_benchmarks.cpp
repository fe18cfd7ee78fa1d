#include <benchmark/benchmark.h>

#include "umprox/umprox.hpp"

using namespace umprox;

namespace {

Point random_point(Index n, std::uint64_t seed) {
  RandomStream rng(seed, 0);
  Point y(n);
  for (Index i = 0; i < n; ++i) y[i] = rng.normal();
  return y;
}

Matrix random_matrix(Index m, Index n, std::uint64_t seed) {
  RandomStream rng(seed, 0);
  Matrix A(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) A(i, j) = rng.uniform(-1.0, 1.0);
  }
  return A;
}

void BM_ProjectSimplex(benchmark::State& state) {
  const Point y = random_point(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(project_simplex(y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProjectSimplex)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

void BM_ProjectBall(benchmark::State& state) {
  const auto set = FeasibleSet::ball(Point::Zero(state.range(0)), 1.0);
  const Point y = random_point(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(project(set, y));
}
BENCHMARK(BM_ProjectBall)->RangeMultiplier(8)->Range(8, 1 << 15);

void BM_ProjectGameProduct(benchmark::State& state) {
  const Index n = state.range(0);
  const auto set = FeasibleSet::product({FeasibleSet::simplex(n), FeasibleSet::simplex(n)});
  const Point y = random_point(2 * n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(project(set, y));
}
BENCHMARK(BM_ProjectGameProduct)->RangeMultiplier(8)->Range(8, 4096);

void BM_UmpMatrixGame(benchmark::State& state) {
  const Index n = state.range(0);
  const VIProblem p = make_matrix_game(random_matrix(n, n, 4));
  constexpr std::int64_t K = 1000;
  RunOptions options;
  options.cadence = LogCadence{0, 2.0, {}};
  for (auto _ : state) benchmark::DoNotOptimize(run(p, K, options).w_hat);
  state.SetItemsProcessed(state.iterations() * K);
}
BENCHMARK(BM_UmpMatrixGame)->Arg(3)->Arg(32)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_StochasticUmpMatrixGame(benchmark::State& state) {
  const VIProblem p = make_matrix_game(random_matrix(32, 32, 5));
  const auto oracle = add_gaussian_noise(p, 0.1);
  constexpr std::int64_t K = 1000;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_stochastic(p, oracle, K, seed++).w_hat);
  state.SetItemsProcessed(state.iterations() * K);
}
BENCHMARK(BM_StochasticUmpMatrixGame)->Unit(benchmark::kMillisecond);

void BM_GameGap(benchmark::State& state) {
  const Index n = state.range(0);
  const Matrix A = random_matrix(n, n, 6);
  const Point u = Point::Constant(n, 1.0 / n);
  for (auto _ : state) benchmark::DoNotOptimize(gap_matrix_game(A, u, u).value);
}
BENCHMARK(BM_GameGap)->RangeMultiplier(8)->Range(8, 1024);

}  // namespace
BENCHMARK_MAIN();
