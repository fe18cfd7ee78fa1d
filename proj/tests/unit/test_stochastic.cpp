#include <cmath>

#include <gtest/gtest.h>

#include "bench/acceptance.hpp"
#include "umprox/umprox.hpp"

using namespace umprox;

namespace {

RunOptions exact_gap_options(const VIProblem& p) {
  RunOptions o;
  o.gap_oracle = [&p](const Point& w) { return std::optional<double>(exact_gap(p, w)->value); };
  return o;
}

std::vector<std::uint64_t> seed_range(std::uint64_t first, int n) {
  std::vector<std::uint64_t> s(n);
  for (int i = 0; i < n; ++i) s[i] = first + i;
  return s;
}

bool same_rows(const RunReport& a, const RunReport& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].k != b.rows[i].k || a.rows[i].L != b.rows[i].L ||
        a.rows[i].certificate != b.rows[i].certificate) {
      return false;
    }
  }
  return a.w_hat == b.w_hat && a.L0 == b.L0;
}

}  // namespace

TEST(Noise, ZeroSigmaIsExactAndConsumesNoRandomness) {
  const VIProblem p = bench::suite_random_games()[0];
  const StochasticOracle oracle = add_gaussian_noise(p, 0.0);
  RandomStream a(1, 0), b(1, 0);
  const Point x = initial_point(p.set);
  EXPECT_EQ(oracle.sample(x, a), p.op(x));
  EXPECT_EQ(a.uniform(), b.uniform());
}

TEST(Noise, Moments) {
  constexpr int N = 100000;
  const double sigma = 0.7;
  const VIProblem p = bench::suite_affine_ball();
  const StochasticOracle oracle = add_gaussian_noise(p, sigma);
  const Point x = Point::Constant(5, 0.1);
  const Point gx = p.op(x);
  RandomStream rng(31, 0);
  Point mean = Point::Zero(5);
  double sq = 0.0;
  for (int i = 0; i < N; ++i) {
    const Point noise = oracle.sample(x, rng) - gx;
    mean += noise / N;
    sq += noise.squaredNorm() / N;
  }
  EXPECT_NEAR(sq, sigma * sigma, 0.05 * sigma * sigma);
  EXPECT_LT(mean.lpNorm<Eigen::Infinity>(), 5.0 * sigma / std::sqrt(static_cast<double>(N)));
}

TEST(Noise, RejectsNegativeSigma) {
  EXPECT_THROW(add_gaussian_noise(make_holder_1d(1.0), -0.1), InvalidArgument);
}

TEST(SampleStreams, SubstreamsDiffer) {
  SampleStreams s(99);
  EXPECT_NE(s.at_z.engine()(), s.at_w.engine()());
}

TEST(RunStochastic, SampleCount) {
  const VIProblem p = bench::suite_game_2x2();
  const auto r = run_stochastic(p, add_gaussian_noise(p, 0.3), 250, 5);
  EXPECT_EQ(r.sample_count, 2 * 250 + 1);
  EXPECT_EQ(r.seed, 5u);
  EXPECT_EQ(r.sigma_used, 0.3);
}

TEST(RunStochastic, SeedDeterminism) {
  const VIProblem p = bench::suite_random_games()[2];
  const StochasticOracle oracle = add_gaussian_noise(p, 0.5);
  const auto a = run_stochastic(p, oracle, 100, 17);
  const auto b = run_stochastic(p, oracle, 100, 17);
  const auto c = run_stochastic(p, oracle, 100, 18);
  EXPECT_TRUE(same_rows(a, b));
  EXPECT_FALSE(same_rows(a, c));
}

TEST(RunStochastic, OneStepZeroNoiseMatchesDeterministic) {
  const VIProblem p = bench::suite_random_games()[0];
  const auto s = run_stochastic(p, add_gaussian_noise(p, 0.0), 1, 3);
  const auto d = run(p, 1);
  EXPECT_TRUE(same_rows(s, d));
}

TEST(RunStochastic, ZeroNoiseMatchesDeterministicStepForStep) {
  for (const auto& p : bench::lipschitz_suite()) {
    std::vector<SolverState> ds, ss;
    RunOptions a, b;
    a.on_step = [&](const StepDetails& s) { ds.push_back(s.next); };
    b.on_step = [&](const StepDetails& s) { ss.push_back(s.next); };
    run(p, 300, a);
    run_stochastic(p, add_gaussian_noise(p, 0.0), 300, 11, b);
    ASSERT_EQ(ds.size(), ss.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
      ASSERT_EQ(ds[i].z, ss[i].z) << p.label << " step " << i;
      ASSERT_EQ(ds[i].L, ss[i].L) << p.label << " step " << i;
    }
  }
}

TEST(RunStochastic, StepSizeIsMonotonePerPath) {
  const VIProblem p = make_holder_1d(0.5, 0.3);
  RunOptions o;
  o.on_step = [](const StepDetails& s) { EXPECT_GE(s.next.L, s.L_prev); };
  run_stochastic(p, add_gaussian_noise(p, 1.0), 2000, 4, o);
}

TEST(RunStochastic, ParallelSeedsMatchSequentialRuns) {
  const VIProblem p = bench::suite_game_2x2();
  const StochasticOracle oracle = add_gaussian_noise(p, 0.2);
  const auto seeds = seed_range(40, 5);
  const auto all = run_stochastic_seeds(p, oracle, 200, seeds);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    EXPECT_TRUE(same_rows(all[i], run_stochastic(p, oracle, 200, seeds[i])));
  }
}

TEST(RunStochastic, ErrorsNameTheSeed) {
  const VIProblem p = make_holder_1d(1.0, 0.3);
  const StochasticOracle bad(
      [](const Point& x, RandomStream& rng) {
        return Point{{rng.uniform() < 0.01 ? NAN : x[0] - 0.3}};
      },
      0.0);
  const std::vector<std::uint64_t> seeds{8};
  try {
    run_stochastic_seeds(p, bad, 10000, seeds);
    FAIL() << "expected an evaluation error";
  } catch (const EvaluationError& e) {
    EXPECT_NE(std::string(e.what()).find("seed 8"), std::string::npos);
    EXPECT_GE(e.iteration(), 0);
  }
}

TEST(MeanGapEstimate, ZeroNoiseHasNoSpread) {
  const VIProblem p = bench::suite_random_games()[0];
  const auto seeds = seed_range(1, 4);
  const auto est = mean_gap_estimate(p, add_gaussian_noise(p, 0.0), 500, seeds);
  EXPECT_EQ(est.std_error, 0.0);
  EXPECT_DOUBLE_EQ(est.mean, exact_gap(p, run(p, 500).w_hat)->value);
}

TEST(MeanGapEstimate, NeedsTwoSeedsAndAnExactOracle) {
  const VIProblem game = bench::suite_game_2x2();
  const std::vector<std::uint64_t> one{1};
  EXPECT_THROW(mean_gap_estimate(game, add_gaussian_noise(game, 0.1), 10, one), InvalidArgument);
  const VIProblem rot = bench::suite_rotation();
  const auto two = seed_range(1, 2);
  EXPECT_THROW(mean_gap_estimate(rot, add_gaussian_noise(rot, 0.1), 10, two), UnsupportedInstance);
}

TEST(MeanGapEstimate, DisjointBatchesAgree) {
  const VIProblem p = bench::suite_random_games()[1];
  const StochasticOracle oracle = add_gaussian_noise(p, 0.1);
  const auto a = mean_gap_estimate(p, oracle, 2000, seed_range(100, 20));
  const auto b = mean_gap_estimate(p, oracle, 2000, seed_range(200, 20));
  EXPECT_LE(std::abs(a.mean - b.mean), 3.0 * std::hypot(a.std_error, b.std_error));
}

TEST(MeanGapEstimate, BelowExpectationBound) {
  const VIProblem p = bench::suite_game_2x2();
  constexpr std::int64_t K = 10000;
  const auto seeds = seed_range(1, 20);
  const StochasticOracle oracle = add_gaussian_noise(p, 0.1);
  const auto reports = run_stochastic_seeds(p, oracle, K, seeds);
  double L0 = 0.0;
  for (const auto& r : reports) L0 += r.L0 / reports.size();
  const auto est = mean_gap_estimate(p, oracle, K, seeds);
  EXPECT_LE(est.mean, theorem2_bound(K, p.diameter(), 1.0, *p.known_L, 0.1, L0) + 2.0 * est.std_error);
}

TEST(Aggregate, AveragesRows) {
  const VIProblem p = bench::suite_game_2x2();
  const StochasticOracle oracle = add_gaussian_noise(p, 0.5);
  const auto seeds = seed_range(1, 3);
  const auto reports = run_stochastic_seeds(p, oracle, 50, seeds, exact_gap_options(p));
  const RunReport agg = aggregate_reports(reports);
  ASSERT_EQ(agg.rows.size(), reports[0].rows.size());
  const auto& row = agg.rows[20];
  const double mean_L = (reports[0].rows[20].L + reports[1].rows[20].L + reports[2].rows[20].L) / 3.0;
  EXPECT_NEAR(row.L, mean_L, 1e-14);
  std::vector<double> gaps;
  for (const auto& r : reports) gaps.push_back(*r.rows[20].exact_gap);
  const auto [m, se] = mean_and_stderr(gaps);
  EXPECT_NEAR(*row.exact_gap, m, 1e-14);
  EXPECT_NEAR(*row.gap_stderr, se, 1e-14);
}

TEST(Aggregate, MeanAndStderr) {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const auto [m, se] = mean_and_stderr(v);
  EXPECT_DOUBLE_EQ(m, 2.5);
  EXPECT_DOUBLE_EQ(se, std::sqrt(5.0 / 3.0) / 2.0);
}

TEST(StochasticStepSize, GrowsWithNoiseLikeTheSigmaTerm) {
  constexpr std::int64_t K = 10000;
  const auto seeds = seed_range(500, 20);
  for (const auto& p : {bench::suite_affine_ball(), make_holder_1d(1.0)}) {
    std::vector<double> mean_L;
    for (double sigma : {0.01, 0.1, 1.0}) {
      const auto reports = run_stochastic_seeds(p, add_gaussian_noise(p, sigma), K, seeds);
      double m = 0.0;
      for (const auto& r : reports) m += r.rows.back().L / seeds.size();
      mean_L.push_back(m);
    }
    EXPECT_LE(mean_L[0], mean_L[1]) << p.label;
    EXPECT_LE(mean_L[1], mean_L[2]) << p.label;
    const double linear = (1.0 - 0.01) / (0.1 - 0.01);
    const double observed = (mean_L[2] - mean_L[0]) / (mean_L[1] - mean_L[0]);
    EXPECT_GE(observed, linear / 3.0) << p.label;
    EXPECT_LE(observed, linear * 3.0) << p.label;
  }
}

TEST(StochasticStepSize, VertexEquilibriumAbsorbsSmallNoise) {
  const VIProblem p = bench::suite_game_2x2();
  const auto seeds = seed_range(500, 20);
  double m = 0.0;
  for (const auto& r : run_stochastic_seeds(p, add_gaussian_noise(p, 0.1), 10000, seeds)) {
    m += r.rows.back().L / seeds.size();
  }
  EXPECT_LT(m - *p.known_L, 0.1 * std::sqrt(8.0 * 10000) / p.diameter() / 100.0);
}
