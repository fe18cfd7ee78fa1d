#include <cmath>

#include <gtest/gtest.h>

#include "bench/acceptance.hpp"
#include "bench/oracles.hpp"
#include "umprox/umprox.hpp"

using namespace umprox;

namespace {

Matrix cyclic_2x2() {
  Matrix A(2, 2);
  A << 0.0, 1.0, -1.0, 0.0;
  return A;
}

}  // namespace

TEST(GapMatrixGame, UniformStrategiesOnTwoByTwo) {
  const Point half = Point::Constant(2, 0.5);
  const GapResult r = gap_matrix_game(cyclic_2x2(), half, half);
  EXPECT_DOUBLE_EQ(r.value, 1.0);
  EXPECT_EQ(r.method, GapMethod::closed_form);
  EXPECT_DOUBLE_EQ(bench::oracle::game_gap_by_vertices(cyclic_2x2(), half, half), 1.0);
}

TEST(GapMatrixGame, WitnessAttainsValue) {
  const VIProblem p = bench::suite_random_games()[0];
  RandomStream rng(2, 0);
  for (int i = 0; i < 50; ++i) {
    const Point u = sample_point(FeasibleSet::simplex(3), rng);
    const Point v = sample_point(FeasibleSet::simplex(3), rng);
    Point w(6);
    w << u, v;
    const auto A = std::get<MatrixGameParams>(p.params).A;
    const GapResult r = gap_matrix_game(A, u, v);
    EXPECT_GE(r.value, p.op(r.witness).dot(w - r.witness) - 1e-12);
    EXPECT_GE(r.value, -1e-9);
  }
}

TEST(GapMatrixGame, DiagonalGameEquilibriumHasZeroGap) {
  Matrix A = Matrix::Zero(2, 2);
  A(0, 0) = 1.0;
  A(1, 1) = 2.0;
  const Point eq{{2.0 / 3.0, 1.0 / 3.0}};
  EXPECT_NEAR(gap_matrix_game(A, eq, eq).value, 0.0, 1e-15);
}

TEST(GapMatrixGame, MatchesVertexEnumeration) {
  RandomStream rng(13, 0);
  for (int i = 0; i < 300; ++i) {
    Matrix A(3, 3);
    for (Index r = 0; r < 3; ++r) {
      for (Index c = 0; c < 3; ++c) A(r, c) = rng.uniform(-1.0, 1.0);
    }
    const Point u = sample_point(FeasibleSet::simplex(3), rng);
    const Point v = sample_point(FeasibleSet::simplex(3), rng);
    EXPECT_NEAR(gap_matrix_game(A, u, v).value, bench::oracle::game_gap_by_vertices(A, u, v), 1e-12);
  }
}

TEST(GapMatrixGame, RejectsInfeasibleStrategies) {
  EXPECT_THROW(gap_matrix_game(cyclic_2x2(), Point{{0.7, 0.7}}, Point{{0.5, 0.5}}), InvalidArgument);
  EXPECT_THROW(gap_matrix_game(cyclic_2x2(), Point{{1.0}}, Point{{0.5, 0.5}}), InvalidArgument);
}

TEST(GapBruteforce, ZeroOperator) {
  const auto set = FeasibleSet::cube(2, -1.0, 1.0);
  const DeterministicOperator zero([](const Point& x) { return Point::Zero(x.size()); });
  EXPECT_EQ(gap_bruteforce(zero, set, Point{{0.3, 0.9}}, 21).value, 0.0);
}

TEST(GapBruteforce, SignProblem) {
  const VIProblem p = make_holder_1d(0.0);
  const GapResult r = gap_bruteforce(p.op, p.set, Point{{0.5}}, 10001);
  EXPECT_EQ(r.method, GapMethod::grid);
  EXPECT_LE(r.value, 0.5);
  EXPECT_GE(r.value, 0.5 - r.spacing - 1e-12);
  EXPECT_NEAR(exact_gap(p, Point{{0.5}})->value, 0.5, 1e-15);
}

TEST(GapBruteforce, AgreesWithGameClosedForm) {
  for (const auto& p : bench::suite_random_games()) {
    const RunReport report = run(p, 50);
    const GapResult brute = gap_bruteforce(p.op, p.set, report.w_hat, 2);
    EXPECT_EQ(brute.method, GapMethod::vertex_enum);
    EXPECT_NEAR(brute.value, exact_gap(p, report.w_hat)->value, 1e-12);
  }
}

TEST(GapBruteforce, UnsupportedDimension) {
  const auto set = FeasibleSet::cube(4, 0.0, 1.0);
  const DeterministicOperator id([](const Point& x) { return x; });
  EXPECT_THROW(gap_bruteforce(id, set, Point::Zero(4), 5), UnsupportedInstance);
  const auto big = FeasibleSet::product({FeasibleSet::simplex(6), FeasibleSet::simplex(6)});
  const DeterministicOperator id12([](const Point& x) { return x; });
  EXPECT_THROW(gap_bruteforce(id12, big, initial_point(big), 5), UnsupportedInstance);
}

TEST(GapBruteforce, NonNegativeForFeasiblePoints) {
  const VIProblem p = bench::suite_rotation();
  RandomStream rng(6, 0);
  for (int i = 0; i < 20; ++i) {
    EXPECT_GE(gap_bruteforce(p.op, p.set, sample_point(p.set, rng), 31).value, -1e-9);
  }
}

TEST(GapHolder1d, ClosedFormMatchesFineGrid) {
  for (double nu : {0.25, 0.5, 1.0}) {
    for (double c : {0.0, 0.3}) {
      const VIProblem p = make_holder_1d(nu, c);
      for (double x : {-0.9, -0.2, 0.35, 0.8}) {
        const GapResult exact = gap_holder_1d(nu, c, x);
        const GapResult grid = gap_bruteforce(p.op, p.set, Point{{x}}, 200001);
        EXPECT_LE(grid.value, exact.value + 1e-12);
        EXPECT_NEAR(grid.value, exact.value, 1e-6) << nu << " " << c << " " << x;
        EXPECT_NEAR(p.op(exact.witness).dot(Point{{x}} - exact.witness), exact.value, 1e-12);
      }
    }
  }
}

TEST(Suboptimality, Examples) {
  EXPECT_EQ(suboptimality_lower_bound(0.0, 0.0), 0.0);
  EXPECT_NEAR(suboptimality_lower_bound(0.5 * 0.2 * 0.2, 0.0), 0.02, 1e-15);
}

TEST(Suboptimality, BetweenGapAndStampacchiaResidual) {
  for (double nu : {0.0, 0.5, 1.0}) {
    const VIProblem p = make_holder_1d(nu);
    for (double x : {-0.7, 0.1, 0.6}) {
      const double f = std::pow(std::abs(x), 1.0 + nu) / (1.0 + nu);
      const double sub = suboptimality_lower_bound(f, 0.0);
      EXPECT_LE(gap_bruteforce(p.op, p.set, Point{{x}}, 20001).value, sub + 1e-12);
      EXPECT_LE(gap_holder_1d(nu, 0.0, x).value, sub + 1e-12);
      EXPECT_LE(sub, stampacchia_residual(p.op, p.set, Point{{x}}, 20001) + 1e-12);
    }
  }
}

TEST(Suboptimality, ExceedsGapOnQuadratic) {
  const double sub = suboptimality_lower_bound(0.5 * 0.2 * 0.2, 0.0);
  const GapResult gap = gap_holder_1d(1.0, 0.0, 0.2);
  EXPECT_NEAR(gap.value, 0.01, 1e-15);
  EXPECT_NEAR(gap.witness[0], 0.1, 1e-15);
  EXPECT_GT(sub, gap.value);
}

TEST(Stampacchia, Examples) {
  const VIProblem p = make_holder_1d(1.0);
  EXPECT_NEAR(stampacchia_residual(p.op, p.set, Point{{0.0}}, 2001), 0.0, 1e-15);
  EXPECT_NEAR(stampacchia_residual(p.op, p.set, Point{{0.1}}, 2001), 0.11, 1e-12);
}

TEST(Stampacchia, GridGapMinimizerIsStrongSolution) {
  const VIProblem p = make_holder_1d(0.5, 0.3);
  constexpr int kRes = 401;
  const auto candidates = enumeration_points(p.set, kRes);
  Point best;
  double best_gap = INFINITY;
  for (const auto& x : candidates) {
    const double g = gap_bruteforce(p.op, p.set, x, kRes).value;
    if (g < best_gap) {
      best_gap = g;
      best = x;
    }
  }
  const double spacing = 2.0 / (kRes - 1);
  EXPECT_LE(stampacchia_residual(p.op, p.set, best, kRes), 2.0 * std::sqrt(spacing));
  EXPECT_LE(std::abs(best[0] - 0.3), spacing * (1.0 + 1e-9));
}

TEST(Stampacchia, ShrinksAlongUmpRun) {
  const VIProblem p = make_holder_1d(1.0, 0.3);
  double prev = INFINITY;
  for (std::int64_t K : {10, 100, 1000, 10000}) {
    const double r = stampacchia_residual(p.op, p.set, run(p, K).w_hat, 2001);
    EXPECT_LT(r, prev) << K;
    prev = r;
  }
}

TEST(ExactGap, OnlyForClosedFormFamilies) {
  EXPECT_TRUE(exact_gap(bench::suite_game_2x2(), Point{{0.5, 0.5, 0.5, 0.5}}));
  EXPECT_TRUE(exact_gap(make_holder_1d(0.5), Point{{0.2}}));
  EXPECT_FALSE(exact_gap(bench::suite_rotation(), Point{{0.0, 0.0}}));
}
