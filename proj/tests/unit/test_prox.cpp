#include <gtest/gtest.h>

#include "bench/oracles.hpp"
#include "umprox/prox.hpp"

using namespace umprox;

TEST(ProxStep, ZeroGradientIsProjection) {
  const auto set = FeasibleSet::ball(Point::Zero(2), 1.0);
  const Point z{{3.0, 4.0}};
  EXPECT_EQ(prox_step(z, Point::Zero(2), 2.0, set), project(set, z));
}

TEST(ProxStep, InteriorCase) {
  const Point x = prox_step(Point::Zero(2), Point{{1.0, 0.0}}, 2.0, FeasibleSet::cube(2, -1.0, 1.0));
  EXPECT_EQ(x, (Point{{-0.5, 0.0}}));
}

TEST(ProxStep, SimplexExample) {
  const auto set = FeasibleSet::simplex(2);
  const Point z{{1.0, 0.0}};
  const Point g{{1.0, -1.0}};
  const Point x = prox_step(z, g, 1.0, set);
  EXPECT_NEAR(x[0], 0.0, 1e-15);
  EXPECT_NEAR(x[1], 1.0, 1e-15);
  const Point ref = bench::oracle::prox_minimizer(set, z, g, 1.0, 1e-6);
  EXPECT_LT((x - ref).lpNorm<Eigen::Infinity>(), 1e-4);
}

TEST(ProxStep, RejectsNonPositiveL) {
  const auto set = FeasibleSet::simplex(2);
  EXPECT_THROW(prox_step(Point{{0.5, 0.5}}, Point::Zero(2), 0.0, set), InvalidArgument);
  EXPECT_THROW(prox_step(Point{{0.5, 0.5}}, Point::Zero(2), -1.0, set), InvalidArgument);
}

TEST(ProxStep, StrongConvexityInequality) {
  RandomStream rng(8, 0);
  const std::vector<FeasibleSet> sets{FeasibleSet::cube(3, -1.0, 1.0),
                                      FeasibleSet::ball(Point{{0.2, 0.1, -0.3}}, 0.7),
                                      FeasibleSet::simplex(3)};
  for (const auto& set : sets) {
    for (int i = 0; i < 200; ++i) {
      const Point z = sample_point(set, rng);
      const Point g = rng.normal_vector(3) * 2.0;
      const double L = rng.uniform(0.1, 10.0);
      const Point x = prox_step(z, g, L, set);
      const double hx = prox_objective(z, g, L, x);
      for (int j = 0; j < 20; ++j) {
        const Point y = sample_point(set, rng);
        EXPECT_GE(prox_objective(z, g, L, y), hx + 0.5 * L * (y - x).squaredNorm() - 1e-9);
      }
    }
  }
}

TEST(ProxStep, MatchesGridMinimizer) {
  RandomStream rng(9, 0);
  const std::vector<FeasibleSet> sets{FeasibleSet::box(Point{{-1.0, 0.0}}, Point{{0.5, 2.0}}),
                                      FeasibleSet::ball(Point{{0.3, -0.2}}, 1.2),
                                      FeasibleSet::simplex(2), FeasibleSet::simplex(3)};
  for (const auto& set : sets) {
    for (int i = 0; i < 25; ++i) {
      const Point z = sample_point(set, rng);
      const Point g = rng.normal_vector(set.dimension());
      const double L = rng.uniform(0.5, 4.0);
      const Point ref = bench::oracle::prox_minimizer(set, z, g, L, 1e-6);
      EXPECT_LT((prox_step(z, g, L, set) - ref).lpNorm<Eigen::Infinity>(), 1e-4);
    }
  }
}
