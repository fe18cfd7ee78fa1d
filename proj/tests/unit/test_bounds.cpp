#include <cmath>

#include <gtest/gtest.h>

#include "umprox/bounds.hpp"
#include "umprox/types.hpp"

using namespace umprox;

TEST(Bounds, Certificate) {
  EXPECT_DOUBLE_EQ(certificate_bound(1.0, 1.0, 2), 1.0);
  EXPECT_DOUBLE_EQ(certificate_bound(2.0, 3.0, 6), 4.0);
}

TEST(Bounds, Lemma2BoundExamples) {
  for (std::int64_t k : {1, 7, 1000}) EXPECT_DOUBLE_EQ(lemma2_bound(k, 3.0, 1.0, 2.5), 2.5);
  EXPECT_DOUBLE_EQ(lemma2_bound(2, 1.0, 0.0, 1.0), 4.0);
  EXPECT_DOUBLE_EQ(lemma2_bound(10, 2.0, 0.0, 2.0), std::sqrt(20.0) * 2.0);
}

TEST(Bounds, Theorem1BoundExamples) {
  EXPECT_DOUBLE_EQ(theorem1_bound(2, 1.0, 1.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(theorem1_bound(8, 1.0, 0.0, 1.0), 2.0);
}

TEST(Bounds, ComplexityExamples) {
  EXPECT_EQ(theorem1_complexity(1.0, 1.0, 1.0, 1.0), 2);
  EXPECT_EQ(theorem1_complexity(1.0, 0.0, 1.0, 1.0), 32);
  EXPECT_EQ(theorem1_complexity(0.5, 1.0, 1.0, 1.0), 4);
  EXPECT_EQ(theorem1_complexity(0.5, 0.0, 1.0, 1.0), 128);
  EXPECT_DOUBLE_EQ(theorem1_bound(2, 1.0, 1.0, 1.0), 1.0);
  EXPECT_THROW(theorem1_complexity(0.0, 1.0, 1.0, 1.0), InvalidArgument);
}

TEST(Bounds, ComplexityReachesTarget) {
  for (double nu : {0.0, 0.5, 1.0}) {
    for (double eps : {0.3, 0.01}) {
      const std::int64_t N = theorem1_complexity(eps, nu, 2.0, 1.5);
      EXPECT_LE(theorem1_bound(N, 1.5, nu, 2.0), eps * (1.0 + 1e-12));
      if (N > 1) EXPECT_GT(theorem1_bound(N - 1, 1.5, nu, 2.0), eps);
    }
  }
}

TEST(Bounds, Theorem2BoundExamples) {
  EXPECT_DOUBLE_EQ(theorem2_bound(8, 1.0, 1.0, 1.0, 1.0, 1.0), 4.75);
  const double first = theorem2_bound(8, 1.0, 0.5, 1.0, 0.0, 0.0);
  EXPECT_DOUBLE_EQ(first, 2.0 * theorem1_bound(8, 1.0, 0.5, 1.0));
}

TEST(Bounds, Lemma3BoundExamples) {
  EXPECT_DOUBLE_EQ(lemma3_bound(5, 2.0, 0.3, 1.5, 0.0, 0.7), 2.0 * lemma2_bound(5, 2.0, 0.3, 1.5) + 0.7);
  EXPECT_DOUBLE_EQ(lemma3_bound(8, 2.0, 1.0, 1.5, 0.5, 0.7), 3.0 + 8.0 * 0.5 / 2.0 + 0.7);
}

TEST(Bounds, RejectNonPositiveK) {
  EXPECT_THROW(certificate_bound(1.0, 1.0, 0), InvalidArgument);
  EXPECT_THROW(lemma2_bound(0, 1.0, 0.5, 1.0), InvalidArgument);
  EXPECT_THROW(theorem1_bound(0, 1.0, 0.5, 1.0), InvalidArgument);
  EXPECT_THROW(theorem2_bound(0, 1.0, 0.5, 1.0, 0.1, 1.0), InvalidArgument);
  EXPECT_THROW(lemma3_bound(-1, 1.0, 0.5, 1.0, 0.1, 1.0), InvalidArgument);
}
