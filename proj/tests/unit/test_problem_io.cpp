#include <gtest/gtest.h>

#include "bench/acceptance.hpp"
#include "umprox/umprox.hpp"

using namespace umprox;
using nlohmann::json;

namespace {

void expect_same_problem(const VIProblem& a, const VIProblem& b) {
  EXPECT_EQ(a.label, b.label);
  EXPECT_EQ(a.dimension(), b.dimension());
  EXPECT_DOUBLE_EQ(a.diameter(), b.diameter());
  EXPECT_EQ(a.known_nu, b.known_nu);
  EXPECT_DOUBLE_EQ(*a.known_L, *b.known_L);
  RandomStream rng(1, 0);
  for (int i = 0; i < 20; ++i) {
    const Point x = sample_point(a.set, rng);
    EXPECT_EQ(a.op(x), b.op(x));
  }
}

}  // namespace

TEST(ProblemIo, RoundTripSuite) {
  auto problems = bench::lipschitz_suite();
  problems.push_back(make_holder_1d(0.5, -0.2));
  for (const auto& p : problems) {
    const json j = problem_to_json(p);
    EXPECT_TRUE(j.contains("declared"));
    expect_same_problem(p, problem_from_json(json::parse(j.dump())));
  }
}

TEST(ProblemIo, SetRoundTrip) {
  const auto set = FeasibleSet::product(
      {FeasibleSet::simplex(3), FeasibleSet::ball(Point{{1.0, 2.0}}, 0.5), FeasibleSet::cube(1, -2.0, 3.0)});
  const FeasibleSet back = set_from_json(set_to_json(set));
  EXPECT_EQ(back.dimension(), 6);
  EXPECT_DOUBLE_EQ(diameter(back), diameter(set));
  const Point y = Point::LinSpaced(6, -2.0, 4.0);
  EXPECT_EQ(project(back, y), project(set, y));
}

TEST(ProblemIo, Errors) {
  EXPECT_THROW(problem_from_json(json{{"kind", "nope"}}), InvalidArgument);
  EXPECT_THROW(problem_from_json(json{{"kind", "matrix_game"}}), InvalidArgument);
  EXPECT_THROW(problem_from_json(json{{"kind", "matrix_game"}, {"A", {{1.0, 2.0}, {3.0}}}}),
               InvalidArgument);
  EXPECT_THROW(problem_from_json(json{{"kind", "holder_1d"}, {"nu", 3.0}}), InvalidArgument);
  EXPECT_THROW(set_from_json(json{{"type", "ball"}, {"center", {0.0}}, {"radius", -1.0}}),
               InvalidArgument);
  EXPECT_THROW(problem_from_json(json::array()), InvalidArgument);
}

TEST(ProblemIo, CallableProblemsAreNotSerializable) {
  const VIProblem p = make_fixed_point([](const Point& x) { return Point(x / 2.0); },
                                       FeasibleSet::cube(1, -1.0, 1.0));
  EXPECT_THROW(problem_to_json(p), InvalidArgument);
}
