#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "umprox/feasible_set.hpp"
#include "umprox/operator.hpp"

namespace umprox {

// Parameters of the structured problem families. They carry what is needed
// to rebuild the problem and, for some families, an exact gap oracle.

/// Bilinear game min_u max_v u^T A v on simplices.
struct MatrixGameParams {
  Matrix A;
};

/// g(x) = sign(x - center) |x - center|^nu on [-1, 1].
struct Holder1dParams {
  double nu;
  double center;
};

/// g(x) = M x + b.
struct AffineParams {
  Matrix M;
  Point b;
  FeasibleSet set;
};

/// g(x) = x - F(x) with affine F(x) = T x + t.
struct LinearFixedPointParams {
  Matrix T;
  Point t;
  FeasibleSet set;
};

using ProblemParams = std::variant<std::monostate, MatrixGameParams, Holder1dParams,
                                   AffineParams, LinearFixedPointParams>;

struct VIProblem {
  std::string label;
  DeterministicOperator op;
  FeasibleSet set;
  std::optional<double> known_nu;
  std::optional<double> known_L;
  std::optional<Point> known_solution;
  ProblemParams params;

  Index dimension() const { return set.dimension(); }
  double diameter() const { return umprox::diameter(set); }
};

/// g(u, v) = (A v, -A^T u) on Simplex(m) x Simplex(n); nu = 1, L = ||A||_2.
VIProblem make_matrix_game(Matrix A, std::string label = "matrix_game");

/// One-dimensional Hölder family on [-1, 1] with solution x* = center.
/// L_nu = 2^(1 - nu). For nu = 0 the operator is sign(x - center) with value
/// 0 at the center.
VIProblem make_holder_1d(double nu, double center = 0.0);

/// g(x) = M x + b with M + M^T positive semidefinite; nu = 1, L = ||M||_2.
VIProblem make_affine_monotone(Matrix M, Point b, FeasibleSet set,
                               std::string label = "affine");

/// g(x) = x - F(x) for a nonexpansive F. The nonexpansiveness is checked on
/// sampled pairs; nu = 1 and L = 2 are declared.
VIProblem make_fixed_point(std::function<Point(const Point&)> F, FeasibleSet set,
                           std::string label = "fixed_point");

/// Affine fixed-point problem F(x) = T x + t, ||T||_2 <= 1. Declares
/// L = ||I - T||_2 and the fixed point when I - T is invertible.
VIProblem make_linear_fixed_point(Matrix T, Point t, FeasibleSet set,
                                  std::string label = "linear_fixed_point");

/// g(x, xi) = g(x) + sigma / sqrt(n) * zeta, zeta standard normal in R^n.
/// sigma = 0 returns g(x) exactly without consuming randomness.
StochasticOracle add_gaussian_noise(const VIProblem& problem, double sigma);

/// Largest singular value.
double spectral_norm(const Matrix& A);

}  // namespace umprox
