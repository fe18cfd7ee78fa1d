#pragma once

#include <optional>
#include <string_view>

#include "umprox/problems.hpp"

namespace umprox {

enum class GapMethod { closed_form, vertex_enum, grid, suboptimality_lower_bound };

std::string_view to_string(GapMethod method);

/// Value of the restricted gap max_{y in Q} <g(y), w_hat - y>, or a lower
/// bound on it for the enumeration methods.
struct GapResult {
  double value;
  GapMethod method;
  Point witness;
  // Grid spacing for GapMethod::grid, zero otherwise.
  double spacing = 0.0;
};

/// Closed form max_j (A^T u)_j - min_i (A v)_i for g(u, v) = (A v, -A^T u).
/// The cross terms of the restricted gap cancel for this field, so the
/// maximization separates over the two simplices.
GapResult gap_matrix_game(const Matrix& A, const Point& u_hat, const Point& v_hat);

/// Closed form for the one-dimensional Hölder family: with d = |x - c|,
/// gap = d^(1+nu) nu^nu / (1+nu)^(1+nu). For nu = 0 the value d is a
/// supremum approached as y -> c.
GapResult gap_holder_1d(double nu, double center, double x_hat);

/// Maximizes <g(y), w_hat - y> over a grid (dimension <= 3, `resolution`
/// points per axis) or over the vertices of a simplex product with at most
/// 10 vertices. The result is a lower bound on the true gap.
GapResult gap_bruteforce(const DeterministicOperator& op, const FeasibleSet& set,
                         const Point& w_hat, int resolution);

/// f(w_hat) - f* for a convex minimization problem. Sits above the restricted gap
/// and below the Stampacchia residual.
double suboptimality_lower_bound(double f_value_at_w_hat, double f_star);

/// max over the same candidate points as gap_bruteforce of
/// <g(x_hat), x_hat - x>. Values <= eps certify an eps-strong solution.
double stampacchia_residual(const DeterministicOperator& op, const FeasibleSet& set,
                            const Point& x_hat, int resolution);

/// Exact gap for families with a closed form (matrix games, Hölder 1-D),
/// nullopt otherwise.
std::optional<GapResult> exact_gap(const VIProblem& problem, const Point& w_hat);

/// Candidate points used by the brute-force oracles.
std::vector<Point> enumeration_points(const FeasibleSet& set, int resolution,
                                      GapMethod* method = nullptr, double* spacing = nullptr);

}  // namespace umprox
