#pragma once

#include <functional>

#include "umprox/umprox.hpp"

// Brute-force reference computations used to cross-check the library. They
// share no code with the solvers beyond the Point type.
namespace umprox::bench::oracle {

/// Minimizes f over the parameter box [lo, hi]^m (m = 1 or 2) restricted to
/// `feasible`, by repeatedly zooming a grid around the incumbent until the
/// spacing drops below `resolution`. Each level re-centers until the
/// incumbent is the best point of its own window.
Point zoom_grid_minimize(const std::function<double(const Point&)>& f,
                         const std::function<bool(const Point&)>& feasible, const Point& lo,
                         const Point& hi, double resolution);

/// Euclidean projection onto the simplex of dimension 2 or 3 by grid search.
Point simplex_projection(const Point& y, double resolution);

/// Minimizer of <g, x - z> + L/2 ||x - z||^2 over a 2-D box, a 2-D ball, or
/// the simplex of dimension 2 or 3, by grid search.
Point prox_minimizer(const FeasibleSet& set, const Point& z, const Point& g, double L,
                     double resolution);

/// max over pure strategy pairs y of <g(y), w_hat - y> for g(u, v) = (A v, -A^T u).
double game_gap_by_vertices(const Matrix& A, const Point& u_hat, const Point& v_hat);

}  // namespace umprox::bench::oracle
