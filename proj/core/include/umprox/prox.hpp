#pragma once

#include "umprox/feasible_set.hpp"

namespace umprox {

/// argmin over the set of <g_val, x - z> + (L/2)||z - x||^2, which is the
/// projection of z - g_val / L. Requires L > 0.
Point prox_step(const Point& z, const Point& g_val, double L, const FeasibleSet& set);

/// Objective of the prox subproblem at x.
double prox_objective(const Point& z, const Point& g_val, double L, const Point& x);

}  // namespace umprox
