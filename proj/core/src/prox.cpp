#include "umprox/prox.hpp"

#include <cmath>

namespace umprox {

Point prox_step(const Point& z, const Point& g_val, double L, const FeasibleSet& set) {
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw InvalidArgument("prox_step: L must be positive and finite");
  }
  require_dimension(z, set.dimension(), "prox_step(z)");
  require_dimension(g_val, set.dimension(), "prox_step(g_val)");
  // Completing the square: <g, x - z> + (L/2)||x - z||^2 = (L/2)||x - (z - g/L)||^2 + const.
  return project(set, z - g_val / L);
}

double prox_objective(const Point& z, const Point& g_val, double L, const Point& x) {
  return g_val.dot(x - z) + 0.5 * L * (z - x).squaredNorm();
}

}  // namespace umprox
