#include "umprox/bounds.hpp"

#include <cmath>

#include "umprox/types.hpp"

namespace umprox {

namespace {

double as_real(std::int64_t k) {
  if (k < 1) throw InvalidArgument("bound: k must be >= 1");
  return static_cast<double>(k);
}

}  // namespace

double certificate_bound(double D, double L_next, std::int64_t k) {
  return 2.0 * D * D * L_next / as_real(k);
}

double lemma2_bound(std::int64_t k, double D, double nu, double L_nu) {
  return std::pow(8.0 * as_real(k) / (D * D), (1.0 - nu) / 2.0) * L_nu;
}

double theorem1_bound(std::int64_t k, double D, double nu, double L_nu) {
  return 16.0 * L_nu * std::pow(D, 1.0 + nu) / std::pow(8.0 * as_real(k), (1.0 + nu) / 2.0);
}

std::int64_t theorem1_complexity(double eps, double nu, double L_nu, double D) {
  if (!(eps > 0.0)) throw InvalidArgument("theorem1_complexity: eps must be positive");
  const double k = std::pow(16.0 * L_nu / eps, 2.0 / (1.0 + nu)) * D * D / 8.0;
  // Round away float noise before the ceiling so exact integers stay exact.
  const double rounded = std::nearbyint(k);
  const double target = std::abs(k - rounded) <= 1e-9 * std::max(1.0, k) ? rounded : std::ceil(k);
  return static_cast<std::int64_t>(target);
}

double theorem2_bound(std::int64_t k, double D, double nu, double L_nu, double sigma,
                      double L0) {
  const double kk = as_real(k);
  return 32.0 * std::pow(D * D / (8.0 * kk), (1.0 + nu) / 2.0) * L_nu +
         32.0 * D * sigma / std::sqrt(8.0 * kk) + 2.0 * D * D * L0 / kk;
}

double lemma3_bound(std::int64_t k, double D, double nu, double L_nu, double sigma,
                    double L0) {
  const double kk = as_real(k);
  return 2.0 * std::pow(8.0 * kk / (D * D), (1.0 - nu) / 2.0) * L_nu +
         std::sqrt(8.0 * kk) * sigma / D + L0;
}

}  // namespace umprox
