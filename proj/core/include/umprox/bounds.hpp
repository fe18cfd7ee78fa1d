#pragma once

#include <cstdint>

namespace umprox {

// Convergence bounds of the universal mirror-prox method. `k` is the number
// of averaged iterates, D the diameter bound, (nu, L_nu) the Hölder pair.

/// 2 D^2 L_next / k.
double certificate_bound(double D, double L_next, std::int64_t k);

/// (8k / D^2)^((1 - nu) / 2) L_nu.
double lemma2_bound(std::int64_t k, double D, double nu, double L_nu);

/// 16 L_nu D^(1+nu) / (8k)^((1+nu)/2).
double theorem1_bound(std::int64_t k, double D, double nu, double L_nu);

/// ceil((16 L_nu / eps)^(2/(1+nu)) D^2 / 8).
std::int64_t theorem1_complexity(double eps, double nu, double L_nu, double D);

/// Expected gap bound in the stochastic setting:
/// 32 (D^2 / 8k)^((1+nu)/2) L_nu + 32 D sigma / sqrt(8k) + 2 D^2 L0 / k.
double theorem2_bound(std::int64_t k, double D, double nu, double L_nu, double sigma,
                      double L0);

/// Expected-step-size bound in the stochastic setting:
/// 2 (8k / D^2)^((1-nu)/2) L_nu + sqrt(8k) sigma / D + L0.
double lemma3_bound(std::int64_t k, double D, double nu, double L_nu, double sigma,
                    double L0);

/// Iteration count from which the step-size bounds are asserted. The
/// step-size lemma holds once k is large relative to L0; the threshold is
/// not quantified, so checks start here.
inline constexpr std::int64_t kBoundProvisoIterations = 10;

}  // namespace umprox
