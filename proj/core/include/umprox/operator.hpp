#pragma once

#include <functional>
#include <optional>

#include "umprox/feasible_set.hpp"
#include "umprox/types.hpp"

namespace umprox {

/// Declared Hölder metadata: ||g(x) - g(y)|| <= constant * ||x - y||^exponent.
struct HolderInfo {
  double exponent;
  double constant;
};

/// Deterministic operator g: R^n -> R^n. Every evaluation is checked for
/// non-finite output.
class DeterministicOperator {
 public:
  using Fn = std::function<Point(const Point&)>;

  DeterministicOperator(Fn fn, std::optional<HolderInfo> holder = std::nullopt);

  Point operator()(const Point& x) const;

  const std::optional<HolderInfo>& holder() const { return holder_; }

 private:
  Fn fn_;
  std::optional<HolderInfo> holder_;
};

/// Unbiased stochastic oracle g(x, xi) with E||g(x, xi) - g(x)||^2 <= sigma^2.
class StochasticOracle {
 public:
  using SampleFn = std::function<Point(const Point&, RandomStream&)>;

  StochasticOracle(SampleFn sample, double sigma,
                   std::optional<DeterministicOperator> mean = std::nullopt);

  Point sample(const Point& x, RandomStream& rng) const;

  double sigma() const { return sigma_; }
  const std::optional<DeterministicOperator>& mean_operator() const { return mean_; }

 private:
  SampleFn sample_;
  double sigma_;
  std::optional<DeterministicOperator> mean_;
};

/// Smallest <g(x) - g(y), x - y> over random member pairs. A monotone
/// operator gives a value >= 0 up to rounding.
double min_monotonicity_product(const DeterministicOperator& op, const FeasibleSet& set,
                                int pairs, RandomStream& rng);

/// Largest ||g(x) - g(y)|| / ||x - y||^nu over random member pairs.
double max_holder_ratio(const DeterministicOperator& op, const FeasibleSet& set, double nu,
                        int pairs, RandomStream& rng);

}  // namespace umprox
