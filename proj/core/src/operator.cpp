#include "umprox/operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace umprox {

DeterministicOperator::DeterministicOperator(Fn fn, std::optional<HolderInfo> holder)
    : fn_(std::move(fn)), holder_(holder) {
  if (!fn_) throw InvalidArgument("DeterministicOperator: empty callable");
  if (holder_) {
    if (!(holder_->exponent >= 0.0 && holder_->exponent <= 1.0)) {
      throw InvalidArgument("DeterministicOperator: Hölder exponent must lie in [0, 1]");
    }
    if (!(holder_->constant >= 0.0) || !std::isfinite(holder_->constant)) {
      throw InvalidArgument("DeterministicOperator: Hölder constant must be finite and >= 0");
    }
  }
}

Point DeterministicOperator::operator()(const Point& x) const {
  Point g = fn_(x);
  if (g.size() != x.size()) {
    throw InvalidArgument("operator returned a vector of dimension " + std::to_string(g.size()) +
                          " for an input of dimension " + std::to_string(x.size()));
  }
  if (!g.allFinite()) throw EvaluationError("operator returned a non-finite value", x);
  return g;
}

StochasticOracle::StochasticOracle(SampleFn sample, double sigma,
                                   std::optional<DeterministicOperator> mean)
    : sample_(std::move(sample)), sigma_(sigma), mean_(std::move(mean)) {
  if (!sample_) throw InvalidArgument("StochasticOracle: empty callable");
  if (!(sigma_ >= 0.0) || !std::isfinite(sigma_)) {
    throw InvalidArgument("StochasticOracle: sigma must be finite and >= 0");
  }
}

Point StochasticOracle::sample(const Point& x, RandomStream& rng) const {
  Point g = sample_(x, rng);
  if (g.size() != x.size()) {
    throw InvalidArgument("oracle returned a vector of the wrong dimension");
  }
  if (!g.allFinite()) throw EvaluationError("oracle returned a non-finite sample", x);
  return g;
}

double min_monotonicity_product(const DeterministicOperator& op, const FeasibleSet& set,
                                int pairs, RandomStream& rng) {
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < pairs; ++i) {
    const Point x = sample_point(set, rng);
    const Point y = sample_point(set, rng);
    worst = std::min(worst, (op(x) - op(y)).dot(x - y));
  }
  return worst;
}

double max_holder_ratio(const DeterministicOperator& op, const FeasibleSet& set, double nu,
                        int pairs, RandomStream& rng) {
  double worst = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const Point x = sample_point(set, rng);
    const Point y = sample_point(set, rng);
    const double dist = (x - y).norm();
    if (dist == 0.0) continue;
    worst = std::max(worst, (op(x) - op(y)).norm() / std::pow(dist, nu));
  }
  return worst;
}

}  // namespace umprox
