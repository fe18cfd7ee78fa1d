#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace umprox {

/// A point of R^n. Every point exchanged with one problem has the same size.
using Point = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Raised for malformed inputs: dimension mismatch, non-positive scales,
/// non-finite scalars.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operator or oracle produced a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, Point point, std::int64_t iteration = -1)
      : std::runtime_error(what), point_(std::move(point)), iteration_(iteration) {}

  const Point& point() const { return point_; }
  // -1 when the failure happened outside a solver loop.
  std::int64_t iteration() const { return iteration_; }

  EvaluationError at_iteration(std::int64_t k) const {
    return EvaluationError(what(), point_, k);
  }

 private:
  Point point_;
  std::int64_t iteration_;
};

/// A brute-force oracle refused an instance that is too large to enumerate.
class UnsupportedInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool all_finite(const Point& x) { return x.allFinite(); }

inline void require_dimension(const Point& x, Index n, const char* what) {
  if (x.size() != n) {
    throw InvalidArgument(std::string(what) + ": expected dimension " + std::to_string(n) +
                          ", got " + std::to_string(x.size()));
  }
}

/// Seeded pseudo-random stream. Streams built from the same seed but
/// different stream ids are statistically independent.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  Point normal_vector(Index n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace umprox
