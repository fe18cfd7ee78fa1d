#pragma once

#include <variant>
#include <vector>

#include "umprox/types.hpp"

namespace umprox {

class FeasibleSet;

struct Box {
  Point lower;
  Point upper;
};

struct Ball {
  Point center;
  double radius;
};

/// The probability simplex {x >= 0, sum x = 1} in R^n.
struct Simplex {
  Index dim;
};

struct Product {
  std::vector<FeasibleSet> factors;
};

/// Compact convex set with an exact Euclidean projection.
class FeasibleSet {
 public:
  using Kind = std::variant<Box, Ball, Simplex, Product>;

  static FeasibleSet box(Point lower, Point upper);
  static FeasibleSet cube(Index n, double lower, double upper);
  static FeasibleSet ball(Point center, double radius);
  static FeasibleSet simplex(Index n);
  static FeasibleSet product(std::vector<FeasibleSet> factors);

  Index dimension() const { return dim_; }
  const Kind& kind() const { return kind_; }

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(kind_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(kind_);
  }

  /// Membership up to an absolute tolerance.
  bool contains(const Point& x, double tol = 1e-9) const;

  /// True for a simplex or a product whose factors are all simplices.
  bool is_simplex_product() const;

 private:
  FeasibleSet(Kind kind, Index dim) : kind_(std::move(kind)), dim_(dim) {}

  Kind kind_;
  Index dim_;
};

/// Euclidean projection of y onto set.
Point project(const FeasibleSet& set, const Point& y);

/// Exact Euclidean diameter.
double diameter(const FeasibleSet& set);

/// argmin of 0.5*||u||^2 over the set, i.e. the projection of the origin.
Point initial_point(const FeasibleSet& set);

/// Random member of the set. Used by the operator samplers; the distribution
/// is uniform for box, ball, and simplex factors.
Point sample_point(const FeasibleSet& set, RandomStream& rng);

/// Sort-based exact projection onto the simplex {x >= 0, sum x = 1}.
Point project_simplex(const Point& y);

/// Vertices of a simplex product, as points of the full space.
std::vector<Point> simplex_product_vertices(const FeasibleSet& set);

}  // namespace umprox
