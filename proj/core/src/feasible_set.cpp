#include "umprox/feasible_set.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace umprox {

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32), 0x75u, 0x6d70u};
  engine_.seed(seq);
}

Point RandomStream::normal_vector(Index n) {
  Point v(n);
  for (Index i = 0; i < n; ++i) v[i] = normal();
  return v;
}

FeasibleSet FeasibleSet::box(Point lower, Point upper) {
  if (lower.size() == 0 || lower.size() != upper.size()) {
    throw InvalidArgument("box: bounds must be non-empty and of equal size");
  }
  if (!lower.allFinite() || !upper.allFinite()) {
    throw InvalidArgument("box: bounds must be finite");
  }
  if ((lower.array() > upper.array()).any()) {
    throw InvalidArgument("box: lower must not exceed upper");
  }
  const Index n = lower.size();
  return FeasibleSet(Box{std::move(lower), std::move(upper)}, n);
}

FeasibleSet FeasibleSet::cube(Index n, double lower, double upper) {
  return box(Point::Constant(n, lower), Point::Constant(n, upper));
}

FeasibleSet FeasibleSet::ball(Point center, double radius) {
  if (center.size() == 0 || !center.allFinite()) {
    throw InvalidArgument("ball: center must be a non-empty finite vector");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidArgument("ball: radius must be positive and finite");
  }
  const Index n = center.size();
  return FeasibleSet(Ball{std::move(center), radius}, n);
}

FeasibleSet FeasibleSet::simplex(Index n) {
  if (n < 1) throw InvalidArgument("simplex: dimension must be positive");
  return FeasibleSet(Simplex{n}, n);
}

FeasibleSet FeasibleSet::product(std::vector<FeasibleSet> factors) {
  if (factors.empty()) throw InvalidArgument("product: needs at least one factor");
  Index n = 0;
  for (const auto& f : factors) n += f.dimension();
  return FeasibleSet(Product{std::move(factors)}, n);
}

bool FeasibleSet::contains(const Point& x, double tol) const {
  if (x.size() != dim_ || !x.allFinite()) return false;
  return std::visit(
      [&](const auto& k) -> bool {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Box>) {
          return ((x - k.lower).array() >= -tol).all() && ((k.upper - x).array() >= -tol).all();
        } else if constexpr (std::is_same_v<K, Ball>) {
          return (x - k.center).norm() <= k.radius + tol;
        } else if constexpr (std::is_same_v<K, Simplex>) {
          return (x.array() >= -tol).all() && std::abs(x.sum() - 1.0) <= tol * std::max<double>(1.0, static_cast<double>(dim_));
        } else {
          Index offset = 0;
          for (const auto& f : k.factors) {
            if (!f.contains(x.segment(offset, f.dimension()), tol)) return false;
            offset += f.dimension();
          }
          return true;
        }
      },
      kind_);
}

bool FeasibleSet::is_simplex_product() const {
  if (is<Simplex>()) return true;
  if (!is<Product>()) return false;
  const auto& factors = as<Product>().factors;
  return std::all_of(factors.begin(), factors.end(),
                     [](const FeasibleSet& f) { return f.is_simplex_product(); });
}

Point project_simplex(const Point& y) {
  const Index n = y.size();
  std::vector<double> sorted(y.data(), y.data() + n);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  // Largest j with sorted[j] - (prefix_j - 1) / (j + 1) > 0.
  double prefix = 0.0;
  double theta = 0.0;
  for (Index j = 0; j < n; ++j) {
    prefix += sorted[j];
    const double candidate = (prefix - 1.0) / static_cast<double>(j + 1);
    if (sorted[j] - candidate > 0.0) theta = candidate;
  }
  return (y.array() - theta).max(0.0).matrix();
}

Point project(const FeasibleSet& set, const Point& y) {
  require_dimension(y, set.dimension(), "project");
  return std::visit(
      [&](const auto& k) -> Point {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Box>) {
          return y.cwiseMax(k.lower).cwiseMin(k.upper);
        } else if constexpr (std::is_same_v<K, Ball>) {
          const Point d = y - k.center;
          const double norm = d.norm();
          if (norm <= k.radius) return y;
          return k.center + (k.radius / norm) * d;
        } else if constexpr (std::is_same_v<K, Simplex>) {
          return project_simplex(y);
        } else {
          Point out(y.size());
          Index offset = 0;
          for (const auto& f : k.factors) {
            out.segment(offset, f.dimension()) = project(f, y.segment(offset, f.dimension()));
            offset += f.dimension();
          }
          return out;
        }
      },
      set.kind());
}

double diameter(const FeasibleSet& set) {
  return std::visit(
      [](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Box>) {
          return (k.upper - k.lower).norm();
        } else if constexpr (std::is_same_v<K, Ball>) {
          return 2.0 * k.radius;
        } else if constexpr (std::is_same_v<K, Simplex>) {
          return k.dim >= 2 ? std::sqrt(2.0) : 0.0;
        } else {
          double sq = 0.0;
          for (const auto& f : k.factors) {
            const double d = diameter(f);
            sq += d * d;
          }
          return std::sqrt(sq);
        }
      },
      set.kind());
}

Point initial_point(const FeasibleSet& set) {
  return project(set, Point::Zero(set.dimension()));
}

Point sample_point(const FeasibleSet& set, RandomStream& rng) {
  return std::visit(
      [&](const auto& k) -> Point {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Box>) {
          Point x(k.lower.size());
          for (Index i = 0; i < x.size(); ++i) x[i] = rng.uniform(k.lower[i], k.upper[i]);
          return x;
        } else if constexpr (std::is_same_v<K, Ball>) {
          const Index n = k.center.size();
          Point dir = rng.normal_vector(n);
          double norm = dir.norm();
          while (norm == 0.0) {
            dir = rng.normal_vector(n);
            norm = dir.norm();
          }
          const double r = k.radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(n));
          return k.center + (r / norm) * dir;
        } else if constexpr (std::is_same_v<K, Simplex>) {
          // Normalized exponentials are uniform on the simplex.
          Point e(k.dim);
          for (Index i = 0; i < k.dim; ++i) e[i] = -std::log1p(-rng.uniform());
          const double s = e.sum();
          if (s <= 0.0) return Point::Constant(k.dim, 1.0 / static_cast<double>(k.dim));
          return e / s;
        } else {
          Point x(set.dimension());
          Index offset = 0;
          for (const auto& f : k.factors) {
            x.segment(offset, f.dimension()) = sample_point(f, rng);
            offset += f.dimension();
          }
          return x;
        }
      },
      set.kind());
}

std::vector<Point> simplex_product_vertices(const FeasibleSet& set) {
  if (!set.is_simplex_product()) {
    throw InvalidArgument("simplex_product_vertices: set is not a product of simplices");
  }
  if (set.is<Simplex>()) {
    const Index n = set.dimension();
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) out.push_back(Point::Unit(n, i));
    return out;
  }
  std::vector<Point> out{Point(0)};
  for (const auto& f : set.as<Product>().factors) {
    const auto factor_vertices = simplex_product_vertices(f);
    std::vector<Point> next;
    next.reserve(out.size() * factor_vertices.size());
    for (const auto& head : out) {
      for (const auto& tail : factor_vertices) {
        Point joined(head.size() + tail.size());
        joined << head, tail;
        next.push_back(std::move(joined));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace umprox
