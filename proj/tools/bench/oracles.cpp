#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace umprox::bench::oracle {

Point zoom_grid_minimize(const std::function<double(const Point&)>& f,
                         const std::function<bool(const Point&)>& feasible, const Point& lo,
                         const Point& hi, double resolution) {
  const Index m = lo.size();
  if (m < 1 || m > 2 || hi.size() != m) throw InvalidArgument("zoom_grid_minimize: m must be 1 or 2");
  constexpr int kCoarse = 200;
  constexpr int kHalfWidth = 40;

  Point best;
  double best_val = std::numeric_limits<double>::infinity();
  auto consider = [&](const Point& p) {
    for (Index i = 0; i < m; ++i) {
      if (p[i] < lo[i] || p[i] > hi[i]) return;
    }
    if (!feasible(p)) return;
    const double v = f(p);
    if (v < best_val) {
      best_val = v;
      best = p;
    }
  };

  Point step = (hi - lo) / kCoarse;
  Point p(m);
  const int n2 = m == 2 ? kCoarse : 0;
  for (int i = 0; i <= kCoarse; ++i) {
    for (int j = 0; j <= n2; ++j) {
      p[0] = lo[0] + i * step[0];
      if (m == 2) p[1] = lo[1] + j * step[1];
      consider(p);
    }
  }
  if (best.size() == 0) throw InvalidArgument("zoom_grid_minimize: no feasible grid point");

  while (step.maxCoeff() > resolution) {
    step /= 20.0;
    const int h2 = m == 2 ? kHalfWidth : 0;
    Point center;
    do {
      center = best;
      for (int i = -kHalfWidth; i <= kHalfWidth; ++i) {
        for (int j = -h2; j <= h2; ++j) {
          p[0] = center[0] + i * step[0];
          if (m == 2) p[1] = center[1] + j * step[1];
          consider(p);
        }
      }
    } while (best != center);
  }
  return best;
}

Point simplex_projection(const Point& y, double resolution) {
  const Index n = y.size();
  if (n == 2) {
    auto x_of = [](const Point& p) { return Point{{p[0], 1.0 - p[0]}}; };
    const Point p = zoom_grid_minimize([&](const Point& q) { return (x_of(q) - y).squaredNorm(); },
                                       [](const Point&) { return true; }, Point::Zero(1),
                                       Point::Ones(1), resolution);
    return x_of(p);
  }
  if (n == 3) {
    auto x_of = [](const Point& p) { return Point{{p[0], p[1], 1.0 - p[0] - p[1]}}; };
    const Point p = zoom_grid_minimize([&](const Point& q) { return (x_of(q) - y).squaredNorm(); },
                                       [](const Point& q) { return q[0] + q[1] <= 1.0; },
                                       Point::Zero(2), Point::Ones(2), resolution);
    return x_of(p);
  }
  throw InvalidArgument("oracle::simplex_projection: dimension must be 2 or 3");
}

Point prox_minimizer(const FeasibleSet& set, const Point& z, const Point& g, double L,
                     double resolution) {
  auto h = [&](const Point& x) { return g.dot(x - z) + 0.5 * L * (x - z).squaredNorm(); };
  if (set.is<Box>() && set.dimension() == 2) {
    const auto& box = set.as<Box>();
    return zoom_grid_minimize(h, [](const Point&) { return true; }, box.lower, box.upper,
                              resolution);
  }
  if (set.is<Ball>() && set.dimension() == 2) {
    const auto& ball = set.as<Ball>();
    auto x_of = [&](const Point& p) {
      return Point{{ball.center[0] + p[0] * std::cos(p[1]), ball.center[1] + p[0] * std::sin(p[1])}};
    };
    auto solve = [&](double theta) {
      return zoom_grid_minimize([&](const Point& q) { return h(x_of(q)); },
                                [](const Point&) { return true; },
                                Point{{0.0, theta - std::numbers::pi}},
                                Point{{ball.radius, theta + std::numbers::pi}}, resolution);
    };
    return x_of(solve(solve(0.0)[1]));
  }
  if (set.is<Simplex>() && set.dimension() == 2) {
    auto x_of = [](const Point& p) { return Point{{p[0], 1.0 - p[0]}}; };
    return x_of(zoom_grid_minimize([&](const Point& q) { return h(x_of(q)); },
                                   [](const Point&) { return true; }, Point::Zero(1),
                                   Point::Ones(1), resolution));
  }
  if (set.is<Simplex>() && set.dimension() == 3) {
    auto x_of = [](const Point& p) { return Point{{p[0], p[1], 1.0 - p[0] - p[1]}}; };
    return x_of(zoom_grid_minimize([&](const Point& q) { return h(x_of(q)); },
                                   [](const Point& q) { return q[0] + q[1] <= 1.0; },
                                   Point::Zero(2), Point::Ones(2), resolution));
  }
  throw InvalidArgument("oracle::prox_minimizer: unsupported set");
}

double game_gap_by_vertices(const Matrix& A, const Point& u_hat, const Point& v_hat) {
  const Index m = A.rows();
  const Index n = A.cols();
  Point w_hat(m + n);
  w_hat << u_hat, v_hat;
  double best = -std::numeric_limits<double>::infinity();
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      Point y = Point::Zero(m + n);
      y[i] = 1.0;
      y[m + j] = 1.0;
      Point gy(m + n);
      gy << A.col(j), -A.row(i).transpose();
      best = std::max(best, gy.dot(w_hat - y));
    }
  }
  return best;
}

}  // namespace umprox::bench::oracle
