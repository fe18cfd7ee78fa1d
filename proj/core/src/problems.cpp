#include "umprox/problems.hpp"

#include <cmath>
#include <cstdio>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace umprox {

double spectral_norm(const Matrix& A) {
  if (A.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(A);
  return svd.singularValues()(0);
}

namespace {

double smallest_singular_value(const Matrix& A) {
  Eigen::JacobiSVD<Matrix> svd(A);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

// Records x as the known solution when g(x) = 0 and x is feasible.
std::optional<Point> root_if_feasible(const Matrix& M, const Point& rhs, const FeasibleSet& set) {
  if (smallest_singular_value(M) <= 1e-12 * std::max(1.0, spectral_norm(M))) {
    return std::nullopt;
  }
  Point x = M.fullPivLu().solve(rhs);
  if (!set.contains(x, 1e-12)) return std::nullopt;
  return x;
}

}  // namespace

VIProblem make_matrix_game(Matrix A, std::string label) {
  if (A.rows() < 1 || A.cols() < 1) throw InvalidArgument("make_matrix_game: empty matrix");
  if (!A.allFinite()) throw InvalidArgument("make_matrix_game: matrix must be finite");
  const Index m = A.rows();
  const Index n = A.cols();
  const double L = spectral_norm(A);

  auto field = [A, m, n](const Point& x) -> Point {
    Point g(m + n);
    g.head(m) = A * x.tail(n);
    g.tail(n) = -(A.transpose() * x.head(m));
    return g;
  };
  FeasibleSet set = FeasibleSet::product({FeasibleSet::simplex(m), FeasibleSet::simplex(n)});
  return VIProblem{std::move(label),
                   DeterministicOperator(field, HolderInfo{1.0, L}),
                   std::move(set),
                   1.0,
                   L,
                   std::nullopt,
                   MatrixGameParams{std::move(A)}};
}

VIProblem make_holder_1d(double nu, double center) {
  if (!(nu >= 0.0 && nu <= 1.0)) throw InvalidArgument("make_holder_1d: nu must lie in [0, 1]");
  if (!(center >= -1.0 && center <= 1.0)) {
    throw InvalidArgument("make_holder_1d: center must lie in [-1, 1]");
  }
  const double L = std::pow(2.0, 1.0 - nu);
  auto field = [nu, center](const Point& x) -> Point {
    const double d = x[0] - center;
    Point g(1);
    g[0] = d == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(d), nu), d);
    return g;
  };
  Point solution(1);
  solution[0] = center;
  char buf[64];
  if (center == 0.0) {
    std::snprintf(buf, sizeof buf, "holder_1d(nu=%g)", nu);
  } else {
    std::snprintf(buf, sizeof buf, "holder_1d(nu=%g,c=%g)", nu, center);
  }
  std::string label = buf;
  return VIProblem{std::move(label),
                   DeterministicOperator(field, HolderInfo{nu, L}),
                   FeasibleSet::cube(1, -1.0, 1.0),
                   nu,
                   L,
                   std::move(solution),
                   Holder1dParams{nu, center}};
}

VIProblem make_affine_monotone(Matrix M, Point b, FeasibleSet set, std::string label) {
  const Index n = set.dimension();
  if (M.rows() != n || M.cols() != n || b.size() != n) {
    throw InvalidArgument("make_affine_monotone: M must be n x n and b of size n");
  }
  if (!M.allFinite() || !b.allFinite()) throw InvalidArgument("make_affine_monotone: non-finite data");
  const double L = spectral_norm(M);
  const Matrix sym = M + M.transpose();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10 * std::max(1.0, L)) {
    throw InvalidArgument("make_affine_monotone: M + M^T is not positive semidefinite");
  }
  std::optional<Point> solution = root_if_feasible(M, -b, set);
  auto field = [M, b](const Point& x) -> Point { return M * x + b; };
  AffineParams params{M, b, set};
  return VIProblem{std::move(label),
                   DeterministicOperator(field, HolderInfo{1.0, L}),
                   std::move(set),
                   1.0,
                   L,
                   std::move(solution),
                   std::move(params)};
}

VIProblem make_fixed_point(std::function<Point(const Point&)> F, FeasibleSet set,
                           std::string label) {
  if (!F) throw InvalidArgument("make_fixed_point: empty map");
  RandomStream rng(0x5eed);
  for (int i = 0; i < 2000; ++i) {
    const Point x = sample_point(set, rng);
    const Point y = sample_point(set, rng);
    const double dist = (x - y).norm();
    if ((F(x) - F(y)).norm() > dist * (1.0 + 1e-9) + 1e-15) {
      throw InvalidArgument("make_fixed_point: map is expansive on the set");
    }
  }
  auto field = [F](const Point& x) -> Point { return x - F(x); };
  // ||(x - F x) - (y - F y)|| <= 2 ||x - y|| for nonexpansive F.
  return VIProblem{std::move(label),
                   DeterministicOperator(field, HolderInfo{1.0, 2.0}),
                   std::move(set),
                   1.0,
                   2.0,
                   std::nullopt,
                   std::monostate{}};
}

VIProblem make_linear_fixed_point(Matrix T, Point t, FeasibleSet set, std::string label) {
  const Index n = set.dimension();
  if (T.rows() != n || T.cols() != n || t.size() != n) {
    throw InvalidArgument("make_linear_fixed_point: T must be n x n and t of size n");
  }
  if (!T.allFinite() || !t.allFinite()) {
    throw InvalidArgument("make_linear_fixed_point: non-finite data");
  }
  if (spectral_norm(T) > 1.0 + 1e-12) {
    throw InvalidArgument("make_linear_fixed_point: map is expansive (||T|| > 1)");
  }
  const Matrix G = Matrix::Identity(n, n) - T;
  const double L = spectral_norm(G);
  std::optional<Point> solution = root_if_feasible(G, t, set);
  auto field = [G, t](const Point& x) -> Point { return G * x - t; };
  LinearFixedPointParams params{T, t, set};
  return VIProblem{std::move(label),
                   DeterministicOperator(field, HolderInfo{1.0, L}),
                   std::move(set),
                   1.0,
                   L,
                   std::move(solution),
                   std::move(params)};
}

StochasticOracle add_gaussian_noise(const VIProblem& problem, double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgument("add_gaussian_noise: sigma must be finite and >= 0");
  }
  const DeterministicOperator op = problem.op;
  const Index n = problem.dimension();
  const double scale = sigma / std::sqrt(static_cast<double>(n));
  auto sample = [op, scale, n](const Point& x, RandomStream& rng) -> Point {
    if (scale == 0.0) return op(x);
    return op(x) + scale * rng.normal_vector(n);
  };
  return StochasticOracle(sample, sigma, op);
}

}  // namespace umprox
