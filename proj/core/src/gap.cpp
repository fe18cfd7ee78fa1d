#include "umprox/gap.hpp"

#include <cmath>
#include <limits>

namespace umprox {

std::string_view to_string(GapMethod method) {
  switch (method) {
    case GapMethod::closed_form: return "closed_form";
    case GapMethod::vertex_enum: return "vertex_enum";
    case GapMethod::grid: return "grid";
    case GapMethod::suboptimality_lower_bound: return "suboptimality_lower_bound";
  }
  return "unknown";
}

GapResult gap_matrix_game(const Matrix& A, const Point& u_hat, const Point& v_hat) {
  constexpr double tol = 1e-8;
  if (u_hat.size() != A.rows() || v_hat.size() != A.cols()) {
    throw InvalidArgument("gap_matrix_game: strategy sizes do not match the payoff matrix");
  }
  if (!FeasibleSet::simplex(A.rows()).contains(u_hat, tol) ||
      !FeasibleSet::simplex(A.cols()).contains(v_hat, tol)) {
    throw InvalidArgument("gap_matrix_game: strategies must lie on their simplices");
  }
  const Point col_payoff = A.transpose() * u_hat;  // best response of the maximizer
  const Point row_payoff = A * v_hat;              // best response of the minimizer
  Index j_best = 0;
  Index i_best = 0;
  const double hi = col_payoff.maxCoeff(&j_best);
  const double lo = row_payoff.minCoeff(&i_best);

  Point witness = Point::Zero(A.rows() + A.cols());
  witness[i_best] = 1.0;
  witness[A.rows() + j_best] = 1.0;
  return GapResult{hi - lo, GapMethod::closed_form, std::move(witness)};
}

GapResult gap_holder_1d(double nu, double center, double x_hat) {
  const double d = std::abs(x_hat - center);
  // Maximizer of |y - c|^nu (d - |y - c|) sits at |y - c| = nu d / (1 + nu).
  const double value = std::pow(d, 1.0 + nu) * std::pow(nu, nu) / std::pow(1.0 + nu, 1.0 + nu);
  Point witness(1);
  witness[0] = center + std::copysign(nu * d / (1.0 + nu), x_hat - center);
  return GapResult{value, GapMethod::closed_form, std::move(witness)};
}

namespace {

constexpr std::size_t kMaxVertexSum = 10;
constexpr Index kMaxGridDimension = 3;

std::size_t simplex_vertex_sum(const FeasibleSet& set) {
  if (set.is<Simplex>()) return static_cast<std::size_t>(set.dimension());
  std::size_t total = 0;
  for (const auto& f : set.as<Product>().factors) total += simplex_vertex_sum(f);
  return total;
}

void bounding_box(const FeasibleSet& set, Point& lo, Point& hi) {
  lo.resize(set.dimension());
  hi.resize(set.dimension());
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Box>) {
          lo = k.lower;
          hi = k.upper;
        } else if constexpr (std::is_same_v<K, Ball>) {
          lo = k.center.array() - k.radius;
          hi = k.center.array() + k.radius;
        } else if constexpr (std::is_same_v<K, Simplex>) {
          lo.setZero();
          hi.setOnes();
        } else {
          Index offset = 0;
          for (const auto& f : k.factors) {
            Point flo;
            Point fhi;
            bounding_box(f, flo, fhi);
            lo.segment(offset, f.dimension()) = flo;
            hi.segment(offset, f.dimension()) = fhi;
            offset += f.dimension();
          }
        }
      },
      set.kind());
}

}  // namespace

std::vector<Point> enumeration_points(const FeasibleSet& set, int resolution, GapMethod* method,
                                      double* spacing) {
  if (set.is_simplex_product() && simplex_vertex_sum(set) <= kMaxVertexSum) {
    if (method) *method = GapMethod::vertex_enum;
    if (spacing) *spacing = 0.0;
    return simplex_product_vertices(set);
  }
  if (set.dimension() > kMaxGridDimension) {
    throw UnsupportedInstance("brute-force oracle supports dimension <= 3 or simplex products with at most 10 vertices");
  }
  if (resolution < 2) throw InvalidArgument("brute-force oracle: resolution must be >= 2");

  Point lo;
  Point hi;
  bounding_box(set, lo, hi);
  const Index n = set.dimension();
  const Point step = (hi - lo) / static_cast<double>(resolution - 1);
  if (method) *method = GapMethod::grid;
  if (spacing) *spacing = step.maxCoeff();

  std::size_t total = 1;
  for (Index i = 0; i < n; ++i) total *= static_cast<std::size_t>(resolution);
  std::vector<Point> points;
  points.reserve(total);
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  for (std::size_t c = 0; c < total; ++c) {
    Point y(n);
    for (Index i = 0; i < n; ++i) {
      // The last node lands exactly on the upper bound.
      y[i] = idx[static_cast<std::size_t>(i)] == resolution - 1
                 ? hi[i]
                 : lo[i] + step[i] * idx[static_cast<std::size_t>(i)];
    }
    points.push_back(set.contains(y, 0.0) ? y : project(set, y));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (++idx[a] < resolution) break;
      idx[a] = 0;
    }
  }
  return points;
}

GapResult gap_bruteforce(const DeterministicOperator& op, const FeasibleSet& set,
                         const Point& w_hat, int resolution) {
  require_dimension(w_hat, set.dimension(), "gap_bruteforce");
  GapMethod method = GapMethod::grid;
  double spacing = 0.0;
  std::vector<Point> candidates = enumeration_points(set, resolution, &method, &spacing);
  candidates.push_back(project(set, w_hat));

  GapResult best{-std::numeric_limits<double>::infinity(), method, candidates.front(), spacing};
  for (const auto& y : candidates) {
    const double value = op(y).dot(w_hat - y);
    if (value > best.value) {
      best.value = value;
      best.witness = y;
    }
  }
  return best;
}

double suboptimality_lower_bound(double f_value_at_w_hat, double f_star) {
  return f_value_at_w_hat - f_star;
}

double stampacchia_residual(const DeterministicOperator& op, const FeasibleSet& set,
                            const Point& x_hat, int resolution) {
  require_dimension(x_hat, set.dimension(), "stampacchia_residual");
  const Point g = op(x_hat);
  double best = 0.0;  // x = x_hat
  for (const auto& x : enumeration_points(set, resolution)) {
    best = std::max(best, g.dot(x_hat - x));
  }
  return best;
}

std::optional<GapResult> exact_gap(const VIProblem& problem, const Point& w_hat) {
  require_dimension(w_hat, problem.dimension(), "exact_gap");
  if (const auto* game = std::get_if<MatrixGameParams>(&problem.params)) {
    const Index m = game->A.rows();
    return gap_matrix_game(game->A, w_hat.head(m), w_hat.tail(game->A.cols()));
  }
  if (const auto* h = std::get_if<Holder1dParams>(&problem.params)) {
    return gap_holder_1d(h->nu, h->center, w_hat[0]);
  }
  return std::nullopt;
}

}  // namespace umprox
