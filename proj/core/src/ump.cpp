#include "umprox/ump.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "umprox/bounds.hpp"
#include "umprox/prox.hpp"
#include "run_loop.hpp"

namespace umprox {

Point SolverState::w_hat() const {
  if (k < 1) throw InvalidArgument("w_hat: no completed iterations");
  return w_sum / static_cast<double>(k);
}

SolverState initial_state(const Point& z0, double L0) {
  return SolverState{z0, L0, Point::Zero(z0.size()), 0};
}

double l_update(double L_k, double inner, double dz_sq, double D) {
  if (!(D > 0.0) || !std::isfinite(D)) throw InvalidArgument("l_update: D must be positive and finite");
  if (!(L_k > 0.0) || !std::isfinite(L_k)) throw InvalidArgument("l_update: L_k must be positive and finite");
  if (!std::isfinite(inner)) throw InvalidArgument("l_update: inner product must be finite");
  if (!(dz_sq >= 0.0) || !std::isfinite(dz_sq)) {
    throw InvalidArgument("l_update: dz_sq must be finite and >= 0");
  }
  const double increment = (2.0 * inner - L_k * dz_sq) / (D * D + dz_sq);
  return L_k + std::max(0.0, increment);
}

double l_update_residual(double L_k, double L_next, double inner, double dz_sq, double D) {
  return (L_next - L_k) * D * D / 2.0 - std::max(0.0, inner - L_next * dz_sq / 2.0);
}

StepDetails mirror_prox_step(const SolverState& state, const EvalFn& eval_z,
                             const EvalFn& eval_w, const FeasibleSet& set, double D) {
  const Point g_z = eval_z(state.z);
  Point w = prox_step(state.z, g_z, state.L, set);
  const Point g_w = eval_w(w);
  Point z_next = prox_step(state.z, g_w, state.L, set);

  const double inner = g_w.dot(w - z_next);
  const double dz_sq = (state.z - z_next).squaredNorm();
  if (!std::isfinite(inner)) throw EvaluationError("<g(w), w - z_next> is not finite", w);
  const double L_next = l_update(state.L, inner, dz_sq, D);

  SolverState next{std::move(z_next), L_next, state.w_sum + w, state.k + 1};
  return StepDetails{std::move(next), std::move(w), state.L, inner, dz_sq};
}

SolverState ump_iterate(const SolverState& state, const DeterministicOperator& op,
                        const FeasibleSet& set, double D) {
  const EvalFn eval = [&op](const Point& x) { return op(x); };
  return mirror_prox_step(state, eval, eval, set, D).next;
}

LogCadence LogCadence::every_iteration() {
  return LogCadence{std::numeric_limits<std::int64_t>::max(), 1.1, {}};
}

std::vector<std::int64_t> LogCadence::schedule(std::int64_t K) const {
  if (K < 1) throw InvalidArgument("LogCadence: K must be >= 1");
  if (!(ratio > 1.0)) throw InvalidArgument("LogCadence: ratio must exceed 1");
  std::vector<std::int64_t> out;
  const std::int64_t full = std::min(full_until, K);
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(full, 0)) + 64);
  for (std::int64_t k = 1; k <= full; ++k) out.push_back(k);
  if (full < K) {
    std::int64_t next = std::max<std::int64_t>(full, 1);
    while (true) {
      next = std::max(next + 1, static_cast<std::int64_t>(std::ceil(static_cast<double>(next) * ratio)));
      if (next > K) break;
      out.push_back(next);
    }
    for (std::int64_t p = 1; p <= K; p *= 10) out.push_back(p);
    out.push_back(K);
  }
  for (std::int64_t k : extra) {
    if (k >= 1 && k <= K) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double l_floor(double D) { return 1e-12 * std::max(1.0, D); }

double resolve_diameter(const FeasibleSet& set, const std::optional<double>& D_override) {
  const double computed = diameter(set);
  if (!D_override) {
    if (!(computed > 0.0)) throw InvalidArgument("feasible set has zero diameter");
    return computed;
  }
  if (!(*D_override > 0.0) || !std::isfinite(*D_override)) {
    throw InvalidArgument("D override must be positive and finite");
  }
  if (*D_override < computed * (1.0 - 1e-12)) {
    throw InvalidArgument("D override " + std::to_string(*D_override) +
                          " is smaller than the set diameter " + std::to_string(computed));
  }
  return *D_override;
}

namespace detail {

RunSetup prepare_run(const FeasibleSet& set, std::int64_t K, const RunOptions& options) {
  if (K < 1) throw InvalidArgument("run: K must be >= 1");
  RunSetup setup;
  setup.D = resolve_diameter(set, options.D_override);
  setup.z0 = options.z0_override ? *options.z0_override : initial_point(set);
  require_dimension(setup.z0, set.dimension(), "run(z0)");
  if (!set.contains(setup.z0)) throw InvalidArgument("run: starting point is not feasible");
  if (options.L0_override &&
      (!(*options.L0_override > 0.0) || !std::isfinite(*options.L0_override))) {
    throw InvalidArgument("L0 override must be positive and finite");
  }
  return setup;
}

void run_loop(const RunSetup& setup, const FeasibleSet& set, std::int64_t K,
              const RunOptions& options, const EvalFn& eval_z, const EvalFn& eval_w,
              const Point& g0, RunReport& report) {
  const auto start = std::chrono::steady_clock::now();
  const double D = setup.D;
  report.D = D;

  const double g0_norm = g0.norm();
  double L0 = 0.0;
  if (options.L0_override) {
    L0 = *options.L0_override;
  } else {
    L0 = std::max(g0_norm, l_floor(D));
    if (g0_norm < l_floor(D)) {
      report.warnings.push_back("||g(z0)|| below floor; L0 set to " + std::to_string(L0));
    }
  }
  if (!std::isfinite(L0)) throw EvaluationError("L0 is not finite", setup.z0, 0);
  report.L0 = L0;

  const std::vector<std::int64_t> schedule = options.cadence.schedule(K);
  report.rows.reserve(schedule.size());
  auto next_log = schedule.begin();

  SolverState state = initial_state(setup.z0, L0);
  for (std::int64_t k = 0; k < K; ++k) {
    StepDetails step = [&] {
      try {
        return mirror_prox_step(state, eval_z, eval_w, set, D);
      } catch (const EvaluationError& e) {
        throw e.at_iteration(k);
      }
    }();
    if (!std::isfinite(step.next.L)) {
      throw EvaluationError("step size is not finite", state.z, k);
    }
    if (options.on_step) options.on_step(step);
    state = std::move(step.next);

    if (next_log != schedule.end() && state.k == *next_log) {
      ++next_log;
      TrajectoryRow row{state.k, state.L, certificate_bound(D, state.L, state.k), std::nullopt,
                        std::nullopt};
      if (options.gap_oracle) row.exact_gap = options.gap_oracle(state.w_hat());
      report.rows.push_back(row);
    }
  }

  report.w_hat = state.w_hat();
  report.iterations = K;
  report.wall_time_s +=
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Point evaluate_start(const EvalFn& eval, const Point& z0) {
  try {
    return eval(z0);
  } catch (const EvaluationError& e) {
    throw e.at_iteration(0);
  }
}

}  // namespace detail

RunReport run(const DeterministicOperator& op, const FeasibleSet& set, std::int64_t K,
              const RunOptions& options) {
  const detail::RunSetup setup = detail::prepare_run(set, K, options);
  RunReport report;
  report.solver = "ump";

  std::int64_t calls = 0;
  const EvalFn eval = [&](const Point& x) {
    ++calls;
    return op(x);
  };
  const Point g0 = detail::evaluate_start(eval, setup.z0);
  detail::run_loop(setup, set, K, options, eval, eval, g0, report);
  report.oracle_calls = calls;
  return report;
}

RunReport run(const VIProblem& problem, std::int64_t K, const RunOptions& options) {
  RunReport report = run(problem.op, problem.set, K, options);
  report.label = problem.label;
  return report;
}

}  // namespace umprox
