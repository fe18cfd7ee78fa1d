#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "umprox/problems.hpp"

namespace umprox {

/// Recurrence state of the universal mirror-prox method after k iterations.
struct SolverState {
  Point z;        // z_k
  double L;       // L_k
  Point w_sum;    // w_0 + ... + w_{k-1}
  std::int64_t k = 0;

  /// Average of the completed iterates w_0..w_{k-1}; requires k >= 1.
  Point w_hat() const;
};

SolverState initial_state(const Point& z0, double L0);

/// One iteration with its intermediate quantities, for observers and tests.
struct StepDetails {
  SolverState next;
  Point w;          // w_k
  double L_prev;    // L_k
  double inner;     // <g(w_k), w_k - z_{k+1}>
  double dz_sq;     // ||z_k - z_{k+1}||^2
};

/// Step-size recalculation solving
///   (L+ - L) D^2 / 2 = | inner - (L+ / 2) dz_sq |_+
/// in closed form: L + max(0, (2 inner - L dz_sq) / (D^2 + dz_sq)).
double l_update(double L_k, double inner, double dz_sq, double D);

/// Residual of the implicit step-size equation at a candidate L_next.
double l_update_residual(double L_k, double L_next, double inner, double dz_sq, double D);

using EvalFn = std::function<Point(const Point&)>;

/// Shared body of the deterministic and stochastic iterations. eval_z is
/// called once at z_k, eval_w once at w_k; the value at w_k drives both the
/// z-step and the step-size update.
StepDetails mirror_prox_step(const SolverState& state, const EvalFn& eval_z,
                             const EvalFn& eval_w, const FeasibleSet& set, double D);

/// One deterministic iteration: exactly two operator evaluations.
SolverState ump_iterate(const SolverState& state, const DeterministicOperator& op,
                        const FeasibleSet& set, double D);

/// Which iterations get a trajectory row: every k up to full_until, then a
/// geometric sequence with the given ratio, plus every power of ten and the
/// final iteration. `extra` adds caller-chosen iterations.
struct LogCadence {
  std::int64_t full_until = 1000;
  double ratio = 1.1;
  std::vector<std::int64_t> extra;

  static LogCadence every_iteration();
  std::vector<std::int64_t> schedule(std::int64_t K) const;
};

struct TrajectoryRow {
  std::int64_t k;                       // completed iterations
  double L;                             // L after k updates
  double certificate;                   // 2 D^2 L / k
  std::optional<double> exact_gap;      // gap of w_hat_k when an oracle is set
  std::optional<double> gap_stderr;     // multi-seed aggregates only
};

struct RunReport {
  std::string solver;
  std::string label;
  Point w_hat;
  double L0 = 0.0;
  double D = 0.0;
  std::int64_t iterations = 0;
  std::int64_t oracle_calls = 0;
  double wall_time_s = 0.0;
  std::vector<TrajectoryRow> rows;
  std::vector<std::string> warnings;
};

using GapOracleFn = std::function<std::optional<double>(const Point&)>;
using StepObserver = std::function<void(const StepDetails&)>;

struct RunOptions {
  std::optional<double> L0_override;
  // Must be >= the diameter of the set.
  std::optional<double> D_override;
  std::optional<Point> z0_override;
  LogCadence cadence;
  GapOracleFn gap_oracle;
  StepObserver on_step;
};

/// Floor applied to L0 when the initial operator norm vanishes.
double l_floor(double D);

/// Resolves D from the set and an optional override.
double resolve_diameter(const FeasibleSet& set, const std::optional<double>& D_override);

RunReport run(const DeterministicOperator& op, const FeasibleSet& set, std::int64_t K,
              const RunOptions& options = {});

RunReport run(const VIProblem& problem, std::int64_t K, const RunOptions& options = {});

}  // namespace umprox
