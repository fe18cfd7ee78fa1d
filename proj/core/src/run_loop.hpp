#pragma once

#include "umprox/ump.hpp"

namespace umprox::detail {

struct RunSetup {
  double D = 0.0;
  Point z0;
};

RunSetup prepare_run(const FeasibleSet& set, std::int64_t K, const RunOptions& options);

Point evaluate_start(const EvalFn& eval, const Point& z0);

// Iterates K times from z0 with L0 derived from g0 (or the override), filling
// rows, w_hat, L0, D, iterations, and wall time of `report`.
void run_loop(const RunSetup& setup, const FeasibleSet& set, std::int64_t K,
              const RunOptions& options, const EvalFn& eval_z, const EvalFn& eval_w,
              const Point& g0, RunReport& report);

}  // namespace umprox::detail
