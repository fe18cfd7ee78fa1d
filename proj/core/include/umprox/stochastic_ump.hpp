#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "umprox/ump.hpp"

namespace umprox {

/// Two disjoint substreams of one seed: samples at z_k and samples at w_k.
struct SampleStreams {
  explicit SampleStreams(std::uint64_t seed);

  RandomStream at_z;
  RandomStream at_w;
};

struct StochasticRunReport : RunReport {
  std::uint64_t seed = 0;
  std::int64_t sample_count = 0;
  double sigma_used = 0.0;
};

/// One stochastic iteration. Draws a fresh sample at z_k for the w-step and
/// one fresh sample at w_k that is reused for the z-step and the step-size
/// update.
StepDetails sump_step(const SolverState& state, const StochasticOracle& oracle,
                      const FeasibleSet& set, double D, SampleStreams& streams);

SolverState sump_iterate(const SolverState& state, const StochasticOracle& oracle,
                         const FeasibleSet& set, double D, SampleStreams& streams);

/// Stochastic run. L0 comes from one sample at z0, so sample_count is
/// 2K + 1. Reports are bit-identical for identical (problem, K, seed).
StochasticRunReport run_stochastic(const VIProblem& problem, const StochasticOracle& oracle,
                                   std::int64_t K, std::uint64_t seed,
                                   const RunOptions& options = {});

/// Runs every seed (in parallel) and returns the reports in seed order.
std::vector<StochasticRunReport> run_stochastic_seeds(const VIProblem& problem,
                                                      const StochasticOracle& oracle,
                                                      std::int64_t K,
                                                      std::span<const std::uint64_t> seeds,
                                                      const RunOptions& options = {});

struct GapEstimate {
  double mean;
  double std_error;
  std::vector<double> per_seed;
};

/// Monte Carlo estimate of E[Gap(w_hat_K)] using the problem's exact gap
/// oracle. Requires at least two seeds.
GapEstimate mean_gap_estimate(const VIProblem& problem, const StochasticOracle& oracle,
                              std::int64_t K, std::span<const std::uint64_t> seeds,
                              const RunOptions& options = {});

/// Sample mean and standard error of the mean.
std::pair<double, double> mean_and_stderr(std::span<const double> values);

/// Per-row average over reports sharing one schedule: mean L, mean
/// certificate, mean exact gap with its standard error. L0 is averaged too.
RunReport aggregate_reports(std::span<const StochasticRunReport> reports);

}  // namespace umprox
