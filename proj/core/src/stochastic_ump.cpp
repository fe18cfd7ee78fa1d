#include "umprox/stochastic_ump.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "run_loop.hpp"
#include "umprox/gap.hpp"

namespace umprox {

SampleStreams::SampleStreams(std::uint64_t seed) : at_z(seed, 1), at_w(seed, 2) {}

StepDetails sump_step(const SolverState& state, const StochasticOracle& oracle,
                      const FeasibleSet& set, double D, SampleStreams& streams) {
  const EvalFn eval_z = [&](const Point& x) { return oracle.sample(x, streams.at_z); };
  const EvalFn eval_w = [&](const Point& x) { return oracle.sample(x, streams.at_w); };
  return mirror_prox_step(state, eval_z, eval_w, set, D);
}

SolverState sump_iterate(const SolverState& state, const StochasticOracle& oracle,
                         const FeasibleSet& set, double D, SampleStreams& streams) {
  return sump_step(state, oracle, set, D, streams).next;
}

StochasticRunReport run_stochastic(const VIProblem& problem, const StochasticOracle& oracle,
                                   std::int64_t K, std::uint64_t seed,
                                   const RunOptions& options) {
  const detail::RunSetup setup = detail::prepare_run(problem.set, K, options);
  StochasticRunReport report;
  report.solver = "ump_stochastic";
  report.label = problem.label;
  report.seed = seed;
  report.sigma_used = oracle.sigma();

  SampleStreams streams(seed);
  std::int64_t samples = 0;
  const EvalFn eval_z = [&](const Point& x) {
    ++samples;
    return oracle.sample(x, streams.at_z);
  };
  const EvalFn eval_w = [&](const Point& x) {
    ++samples;
    return oracle.sample(x, streams.at_w);
  };
  const Point g0 = detail::evaluate_start(eval_z, setup.z0);
  detail::run_loop(setup, problem.set, K, options, eval_z, eval_w, g0, report);
  report.sample_count = samples;
  report.oracle_calls = samples;
  return report;
}

std::vector<StochasticRunReport> run_stochastic_seeds(const VIProblem& problem,
                                                      const StochasticOracle& oracle,
                                                      std::int64_t K,
                                                      std::span<const std::uint64_t> seeds,
                                                      const RunOptions& options) {
  std::vector<StochasticRunReport> out(seeds.size());
  auto run_one = [&](std::size_t i) {
    try {
      out[i] = run_stochastic(problem, oracle, K, seeds[i], options);
    } catch (const EvaluationError& e) {
      throw EvaluationError("seed " + std::to_string(seeds[i]) + ": " + e.what(), e.point(),
                            e.iteration());
    }
  };

  // A step observer is caller state; keep it single-threaded.
  const std::size_t workers =
      options.on_step ? 1 : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (workers == 1 || seeds.size() < 2) {
    for (std::size_t i = 0; i < seeds.size(); ++i) run_one(i);
    return out;
  }
  for (std::size_t begin = 0; begin < seeds.size(); begin += workers) {
    const std::size_t end = std::min(seeds.size(), begin + workers);
    std::vector<std::future<void>> batch;
    for (std::size_t i = begin; i < end; ++i) {
      batch.push_back(std::async(std::launch::async, run_one, i));
    }
    for (auto& f : batch) f.get();
  }
  return out;
}

std::pair<double, double> mean_and_stderr(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("mean_and_stderr: no values");
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0)) / std::sqrt(n)};
}

GapEstimate mean_gap_estimate(const VIProblem& problem, const StochasticOracle& oracle,
                              std::int64_t K, std::span<const std::uint64_t> seeds,
                              const RunOptions& options) {
  if (seeds.size() < 2) throw InvalidArgument("mean_gap_estimate: needs at least two seeds");
  if (!exact_gap(problem, initial_point(problem.set))) {
    throw UnsupportedInstance("mean_gap_estimate: problem has no exact gap oracle");
  }
  const auto reports = run_stochastic_seeds(problem, oracle, K, seeds, options);
  GapEstimate estimate{0.0, 0.0, {}};
  estimate.per_seed.reserve(reports.size());
  for (const auto& r : reports) estimate.per_seed.push_back(exact_gap(problem, r.w_hat)->value);
  std::tie(estimate.mean, estimate.std_error) = mean_and_stderr(estimate.per_seed);
  return estimate;
}

RunReport aggregate_reports(std::span<const StochasticRunReport> reports) {
  if (reports.empty()) throw InvalidArgument("aggregate_reports: no reports");
  const auto& first = reports.front();
  for (const auto& r : reports) {
    if (r.rows.size() != first.rows.size()) {
      throw InvalidArgument("aggregate_reports: reports have different schedules");
    }
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      if (r.rows[i].k != first.rows[i].k) {
        throw InvalidArgument("aggregate_reports: reports have different schedules");
      }
    }
  }

  const double n = static_cast<double>(reports.size());
  RunReport out;
  out.solver = first.solver;
  out.label = first.label;
  out.D = first.D;
  out.iterations = first.iterations;
  out.w_hat = Point::Zero(first.w_hat.size());
  for (const auto& r : reports) {
    out.w_hat += r.w_hat / n;
    out.L0 += r.L0 / n;
    out.oracle_calls += r.oracle_calls;
    out.wall_time_s += r.wall_time_s;
    out.warnings.insert(out.warnings.end(), r.warnings.begin(), r.warnings.end());
  }

  std::vector<double> gaps(reports.size());
  for (std::size_t i = 0; i < first.rows.size(); ++i) {
    TrajectoryRow row{first.rows[i].k, 0.0, 0.0, std::nullopt, std::nullopt};
    bool have_gaps = true;
    for (std::size_t s = 0; s < reports.size(); ++s) {
      const auto& src = reports[s].rows[i];
      row.L += src.L / n;
      row.certificate += src.certificate / n;
      if (src.exact_gap) {
        gaps[s] = *src.exact_gap;
      } else {
        have_gaps = false;
      }
    }
    if (have_gaps) {
      const auto [mean, err] = mean_and_stderr(gaps);
      row.exact_gap = mean;
      row.gap_stderr = err;
    }
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace umprox
