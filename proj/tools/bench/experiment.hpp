#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "umprox/umprox.hpp"

namespace umprox::bench {

enum class SolverKind { ump, ump_stochastic, extragradient_fixed };

std::string_view to_string(SolverKind kind);

/// Invalid experiment configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitSolverError = 3;

struct ExperimentConfig {
  nlohmann::json problem_spec;
  SolverKind solver = SolverKind::ump;
  std::int64_t iterations = 1000;
  std::vector<std::uint64_t> seeds;
  double sigma = 0.0;
  LogCadence cadence;
  std::filesystem::path output_dir = "vibench_out";
  std::optional<double> L0_override;
  std::optional<double> D_override;
  std::optional<double> step;
};

/// Parses and validates a config, including the embedded problem.
ExperimentConfig parse_config(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& config);

/// Classic extragradient with constant step. Rows carry L = 1/step and the
/// standard certificate D^2 / (2 step k), valid for step <= 1/L1.
RunReport extragradient_fixed(const VIProblem& problem, std::int64_t K, double step,
                              const RunOptions& options = {});

/// 1/L1 for problems declaring nu = 1; ConfigError otherwise.
double default_extragradient_step(const VIProblem& problem);

struct BoundRow {
  std::int64_t k;
  double L;
  std::optional<double> L_bound;
  double certificate;
  std::optional<double> theorem_bound;
  std::optional<double> exact_gap;
  std::optional<double> gap_slack;  // 2 * stderr for multi-seed rows
  std::optional<bool> certificate_ok;
  std::optional<bool> L_bound_ok;
  std::optional<bool> theorem_ok;
  std::optional<bool> verdict;  // conjunction of the checks that apply
};

struct BoundTable {
  std::vector<BoundRow> rows;
  std::optional<bool> certificate_dominates;
  std::optional<bool> L_bound_holds;
  std::optional<bool> theorem_bound_holds;
  std::optional<bool> all_bounds_hold;
};

/// Row-by-row comparison of a run against the step-size and gap bounds.
/// Deterministic runs use the deterministic lemma/theorem; stochastic
/// (seed-averaged) runs use the expectation bounds with sigma.
BoundTable compare_bounds(const RunReport& report, const VIProblem& problem, double sigma = 0.0);

nlohmann::json report_to_json(const RunReport& report, double sigma);
RunReport report_from_json(const nlohmann::json& j, double* sigma = nullptr);

/// Fixed CSV layout: k,L_k,certificate,exact_gap,theorem_bound.
std::string trajectory_csv(const BoundTable& table);
std::string bound_table_csv(const BoundTable& table);

struct ExperimentResult {
  int exit_code = kExitOk;
  std::string message;
  std::vector<std::filesystem::path> files;
  BoundTable table;
};

/// Runs the configured solver and writes trajectory.csv, summary.json,
/// report.json, and config.echo.json into config.output_dir.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Reads, validates, and runs a JSON config file. Config errors never touch
/// the output directory.
ExperimentResult run_experiment_file(const std::filesystem::path& path,
                                     const std::optional<std::filesystem::path>& out_dir,
                                     const std::optional<std::vector<std::uint64_t>>& seeds,
                                     const std::optional<std::int64_t>& iterations);

}  // namespace umprox::bench
