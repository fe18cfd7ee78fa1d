#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bench/acceptance.hpp"
#include "bench/experiment.hpp"

namespace fs = std::filesystem;
using namespace umprox::bench;

namespace {

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || item.front() == '-') {
      throw ConfigError("--seeds: '" + item + "' is not a non-negative integer");
    }
    seeds.push_back(v);
  }
  if (seeds.empty()) throw ConfigError("--seeds: empty list");
  return seeds;
}

nlohmann::json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string verdict(const std::optional<bool>& v) {
  return v ? (*v ? "pass" : "FAIL") : "n/a";
}

int cmd_run(const std::string& config, const std::optional<std::string>& out,
            const std::optional<std::string>& seeds, const std::optional<std::int64_t>& iters,
            bool quiet) {
  std::optional<std::vector<std::uint64_t>> seed_list;
  std::optional<fs::path> out_dir;
  try {
    if (seeds) seed_list = parse_seeds(*seeds);
    if (iters && *iters < 1) throw ConfigError("--iters must be positive");
  } catch (const ConfigError& e) {
    std::cerr << "vibench: config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  if (out) out_dir = *out;

  const ExperimentResult result = run_experiment_file(config, out_dir, seed_list, iters);
  if (result.exit_code == kExitConfigError) {
    std::cerr << "vibench: config error: " << result.message << "\n";
  } else if (result.exit_code == kExitSolverError) {
    std::cerr << "vibench: solver error: " << result.message << "\n";
  } else if (!quiet) {
    const auto& last = result.table.rows.back();
    std::cout << "k=" << last.k << " L=" << last.L << " certificate=" << last.certificate;
    if (last.exact_gap) std::cout << " gap=" << *last.exact_gap;
    std::cout << " bounds=" << verdict(result.table.all_bounds_hold) << "\n";
    for (const auto& f : result.files) std::cout << "wrote " << f.string() << "\n";
  }
  return result.exit_code;
}

int cmd_compare(const std::string& report_path, const std::string& problem_path,
                const std::optional<std::string>& out, bool quiet) {
  BoundTable table;
  try {
    double sigma = 0.0;
    const umprox::RunReport report = report_from_json(read_json(report_path), &sigma);
    umprox::VIProblem problem = [&] {
      try {
        return umprox::problem_from_json(read_json(problem_path));
      } catch (const umprox::InvalidArgument& e) {
        throw ConfigError(e.what());
      }
    }();
    table = compare_bounds(report, problem, sigma);
  } catch (const ConfigError& e) {
    std::cerr << "vibench: config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  const std::string csv = bound_table_csv(table);
  if (out) {
    fs::create_directories(*out);
    std::ofstream(fs::path(*out) / "compare.csv", std::ios::binary) << csv;
  } else {
    std::cout << csv;
  }
  if (!quiet) {
    std::cerr << "certificate: " << verdict(table.certificate_dominates)
              << ", step-size bound: " << verdict(table.L_bound_holds)
              << ", rate bound: " << verdict(table.theorem_bound_holds) << "\n";
  }
  return kExitOk;
}

int cmd_suite(const std::optional<std::string>& out, bool quiet) {
  SuiteOptions options;
  if (out) options.scratch_dir = *out;
  options.on_result = [&](const CriterionResult& r) {
    if (!quiet || !r.passed) std::cout << format_result(r) << std::endl;
  };
  const auto results = run_acceptance_suite(options);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  if (!quiet) std::cout << results.size() - failed << "/" << results.size() << " passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal mirror-prox experiments for monotone variational inequalities"};
  app.require_subcommand(1);

  std::optional<std::string> out;
  std::optional<std::string> seeds;
  std::optional<std::int64_t> iters;
  bool quiet = false;
  app.add_option("--out", out, "Output directory");
  app.add_option("--seeds", seeds, "Comma-separated seeds, e.g. 1,2,3");
  app.add_option("--iters", iters, "Iteration count override");
  app.add_flag("--quiet", quiet, "Only print errors");
  app.fallthrough();

  std::string config;
  auto* run = app.add_subcommand("run", "Run one experiment from a JSON config");
  run->add_option("config", config, "Experiment config")->required();

  std::string report_path, problem_path;
  auto* compare = app.add_subcommand("compare", "Check a saved run against the bounds");
  compare->add_option("report", report_path, "report.json of a run")->required();
  compare->add_option("problem", problem_path, "Problem JSON")->required();

  auto* suite = app.add_subcommand("suite", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (*run) return cmd_run(config, out, seeds, iters, quiet);
    if (*compare) return cmd_compare(report_path, problem_path, out, quiet);
    if (*suite) return cmd_suite(out, quiet);
  } catch (const std::exception& e) {
    std::cerr << "vibench: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
