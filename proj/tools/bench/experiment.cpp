#include "experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace umprox::bench {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kCertificateTol = 1e-8;
constexpr double kRelativeTol = 1e-9;

const char* const kConfigKeys[] = {"problem",    "solver",      "iterations", "seeds",
                                   "sigma",      "log_cadence", "output_dir", "L0_override",
                                   "D_override", "step"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double positive_number(const json& j, const char* key) {
  if (!j.is_number()) throw ConfigError(std::string(key) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v) || v <= 0.0) throw ConfigError(std::string(key) + " must be positive");
  return v;
}

SolverKind parse_solver(const json& j) {
  if (!j.is_string()) throw ConfigError("solver must be a string");
  const auto s = j.get<std::string>();
  if (s == "ump") return SolverKind::ump;
  if (s == "ump_stochastic") return SolverKind::ump_stochastic;
  if (s == "extragradient_fixed") return SolverKind::extragradient_fixed;
  throw ConfigError("unknown solver '" + s + "'");
}

LogCadence parse_cadence(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "every_iteration") return LogCadence::every_iteration();
    throw ConfigError("log_cadence must be \"every_iteration\" or an object");
  }
  if (!j.is_object()) throw ConfigError("log_cadence must be \"every_iteration\" or an object");
  LogCadence c;
  for (const auto& [key, value] : j.items()) {
    if (key == "full_until") {
      if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
        throw ConfigError("log_cadence.full_until must be a non-negative integer");
      }
      c.full_until = value.get<std::int64_t>();
    } else if (key == "ratio") {
      c.ratio = positive_number(value, "log_cadence.ratio");
      if (c.ratio <= 1.0) throw ConfigError("log_cadence.ratio must exceed 1");
    } else if (key == "extra") {
      if (!value.is_array()) throw ConfigError("log_cadence.extra must be an array");
      for (const auto& e : value) {
        if (!e.is_number_integer() || e.get<std::int64_t>() < 1) {
          throw ConfigError("log_cadence.extra entries must be positive integers");
        }
        c.extra.push_back(e.get<std::int64_t>());
      }
    } else {
      throw ConfigError("unknown log_cadence key '" + key + "'");
    }
  }
  return c;
}

json cadence_to_json(const LogCadence& c) {
  return {{"full_until", c.full_until}, {"ratio", c.ratio}, {"extra", c.extra}};
}

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }
json opt_json(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

std::optional<bool> conjunction(std::optional<bool> acc, std::optional<bool> v) {
  if (!v) return acc;
  return acc.value_or(true) && *v;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

VIProblem build_problem(const json& spec) {
  try {
    return problem_from_json(spec);
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("problem: ") + e.what());
  } catch (const UnsupportedInstance& e) {
    throw ConfigError(std::string("problem: ") + e.what());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("problem: ") + e.what());
  }
}

}  // namespace

std::string_view to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::ump: return "ump";
    case SolverKind::ump_stochastic: return "ump_stochastic";
    case SolverKind::extragradient_fixed: return "extragradient_fixed";
  }
  return "unknown";
}

ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : kConfigKeys) known = known || key == k;
    if (!known) throw ConfigError("unknown config key '" + key + "'");
  }
  if (!j.contains("problem")) throw ConfigError("config needs a problem");

  ExperimentConfig c;
  c.problem_spec = j.at("problem");
  if (!c.problem_spec.is_object()) throw ConfigError("problem must be an object");
  const VIProblem problem = build_problem(c.problem_spec);

  if (j.contains("solver")) c.solver = parse_solver(j.at("solver"));
  if (j.contains("iterations")) {
    const auto& it = j.at("iterations");
    if (!it.is_number_integer() || it.get<std::int64_t>() < 1) {
      throw ConfigError("iterations must be a positive integer");
    }
    c.iterations = it.get<std::int64_t>();
  }
  if (j.contains("seeds")) {
    const auto& s = j.at("seeds");
    if (!s.is_array() || s.empty()) throw ConfigError("seeds must be a non-empty array");
    for (const auto& e : s) {
      if (!e.is_number_integer() || (!e.is_number_unsigned() && e.get<std::int64_t>() < 0)) {
        throw ConfigError("seeds must be non-negative integers");
      }
      c.seeds.push_back(e.get<std::uint64_t>());
    }
  }
  if (c.seeds.empty()) c.seeds.push_back(1);
  if (j.contains("sigma")) {
    const auto& s = j.at("sigma");
    if (!s.is_number() || !std::isfinite(s.get<double>()) || s.get<double>() < 0.0) {
      throw ConfigError("sigma must be a non-negative number");
    }
    c.sigma = s.get<double>();
  }
  if (c.sigma > 0.0 && c.solver != SolverKind::ump_stochastic) {
    throw ConfigError("sigma > 0 requires solver ump_stochastic");
  }
  if (j.contains("log_cadence")) c.cadence = parse_cadence(j.at("log_cadence"));
  if (j.contains("output_dir")) {
    if (!j.at("output_dir").is_string()) throw ConfigError("output_dir must be a string");
    c.output_dir = j.at("output_dir").get<std::string>();
  }
  if (j.contains("L0_override")) c.L0_override = positive_number(j.at("L0_override"), "L0_override");
  if (j.contains("D_override")) {
    c.D_override = positive_number(j.at("D_override"), "D_override");
    if (*c.D_override < problem.diameter()) {
      throw ConfigError("D_override is smaller than the diameter " + fmt(problem.diameter()));
    }
  }
  if (j.contains("step")) {
    if (c.solver != SolverKind::extragradient_fixed) {
      throw ConfigError("step applies to extragradient_fixed only");
    }
    c.step = positive_number(j.at("step"), "step");
  }
  if (c.solver == SolverKind::extragradient_fixed && !c.step) {
    try {
      default_extragradient_step(problem);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(e.what()) + "; set step explicitly");
    }
  }
  return c;
}

json config_to_json(const ExperimentConfig& c) {
  json j = {{"problem", c.problem_spec},
            {"solver", std::string(to_string(c.solver))},
            {"iterations", c.iterations},
            {"seeds", c.seeds},
            {"sigma", c.sigma},
            {"log_cadence", cadence_to_json(c.cadence)},
            {"output_dir", c.output_dir.string()}};
  if (c.L0_override) j["L0_override"] = *c.L0_override;
  if (c.D_override) j["D_override"] = *c.D_override;
  if (c.step) j["step"] = *c.step;
  return j;
}

double default_extragradient_step(const VIProblem& problem) {
  if (!problem.known_nu || *problem.known_nu != 1.0 || !problem.known_L) {
    throw ConfigError("extragradient_fixed needs a declared Lipschitz constant");
  }
  if (*problem.known_L <= 0.0) throw ConfigError("declared Lipschitz constant is zero");
  return 1.0 / *problem.known_L;
}

RunReport extragradient_fixed(const VIProblem& problem, std::int64_t K, double step,
                              const RunOptions& options) {
  if (K < 1) throw InvalidArgument("extragradient_fixed: K must be positive");
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw InvalidArgument("extragradient_fixed: step must be positive");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const double D = resolve_diameter(problem.set, options.D_override);
  const double L = 1.0 / step;

  RunReport report;
  report.solver = "extragradient_fixed";
  report.label = problem.label;
  report.D = D;
  report.L0 = L;
  report.iterations = K;
  if (problem.known_L && step * *problem.known_L > 1.0 + kRelativeTol) {
    report.warnings.push_back("step exceeds 1/L; the certificate is not a bound");
  }

  Point z = options.z0_override ? project(problem.set, *options.z0_override)
                                : initial_point(problem.set);
  Point w_sum = Point::Zero(z.size());
  const auto schedule = options.cadence.schedule(K);
  auto next_log = schedule.begin();
  for (std::int64_t k = 0; k < K; ++k) {
    try {
      const Point w = prox_step(z, problem.op(z), L, problem.set);
      z = prox_step(z, problem.op(w), L, problem.set);
      w_sum += w;
    } catch (const EvaluationError& e) {
      throw e.at_iteration(k);
    }
    report.oracle_calls += 2;
    const std::int64_t done = k + 1;
    if (next_log != schedule.end() && done == *next_log) {
      ++next_log;
      TrajectoryRow row{done, L, D * D / (2.0 * step * static_cast<double>(done)),
                        std::nullopt, std::nullopt};
      if (options.gap_oracle) row.exact_gap = options.gap_oracle(w_sum / static_cast<double>(done));
      report.rows.push_back(row);
    }
  }
  report.w_hat = w_sum / static_cast<double>(K);
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

BoundTable compare_bounds(const RunReport& report, const VIProblem& problem, double sigma) {
  const bool declared = problem.known_nu && problem.known_L;
  const bool stochastic = report.solver == "ump_stochastic" && sigma > 0.0;
  const bool adaptive = report.solver != "extragradient_fixed";
  const double D = report.D;

  BoundTable table;
  for (const auto& src : report.rows) {
    BoundRow row{};
    row.k = src.k;
    row.L = src.L;
    row.certificate = src.certificate;
    row.exact_gap = src.exact_gap;
    if (stochastic && src.gap_stderr) row.gap_slack = 2.0 * *src.gap_stderr;
    const double slack = row.gap_slack.value_or(0.0);

    if (row.exact_gap && !stochastic) {
      row.certificate_ok = *row.exact_gap <= row.certificate + kCertificateTol;
    }
    if (declared && adaptive) {
      const double nu = *problem.known_nu;
      const double Lnu = *problem.known_L;
      const std::int64_t prev = row.k - 1;
      if (prev >= 1) {
        row.L_bound = stochastic ? lemma3_bound(prev, D, nu, Lnu, sigma, report.L0)
                                 : lemma2_bound(prev, D, nu, Lnu);
        if (prev >= kBoundProvisoIterations) {
          row.L_bound_ok = row.L <= *row.L_bound * (1.0 + kRelativeTol);
        }
      }
      row.theorem_bound = stochastic ? theorem2_bound(row.k, D, nu, Lnu, sigma, report.L0)
                                     : theorem1_bound(row.k, D, nu, Lnu);
      if (row.exact_gap && row.k >= kBoundProvisoIterations) {
        row.theorem_ok = *row.exact_gap <= *row.theorem_bound * (1.0 + kRelativeTol) + slack;
      }
    }
    row.verdict = conjunction(conjunction(row.certificate_ok, row.L_bound_ok), row.theorem_ok);

    table.certificate_dominates = conjunction(table.certificate_dominates, row.certificate_ok);
    table.L_bound_holds = conjunction(table.L_bound_holds, row.L_bound_ok);
    table.theorem_bound_holds = conjunction(table.theorem_bound_holds, row.theorem_ok);
    table.all_bounds_hold = conjunction(table.all_bounds_hold, row.verdict);
    table.rows.push_back(row);
  }
  return table;
}

json report_to_json(const RunReport& report, double sigma) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"k", r.k},
                    {"L", r.L},
                    {"certificate", r.certificate},
                    {"exact_gap", opt_json(r.exact_gap)},
                    {"gap_stderr", opt_json(r.gap_stderr)}});
  }
  return {{"solver", report.solver},
          {"label", report.label},
          {"D", report.D},
          {"L0", report.L0},
          {"sigma", sigma},
          {"iterations", report.iterations},
          {"oracle_calls", report.oracle_calls},
          {"w_hat", point_to_json(report.w_hat)},
          {"warnings", report.warnings},
          {"rows", rows}};
}

RunReport report_from_json(const json& j, double* sigma) {
  try {
    RunReport r;
    r.solver = j.at("solver").get<std::string>();
    r.label = j.value("label", std::string());
    r.D = j.at("D").get<double>();
    r.L0 = j.at("L0").get<double>();
    r.iterations = j.value("iterations", std::int64_t{0});
    r.oracle_calls = j.value("oracle_calls", std::int64_t{0});
    if (j.contains("w_hat")) r.w_hat = point_from_json(j.at("w_hat"));
    for (const auto& row : j.at("rows")) {
      TrajectoryRow t{row.at("k").get<std::int64_t>(), row.at("L").get<double>(),
                      row.at("certificate").get<double>(), std::nullopt, std::nullopt};
      if (row.contains("exact_gap") && !row.at("exact_gap").is_null()) {
        t.exact_gap = row.at("exact_gap").get<double>();
      }
      if (row.contains("gap_stderr") && !row.at("gap_stderr").is_null()) {
        t.gap_stderr = row.at("gap_stderr").get<double>();
      }
      r.rows.push_back(t);
    }
    if (sigma) *sigma = j.value("sigma", 0.0);
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("report: ") + e.what());
  }
}

std::string trajectory_csv(const BoundTable& table) {
  std::ostringstream out;
  out << "k,L_k,certificate,exact_gap,theorem_bound\n";
  for (const auto& r : table.rows) {
    out << r.k << ',' << fmt(r.L) << ',' << fmt(r.certificate) << ','
        << (r.exact_gap ? fmt(*r.exact_gap) : "") << ','
        << (r.theorem_bound ? fmt(*r.theorem_bound) : "") << '\n';
  }
  return out.str();
}

std::string bound_table_csv(const BoundTable& table) {
  auto num = [](const std::optional<double>& v) { return v ? fmt(*v) : std::string(); };
  auto verdict = [](const std::optional<bool>& v) {
    return v ? std::string(*v ? "pass" : "FAIL") : std::string("n/a");
  };
  std::ostringstream out;
  out << "k,L_k,L_bound,certificate,exact_gap,gap_slack,theorem_bound,verdict\n";
  for (const auto& r : table.rows) {
    out << r.k << ',' << fmt(r.L) << ',' << num(r.L_bound) << ',' << fmt(r.certificate) << ','
        << num(r.exact_gap) << ',' << num(r.gap_slack) << ',' << num(r.theorem_bound) << ','
        << verdict(r.verdict) << '\n';
  }
  return out.str();
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  const VIProblem problem = build_problem(config.problem_spec);
  ExperimentResult result;
  fs::create_directories(config.output_dir);
  auto emit = [&](const char* name, const std::string& content) {
    const fs::path path = config.output_dir / name;
    write_file(path, content);
    result.files.push_back(path);
  };
  emit("config.echo.json", config_to_json(config).dump(2) + "\n");

  RunOptions options;
  options.L0_override = config.L0_override;
  options.D_override = config.D_override;
  options.cadence = config.cadence;
  if (exact_gap(problem, initial_point(problem.set))) {
    options.gap_oracle = [&problem](const Point& w) -> std::optional<double> {
      return exact_gap(problem, w)->value;
    };
  }

  json summary = {{"solver", std::string(to_string(config.solver))},
                  {"label", problem.label},
                  {"iterations", config.iterations},
                  {"sigma", config.sigma}};
  RunReport report;
  json per_seed = json::array();
  try {
    switch (config.solver) {
      case SolverKind::ump:
        report = run(problem, config.iterations, options);
        break;
      case SolverKind::extragradient_fixed:
        report = extragradient_fixed(problem, config.iterations,
                                     config.step ? *config.step : default_extragradient_step(problem),
                                     options);
        break;
      case SolverKind::ump_stochastic: {
        const StochasticOracle oracle = add_gaussian_noise(problem, config.sigma);
        const auto reports =
            run_stochastic_seeds(problem, oracle, config.iterations, config.seeds, options);
        for (const auto& r : reports) {
          per_seed.push_back({{"seed", r.seed},
                              {"sample_count", r.sample_count},
                              {"L0", r.L0},
                              {"final_L", r.rows.back().L},
                              {"final_gap", opt_json(r.rows.back().exact_gap)}});
        }
        report = aggregate_reports(reports);
        break;
      }
    }
  } catch (const EvaluationError& e) {
    summary["status"] = "solver_error";
    summary["error"] = {{"message", e.what()},
                        {"iteration", e.iteration()},
                        {"point", point_to_json(e.point())}};
    emit("summary.json", summary.dump(2) + "\n");
    result.exit_code = kExitSolverError;
    result.message = e.what();
    return result;
  }

  result.table = compare_bounds(report, problem, config.sigma);
  emit("trajectory.csv", trajectory_csv(result.table));
  emit("report.json", report_to_json(report, config.sigma).dump(2) + "\n");

  const auto& last = result.table.rows.back();
  summary["status"] = "ok";
  if (config.solver == SolverKind::ump_stochastic) {
    summary["seeds"] = config.seeds;
    summary["per_seed"] = per_seed;
  }
  summary["D"] = report.D;
  summary["L0"] = report.L0;
  summary["oracle_calls"] = report.oracle_calls;
  summary["wall_time_s"] = report.wall_time_s;
  summary["w_hat"] = point_to_json(report.w_hat);
  summary["final"] = {{"k", last.k},
                      {"L", last.L},
                      {"certificate", last.certificate},
                      {"exact_gap", opt_json(last.exact_gap)},
                      {"theorem_bound", opt_json(last.theorem_bound)}};
  summary["declared"] = {{"nu", opt_json(problem.known_nu)}, {"L", opt_json(problem.known_L)}};
  summary["bounds"] = {{"certificate_dominates", opt_json(result.table.certificate_dominates)},
                       {"L_bound_holds", opt_json(result.table.L_bound_holds)},
                       {"theorem_bound_holds", opt_json(result.table.theorem_bound_holds)},
                       {"all_bounds_hold", opt_json(result.table.all_bounds_hold)}};
  summary["warnings"] = report.warnings;
  emit("summary.json", summary.dump(2) + "\n");
  result.message = "ok";
  return result;
}

ExperimentResult run_experiment_file(const fs::path& path,
                                     const std::optional<fs::path>& out_dir,
                                     const std::optional<std::vector<std::uint64_t>>& seeds,
                                     const std::optional<std::int64_t>& iterations) {
  ExperimentConfig config;
  try {
    json j = read_json_file(path);
    if (j.is_object() && j.contains("problem") && j.at("problem").is_string()) {
      const fs::path problem_path = path.parent_path() / j.at("problem").get<std::string>();
      j["problem"] = read_json_file(problem_path);
    }
    if (j.is_object()) {
      if (seeds) j["seeds"] = *seeds;
      if (iterations) j["iterations"] = *iterations;
      if (out_dir) j["output_dir"] = out_dir->string();
    }
    config = parse_config(j);
  } catch (const ConfigError& e) {
    ExperimentResult r;
    r.exit_code = kExitConfigError;
    r.message = e.what();
    return r;
  }
  return run_experiment(config);
}

}  // namespace umprox::bench
