#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "experiment.hpp"
#include "oracles.hpp"

namespace umprox::bench {

namespace fs = std::filesystem;

namespace {

constexpr double kRelTol = 1e-9;
constexpr double kCertificateTol = 1e-8;
constexpr std::int64_t kLipschitzIterations = 10'000;
constexpr std::int64_t kHolderIterations = 100'000;
constexpr std::int64_t kStochasticIterations = 10'001;
constexpr int kStochasticSeeds = 20;
constexpr int kOracleInstances = 1000;
constexpr double kOracleGridTol = 1e-4;
constexpr double kOracleExactTol = 1e-12;
constexpr int kGapGridResolution = 10'001;
constexpr double kRateRatio = 0.3;
constexpr double kSlopeFactor = 3.0;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok) { passed = passed && ok; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RunOptions with_exact_gap(const VIProblem& problem, RunOptions options = {}) {
  options.gap_oracle = [&problem](const Point& w) -> std::optional<double> {
    return exact_gap(problem, w)->value;
  };
  return options;
}

std::vector<VIProblem> all_games() {
  std::vector<VIProblem> games{suite_game_2x2()};
  for (auto& g : suite_random_games()) games.push_back(std::move(g));
  return games;
}

// Largest L_k / L_1 over k >= 1, reported through the step observer.
double max_l_ratio(const VIProblem& problem, std::int64_t K) {
  double worst = 0.0;
  RunOptions options;
  options.on_step = [&](const StepDetails& s) { worst = std::max(worst, s.next.L); };
  run(problem, K, options);
  return worst / *problem.known_L;
}

void criterion_l_update(Outcome& out) {
  constexpr int kTuples = 100'000;
  RandomStream rng(2024, 11);
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < kTuples; ++i) {
    const double L = std::pow(10.0, rng.uniform(-3.0, 3.0));
    const double inner = rng.uniform(-10.0, 10.0);
    const double dz_sq = i % 10 == 0 ? 0.0 : rng.uniform(0.0, 4.0);
    const double D = std::pow(10.0, rng.uniform(-1.0, 1.0));
    const double L_next = l_update(L, inner, dz_sq, D);
    const double res = std::abs(l_update_residual(L, L_next, inner, dz_sq, D));
    worst = std::max(worst, res / std::max(1.0, L_next * D * D));
    out.require(L_next >= L);
  }
  const double elapsed = seconds_since(t0);
  out.require(worst <= 1e-10);
  out.require(elapsed < 1.0);
  out.detail << kTuples << " tuples, max scaled residual " << num(worst) << ", " << num(elapsed)
             << " s";
}

void criterion_certificate(Outcome& out) {
  int violations = 0;
  double worst_time = 0.0;
  double worst_margin = -1e300;
  for (const auto& game : all_games()) {
    const auto t0 = std::chrono::steady_clock::now();
    const RunReport report = run(game, kLipschitzIterations, with_exact_gap(game));
    worst_time = std::max(worst_time, seconds_since(t0));
    for (const auto& row : report.rows) {
      const double margin = *row.exact_gap - row.certificate;
      worst_margin = std::max(worst_margin, margin);
      if (margin > kCertificateTol) ++violations;
    }
  }
  out.require(violations == 0);
  out.require(worst_time < 10.0);
  out.detail << violations << " violations over 4 games, max gap - certificate "
             << num(worst_margin) << ", slowest run " << num(worst_time) << " s";
}

void criterion_lipschitz_l(Outcome& out) {
  std::string worst_label;
  double worst = 0.0;
  std::ostringstream failing;
  for (const auto& problem : lipschitz_suite()) {
    const double ratio = max_l_ratio(problem, kLipschitzIterations);
    if (ratio > 1.0 + kRelTol) failing << ' ' << problem.label << '=' << num(ratio);
    if (ratio > worst) {
      worst = ratio;
      worst_label = problem.label;
    }
  }
  out.require(worst <= 1.0 + kRelTol);
  out.detail << "max L_k/L1 " << num(worst) << " (" << worst_label << ")";
  if (!failing.str().empty()) out.detail << "; exceeded by" << failing.str();
}

void criterion_lemma_nu0(Outcome& out) {
  const VIProblem problem = make_holder_1d(0.0, kSuiteHolderCenter);
  const double D = problem.diameter();
  double worst = 0.0;
  RunOptions options;
  options.on_step = [&](const StepDetails& s) {
    const std::int64_t k = s.next.k - 1;
    if (k < kBoundProvisoIterations) return;
    worst = std::max(worst, s.next.L / lemma2_bound(k, D, 0.0, *problem.known_L));
  };
  const auto t0 = std::chrono::steady_clock::now();
  run(problem, kHolderIterations, options);
  const double elapsed = seconds_since(t0);
  out.require(worst <= 1.0 + kRelTol);
  out.require(elapsed < 5.0);
  out.detail << "K=" << kHolderIterations << ", max L_{k+1}/bound(k) " << num(worst) << ", "
             << num(elapsed) << " s";
}

// Averages w_hat_k at the given checkpoints.
std::vector<Point> averages_at(const VIProblem& problem, const std::vector<std::int64_t>& ks) {
  std::vector<Point> out;
  RunOptions options;
  options.on_step = [&](const StepDetails& s) {
    if (std::find(ks.begin(), ks.end(), s.next.k) != ks.end()) out.push_back(s.next.w_hat());
  };
  run(problem, ks.back(), options);
  return out;
}

void criterion_theorem1(Outcome& out) {
  const std::vector<std::int64_t> ks{100, 1000, 10000};
  double worst = 0.0;
  std::string worst_label;
  auto check = [&](const VIProblem& problem, bool grid) {
    const auto w = averages_at(problem, ks);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const double bound =
          theorem1_bound(ks[i], problem.diameter(), *problem.known_nu, *problem.known_L);
      std::vector<double> gaps;
      if (const auto g = exact_gap(problem, w[i])) gaps.push_back(g->value);
      if (grid) {
        gaps.push_back(gap_bruteforce(problem.op, problem.set, w[i], kGapGridResolution).value);
      }
      for (double g : gaps) {
        const double ratio = g / bound;
        if (ratio > worst) {
          worst = ratio;
          worst_label = problem.label + " k=" + std::to_string(ks[i]);
        }
        out.require(g <= bound * (1.0 + kRelTol));
      }
    }
  };
  check(make_holder_1d(0.0, kSuiteHolderCenter), false);
  check(make_holder_1d(0.5, kSuiteHolderCenter), true);
  check(make_holder_1d(1.0, kSuiteHolderCenter), false);
  for (const auto& game : all_games()) check(game, false);
  out.detail << "7 problems x 3 checkpoints, max gap/bound " << num(worst);
  if (!worst_label.empty()) out.detail << " (" << worst_label << ")";
}

double loglog_slope(const std::vector<TrajectoryRow>& rows, std::int64_t k_lo, std::int64_t k_hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
  for (const auto& r : rows) {
    if (r.k < k_lo || r.k > k_hi) continue;
    const double x = std::log(static_cast<double>(r.k));
    const double y = std::log(r.certificate);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    n += 1;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void criterion_rates(Outcome& out) {
  RunOptions options;
  options.cadence.extra = {1000, 10000};
  double worst_ratio = 0.0;
  for (const auto& game : all_games()) {
    const RunReport report = run(game, kLipschitzIterations, with_exact_gap(game, options));
    auto gap_at = [&](std::int64_t k) {
      return *std::find_if(report.rows.begin(), report.rows.end(),
                           [&](const TrajectoryRow& r) { return r.k == k; })
                  ->exact_gap;
    };
    const double g3 = gap_at(1000);
    const double g4 = gap_at(10000);
    out.require(g4 <= kRateRatio * g3);
    if (g3 > 0.0) worst_ratio = std::max(worst_ratio, g4 / g3);
  }

  const RunReport holder = run(make_holder_1d(0.0, kSuiteHolderCenter), kHolderIterations);
  const double slope = loglog_slope(holder.rows, 100, kHolderIterations);
  const double spread = std::exp(std::abs(slope + 0.5) * std::log(1000.0));
  out.require(spread <= kSlopeFactor);
  out.detail << "games: max gap(1e4)/gap(1e3) " << num(worst_ratio) << "; nu=0 certificate slope "
             << num(slope) << " (deviation factor " << num(spread) << " over 3 decades)";
}

void criterion_zero_noise(Outcome& out) {
  constexpr std::int64_t K = 1000;
  std::vector<VIProblem> problems = lipschitz_suite();
  problems.push_back(make_holder_1d(0.0, kSuiteHolderCenter));
  problems.push_back(make_holder_1d(0.5, kSuiteHolderCenter));
  int mismatches = 0;
  for (const auto& problem : problems) {
    std::vector<SolverState> det, sto;
    RunOptions a;
    a.on_step = [&](const StepDetails& s) { det.push_back(s.next); };
    RunOptions b;
    b.on_step = [&](const StepDetails& s) { sto.push_back(s.next); };
    const RunReport r1 = run(problem, K, a);
    const StochasticRunReport r2 = run_stochastic(problem, add_gaussian_noise(problem, 0.0), K, 7, b);
    bool same = r1.L0 == r2.L0 && det.size() == sto.size() && r1.w_hat == r2.w_hat;
    for (std::size_t i = 0; same && i < det.size(); ++i) {
      same = det[i].z == sto[i].z && det[i].L == sto[i].L && det[i].w_sum == sto[i].w_sum;
    }
    if (!same) ++mismatches;
  }
  out.require(mismatches == 0);
  out.detail << problems.size() << " problems x " << K << " iterations, " << mismatches
             << " bitwise mismatches";
}

struct StochasticRun {
  double sigma;
  RunReport aggregate;
};

std::vector<StochasticRun> stochastic_runs() {
  static const std::vector<StochasticRun> cache = [] {
    const VIProblem game = suite_game_2x2();
    std::vector<std::uint64_t> seeds(kStochasticSeeds);
    for (int i = 0; i < kStochasticSeeds; ++i) seeds[i] = 1000 + i;
    RunOptions options = with_exact_gap(game);
    options.cadence.extra = {100, 101, 1000, 1001, 10000, 10001};
    std::vector<StochasticRun> runs;
    for (double sigma : {0.01, 0.1, 1.0}) {
      const auto reports = run_stochastic_seeds(game, add_gaussian_noise(game, sigma),
                                                kStochasticIterations, seeds, options);
      runs.push_back({sigma, aggregate_reports(reports)});
    }
    return runs;
  }();
  return cache;
}

const TrajectoryRow& row_at(const RunReport& report, std::int64_t k) {
  return *std::find_if(report.rows.begin(), report.rows.end(),
                       [&](const TrajectoryRow& r) { return r.k == k; });
}

void criterion_stochastic_l(Outcome& out) {
  const VIProblem game = suite_game_2x2();
  double worst = 0.0;
  for (const auto& run : stochastic_runs()) {
    for (std::int64_t k : {100, 1000, 10000}) {
      const double bound = lemma3_bound(k, run.aggregate.D, 1.0, *game.known_L, run.sigma,
                                        run.aggregate.L0);
      const double ratio = row_at(run.aggregate, k + 1).L / bound;
      worst = std::max(worst, ratio);
      out.require(ratio <= 1.0 + kRelTol);
    }
  }
  out.detail << kStochasticSeeds << " seeds, sigma in {0.01, 0.1, 1}, max mean L_{k+1}/bound(k) "
             << num(worst);
}

void criterion_stochastic_gap(Outcome& out) {
  const VIProblem game = suite_game_2x2();
  double worst = 0.0;
  for (const auto& run : stochastic_runs()) {
    for (std::int64_t k : {100, 1000, 10000}) {
      const auto& row = row_at(run.aggregate, k);
      const double bound = theorem2_bound(k, run.aggregate.D, 1.0, *game.known_L, run.sigma,
                                          run.aggregate.L0);
      const double upper = *row.exact_gap + 2.0 * *row.gap_stderr;
      worst = std::max(worst, upper / bound);
      out.require(upper <= bound * (1.0 + kRelTol));
    }
  }
  out.detail << kStochasticSeeds << " seeds, max (mean gap + 2 stderr)/bound " << num(worst);
}

void criterion_oracles(Outcome& out) {
  RandomStream rng(77, 3);
  double proj_err = 0.0;
  for (int i = 0; i < kOracleInstances; ++i) {
    const Index n = 2 + i % 2;
    Point y(n);
    for (Index j = 0; j < n; ++j) y[j] = rng.uniform(-1.0, 2.0);
    const Point ref = oracle::simplex_projection(y, 1e-6);
    proj_err = std::max(proj_err, (project(FeasibleSet::simplex(n), y) - ref).lpNorm<Eigen::Infinity>());
  }

  double gap_err = 0.0;
  for (int i = 0; i < kOracleInstances; ++i) {
    Matrix A(3, 3);
    for (Index r = 0; r < 3; ++r) {
      for (Index c = 0; c < 3; ++c) A(r, c) = rng.uniform(-1.0, 1.0);
    }
    const Point u = sample_point(FeasibleSet::simplex(3), rng);
    const Point v = sample_point(FeasibleSet::simplex(3), rng);
    gap_err = std::max(gap_err,
                       std::abs(gap_matrix_game(A, u, v).value - oracle::game_gap_by_vertices(A, u, v)));
  }

  double prox_err = 0.0;
  for (int i = 0; i < kOracleInstances; ++i) {
    FeasibleSet set = FeasibleSet::simplex(2);
    switch (i % 4) {
      case 0: {
        const double a = rng.uniform(-2.0, 0.0), b = rng.uniform(-2.0, 0.0);
        set = FeasibleSet::box(Point{{a, b}}, Point{{a + rng.uniform(0.5, 2.0), b + rng.uniform(0.5, 2.0)}});
        break;
      }
      case 1:
        set = FeasibleSet::ball(Point{{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}},
                                rng.uniform(0.5, 2.0));
        break;
      case 2: set = FeasibleSet::simplex(2); break;
      default: set = FeasibleSet::simplex(3); break;
    }
    const Point z = sample_point(set, rng);
    Point g(set.dimension());
    for (Index j = 0; j < g.size(); ++j) g[j] = rng.uniform(-2.0, 2.0);
    const double L = rng.uniform(0.5, 5.0);
    const Point ref = oracle::prox_minimizer(set, z, g, L, 1e-6);
    prox_err = std::max(prox_err, (prox_step(z, g, L, set) - ref).lpNorm<Eigen::Infinity>());
  }

  out.require(proj_err <= kOracleGridTol);
  out.require(gap_err <= kOracleExactTol);
  out.require(prox_err <= kOracleGridTol);
  out.detail << kOracleInstances << " instances each: projection err " << num(proj_err)
             << ", game gap err " << num(gap_err) << ", prox err " << num(prox_err);
}

std::string read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void criterion_reproducible(Outcome& out, const fs::path& scratch) {
  const nlohmann::json game2 = problem_to_json(suite_game_2x2());
  const nlohmann::json game3 = problem_to_json(suite_random_games().front());
  const std::vector<nlohmann::json> configs{
      {{"problem", game2}, {"solver", "ump"}, {"iterations", 2000}},
      {{"problem", game3},
       {"solver", "ump_stochastic"},
       {"iterations", 2000},
       {"sigma", 0.1},
       {"seeds", {1, 2, 3}}},
      {{"problem", problem_to_json(make_holder_1d(0.5, kSuiteHolderCenter))},
       {"solver", "ump"},
       {"iterations", 2000}}};
  int identical = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    std::string csv[2];
    for (int rep = 0; rep < 2; ++rep) {
      nlohmann::json j = configs[i];
      j["output_dir"] = (scratch / ("repro_" + std::to_string(i) + "_" + std::to_string(rep))).string();
      const ExperimentResult r = run_experiment(parse_config(j));
      out.require(r.exit_code == kExitOk);
      csv[rep] = read_bytes(fs::path(j["output_dir"].get<std::string>()) / "trajectory.csv");
    }
    if (!csv[0].empty() && csv[0] == csv[1]) ++identical;
  }
  out.require(identical == static_cast<int>(configs.size()));
  out.detail << identical << "/" << configs.size() << " configurations byte-identical";
}

}  // namespace

VIProblem suite_game_2x2() {
  Matrix A(2, 2);
  A << 0.0, 1.0, -1.0, 0.0;
  return make_matrix_game(A, "game_2x2");
}

std::vector<VIProblem> suite_random_games() {
  RandomStream rng(42, 0);
  std::vector<VIProblem> games;
  for (int g = 0; g < 3; ++g) {
    Matrix A(3, 3);
    for (Index r = 0; r < 3; ++r) {
      for (Index c = 0; c < 3; ++c) A(r, c) = rng.uniform(-1.0, 1.0);
    }
    games.push_back(make_matrix_game(A, "game_3x3_" + std::to_string(g)));
  }
  return games;
}

VIProblem suite_affine_ball() {
  RandomStream rng(5, 0);
  Matrix B(5, 5), C(5, 5);
  for (Index r = 0; r < 5; ++r) {
    for (Index c = 0; c < 5; ++c) {
      B(r, c) = rng.normal();
      C(r, c) = rng.normal();
    }
  }
  const Matrix M = B * B.transpose() / 5.0 + (C - C.transpose()) / 2.0;
  const Point b = rng.normal_vector(5);
  return make_affine_monotone(M, b, FeasibleSet::ball(Point::Zero(5), 1.0), "affine_ball_5");
}

VIProblem suite_rotation() {
  const double c = std::cos(1.0), s = std::sin(1.0);
  Matrix T(2, 2);
  T << c, -s, s, c;
  const Point center{{0.4, -0.3}};
  const Point t = center - T * center;
  return make_linear_fixed_point(T, t, FeasibleSet::cube(2, -1.0, 1.0), "rotation");
}

std::vector<VIProblem> lipschitz_suite() {
  std::vector<VIProblem> out = all_games();
  out.push_back(make_holder_1d(1.0, kSuiteHolderCenter));
  out.push_back(suite_affine_ball());
  out.push_back(suite_rotation());
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "[%s] %02d %s: ", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str());
  return head + r.detail + " [" + num(r.seconds) + " s]";
}

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options) {
  fs::create_directories(options.scratch_dir);
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"step-size update solves its defining equation", criterion_l_update},
      {"certificate dominates the exact gap", criterion_certificate},
      {"L_k stays below L1 on Lipschitz problems", criterion_lipschitz_l},
      {"L_k below the step-size bound for nu = 0", criterion_lemma_nu0},
      {"gap below the deterministic rate bound", criterion_theorem1},
      {"observed rates", criterion_rates},
      {"zero noise reproduces the deterministic run", criterion_zero_noise},
      {"mean L_k below the stochastic step-size bound", criterion_stochastic_l},
      {"mean gap below the stochastic rate bound", criterion_stochastic_gap},
      {"library matches brute-force oracles", criterion_oracles},
      {"trajectories are reproducible",
       [&](Outcome& o) { criterion_reproducible(o, options.scratch_dir); }},
  };

  std::vector<CriterionResult> results;
  int id = 0;
  for (const auto& [name, body] : criteria) {
    CriterionResult r;
    r.id = ++id;
    r.name = name;
    Outcome outcome;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(outcome);
      r.passed = outcome.passed;
      r.detail = outcome.detail.str();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = outcome.detail.str() + " error: " + e.what();
    }
    r.seconds = seconds_since(t0);
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace umprox::bench
