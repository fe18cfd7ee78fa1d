#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "umprox/umprox.hpp"

namespace umprox::bench {

/// Solution location of the Hölder problems in the suite. A center at the
/// origin coincides with the starting point.
inline constexpr double kSuiteHolderCenter = 0.3;

VIProblem suite_game_2x2();
/// Three 3x3 games with entries uniform in [-1, 1].
std::vector<VIProblem> suite_random_games();
/// Monotone affine field on the unit ball of R^5.
VIProblem suite_affine_ball();
/// Rotation by one radian about (0.4, -0.3), as a fixed-point problem on [-1, 1]^2.
VIProblem suite_rotation();
/// Problems declaring nu = 1: the games, the nu = 1 Hölder problem, the
/// affine field, and the rotation.
std::vector<VIProblem> lipschitz_suite();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::filesystem::path scratch_dir = std::filesystem::temp_directory_path() / "umprox-acceptance";
  std::function<void(const CriterionResult&)> on_result;
};

std::string format_result(const CriterionResult& r);

/// Runs every acceptance criterion in order.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options = {});

}  // namespace umprox::bench
