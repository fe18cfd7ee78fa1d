#include <filesystem>
#include <iostream>

#include "bench/acceptance.hpp"

int main(int argc, char** argv) {
  umprox::bench::SuiteOptions options;
  if (argc > 1) options.scratch_dir = argv[1];
  options.on_result = [](const umprox::bench::CriterionResult& r) {
    std::cout << umprox::bench::format_result(r) << std::endl;
  };
  const auto results = umprox::bench::run_acceptance_suite(options);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << results.size() - failed << " of " << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
