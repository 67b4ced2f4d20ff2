#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace solvmcf {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // 0: no runtime gate
  std::string detail;
};

/// Runs the full reproduction suite (the `reproduce-paper` command and the
/// acceptance test binary share this). Deterministic per seed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0, std::ostream* log = nullptr);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace solvmcf
