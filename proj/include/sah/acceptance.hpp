#pragma once

// The ten-item acceptance battery shared by `sah suite` and the acceptance
// test. Instance k of criterion c draws from RatRng(mix_seed(seed, 1000 c + k)).

#include <cstdint>
#include <string>
#include <vector>

namespace sah {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool checks_ok = false;
  std::string detail;        // deterministic summary of what was checked
  double seconds = 0;
  double limit_seconds = 0;  // 0 when there is no runtime bound
  bool pass() const { return checks_ok && (limit_seconds == 0 || seconds < limit_seconds); }
};

inline constexpr int kCriteria = 10;

struct StepCheckSummary {
  std::size_t instances = 0;
  std::size_t equivariance = 0, operad = 0, products = 0;  // passes
  std::size_t defined = 0;  // instances where the cut map missed the basepoint
  bool pass() const { return equivariance == instances && operad == instances && products == instances; }
};

// Seeded theta equivariance, operad compatibility and product/coproduct
// checks with arities <= 3 and dimensions <= max_dim.
StepCheckSummary step_checks(std::uint64_t seed, std::size_t instances, std::size_t max_dim);

CriterionResult run_criterion(int id, std::uint64_t seed = 0);
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, std::uint64_t seed = 0);

}  // namespace sah
