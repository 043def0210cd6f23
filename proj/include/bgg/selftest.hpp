#ifndef BGG_SELFTEST_HPP
#define BGG_SELFTEST_HPP

#include <optional>
#include <string>
#include <vector>

#include "bgg/json_io.hpp"

namespace bgg {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  long long millis = 0;  ///< wall time; never part of the canonical report
};

/// Fault-injection knobs used by the mutation tests: flipping the bracket
/// sign of the codifferential must fail the differential and Hodge criteria;
/// forcing a wrong calibration constant must fail the eigenvalue criterion.
struct SelftestOptions {
  bool mutate_codifferential_sign = false;
  std::optional<Rational> forced_kappa;
};

/// Runs the acceptance criteria (all of them, or a subset of ids).
std::vector<CriterionResult> run_selftest(const SelftestOptions& opts = {},
                                          const std::vector<int>& only_ids = {});

/// Canonical, timing-free report.  Byte-identical across runs.
Json selftest_report(const std::vector<CriterionResult>& results);

}  // namespace bgg

#endif
