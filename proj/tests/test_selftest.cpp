#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgg/selftest.hpp"

using namespace bgg;

TEST_CASE("fresh run passes the fast criteria") {
  // the heavyweight criteria run in the dedicated acceptance binary; here we
  // exercise the plumbing on the two cheapest ones
  auto results = run_selftest({}, {1, 2});
  REQUIRE(results.size() == 2);
  for (const CriterionResult& r : results) CHECK(r.pass);
}

TEST_CASE("flipping the codifferential bracket sign fails the differential criteria") {
  SelftestOptions opts;
  opts.mutate_codifferential_sign = true;
  auto results = run_selftest(opts, {1, 2});
  REQUIRE(results.size() == 2);
  CHECK(!results[0].pass);  // squares no longer vanish on nonabelian nilradicals
  CHECK(!results[1].pass);  // and the Hodge partition breaks
}

TEST_CASE("forcing a wrong calibration constant fails the eigenvalue criterion") {
  SelftestOptions opts;
  opts.forced_kappa = Rational(2);
  auto results = run_selftest(opts, {8});
  REQUIRE(results.size() == 1);
  CHECK(!results[0].pass);
}

TEST_CASE("report rendering is deterministic") {
  auto results = run_selftest({}, {1});
  CHECK(selftest_report(results).dump(1) == selftest_report(results).dump(1));
}
