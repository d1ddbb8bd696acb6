#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "homcalc/verifier.hpp"
#include "support/fixtures.hpp"

using namespace homcalc;
using homcalc::testing::load_fixture;

namespace {

Caps small_caps() {
  Caps caps;
  caps.trials = 20;
  return caps;
}

}  // namespace

TEST_CASE("all suites pass on the bundled valid fixtures") {
  for (const char* name : {"dual_numbers", "dual_numbers_twist_2", "dual_numbers_twist_half",
                           "dual_numbers_twist_neg", "ground_field", "kxk", "kxk_swap",
                           "local_xy", "collapse_twist"}) {
    CAPTURE(name);
    HomAlgebra alg = load_fixture(name);
    for (const std::string& suite : suite_names()) {
      CAPTURE(suite);
      SuiteResult sr = run_suite(suite, alg, small_caps(), 42);
      CHECK(sr.passed());
    }
  }
}

TEST_CASE("non-regular fixtures exercise the skip paths") {
  HomAlgebra alg = load_fixture("collapse_twist");
  SuiteResult sr = suite_calculus(alg, small_caps(), 42);
  CHECK(sr.passed());
  bool any_skip = false;
  for (const auto& id : sr.identities) any_skip |= (id.outcome == Outcome::Skipped);
  CHECK(any_skip);
}

TEST_CASE("the corrupted multiplication trips every suite with a witness") {
  HomAlgebra alg = load_fixture("mutant_nonassoc");
  for (const std::string& suite : suite_names()) {
    CAPTURE(suite);
    SuiteResult sr = run_suite(suite, alg, small_caps(), 42);
    CHECK(!sr.passed());
    bool witnessed = false;
    for (const auto& id : sr.identities)
      if (id.outcome == Outcome::Fail && !id.informational && !id.detail.empty())
        witnessed = true;
    CHECK(witnessed);
  }
}

TEST_CASE("a corrupted symmetric structure trips the bv suite") {
  AlgebraSpec spec = homcalc::testing::load_fixture_spec("mutant_bad_theta");
  REQUIRE(spec.theta.has_value());
  HomAlgebra alg = to_algebra(spec);
  SymmetricStructure theta{*spec.theta};
  SuiteResult sr = suite_bv(alg, small_caps(), 42, &theta);
  CHECK(!sr.passed());
  const IdentityResult* id = sr.find("theta-intertwines");
  REQUIRE(id != nullptr);
  CHECK(id->outcome == Outcome::Fail);
  CHECK(!id->detail.empty());
}

TEST_CASE("suite results are deterministic for a fixed seed") {
  HomAlgebra alg = load_fixture("dual_numbers_twist_2");
  SuiteResult a = suite_calculus(alg, small_caps(), 7);
  SuiteResult b = suite_calculus(alg, small_caps(), 7);
  REQUIRE(a.identities.size() == b.identities.size());
  for (std::size_t i = 0; i < a.identities.size(); ++i) {
    CHECK(a.identities[i].name == b.identities[i].name);
    CHECK(a.identities[i].outcome == b.identities[i].outcome);
    CHECK(a.identities[i].detail == b.identities[i].detail);
  }
}

TEST_CASE("coverage map matches the emitted identities") {
  std::map<std::string, std::set<std::string>> advertised;
  for (const auto& [suite, identity] : coverage_map()) advertised[suite].insert(identity);
  CHECK(advertised.size() == suite_names().size());

  HomAlgebra alg = load_fixture("dual_numbers");
  Caps caps = small_caps();
  caps.trials = 2;
  for (const std::string& suite : suite_names()) {
    CAPTURE(suite);
    SuiteResult sr = run_suite(suite, alg, caps, 1);
    std::set<std::string> emitted;
    for (const auto& id : sr.identities) emitted.insert(id.name);
    CHECK(emitted == advertised[suite]);
  }
}

TEST_CASE("unknown suite names are rejected") {
  HomAlgebra alg = load_fixture("ground_field");
  CHECK_THROWS_AS(run_suite("nope", alg, small_caps(), 0), std::invalid_argument);
}
