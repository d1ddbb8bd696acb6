#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "homcalc/cochain.hpp"
#include "homcalc/verifier.hpp"
#include "support/fixtures.hpp"

using namespace homcalc;
using homcalc::testing::load_fixture;

namespace {
const std::vector<const char*> kTwistedFixtures = {"dual_numbers_twist_2", "kxk_swap",
                                                   "dual_numbers_twist_neg"};
}

TEST_CASE("cochain space bases are equivariant") {
  for (const char* name : kTwistedFixtures) {
    CAPTURE(name);
    HomAlgebra alg = load_fixture(name);
    for (int p = 0; p <= 3; ++p)
      for (const Cochain& b : cochain_space_basis(alg, p)) CHECK(is_equivariant(alg, b));
  }
}

TEST_CASE("operadic unit axioms") {
  std::mt19937_64 rng(11);
  for (const char* name : kTwistedFixtures) {
    CAPTURE(name);
    HomAlgebra alg = load_fixture(name);
    Cochain one = identity_cochain(alg);
    for (int p = 1; p <= 3; ++p) {
      Cochain f = random_cochain(alg, p, rng, 3);
      CHECK(comp(alg, one, 1, f) == f);
      for (int i = 1; i <= p; ++i) CHECK(comp(alg, f, i, one) == f);
    }
  }
}

TEST_CASE("composition law: all three relative positions") {
  std::mt19937_64 rng(12);
  for (const char* name : kTwistedFixtures) {
    CAPTURE(name);
    HomAlgebra alg = load_fixture(name);
    for (int trial = 0; trial < 10; ++trial) {
      Cochain f = random_cochain(alg, 2, rng, 2);
      Cochain g = random_cochain(alg, 2, rng, 2);
      Cochain h = random_cochain(alg, 1, rng, 2);
      // disjoint (j < i): (f o_2 g) o_1 h = (f o_1 h) o_{2+1-1} g
      CHECK(comp(alg, comp(alg, f, 2, g), 1, h) ==
            comp(alg, comp(alg, f, 1, h), 2, g));
      // nested (i <= j < i+q): insert h inside g
      CHECK(comp(alg, comp(alg, f, 1, g), 2, h) ==
            comp(alg, f, 1, comp(alg, g, 2, h)));
      // disjoint the other way (j >= i+q): (f o_1 g) o_3 h = (f o_2 h) o_1 g
      CHECK(comp(alg, comp(alg, f, 1, g), 3, h) ==
            comp(alg, comp(alg, f, 2, h), 1, g));
    }
  }
}

TEST_CASE("multiplication is an operadic multiplication") {
  for (const char* name : kTwistedFixtures) {
    CAPTURE(name);
    HomAlgebra alg = load_fixture(name);
    Cochain pi = multiplication_cochain(alg);
    CHECK(comp(alg, pi, 1, pi) == comp(alg, pi, 2, pi));
  }
}

TEST_CASE("coboundary sign bridge and delta squared") {
  std::mt19937_64 rng(13);
  for (const char* name : kTwistedFixtures) {
    CAPTURE(name);
    HomAlgebra alg = load_fixture(name);
    for (int p = 1; p <= 3; ++p)
      for (int trial = 0; trial < 5; ++trial) {
        Cochain f = random_cochain(alg, p, rng, 3);
        Cochain scaled = delta_alpha(alg, f);
        scaled *= Rational(delta_sign(p));
        CHECK(delta_pi(alg, f) == scaled);
        CHECK(delta_alpha(alg, delta_alpha(alg, f)).is_zero());
      }
  }
}

TEST_CASE("cup product matches its operadic definition") {
  std::mt19937_64 rng(14);
  HomAlgebra alg = load_fixture("dual_numbers_twist_2");
  Cochain pi = multiplication_cochain(alg);
  for (int trial = 0; trial < 10; ++trial) {
    Cochain f = random_cochain(alg, 1 + static_cast<int>(rng() % 2), rng, 3);
    Cochain g = random_cochain(alg, 1 + static_cast<int>(rng() % 2), rng, 3);
    CHECK(cup(alg, f, g) == comp(alg, comp(alg, pi, 2, f), 1, g));
  }
}

TEST_CASE("unit cochain and degree-0 composition need regularity") {
  HomAlgebra alg = load_fixture("dual_numbers_twist_2");
  Cochain e = unit_cochain(alg);
  CHECK(e.degree == 0);
  Cochain pi = multiplication_cochain(alg);
  // pi o_1 e = pi o_2 e = identity
  CHECK(comp(alg, pi, 1, e) == identity_cochain(alg));
  CHECK(comp(alg, pi, 2, e) == identity_cochain(alg));

  HomAlgebra collapse = load_fixture("collapse_twist");
  CHECK_THROWS(unit_cochain(collapse));
}

TEST_CASE("normalized cochains vanish on the unit") {
  HomAlgebra alg = load_fixture("dual_numbers_twist_2");
  const Vector& one = alg.unit();
  for (int p = 1; p <= 2; ++p)
    for (const Cochain& b : normalized_cochain_space_basis(alg, p)) {
      // put the unit in each argument slot, basis vectors elsewhere
      for (int slot = 0; slot < p; ++slot)
        for (int j = 0; j < alg.dim(); ++j) {
          std::vector<Vector> args(static_cast<std::size_t>(p), Vector::unit(2, 0));
          for (int s = 0; s < p; ++s)
            args[static_cast<std::size_t>(s)] = Vector::unit(2, static_cast<std::size_t>(j));
          args[static_cast<std::size_t>(slot)] = one;
          CHECK(b.eval(args).is_zero());
        }
    }
}
