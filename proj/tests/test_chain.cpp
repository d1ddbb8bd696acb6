#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "homcalc/chain.hpp"
#include "homcalc/errors.hpp"
#include "homcalc/verifier.hpp"
#include "support/fixtures.hpp"

using namespace homcalc;
using homcalc::testing::load_fixture;

namespace {
const std::vector<const char*> kTwistedFixtures = {"dual_numbers_twist_2", "kxk_swap",
                                                   "dual_numbers_twist_neg"};
}

TEST_CASE("cyclic rotation has order n+1") {
  std::mt19937_64 rng(21);
  HomAlgebra alg = load_fixture("dual_numbers_twist_2");
  for (int n = 0; n <= 4; ++n) {
    Chain x = random_chain(alg, n, rng, 3);
    CHECK(cyclic_t_power(x, n + 1) == x);
    Chain y = x;
    for (int k = 0; k <= n; ++k) y = cyclic_t(y);
    CHECK(y == x);
  }
}

TEST_CASE("boundary squares to zero and matches the Hochschild boundary") {
  std::mt19937_64 rng(22);
  for (const char* name : kTwistedFixtures) {
    CAPTURE(name);
    HomAlgebra alg = load_fixture(name);
    for (int n = 1; n <= 4; ++n)
      for (int trial = 0; trial < 5; ++trial) {
        Chain x = random_chain(alg, n, rng, 3);
        CHECK(boundary_b(alg, x) == boundary_d_alpha(alg, x));
        if (n >= 2) CHECK(boundary_b(alg, boundary_b(alg, x)).is_zero());
      }
  }
}

TEST_CASE("module insertions satisfy the unit axiom") {
  std::mt19937_64 rng(23);
  HomAlgebra alg = load_fixture("kxk_swap");
  Cochain one = identity_cochain(alg);
  for (int n = 1; n <= 3; ++n) {
    Chain x = random_chain(alg, n, rng, 3);
    for (int i = 0; i <= n; ++i) CHECK(bullet_at(alg, one, i, x) == x);
  }
}

TEST_CASE("cap and lie agree with their explicit formulas") {
  std::mt19937_64 rng(24);
  for (const char* name : kTwistedFixtures) {
    CAPTURE(name);
    HomAlgebra alg = load_fixture(name);
    for (int trial = 0; trial < 10; ++trial) {
      int n = 1 + static_cast<int>(rng() % 3);
      int p = static_cast<int>(rng() % (n + 1));
      Cochain f = random_cochain(alg, p, rng, 3);
      Chain x = random_chain(alg, n, rng, 3);
      CHECK(cap(alg, f, x) == cap_explicit(alg, f, x));
      CHECK(lie(alg, f, x) == lie_explicit(alg, f, x));
    }
  }
}

TEST_CASE("cap by the multiplication is the boundary head term") {
  // i_pi equals the first two faces of b glued: sanity-check degree bookkeeping
  std::mt19937_64 rng(25);
  HomAlgebra alg = load_fixture("dual_numbers_twist_2");
  Chain x = random_chain(alg, 3, rng, 3);
  Cochain pi = multiplication_cochain(alg);
  Chain capped = cap(alg, pi, x);
  CHECK(capped.degree == 1);
}

TEST_CASE("connes operator needs a regular unital algebra") {
  HomAlgebra collapse = load_fixture("collapse_twist");
  Chain x = basis_chain(collapse, 1, 0);
  CHECK_THROWS_AS(connes_B(collapse, x), RegularityError);
}

TEST_CASE("normalized quotient separates degenerates") {
  HomAlgebra alg = load_fixture("dual_numbers_twist_2");
  for (int n = 1; n <= 3; ++n) {
    NormalizedQuotient q = normalized_quotient(alg, n);
    CHECK(q.degenerate_basis.size() + q.representatives.size() == q.ambient_dim);
    for (const Vector& d : q.degenerate_basis)
      CHECK(q.contains_degenerate(make_chain(alg, n, d.entries)));
    for (const Vector& r : q.representatives) {
      Chain rep = make_chain(alg, n, r.entries);
      CHECK(!q.contains_degenerate(rep));
      // class coordinates are consistent
      Vector cls = q.class_coords(rep);
      Chain rebuilt = zero_chain(alg, n);
      for (std::size_t k = 0; k < q.representatives.size(); ++k) {
        Chain t = make_chain(alg, n, q.representatives[k].entries);
        t *= cls[k];
        rebuilt += t;
      }
      Chain diff = rep - rebuilt;
      CHECK(q.contains_degenerate(diff));
    }
  }
}

TEST_CASE("homotopy operator vanishes above the chain degree") {
  std::mt19937_64 rng(26);
  HomAlgebra alg = load_fixture("dual_numbers_twist_2");
  Cochain f = random_cochain(alg, 3, rng, 3);
  Chain x = random_chain(alg, 2, rng, 3);
  CHECK(homotopy_S(alg, f, x).is_zero());
}
