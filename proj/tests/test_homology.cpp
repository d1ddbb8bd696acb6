#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "homcalc/errors.hpp"
#include "homcalc/homology.hpp"
#include "homcalc/verifier.hpp"
#include "support/classical_oracle.hpp"
#include "support/fixtures.hpp"

using namespace homcalc;
using homcalc::testing::load_fixture;

namespace {

void check_cohomology_dims(const char* name, Coeffs coeffs,
                           const std::vector<std::size_t>& expected) {
  CAPTURE(name);
  HomAlgebra alg = load_fixture(name);
  CochainComplex cc(alg, 3, coeffs);
  REQUIRE(cc.min_degree() == 0);
  for (int p = 0; p <= 3; ++p) {
    CAPTURE(p);
    CHECK(cc.cohomology(p).dim() == expected[static_cast<std::size_t>(p)]);
  }
}

void check_homology_dims(const char* name, const std::vector<std::size_t>& expected) {
  CAPTURE(name);
  HomAlgebra alg = load_fixture(name);
  ChainComplex mc(alg, 4);
  ChainComplex nm(alg, 4, true);
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(mc.homology(n).dim() == expected[static_cast<std::size_t>(n)]);
    // normalization does not change homology
    CHECK(nm.homology(n).dim() == expected[static_cast<std::size_t>(n)]);
  }
}

}  // namespace

TEST_CASE("frozen dimension regressions") {
  check_cohomology_dims("dual_numbers", Coeffs::Algebra, {2, 1, 1, 1});
  check_cohomology_dims("dual_numbers", Coeffs::Dual, {2, 1, 1, 1});
  check_cohomology_dims("dual_numbers_twist_2", Coeffs::Algebra, {1, 1, 0, 0});
  check_cohomology_dims("dual_numbers_twist_2", Coeffs::Dual, {1, 0, 0, 0});
  check_cohomology_dims("kxk_swap", Coeffs::Algebra, {1, 0, 0, 0});
  check_cohomology_dims("kxk_swap", Coeffs::Dual, {1, 0, 0, 0});

  check_homology_dims("dual_numbers", {2, 1, 1, 1, 1});
  check_homology_dims("dual_numbers_twist_2", {2, 1, 1, 1, 1});
  check_homology_dims("kxk_swap", {2, 0, 0, 0, 0});
}

TEST_CASE("classical limit agrees with the independent oracle") {
  for (const char* name : {"dual_numbers", "kxk", "local_xy"}) {
    CAPTURE(name);
    HomAlgebra alg = load_fixture(name);
    const int dim = alg.dim();
    // entrywise on every elementary (not merely equivariant) cochain/chain
    for (int p = 0; p <= 2; ++p) {
      for (std::size_t t = 0; t < pow_size(dim, p); ++t)
        for (int k = 0; k < dim; ++k) {
          Cochain f = zero_cochain(alg, p);
          f.entry(t, k) = 1;
          CHECK(delta_alpha(alg, f) == classical::delta(alg, f));
        }
    }
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
      int p = 1 + static_cast<int>(rng() % 2);
      int q = 1 + static_cast<int>(rng() % 2);
      Cochain f = random_cochain(alg, p, rng, 3);
      Cochain g = random_cochain(alg, q, rng, 3);
      CHECK(cup(alg, f, g) == classical::cup(alg, f, g));
      CHECK(bracket(alg, f, g) == classical::bracket(alg, f, g));

      int n = p + static_cast<int>(rng() % 2);
      Chain x = random_chain(alg, n, rng, 3);
      CHECK(boundary_b(alg, x) == classical::boundary(alg, x));
      CHECK(cap(alg, f, x) == classical::cap(alg, f, x));
      CHECK(lie(alg, f, x) == classical::lie(alg, f, x));
      CHECK(connes_B(alg, x) == classical::connes(alg, x));
    }
  }
}

TEST_CASE("oracle rejects twisted algebras") {
  HomAlgebra alg = load_fixture("dual_numbers_twist_2");
  Chain x = basis_chain(alg, 1, 0);
  CHECK_THROWS_AS(classical::boundary(alg, x), std::invalid_argument);
}

TEST_CASE("induced operations are well defined on classes") {
  std::mt19937_64 rng(32);
  HomAlgebra alg = load_fixture("dual_numbers_twist_2");
  CochainComplex cc(alg, 3);
  for (int trial = 0; trial < 10; ++trial) {
    int p = 1, q = 1 + static_cast<int>(rng() % 2);
    Cochain f = cc.class_lift(p, cc.cohomology(p).dim() ? Vector::unit(cc.cohomology(p).dim(), 0)
                                                        : Vector(0));
    Cochain g = random_cochain(alg, q - 1, rng, 2);
    Cochain f2 = f + delta_alpha(alg, random_cochain(alg, p - 1, rng, 2));
    Cochain gc = cc.class_lift(q, Vector(cc.cohomology(q).dim()));
    Cochain g2 = gc + delta_alpha(alg, g);
    CHECK(induced_cup(cc, f, gc) == induced_cup(cc, f2, g2));
    CHECK(induced_bracket(cc, f, gc) == induced_bracket(cc, f2, g2));
  }
}

TEST_CASE("pairing is adjoint on classes") {
  std::mt19937_64 rng(33);
  HomAlgebra alg = load_fixture("kxk_swap");
  CochainComplex dual_cc(alg, 3, Coeffs::Dual);
  ChainComplex mc(alg, 4);
  for (int q = 0; q <= 3; ++q) {
    Cochain m = dual_cc.class_lift(q, Vector(dual_cc.cohomology(q).dim()));
    Chain y = random_chain(alg, q + 1, rng, 3);
    CHECK(pairing(m, boundary_b(alg, y)) == 0);
  }
}

TEST_CASE("bv generator from a homology class: classical product algebra") {
  HomAlgebra alg = load_fixture("kxk");
  CochainComplex cc(alg, 3, Coeffs::Algebra, true);
  ChainComplex mc(alg, 4, true);
  // the class of 1 in degree 0 satisfies the hypotheses
  Chain c = make_chain(alg, 0, std::vector<Rational>{Rational(1), Rational(1)});
  DegreeOneLoweringOperator bv = bv_from_homology_class(cc, mc, c);
  for (int p = bv.min_degree + 2; p <= bv.max_degree; ++p)
    CHECK((bv.at(p - 1) * bv.at(p)).is_zero());

  // a non-central class fails the hypotheses
  Chain bad = make_chain(alg, 0, std::vector<Rational>{Rational(1), Rational(0)});
  CHECK_THROWS_AS(bv_from_homology_class(cc, mc, bad), HypothesisNotSatisfied);
}

TEST_CASE("bv generator from a symmetric structure") {
  for (const char* name : {"dual_numbers", "kxk", "kxk_swap"}) {
    CAPTURE(name);
    HomAlgebra alg = load_fixture(name);
    auto theta = find_symmetric_structure(alg);
    REQUIRE(theta.has_value());
    CochainComplex cc(alg, 3, Coeffs::Algebra, true);
    CochainComplex dual_cc(alg, 3, Coeffs::Dual, true);
    // the transport is degreewise an isomorphism
    auto iso = transported_isomorphism(cc, dual_cc, *theta);
    CHECK(iso.size() >= 1);
    DegreeOneLoweringOperator bv = bv_from_symmetric(cc, dual_cc, *theta);
    for (int p = bv.min_degree + 2; p <= bv.max_degree; ++p)
      CHECK((bv.at(p - 1) * bv.at(p)).is_zero());
  }
}
