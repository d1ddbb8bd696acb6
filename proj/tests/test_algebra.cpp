#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homcalc/algebra.hpp"
#include "homcalc/errors.hpp"
#include "support/fixtures.hpp"

using namespace homcalc;
using homcalc::testing::load_fixture;

TEST_CASE("fixture algebras validate") {
  for (const char* name : {"dual_numbers", "dual_numbers_twist_2", "dual_numbers_twist_half",
                           "dual_numbers_twist_neg", "ground_field", "kxk", "kxk_swap",
                           "poly_x3_twist", "collapse_twist", "local_xy"}) {
    CAPTURE(name);
    HomAlgebra alg = load_fixture(name);
    CHECK(validate(alg).all_required_pass());
  }
}

TEST_CASE("mutant fixtures fail with a witness") {
  {
    ValidationReport rep = validate(load_fixture("mutant_nonassoc"));
    CHECK(!rep.all_required_pass());
    const Check* c = rep.find("hom-associativity");
    REQUIRE(c != nullptr);
    CHECK(!c->pass);
    CHECK(!c->witness.empty());
  }
  {
    ValidationReport rep = validate(load_fixture("mutant_nonmult"));
    CHECK(!rep.all_required_pass());
    const Check* ha = rep.find("hom-associativity");
    REQUIRE(ha != nullptr);
    CHECK(ha->pass);  // this mutant breaks only multiplicativity
    const Check* c = rep.find("multiplicativity");
    REQUIRE(c != nullptr);
    CHECK(!c->pass);
    CHECK(!c->witness.empty());
  }
}

TEST_CASE("regularity and alpha powers") {
  HomAlgebra twist = load_fixture("dual_numbers_twist_2");
  CHECK(twist.regular());
  CHECK(twist.regular_unital());
  CHECK(twist.alpha_power(2) == twist.alpha() * twist.alpha());
  CHECK(twist.alpha_power(-1) * twist.alpha() == Matrix::identity(2));
  Vector x = Vector::unit(2, 1);
  CHECK(twist.apply_alpha_power(-2, x)[1] == Rational(1, 4));

  HomAlgebra collapse = load_fixture("collapse_twist");
  CHECK(!collapse.regular());
  CHECK(collapse.unital());
  CHECK_THROWS_AS(collapse.alpha_inverse(), RegularityError);
  CHECK_THROWS_AS(collapse.alpha_power(-1), RegularityError);
}

TEST_CASE("yau twist reproduces the bundled twists") {
  HomAlgebra assoc = load_fixture("dual_numbers");
  Matrix hom(2, 2);
  hom.at(0, 0) = 1;
  hom.at(1, 1) = 2;
  HomAlgebra twisted = yau_twist(assoc, hom);
  HomAlgebra expected = load_fixture("dual_numbers_twist_2");
  CHECK(twisted.mu_tensor() == expected.mu_tensor());
  CHECK(twisted.alpha() == expected.alpha());
  CHECK(twisted.unital());
  CHECK(twisted.unit() == expected.unit());

  // a non-endomorphism is rejected with the failing pair named
  Matrix bad(2, 2);
  bad.at(0, 1) = 1;
  bad.at(1, 0) = 1;
  CHECK_THROWS_AS(yau_twist(assoc, bad), std::invalid_argument);
}

TEST_CASE("algebra and dual bimodules satisfy the hom-bimodule axioms") {
  for (const char* name :
       {"dual_numbers", "dual_numbers_twist_2", "dual_numbers_twist_neg", "kxk", "kxk_swap",
        "poly_x3_twist", "local_xy"}) {
    CAPTURE(name);
    HomAlgebra alg = load_fixture(name);
    CHECK(validate_bimodule(alg, algebra_bimodule(alg)).all_required_pass());
    if (alg.regular_unital())
      CHECK(validate_bimodule(alg, dual_bimodule(alg)).all_required_pass());
  }
}

TEST_CASE("symmetric structure search") {
  {
    HomAlgebra alg = load_fixture("kxk");
    auto theta = find_symmetric_structure(alg);
    REQUIRE(theta.has_value());
    CHECK(inverse(theta->theta).has_value());
    Matrix constraints = symmetric_structure_constraints(alg);
    CHECK(constraints.apply(Vector(theta->theta.a)).is_zero());
  }
  {
    // the swap twist stays symmetric
    HomAlgebra alg = load_fixture("kxk_swap");
    CHECK(find_symmetric_structure(alg).has_value());
  }
  {
    // twisted dual numbers: provably not symmetric
    HomAlgebra alg = load_fixture("dual_numbers_twist_2");
    CHECK(!find_symmetric_structure(alg).has_value());
  }
}
