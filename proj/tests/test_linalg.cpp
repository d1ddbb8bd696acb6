#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homcalc/errors.hpp"
#include "homcalc/linalg.hpp"
#include "homcalc/rational.hpp"

using namespace homcalc;

namespace {

Matrix from_ints(std::size_t r, std::size_t c, std::initializer_list<int> vals) {
  Matrix m(r, c);
  std::size_t i = 0;
  for (int v : vals) m.a[i++] = v;
  return m;
}

}  // namespace

TEST_CASE("rational literals") {
  CHECK(rational_from_string("3/6") == Rational(1, 2));
  CHECK(rational_from_string("-4/2") == Rational(-2));
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
  CHECK(parity_sign(0) == 1);
  CHECK(parity_sign(3) == -1);
  CHECK(parity_sign(-1) == -1);
}

TEST_CASE("rref, rank and kernel") {
  Matrix m = from_ints(3, 4, {1, 2, 0, 1, 2, 4, 1, 0, 0, 0, 1, -2});
  CHECK(rank(m) == 2);
  auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(m.apply(v).is_zero());

  Matrix id = Matrix::identity(3);
  CHECK(rank(id) == 3);
  CHECK(kernel_basis(id).empty());
}

TEST_CASE("solve and inverse") {
  Matrix m = from_ints(2, 2, {2, 1, 1, 1});
  Vector b(std::vector<Rational>{Rational(3), Rational(2)});
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == b);

  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((*inv * m) == Matrix::identity(2));

  Matrix sing = from_ints(2, 2, {1, 2, 2, 4});
  CHECK(!inverse(sing).has_value());
  Vector bad(std::vector<Rational>{Rational(1), Rational(0)});
  CHECK(!solve(sing, bad).has_value());

  // 0x0 edge case
  CHECK(inverse(Matrix(0, 0)).has_value());
}

TEST_CASE("column space and span coordinates") {
  Matrix m = from_ints(3, 3, {1, 0, 1, 0, 1, 1, 0, 0, 0});
  auto cols = column_space_basis(m);
  CHECK(cols.size() == 2);

  std::vector<Vector> basis = {Vector(std::vector<Rational>{Rational(1), Rational(0)}),
                               Vector(std::vector<Rational>{Rational(1), Rational(1)})};
  Vector v(std::vector<Rational>{Rational(3), Rational(2)});
  auto coords = coords_in_span(basis, v);
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == Rational(1));
  CHECK((*coords)[1] == Rational(2));
}

TEST_CASE("quotient representatives") {
  std::vector<Vector> sub = {Vector(std::vector<Rational>{Rational(1), Rational(1), Rational(0)})};
  std::vector<Vector> ambient;
  for (std::size_t i = 0; i < 3; ++i) ambient.push_back(Vector::unit(3, i));
  auto reps = quotient_representatives(sub, ambient);
  CHECK(reps.size() == 2);
}

TEST_CASE("incremental span") {
  IncrementalSpan span(3);
  CHECK(span.add(Vector(std::vector<Rational>{Rational(1), Rational(1), Rational(0)})));
  CHECK(span.add(Vector(std::vector<Rational>{Rational(0), Rational(1), Rational(0)})));
  CHECK(!span.add(Vector(std::vector<Rational>{Rational(2), Rational(-1), Rational(0)})));
  CHECK(span.rank() == 2);
  CHECK(span.contains(Vector(std::vector<Rational>{Rational(5), Rational(7), Rational(0)})));
  CHECK(!span.contains(Vector::unit(3, 2)));
}

TEST_CASE("dimension mismatches throw") {
  Matrix m(2, 3);
  Vector v(2);
  CHECK_THROWS_AS(m.apply(v), DimensionError);
}
