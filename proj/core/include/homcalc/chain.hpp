#pragma once

#include <vector>

#include "homcalc/cochain.hpp"

namespace homcalc {

// Element of A tensor A^{tensor n}; coefficient vector of length dim^{n+1},
// multi-index (i_0, ..., i_n) lexicographic.
struct Chain {
  int degree = 0;
  int dim = 0;
  std::vector<Rational> c;

  std::size_t size() const { return c.size(); }
  bool is_zero() const;
  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain& operator*=(const Rational& s);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend bool operator==(const Chain&, const Chain&) = default;
};

Chain zero_chain(const HomAlgebra& alg, int degree);
Chain basis_chain(const HomAlgebra& alg, int degree, std::size_t flat);
Chain make_chain(const HomAlgebra& alg, int degree, std::vector<Rational> coeffs);

// Comp module insertion f bullet_i x at slot i >= 1 (slot 0 is `bullet0`).
// Degree-0 cochains need a regular algebra.
Chain bullet(const HomAlgebra& alg, const Cochain& f, int i, const Chain& x);

// f bullet_0 x = f(a_0, ..., a_{p-1}) tensor alpha^{p-1}(rest).
Chain bullet0(const HomAlgebra& alg, const Cochain& f, const Chain& x);

// Unified slot access: i = 0 dispatches to bullet0.
Chain bullet_at(const HomAlgebra& alg, const Cochain& f, int i, const Chain& x);

// Cyclic rotation t(a_0 tensor a_1 ... a_n) = a_n tensor a_0 ... a_{n-1};
// identity in degree 0.
Chain cyclic_t(const Chain& x);
Chain cyclic_t_power(const Chain& x, int k);

// Simplicial boundary b (equals the Hochschild boundary d_alpha; both code
// paths exist and are cross-checked by the suites).
Chain boundary_b(const HomAlgebra& alg, const Chain& x);
Chain boundary_d_alpha(const HomAlgebra& alg, const Chain& x);

// Cap product, operadic route (pi o_2 f) bullet_0 x and the explicit
// per-tensor formula.
Chain cap(const HomAlgebra& alg, const Cochain& f, const Chain& x);
Chain cap_explicit(const HomAlgebra& alg, const Cochain& f, const Chain& x);

// Lie derivative, operadic route (both degree branches) and the explicit
// per-tensor formula (defined for deg f < deg x + 1).
Chain lie(const HomAlgebra& alg, const Cochain& f, const Chain& x);
Chain lie_explicit(const HomAlgebra& alg, const Cochain& f, const Chain& x);

// Connes boundary operator (regular unital algebras).
Chain connes_B(const HomAlgebra& alg, const Chain& x);

// Cartan homotopy S_f; the zero map when deg f > deg x.
Chain homotopy_S(const HomAlgebra& alg, const Cochain& f, const Chain& x);

// Degenerate subspace D(n) (a unit in some slot >= 1) and complement
// representatives of the normalized quotient.
struct NormalizedQuotient {
  int degree = 0;
  std::size_t ambient_dim = 0;
  std::vector<Vector> degenerate_basis;
  std::vector<Vector> representatives;

  bool contains_degenerate(const Chain& x) const;
  // Coordinates of the class of x in the representative basis.
  Vector class_coords(const Chain& x) const;
};

// Builds D(n) and representatives; verifies that b (and B, when defined)
// preserve the degenerate subspace, throwing InternalConsistencyError with a
// witness otherwise.
NormalizedQuotient normalized_quotient(const HomAlgebra& alg, int n);

}  // namespace homcalc
