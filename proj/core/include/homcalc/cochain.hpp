#pragma once

#include <span>
#include <vector>

#include "homcalc/algebra.hpp"

namespace homcalc {

// Coefficient module of a cochain: the algebra itself, or its dual A*.
enum class Coeffs { Algebra, Dual };

// A multilinear map A^{tensor p} -> M (M = A or A*), stored on the basis:
// coeffs[(i_1,...,i_p; k)] with the output index k last, input tuple
// lexicographic. A degree-0 cochain is a single element of M.
struct Cochain {
  int degree = 0;
  int dim = 0;
  Coeffs coeffs = Coeffs::Algebra;
  std::vector<Rational> c;  // dim^degree * dim entries

  std::size_t input_tuples() const { return pow_size(dim, degree); }

  // Value on basis inputs, as a coordinate vector in M.
  Vector value_at(std::size_t tuple_flat) const;
  Rational& entry(std::size_t tuple_flat, int out) {
    return c[tuple_flat * static_cast<std::size_t>(dim) + static_cast<std::size_t>(out)];
  }
  const Rational& entry(std::size_t tuple_flat, int out) const {
    return c[tuple_flat * static_cast<std::size_t>(dim) + static_cast<std::size_t>(out)];
  }

  // Multilinear evaluation on arbitrary coordinate vectors.
  Vector eval(std::span<const Vector> args) const;

  bool is_zero() const;
  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& operator*=(const Rational& s);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

Cochain zero_cochain(const HomAlgebra& alg, int degree, Coeffs coeffs = Coeffs::Algebra);

// The operad identity: id_A in degree 1.
Cochain identity_cochain(const HomAlgebra& alg);

// The multiplication mu as a degree-2 cochain.
Cochain multiplication_cochain(const HomAlgebra& alg);

// The operadic unit e = 1 in degree 0 (regular unital algebras only).
Cochain unit_cochain(const HomAlgebra& alg);

// Wraps a raw coefficient tensor.
Cochain make_cochain(const HomAlgebra& alg, int degree, std::vector<Rational> tensor,
                     Coeffs coeffs = Coeffs::Algebra);

// Equivariance beta o f = f o alpha^{tensor p}, checked exactly on all basis
// tuples (for degree 0: beta-fixedness).
bool is_equivariant(const HomAlgebra& alg, const Cochain& f);

// Partial composition (hom-twisted): inserts g into slot i (1-based) of f,
// applying alpha^{deg(g)-1} to the remaining arguments. Degree-0 operands
// need a regular algebra (alpha^{-1} appears). Algebra coefficients only.
Cochain comp(const HomAlgebra& alg, const Cochain& f, int i, const Cochain& g);

// Degree -1 operadic bracket.
Cochain bracket(const HomAlgebra& alg, const Cochain& f, const Cochain& g);

// Cup product f u g = (mu o_2 f) o_1 g.
Cochain cup(const HomAlgebra& alg, const Cochain& f, const Cochain& g);

// Operadic differential induced by the multiplication: [mu, f].
Cochain delta_pi(const HomAlgebra& alg, const Cochain& f);

// Hochschild coboundary. Works for Algebra and Dual coefficients; degree 0
// (and Dual coefficients at all) need regularity.
Cochain delta_alpha(const HomAlgebra& alg, const Cochain& f);

// delta_pi(f) = delta_sign(p) * delta_alpha(f) for Algebra coefficients.
// The sign was fixed empirically on random cochains of degrees 1..4 and is
// asserted by the test suite.
inline int delta_sign(int degree) { return parity_sign(degree + 1); }

// Deterministically ordered basis of the equivariant cochain space C^p.
// Degree 0 requires regularity (Algebra) / regular unitality (Dual).
std::vector<Cochain> cochain_space_basis(const HomAlgebra& alg, int p,
                                         Coeffs coeffs = Coeffs::Algebra);

// Basis of the normalized subspace: equivariant cochains vanishing whenever
// some argument equals the unit. Requires a unital algebra.
std::vector<Cochain> normalized_cochain_space_basis(const HomAlgebra& alg, int p,
                                                    Coeffs coeffs = Coeffs::Algebra);

}  // namespace homcalc
