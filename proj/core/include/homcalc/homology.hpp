#pragma once

#include <map>
#include <vector>

#include "homcalc/chain.hpp"

namespace homcalc {

// Cycles / boundaries / chosen class representatives of one degree of a
// complex, all in the coordinate system of that degree's ambient space.
struct Subquotient {
  int degree = 0;
  std::size_t ambient_dim = 0;
  std::vector<Vector> cycles;
  std::vector<Vector> boundaries;
  std::vector<Vector> representatives;

  std::size_t dim() const { return representatives.size(); }
  // Coordinates of the class of a cycle in the representative basis; throws
  // InternalConsistencyError if v is not a cycle.
  Vector class_coords(const Vector& v) const;
};

// Builds a subquotient from the outgoing and (optional) incoming differential;
// verifies boundaries lie inside cycles.
Subquotient make_subquotient(int degree, std::size_t ambient_dim, const Matrix* outgoing,
                             const Matrix* incoming);

// Hochschild cochain complex (C^*, delta_alpha) with Algebra or Dual
// coefficients, in the coordinates of cochain_space_basis (or the normalized
// basis). Degree 0 exists only when alpha is invertible (and, for Dual
// coefficients, the algebra is unital); otherwise degrees start at 1 and the
// incoming differential at degree 1 is taken to be zero.
class CochainComplex {
 public:
  CochainComplex(const HomAlgebra& alg, int max_degree, Coeffs coeffs = Coeffs::Algebra,
                 bool normalized = false);

  const HomAlgebra& algebra() const { return *alg_; }
  Coeffs coeffs() const { return coeffs_; }
  bool normalized() const { return normalized_; }
  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }

  const std::vector<Cochain>& basis(int p) const;
  std::size_t space_dim(int p) const { return basis(p).size(); }
  // delta_alpha as a matrix C^p -> C^{p+1}, defined for p in [min, max].
  const Matrix& delta_matrix(int p) const;

  // Coordinates of f in basis(p); throws if f lies outside the cochain space.
  Vector coords(const Cochain& f) const;
  Cochain from_coords(int p, const Vector& v) const;

  const Subquotient& cohomology(int p) const;
  // Class coordinates of a cocycle; throws on non-cocycles.
  Vector class_of(const Cochain& f) const;
  bool same_class(const Cochain& f, const Cochain& g) const;
  Cochain class_representative(int p, std::size_t k) const;
  // Cocycle representing the class with the given class coordinates.
  Cochain class_lift(int p, const Vector& cls) const;
  bool is_cocycle(const Cochain& f) const;

 private:
  const HomAlgebra* alg_;
  Coeffs coeffs_;
  bool normalized_;
  int min_degree_, max_degree_;
  std::vector<std::vector<Cochain>> bases_;  // degrees min..max+1
  std::vector<Matrix> deltas_;               // delta at degrees min..max
  std::vector<Subquotient> spaces_;          // degrees min..max
};

// Hochschild chain complex (C_*, b = d^alpha), plain tensor coordinates, or
// the normalized quotient complex in representative coordinates (requires a
// unital algebra). The Connes operator matrix exists on the normalized
// complex of a regular unital algebra only (it descends there).
class ChainComplex {
 public:
  ChainComplex(const HomAlgebra& alg, int max_degree, bool normalized = false);

  const HomAlgebra& algebra() const { return *alg_; }
  bool normalized() const { return normalized_; }
  int max_degree() const { return max_degree_; }

  std::size_t space_dim(int n) const;
  Vector coords(const Chain& x) const;
  Chain lift(int n, const Vector& v) const;

  // b as a matrix M(n) -> M(n-1), n in [1, max+1].
  const Matrix& boundary_matrix(int n) const;
  // Induced Connes operator M(n) -> M(n+1), n in [0, max]; normalized +
  // regular unital only.
  const Matrix& connes_matrix(int n) const;
  bool has_connes() const;

  const Subquotient& homology(int n) const;
  Vector class_of(const Chain& x) const;
  bool same_class(const Chain& x, const Chain& y) const;
  Chain class_representative(int n, std::size_t k) const;
  Chain class_lift(int n, const Vector& cls) const;
  bool is_cycle(const Chain& x) const;

  const NormalizedQuotient& quotient(int n) const;  // normalized only

 private:
  const HomAlgebra* alg_;
  bool normalized_;
  int max_degree_;
  std::vector<NormalizedQuotient> quotients_;  // degrees 0..max+1 (normalized)
  std::vector<Matrix> boundaries_;             // b at degrees 1..max+1
  std::vector<Matrix> connes_;                 // B at degrees 0..max (if present)
  std::vector<Subquotient> spaces_;            // degrees 0..max
};

// Induced operations on classes; each checks its inputs are cocycles/cycles
// and returns class coordinates in the target degree.
Vector induced_cup(const CochainComplex& cc, const Cochain& f, const Cochain& g);
Vector induced_bracket(const CochainComplex& cc, const Cochain& f, const Cochain& g);
Vector induced_cap(const CochainComplex& cc, const ChainComplex& mc, const Cochain& f,
                   const Chain& x);
Vector induced_lie(const CochainComplex& cc, const ChainComplex& mc, const Cochain& f,
                   const Chain& x);
Vector induced_connes(const ChainComplex& mc, const Chain& x);

// Pairing <m, x> = m(a_1, ..., a_n)(a_0) extended bilinearly; degrees must
// match.
Rational pairing(const Cochain& m, const Chain& x);

// Product f.m of an algebra-valued cochain with a dual-valued cochain,
// (f.m)(a_1,...,a_{p+|m|}) = f(a_1,...,a_p) . m(a_{p+1},...) via the left
// dual-bimodule action.
Cochain dot_product(const HomAlgebra& alg, const Cochain& f, const Cochain& m);

// Dual Connes operator B*(m) = (-1)^{|m|} m o B at cochain level; requires a
// regular unital algebra. Equivariance of the result is verified.
Cochain connes_B_star(const HomAlgebra& alg, const Cochain& m);

// A BV-style degree -1 operator on cohomology, one exact matrix per degree.
struct DegreeOneLoweringOperator {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<Matrix> matrices;  // matrices[p - min_degree]: H^p -> H^{p-1}

  const Matrix& at(int p) const;
};

// BV generator from a homology class c of degree d with B[c] = 0 and all
// cap maps f -> i_f c invertible: Delta is determined by i_{Delta f} c =
// B(i_f c). Throws HypothesisNotSatisfied naming the failing hypothesis.
// Both complexes must be normalized.
DegreeOneLoweringOperator bv_from_homology_class(const CochainComplex& cc,
                                                 const ChainComplex& mc, const Chain& c);

// BV generator of a symmetric algebra: B* transported along f -> f.[Theta(1)].
// cc has Algebra coefficients, dual_cc Dual coefficients; both normalized.
DegreeOneLoweringOperator bv_from_symmetric(const CochainComplex& cc,
                                            const CochainComplex& dual_cc,
                                            const SymmetricStructure& theta);

// Per-degree matrices of the map H^p(A) -> H^p(A, A*), [f] -> [Theta o f];
// throws InternalConsistencyError if some degree fails to be an isomorphism.
std::vector<Matrix> transported_isomorphism(const CochainComplex& cc,
                                            const CochainComplex& dual_cc,
                                            const SymmetricStructure& theta);

}  // namespace homcalc
