#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homcalc/indexing.hpp"
#include "homcalc/linalg.hpp"

namespace homcalc {

// A finite-dimensional (multiplicative) hom-associative algebra (A, mu, alpha)
// over the rationals, given by structure constants on a fixed basis:
//   e_i . e_j = sum_k mu(i,j,k) e_k.
// Values are immutable after construction; alpha powers (including negative
// ones when alpha is invertible) are precomputed so all queries are pure reads.
class HomAlgebra {
 public:
  HomAlgebra(int dim, std::vector<Rational> mu_tensor, Matrix alpha,
             std::optional<Vector> unit = std::nullopt,
             std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Rational& mu(int i, int j, int k) const {
    return mu_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  const std::vector<Rational>& mu_tensor() const { return mu_; }

  // Product of basis elements e_i . e_j, as a coordinate vector.
  const Vector& multiply_basis(int i, int j) const {
    return basis_products_[static_cast<std::size_t>(i) * dim_ + j];
  }
  Vector multiply(const Vector& a, const Vector& b) const;

  const Matrix& alpha() const { return alpha_; }
  bool regular() const { return alpha_inverse_.has_value(); }
  const Matrix& alpha_inverse() const;  // throws RegularityError

  // alpha^k as a matrix; negative k requires regularity.
  const Matrix& alpha_power(long k) const;
  Vector apply_alpha_power(long k, const Vector& v) const;

  bool unital() const { return unit_.has_value(); }
  const Vector& unit() const;  // throws if absent
  bool regular_unital() const { return regular() && unital(); }

 private:
  int dim_;
  std::vector<Rational> mu_;
  Matrix alpha_;
  std::optional<Vector> unit_;
  std::vector<std::string> labels_;
  std::optional<Matrix> alpha_inverse_;
  std::vector<Vector> basis_products_;
  // alpha^k for k in [-kMaxCachedPower, kMaxCachedPower], built up front.
  static constexpr long kMaxCachedPower = 16;
  std::map<long, Matrix> alpha_powers_;
};

struct Check {
  std::string name;
  bool pass = false;
  bool required = true;  // informational checks (regularity) never fail validation
  std::string witness;   // offending basis tuple on failure, empty on pass
};

struct ValidationReport {
  std::vector<Check> checks;
  bool all_required_pass() const;
  const Check* find(const std::string& name) const;
};

// Checks hom-associativity, multiplicativity, unit axioms (when a unit is
// given) on all basis tuples, and reports regularity/unitality as
// informational facts.
ValidationReport validate(const HomAlgebra& alg);

// Yau twist: from an associative algebra (alpha = id, checked) and an algebra
// endomorphism `hom`, build (A, hom o mu, hom). Carries the unit over when
// hom fixes it. Throws std::invalid_argument naming a failing pair/triple.
HomAlgebra yau_twist(const HomAlgebra& assoc, const Matrix& hom);

// Bimodule (M, beta) over a hom-associative algebra, with action structure
// constants on the chosen bases of A and M.
struct Bimodule {
  int alg_dim = 0;
  int dim = 0;
  Matrix beta;
  std::vector<Rational> left;   // (i,j,k): e_i . m_j = sum_k left[..] m_k
  std::vector<Rational> right;  // (i,j,k): m_i . e_j = sum_k right[..] m_k

  const Rational& left_c(int i, int j, int k) const {
    return left[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
  const Rational& right_c(int i, int j, int k) const {
    return right[(static_cast<std::size_t>(i) * alg_dim + j) * dim + k];
  }
  Vector left_act(const Vector& a, const Vector& m) const;
  Vector right_act(const Vector& m, const Vector& a) const;
};

// A itself as a bimodule, (A, alpha) with both actions mu.
Bimodule algebra_bimodule(const HomAlgebra& alg);

// The dual bimodule A* of a regular unital algebra:
//   beta = (alpha^{-1})^*,
//   (a.theta)(b) = theta(alpha^{-1}(alpha^{-1}(b).a)),
//   (theta.a)(b) = theta(alpha^{-1}(a.alpha^{-1}(b))).
// (The extra inner alpha^{-1} is forced by the hom-bimodule axioms; the naive
// actions without it fail them whenever alpha != id.)
Bimodule dual_bimodule(const HomAlgebra& alg);

// Checks all bimodule axioms on basis tuples.
ValidationReport validate_bimodule(const HomAlgebra& alg, const Bimodule& mod);

// Hom-bimodule isomorphism Theta : A -> A* (matrix in the basis/dual-basis
// coordinates).
struct SymmetricStructure {
  Matrix theta;
};

// Linear constraints a symmetric structure must satisfy; kernel of the
// returned matrix (acting on the n^2 entries of Theta, row-major) is the space
// of hom-bimodule maps A -> A*.
Matrix symmetric_structure_constraints(const HomAlgebra& alg);

// Searches the solution space of the intertwining constraints for an
// invertible element: each basis solution first, then random small-integer
// combinations (seeded, deterministic). Returns nullopt when the search
// exhausts its budget without an invertible candidate.
std::optional<SymmetricStructure> find_symmetric_structure(const HomAlgebra& alg,
                                                           unsigned long seed = 0x5eed);

}  // namespace homcalc
