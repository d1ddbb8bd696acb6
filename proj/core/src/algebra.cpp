#include "homcalc/algebra.hpp"

#include <random>
#include <sstream>

#include "homcalc/errors.hpp"

namespace homcalc {

namespace {

std::string basis_name(const HomAlgebra& alg, int i) {
  if (i < static_cast<int>(alg.labels().size())) return alg.labels()[i];
  return "e" + std::to_string(i);
}

std::string tuple_witness(const HomAlgebra& alg, std::initializer_list<int> idx) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int i : idx) {
    if (!first) os << ", ";
    os << basis_name(alg, i);
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

HomAlgebra::HomAlgebra(int dim, std::vector<Rational> mu_tensor, Matrix alpha,
                       std::optional<Vector> unit, std::vector<std::string> labels)
    : dim_(dim),
      mu_(std::move(mu_tensor)),
      alpha_(std::move(alpha)),
      unit_(std::move(unit)),
      labels_(std::move(labels)) {
  if (dim_ < 1) throw DimensionError("algebra dimension must be positive");
  std::size_t n = static_cast<std::size_t>(dim_);
  if (mu_.size() != n * n * n)
    throw DimensionError("mu tensor must have dim^3 entries");
  if (alpha_.rows != n || alpha_.cols != n)
    throw DimensionError("alpha must be a dim x dim matrix");
  if (unit_ && unit_->size() != n) throw DimensionError("unit vector length mismatch");

  basis_products_.reserve(n * n);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      Vector p(n);
      for (int k = 0; k < dim_; ++k) p[k] = mu(i, j, k);
      basis_products_.push_back(std::move(p));
    }

  alpha_inverse_ = inverse(alpha_);
  alpha_powers_.emplace(0, Matrix::identity(n));
  alpha_powers_.emplace(1, alpha_);
  for (long k = 2; k <= kMaxCachedPower; ++k)
    alpha_powers_.emplace(k, alpha_powers_.at(k - 1) * alpha_);
  if (alpha_inverse_) {
    alpha_powers_.emplace(-1, *alpha_inverse_);
    for (long k = 2; k <= kMaxCachedPower; ++k)
      alpha_powers_.emplace(-k, alpha_powers_.at(-(k - 1)) * *alpha_inverse_);
  }
}

Vector HomAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != static_cast<std::size_t>(dim_) || b.size() != a.size())
    throw DimensionError("multiply: operand length mismatch");
  Vector out(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      Rational c = a[i] * b[j];
      const Vector& p = multiply_basis(i, j);
      for (int k = 0; k < dim_; ++k)
        if (p[k] != 0) out[k] += c * p[k];
    }
  }
  return out;
}

const Matrix& HomAlgebra::alpha_inverse() const {
  if (!alpha_inverse_) throw RegularityError("alpha is not invertible");
  return *alpha_inverse_;
}

const Matrix& HomAlgebra::alpha_power(long k) const {
  if (k < 0 && !alpha_inverse_)
    throw RegularityError("negative alpha power on a non-regular algebra");
  auto it = alpha_powers_.find(k);
  if (it == alpha_powers_.end())
    throw DimensionError("alpha power out of cached range");
  return it->second;
}

Vector HomAlgebra::apply_alpha_power(long k, const Vector& v) const {
  if (k == 0) return v;
  return alpha_power(k).apply(v);
}

const Vector& HomAlgebra::unit() const {
  if (!unit_) throw std::logic_error("algebra has no unit");
  return *unit_;
}

bool ValidationReport::all_required_pass() const {
  for (const Check& c : checks)
    if (c.required && !c.pass) return false;
  return true;
}

const Check* ValidationReport::find(const std::string& name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate(const HomAlgebra& alg) {
  ValidationReport rep;
  int n = alg.dim();

  Check hom{"hom-associativity", true, true, ""};
  for (int i = 0; i < n && hom.pass; ++i)
    for (int j = 0; j < n && hom.pass; ++j)
      for (int k = 0; k < n && hom.pass; ++k) {
        Vector ei = Vector::unit(n, i), ej = Vector::unit(n, j), ek = Vector::unit(n, k);
        Vector lhs = alg.multiply(alg.multiply(ei, ej), alg.alpha().apply(ek));
        Vector rhs = alg.multiply(alg.alpha().apply(ei), alg.multiply(ej, ek));
        if (!(lhs == rhs)) {
          hom.pass = false;
          hom.witness = tuple_witness(alg, {i, j, k});
        }
      }
  rep.checks.push_back(hom);

  Check mult{"multiplicativity", true, true, ""};
  for (int i = 0; i < n && mult.pass; ++i)
    for (int j = 0; j < n && mult.pass; ++j) {
      Vector ei = Vector::unit(n, i), ej = Vector::unit(n, j);
      Vector lhs = alg.alpha().apply(alg.multiply(ei, ej));
      Vector rhs = alg.multiply(alg.alpha().apply(ei), alg.alpha().apply(ej));
      if (!(lhs == rhs)) {
        mult.pass = false;
        mult.witness = tuple_witness(alg, {i, j});
      }
    }
  rep.checks.push_back(mult);

  if (alg.unital()) {
    Check unit{"unit-axioms", true, true, ""};
    const Vector& one = alg.unit();
    if (!(alg.alpha().apply(one) == one)) {
      unit.pass = false;
      unit.witness = "alpha(1) != 1";
    }
    for (int i = 0; i < n && unit.pass; ++i) {
      Vector ei = Vector::unit(n, i);
      Vector want = alg.alpha().apply(ei);
      if (!(alg.multiply(ei, one) == want) || !(alg.multiply(one, ei) == want)) {
        unit.pass = false;
        unit.witness = tuple_witness(alg, {i});
      }
    }
    rep.checks.push_back(unit);
  }

  rep.checks.push_back(Check{"regularity", alg.regular(), false,
                             alg.regular() ? "" : "alpha is singular"});
  rep.checks.push_back(Check{"unitality", alg.unital(), false,
                             alg.unital() ? "" : "no unit supplied"});
  return rep;
}

HomAlgebra yau_twist(const HomAlgebra& assoc, const Matrix& hom) {
  int n = assoc.dim();
  if (!(assoc.alpha() == Matrix::identity(static_cast<std::size_t>(n))))
    throw std::invalid_argument("yau_twist: input must have alpha = id");
  ValidationReport rep = validate(assoc);
  if (!rep.all_required_pass())
    throw std::invalid_argument("yau_twist: input is not associative");
  if (hom.rows != static_cast<std::size_t>(n) || hom.cols != hom.rows)
    throw std::invalid_argument("yau_twist: endomorphism has wrong shape");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector ei = Vector::unit(n, i), ej = Vector::unit(n, j);
      Vector lhs = hom.apply(assoc.multiply(ei, ej));
      Vector rhs = assoc.multiply(hom.apply(ei), hom.apply(ej));
      if (!(lhs == rhs))
        throw std::invalid_argument("yau_twist: hom is not an algebra morphism at pair " +
                                    tuple_witness(assoc, {i, j}));
    }

  std::vector<Rational> twisted(static_cast<std::size_t>(n) * n * n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector p = hom.apply(assoc.multiply_basis(i, j));
      for (int k = 0; k < n; ++k)
        twisted[(static_cast<std::size_t>(i) * n + j) * n + k] = p[k];
    }

  std::optional<Vector> unit;
  if (assoc.unital() && hom.apply(assoc.unit()) == assoc.unit()) unit = assoc.unit();
  return HomAlgebra(n, std::move(twisted), hom, unit, assoc.labels());
}

Vector Bimodule::left_act(const Vector& a, const Vector& m) const {
  Vector out(static_cast<std::size_t>(dim));
  for (int i = 0; i < alg_dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (m[j] == 0) continue;
      Rational c = a[i] * m[j];
      for (int k = 0; k < dim; ++k)
        if (left_c(i, j, k) != 0) out[k] += c * left_c(i, j, k);
    }
  }
  return out;
}

Vector Bimodule::right_act(const Vector& m, const Vector& a) const {
  Vector out(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    if (m[i] == 0) continue;
    for (int j = 0; j < alg_dim; ++j) {
      if (a[j] == 0) continue;
      Rational c = m[i] * a[j];
      for (int k = 0; k < dim; ++k)
        if (right_c(i, j, k) != 0) out[k] += c * right_c(i, j, k);
    }
  }
  return out;
}

Bimodule algebra_bimodule(const HomAlgebra& alg) {
  Bimodule mod;
  mod.alg_dim = mod.dim = alg.dim();
  mod.beta = alg.alpha();
  mod.left = alg.mu_tensor();
  mod.right = alg.mu_tensor();
  return mod;
}

Bimodule dual_bimodule(const HomAlgebra& alg) {
  if (!alg.regular_unital())
    throw RegularityError("dual bimodule needs a regular unital algebra");
  int n = alg.dim();
  std::size_t nn = static_cast<std::size_t>(n);
  Bimodule mod;
  mod.alg_dim = mod.dim = n;
  mod.beta = alg.alpha_inverse().transpose();
  mod.left.assign(nn * nn * nn, Rational(0));
  mod.right.assign(nn * nn * nn, Rational(0));
  // (e_i . e_j^*)(e_b) = e_j^*(alpha^{-1}(alpha^{-1}(e_b) . e_i));
  // (e_i^* . e_j)(e_b) = e_i^*(alpha^{-1}(e_j . alpha^{-1}(e_b))).
  // The inner alpha^{-1} on the evaluation argument is forced by the
  // hom-bimodule axioms (checked in validate_bimodule); without it they fail
  // whenever alpha != id.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int b = 0; b < n; ++b) {
        Vector eb = alg.alpha_inverse().column(static_cast<std::size_t>(b));
        Vector l = alg.alpha_inverse().apply(alg.multiply(eb, Vector::unit(nn, i)));
        mod.left[(static_cast<std::size_t>(i) * n + j) * n + b] = l[j];
        Vector r = alg.alpha_inverse().apply(alg.multiply(Vector::unit(nn, j), eb));
        mod.right[(static_cast<std::size_t>(i) * n + j) * n + b] = r[i];
      }
  return mod;
}

ValidationReport validate_bimodule(const HomAlgebra& alg, const Bimodule& mod) {
  ValidationReport rep;
  int n = alg.dim(), m = mod.dim;
  auto basis_a = [&](int i) { return Vector::unit(static_cast<std::size_t>(n), i); };
  auto basis_m = [&](int i) { return Vector::unit(static_cast<std::size_t>(m), i); };

  Check equiv{"beta-equivariance", true, true, ""};
  for (int i = 0; i < n && equiv.pass; ++i)
    for (int j = 0; j < m && equiv.pass; ++j) {
      Vector a = basis_a(i), x = basis_m(j);
      Vector aa = alg.alpha().apply(a), bx = mod.beta.apply(x);
      if (!(mod.beta.apply(mod.left_act(a, x)) == mod.left_act(aa, bx)) ||
          !(mod.beta.apply(mod.right_act(x, a)) == mod.right_act(bx, aa))) {
        equiv.pass = false;
        equiv.witness = tuple_witness(alg, {i, j});
      }
    }
  rep.checks.push_back(equiv);

  Check assoc{"bimodule-conditions", true, true, ""};
  for (int i = 0; i < n && assoc.pass; ++i)
    for (int j = 0; j < n && assoc.pass; ++j)
      for (int k = 0; k < m && assoc.pass; ++k) {
        Vector a = basis_a(i), b = basis_a(j), x = basis_m(k);
        Vector aa = alg.alpha().apply(a), ab = alg.alpha().apply(b);
        Vector bx = mod.beta.apply(x);
        bool ok =
            mod.left_act(alg.multiply(a, b), bx) == mod.left_act(aa, mod.left_act(b, x)) &&
            mod.right_act(mod.left_act(a, x), ab) == mod.left_act(aa, mod.right_act(x, b)) &&
            mod.right_act(mod.right_act(x, a), ab) == mod.right_act(bx, alg.multiply(a, b));
        if (!ok) {
          assoc.pass = false;
          assoc.witness = tuple_witness(alg, {i, j, k});
        }
      }
  rep.checks.push_back(assoc);
  return rep;
}

Matrix symmetric_structure_constraints(const HomAlgebra& alg) {
  // Unknowns: entries of Theta (n x n, row-major), mapping A -> A* in
  // basis/dual-basis coordinates. Constraints, on all basis pairs:
  //   Theta o alpha = (alpha^{-1})^* o Theta
  //   Theta(a . b)  = a . Theta(b)   (dual left action)
  //   Theta(b . a)  = Theta(b) . a   (dual right action)
  int n = alg.dim();
  std::size_t nn = static_cast<std::size_t>(n);
  Bimodule dual = dual_bimodule(alg);
  Matrix beta_dual = alg.alpha_inverse().transpose();

  std::vector<Vector> rows;
  auto theta_apply_row = [&](int out_row, int in_col) -> std::size_t {
    return static_cast<std::size_t>(out_row) * nn + static_cast<std::size_t>(in_col);
  };

  // Row builder: coefficient of Theta_{r,c} in a linear expression.
  auto add_constraints = [&](auto&& lhs_coeff, auto&& rhs_coeff) {
    // one constraint per (output dual coordinate r, input basis j)
    for (int r = 0; r < n; ++r)
      for (int j = 0; j < n; ++j) {
        Vector row(nn * nn);
        for (int rr = 0; rr < n; ++rr)
          for (int cc = 0; cc < n; ++cc) {
            Rational coef = lhs_coeff(r, j, rr, cc) - rhs_coeff(r, j, rr, cc);
            row[theta_apply_row(rr, cc)] = coef;
          }
        if (!row.is_zero()) rows.push_back(std::move(row));
      }
  };

  // Theta o alpha vs beta_dual o Theta, per input basis j, output coord r:
  add_constraints(
      [&](int r, int j, int rr, int cc) {
        return rr == r ? alg.alpha().at(static_cast<std::size_t>(cc),
                                        static_cast<std::size_t>(j))
                       : Rational(0);
      },
      [&](int r, int j, int rr, int cc) {
        return cc == j ? beta_dual.at(static_cast<std::size_t>(r),
                                      static_cast<std::size_t>(rr))
                       : Rational(0);
      });

  // Module-map conditions, for every algebra basis element a = e_i:
  for (int i = 0; i < n; ++i) {
    Vector ei = Vector::unit(nn, i);
    // Theta(e_i . e_j) = e_i . Theta(e_j):
    // LHS coord r = sum_cc mu(i,j,cc) Theta_{r,cc};
    // RHS coord r = sum_rr left_c(i,rr,r) Theta_{rr,j}.
    Bimodule& d = dual;
    add_constraints(
        [&, i](int r, int j, int rr, int cc) {
          return rr == r ? alg.mu(i, j, cc) : Rational(0);
        },
        [&, i](int r, int j, int rr, int cc) {
          return cc == j ? d.left_c(i, rr, r) : Rational(0);
        });
    // Theta(e_j . e_i) = Theta(e_j) . e_i:
    add_constraints(
        [&, i](int r, int j, int rr, int cc) {
          return rr == r ? alg.mu(j, i, cc) : Rational(0);
        },
        [&, i](int r, int j, int rr, int cc) {
          return cc == j ? d.right_c(rr, i, r) : Rational(0);
        });
  }

  if (rows.empty()) return Matrix(0, nn * nn);
  return Matrix::from_rows(rows, nn * nn);
}

std::optional<SymmetricStructure> find_symmetric_structure(const HomAlgebra& alg,
                                                           unsigned long seed) {
  int n = alg.dim();
  std::size_t nn = static_cast<std::size_t>(n);
  std::vector<Vector> sol = kernel_basis(symmetric_structure_constraints(alg));
  if (sol.empty()) return std::nullopt;

  auto to_matrix = [&](const Vector& v) {
    Matrix m(nn, nn);
    m.a.assign(v.entries.begin(), v.entries.end());
    return m;
  };
  auto try_candidate = [&](const Vector& v) -> std::optional<SymmetricStructure> {
    Matrix m = to_matrix(v);
    if (inverse(m)) return SymmetricStructure{std::move(m)};
    return std::nullopt;
  };

  for (const Vector& v : sol)
    if (auto s = try_candidate(v)) return s;

  // Invertibility is Zariski-open in the solution space, so random
  // small-integer combinations hit an invertible point when one exists.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Vector v(nn * nn);
    for (const Vector& b : sol) {
      Rational c(coef(rng));
      if (c == 0) continue;
      Vector scaled = b;
      scaled *= c;
      v += scaled;
    }
    if (auto s = try_candidate(v)) return s;
  }
  return std::nullopt;
}

}  // namespace homcalc
