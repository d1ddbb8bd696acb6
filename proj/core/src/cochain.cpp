#include "homcalc/cochain.hpp"

#include "homcalc/errors.hpp"

namespace homcalc {

namespace {

const Bimodule& coefficient_bimodule(const HomAlgebra& alg, Coeffs coeffs,
                                     Bimodule& storage) {
  storage = (coeffs == Coeffs::Algebra) ? algebra_bimodule(alg) : dual_bimodule(alg);
  return storage;
}

Matrix coefficient_beta(const HomAlgebra& alg, Coeffs coeffs) {
  if (coeffs == Coeffs::Algebra) return alg.alpha();
  return alg.alpha_inverse().transpose();
}

// alpha^k applied to each basis vector, as columns.
std::vector<Vector> alpha_power_columns(const HomAlgebra& alg, long k) {
  const Matrix& m = alg.alpha_power(k);
  std::vector<Vector> cols;
  cols.reserve(static_cast<std::size_t>(alg.dim()));
  for (int j = 0; j < alg.dim(); ++j) cols.push_back(m.column(static_cast<std::size_t>(j)));
  return cols;
}

}  // namespace

Vector Cochain::value_at(std::size_t tuple_flat) const {
  Vector v(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) v[k] = entry(tuple_flat, k);
  return v;
}

Vector Cochain::eval(std::span<const Vector> args) const {
  if (static_cast<int>(args.size()) != degree)
    throw DimensionError("cochain eval: wrong argument count");
  Vector out(static_cast<std::size_t>(dim));
  if (degree == 0) return value_at(0);
  std::vector<int> idx(static_cast<std::size_t>(degree), 0);
  do {
    Rational coef(1);
    bool zero = false;
    for (int s = 0; s < degree && !zero; ++s) {
      const Rational& x = args[static_cast<std::size_t>(s)][idx[static_cast<std::size_t>(s)]];
      if (x == 0)
        zero = true;
      else
        coef *= x;
    }
    if (zero) continue;
    std::size_t t = flat_index(idx, dim);
    for (int k = 0; k < dim; ++k)
      if (entry(t, k) != 0) out[k] += coef * entry(t, k);
  } while (next_index(idx, dim));
  return out;
}

bool Cochain::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (degree != o.degree || dim != o.dim || coeffs != o.coeffs)
    throw DimensionError("cochain shape mismatch in +");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (degree != o.degree || dim != o.dim || coeffs != o.coeffs)
    throw DimensionError("cochain shape mismatch in -");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Cochain& Cochain::operator*=(const Rational& s) {
  for (auto& x : c) x *= s;
  return *this;
}

Cochain zero_cochain(const HomAlgebra& alg, int degree, Coeffs coeffs) {
  if (degree < 0) throw DimensionError("cochain degree must be >= 0");
  Cochain f;
  f.degree = degree;
  f.dim = alg.dim();
  f.coeffs = coeffs;
  f.c.assign(pow_size(alg.dim(), degree) * static_cast<std::size_t>(alg.dim()), Rational(0));
  return f;
}

Cochain identity_cochain(const HomAlgebra& alg) {
  Cochain f = zero_cochain(alg, 1);
  for (int i = 0; i < alg.dim(); ++i) f.entry(static_cast<std::size_t>(i), i) = 1;
  return f;
}

Cochain multiplication_cochain(const HomAlgebra& alg) {
  Cochain f = zero_cochain(alg, 2);
  int n = alg.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::size_t t = static_cast<std::size_t>(i) * n + j;
      for (int k = 0; k < n; ++k) f.entry(t, k) = alg.mu(i, j, k);
    }
  return f;
}

Cochain unit_cochain(const HomAlgebra& alg) {
  if (!alg.regular_unital())
    throw RegularityError("operadic unit needs a regular unital algebra");
  Cochain f = zero_cochain(alg, 0);
  for (int k = 0; k < alg.dim(); ++k) f.entry(0, k) = alg.unit()[k];
  return f;
}

Cochain make_cochain(const HomAlgebra& alg, int degree, std::vector<Rational> tensor,
                     Coeffs coeffs) {
  Cochain f = zero_cochain(alg, degree, coeffs);
  if (tensor.size() != f.c.size())
    throw DimensionError("cochain tensor has wrong number of entries");
  f.c = std::move(tensor);
  return f;
}

bool is_equivariant(const HomAlgebra& alg, const Cochain& f) {
  int n = alg.dim();
  Matrix beta = coefficient_beta(alg, f.coeffs);
  if (f.degree == 0) return beta.apply(f.value_at(0)) == f.value_at(0);

  std::vector<Vector> acols = alpha_power_columns(alg, 1);
  std::vector<int> idx(static_cast<std::size_t>(f.degree), 0);
  do {
    std::size_t t = flat_index(idx, n);
    Vector lhs = beta.apply(f.value_at(t));
    std::vector<Vector> args;
    args.reserve(idx.size());
    for (int i : idx) args.push_back(acols[static_cast<std::size_t>(i)]);
    if (!(lhs == f.eval(args))) return false;
  } while (next_index(idx, n));
  return true;
}

Cochain comp(const HomAlgebra& alg, const Cochain& f, int i, const Cochain& g) {
  if (f.coeffs != Coeffs::Algebra || g.coeffs != Coeffs::Algebra)
    throw DimensionError("comp is defined for algebra coefficients only");
  int p = f.degree, q = g.degree;
  if (p < 1 || i < 1 || i > p)
    throw DimensionError("comp: insertion index out of range");
  int n = alg.dim();
  // alpha^{q-1}; q = 0 reaches alpha^{-1} and so needs regularity.
  std::vector<Vector> outer = alpha_power_columns(alg, q - 1);

  Cochain out = zero_cochain(alg, p + q - 1);
  std::size_t tuples = out.input_tuples();
  std::vector<Vector> args(static_cast<std::size_t>(p));
  for (std::size_t t = 0; t < tuples; ++t) {
    std::vector<int> idx = unflatten_index(t, n, p + q - 1);
    for (int s = 0; s < i - 1; ++s)
      args[static_cast<std::size_t>(s)] = outer[static_cast<std::size_t>(idx[s])];
    if (q == 0) {
      args[static_cast<std::size_t>(i - 1)] = g.value_at(0);
    } else {
      std::vector<int> sub(idx.begin() + (i - 1), idx.begin() + (i - 1 + q));
      args[static_cast<std::size_t>(i - 1)] = g.value_at(flat_index(sub, n));
    }
    for (int s = i; s < p; ++s)
      args[static_cast<std::size_t>(s)] =
          outer[static_cast<std::size_t>(idx[static_cast<std::size_t>(s + q - 1)])];
    Vector v = f.eval(args);
    for (int k = 0; k < n; ++k) out.entry(t, k) = v[k];
  }
  return out;
}

Cochain bracket(const HomAlgebra& alg, const Cochain& f, const Cochain& g) {
  int p = f.degree, q = g.degree;
  if (p + q < 1) throw DimensionError("bracket needs p + q >= 1");
  Cochain out = zero_cochain(alg, p + q - 1);
  for (int i = 1; i <= p; ++i) {
    Cochain term = comp(alg, f, i, g);
    term *= Rational(parity_sign(static_cast<long>(q - 1) * (i - 1)));
    out += term;
  }
  int outer_sign = parity_sign(static_cast<long>(p - 1) * (q - 1));
  for (int i = 1; i <= q; ++i) {
    Cochain term = comp(alg, g, i, f);
    term *= Rational(-outer_sign * parity_sign(static_cast<long>(p - 1) * (i - 1)));
    out += term;
  }
  return out;
}

Cochain cup(const HomAlgebra& alg, const Cochain& f, const Cochain& g) {
  Cochain pi = multiplication_cochain(alg);
  return comp(alg, comp(alg, pi, 2, f), 1, g);
}

Cochain delta_pi(const HomAlgebra& alg, const Cochain& f) {
  return bracket(alg, multiplication_cochain(alg), f);
}

Cochain delta_alpha(const HomAlgebra& alg, const Cochain& f) {
  Bimodule storage;
  const Bimodule& mod = coefficient_bimodule(alg, f.coeffs, storage);
  int p = f.degree, n = alg.dim();
  std::vector<Vector> edge = alpha_power_columns(alg, p - 1);  // alpha^{p-1}
  std::vector<Vector> acols = alpha_power_columns(alg, 1);

  Cochain out = zero_cochain(alg, p + 1, f.coeffs);
  std::size_t tuples = out.input_tuples();
  for (std::size_t t = 0; t < tuples; ++t) {
    std::vector<int> idx = unflatten_index(t, n, p + 1);
    Vector acc(static_cast<std::size_t>(n));

    // a_1 acting on f(a_2, ..., a_{p+1}) through alpha^{p-1}
    {
      std::vector<int> sub(idx.begin() + 1, idx.end());
      Vector fv = (p == 0) ? f.value_at(0) : f.value_at(flat_index(sub, n));
      acc += mod.left_act(edge[static_cast<std::size_t>(idx[0])], fv);
    }
    // (-1)^{p+1} f(a_1, ..., a_p) acting on a_{p+1}
    {
      std::vector<int> sub(idx.begin(), idx.end() - 1);
      Vector fv = (p == 0) ? f.value_at(0) : f.value_at(flat_index(sub, n));
      Vector term = mod.right_act(fv, edge[static_cast<std::size_t>(idx[p])]);
      term *= Rational(parity_sign(p + 1));
      acc += term;
    }
    // inner contractions
    for (int i = 1; i <= p; ++i) {
      std::vector<Vector> args(static_cast<std::size_t>(p));
      for (int s = 0; s < i - 1; ++s)
        args[static_cast<std::size_t>(s)] = acols[static_cast<std::size_t>(idx[s])];
      args[static_cast<std::size_t>(i - 1)] =
          alg.multiply_basis(idx[static_cast<std::size_t>(i - 1)],
                             idx[static_cast<std::size_t>(i)]);
      for (int s = i; s < p; ++s)
        args[static_cast<std::size_t>(s)] =
            acols[static_cast<std::size_t>(idx[static_cast<std::size_t>(s + 1)])];
      Vector term = f.eval(args);
      term *= Rational(parity_sign(i));
      acc += term;
    }

    for (int k = 0; k < n; ++k) out.entry(t, k) = acc[k];
  }
  return out;
}

namespace {

std::vector<Cochain> basis_from_kernel(const HomAlgebra& alg, int p, Coeffs coeffs,
                                       const Matrix& constraints) {
  std::vector<Cochain> basis;
  for (Vector& v : kernel_basis(constraints)) {
    Cochain f = zero_cochain(alg, p, coeffs);
    f.c.assign(v.entries.begin(), v.entries.end());
    basis.push_back(std::move(f));
  }
  return basis;
}

// Rows enforcing beta o f = f o alpha^{tensor p} on all basis tuples.
void append_equivariance_rows(const HomAlgebra& alg, int p, const Matrix& beta,
                              std::vector<Vector>& rows) {
  int n = alg.dim();
  std::size_t tuples = pow_size(n, p);
  std::size_t unknowns = tuples * static_cast<std::size_t>(n);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::vector<int> idx = unflatten_index(t, n, p);
    for (int r = 0; r < n; ++r) {
      Vector row(unknowns);
      for (int k = 0; k < n; ++k)
        row[t * n + static_cast<std::size_t>(k)] +=
            beta.at(static_cast<std::size_t>(r), static_cast<std::size_t>(k));
      // subtract f(alpha e_{t_1}, ..., alpha e_{t_p}) coordinate r
      std::vector<int> sigma(static_cast<std::size_t>(p), 0);
      if (p == 0) {
        row[static_cast<std::size_t>(r)] -= 1;
      } else {
        do {
          Rational coef(1);
          for (int s = 0; s < p; ++s)
            coef *= alg.alpha().at(static_cast<std::size_t>(sigma[s]),
                                   static_cast<std::size_t>(idx[s]));
          if (coef != 0)
            row[flat_index(sigma, n) * n + static_cast<std::size_t>(r)] -= coef;
        } while (next_index(sigma, n));
      }
      if (!row.is_zero()) rows.push_back(std::move(row));
    }
  }
}

}  // namespace

std::vector<Cochain> cochain_space_basis(const HomAlgebra& alg, int p, Coeffs coeffs) {
  if (p < 0) throw DimensionError("cochain degree must be >= 0");
  if (p == 0) {
    if (coeffs == Coeffs::Algebra && !alg.regular())
      throw RegularityError("degree-0 cochains need a regular algebra");
    if (coeffs == Coeffs::Dual && !alg.regular_unital())
      throw RegularityError("degree-0 dual cochains need a regular unital algebra");
  }
  Matrix beta = coefficient_beta(alg, coeffs);
  std::vector<Vector> rows;
  append_equivariance_rows(alg, p, beta, rows);
  std::size_t unknowns = pow_size(alg.dim(), p) * static_cast<std::size_t>(alg.dim());
  Matrix constraints =
      rows.empty() ? Matrix(0, unknowns) : Matrix::from_rows(rows, unknowns);
  return basis_from_kernel(alg, p, coeffs, constraints);
}

std::vector<Cochain> normalized_cochain_space_basis(const HomAlgebra& alg, int p,
                                                    Coeffs coeffs) {
  if (!alg.unital())
    throw RegularityError("normalized cochains need a unital algebra");
  if (p == 0) return cochain_space_basis(alg, p, coeffs);

  int n = alg.dim();
  Matrix beta = coefficient_beta(alg, coeffs);
  std::vector<Vector> rows;
  append_equivariance_rows(alg, p, beta, rows);

  std::size_t unknowns = pow_size(n, p) * static_cast<std::size_t>(n);
  const Vector& one = alg.unit();
  // vanish when the unit sits in slot s
  for (int s = 0; s < p; ++s) {
    std::vector<int> rest(static_cast<std::size_t>(p - 1), 0);
    bool more = true;
    while (more) {
      for (int r = 0; r < n; ++r) {
        Vector row(unknowns);
        for (int j = 0; j < n; ++j) {
          if (one[j] == 0) continue;
          std::vector<int> idx(rest.begin(), rest.begin() + s);
          idx.push_back(j);
          idx.insert(idx.end(), rest.begin() + s, rest.end());
          row[flat_index(idx, n) * n + static_cast<std::size_t>(r)] += one[j];
        }
        if (!row.is_zero()) rows.push_back(std::move(row));
      }
      more = (p > 1) ? next_index(rest, n) : false;
    }
  }
  Matrix constraints = Matrix::from_rows(rows, unknowns);
  return basis_from_kernel(alg, p, coeffs, constraints);
}

}  // namespace homcalc
