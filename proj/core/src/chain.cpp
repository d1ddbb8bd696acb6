#include "homcalc/chain.hpp"

#include <sstream>

#include "homcalc/errors.hpp"

namespace homcalc {

namespace {

// Adds scale * (v_0 tensor v_1 ... v_m) to the coefficient vector of out.
void accumulate_product(Chain& out, const Rational& scale,
                        const std::vector<Vector>& factors) {
  if (static_cast<int>(factors.size()) != out.degree + 1)
    throw DimensionError("tensor factor count mismatch");
  int n = out.dim;
  std::vector<int> idx(factors.size(), 0);
  do {
    Rational coef = scale;
    bool zero = false;
    for (std::size_t s = 0; s < factors.size() && !zero; ++s) {
      const Rational& x = factors[s][static_cast<std::size_t>(idx[s])];
      if (x == 0)
        zero = true;
      else
        coef *= x;
    }
    if (!zero) out.c[flat_index(idx, n)] += coef;
  } while (next_index(idx, n));
}

std::vector<Vector> alpha_power_columns(const HomAlgebra& alg, long k) {
  const Matrix& m = alg.alpha_power(k);
  std::vector<Vector> cols;
  cols.reserve(static_cast<std::size_t>(alg.dim()));
  for (int j = 0; j < alg.dim(); ++j) cols.push_back(m.column(static_cast<std::size_t>(j)));
  return cols;
}

// Tuple of t^k(x) at positions s: original index (s - k) mod (n+1).
std::vector<int> rotate_tuple(const std::vector<int>& idx, int k) {
  int len = static_cast<int>(idx.size());
  std::vector<int> out(idx.size());
  for (int s = 0; s < len; ++s)
    out[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(((s - k) % len + len) % len)];
  return out;
}

}  // namespace

bool Chain::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

Chain& Chain::operator+=(const Chain& o) {
  if (degree != o.degree || dim != o.dim)
    throw DimensionError("chain shape mismatch in +");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  if (degree != o.degree || dim != o.dim)
    throw DimensionError("chain shape mismatch in -");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Chain& Chain::operator*=(const Rational& s) {
  for (auto& x : c) x *= s;
  return *this;
}

Chain zero_chain(const HomAlgebra& alg, int degree) {
  if (degree < 0) throw DimensionError("chain degree must be >= 0");
  Chain x;
  x.degree = degree;
  x.dim = alg.dim();
  x.c.assign(pow_size(alg.dim(), degree + 1), Rational(0));
  return x;
}

Chain basis_chain(const HomAlgebra& alg, int degree, std::size_t flat) {
  Chain x = zero_chain(alg, degree);
  x.c[flat] = 1;
  return x;
}

Chain make_chain(const HomAlgebra& alg, int degree, std::vector<Rational> coeffs) {
  Chain x = zero_chain(alg, degree);
  if (coeffs.size() != x.c.size())
    throw DimensionError("chain coefficient vector has wrong length");
  x.c = std::move(coeffs);
  return x;
}

Chain bullet(const HomAlgebra& alg, const Cochain& f, int i, const Chain& x) {
  if (f.coeffs != Coeffs::Algebra)
    throw DimensionError("bullet takes algebra-valued cochains");
  int p = f.degree, n = x.degree;
  if (p >= 1) {
    if (p > n || i < 1 || i > n - p + 1)
      throw DimensionError("bullet: slot out of range");
  } else {
    if (i < 1 || i > n + 1) throw DimensionError("bullet: slot out of range");
  }
  std::vector<Vector> edge = alpha_power_columns(alg, p - 1);

  Chain out = zero_chain(alg, n - p + 1);
  std::vector<Vector> factors(static_cast<std::size_t>(n - p + 2));
  for (std::size_t t = 0; t < x.c.size(); ++t) {
    if (x.c[t] == 0) continue;
    std::vector<int> idx = unflatten_index(t, alg.dim(), n + 1);
    for (int s = 0; s < i; ++s)
      factors[static_cast<std::size_t>(s)] = edge[static_cast<std::size_t>(idx[s])];
    if (p == 0) {
      factors[static_cast<std::size_t>(i)] = f.value_at(0);
    } else {
      std::vector<int> sub(idx.begin() + i, idx.begin() + i + p);
      factors[static_cast<std::size_t>(i)] = f.value_at(flat_index(sub, alg.dim()));
    }
    for (int s = i + p; s <= n; ++s)
      factors[static_cast<std::size_t>(s - p + 1)] = edge[static_cast<std::size_t>(idx[s])];
    accumulate_product(out, x.c[t], factors);
  }
  return out;
}

Chain bullet0(const HomAlgebra& alg, const Cochain& f, const Chain& x) {
  if (f.coeffs != Coeffs::Algebra)
    throw DimensionError("bullet0 takes algebra-valued cochains");
  int p = f.degree, n = x.degree;
  if (p > n + 1) throw DimensionError("bullet0: cochain degree exceeds n+1");
  std::vector<Vector> edge = alpha_power_columns(alg, p - 1);

  Chain out = zero_chain(alg, n - p + 1);
  std::vector<Vector> factors(static_cast<std::size_t>(n - p + 2));
  for (std::size_t t = 0; t < x.c.size(); ++t) {
    if (x.c[t] == 0) continue;
    std::vector<int> idx = unflatten_index(t, alg.dim(), n + 1);
    if (p == 0) {
      factors[0] = f.value_at(0);
    } else {
      std::vector<int> sub(idx.begin(), idx.begin() + p);
      factors[0] = f.value_at(flat_index(sub, alg.dim()));
    }
    for (int s = p; s <= n; ++s)
      factors[static_cast<std::size_t>(s - p + 1)] = edge[static_cast<std::size_t>(idx[s])];
    accumulate_product(out, x.c[t], factors);
  }
  return out;
}

Chain bullet_at(const HomAlgebra& alg, const Cochain& f, int i, const Chain& x) {
  return (i == 0) ? bullet0(alg, f, x) : bullet(alg, f, i, x);
}

Chain cyclic_t(const Chain& x) {
  if (x.degree == 0) return x;
  Chain out = x;
  for (auto& v : out.c) v = 0;
  for (std::size_t t = 0; t < x.c.size(); ++t) {
    if (x.c[t] == 0) continue;
    std::vector<int> idx = unflatten_index(t, x.dim, x.degree + 1);
    out.c[flat_index(rotate_tuple(idx, 1), x.dim)] += x.c[t];
  }
  return out;
}

Chain cyclic_t_power(const Chain& x, int k) {
  if (x.degree == 0) return x;
  int len = x.degree + 1;
  k = ((k % len) + len) % len;
  if (k == 0) return x;
  Chain out = x;
  for (auto& v : out.c) v = 0;
  for (std::size_t t = 0; t < x.c.size(); ++t) {
    if (x.c[t] == 0) continue;
    std::vector<int> idx = unflatten_index(t, x.dim, len);
    out.c[flat_index(rotate_tuple(idx, k), x.dim)] += x.c[t];
  }
  return out;
}

Chain boundary_b(const HomAlgebra& alg, const Chain& x) {
  int n = x.degree;
  if (n < 1) throw DimensionError("boundary_b needs degree >= 1");
  Cochain pi = multiplication_cochain(alg);
  Chain out = zero_chain(alg, n - 1);
  for (int i = 0; i <= n - 1; ++i) {
    Chain term = bullet_at(alg, pi, i, x);
    term *= Rational(parity_sign(i));
    out += term;
  }
  Chain last = bullet0(alg, pi, cyclic_t(x));
  last *= Rational(parity_sign(n));
  out += last;
  return out;
}

Chain boundary_d_alpha(const HomAlgebra& alg, const Chain& x) {
  int n = x.degree;
  if (n < 1) throw DimensionError("boundary_d_alpha needs degree >= 1");
  int dim = alg.dim();
  std::vector<Vector> acols = alpha_power_columns(alg, 1);

  Chain out = zero_chain(alg, n - 1);
  std::vector<Vector> factors(static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < x.c.size(); ++t) {
    if (x.c[t] == 0) continue;
    std::vector<int> idx = unflatten_index(t, dim, n + 1);

    factors[0] = alg.multiply_basis(idx[0], idx[1]);
    for (int s = 2; s <= n; ++s)
      factors[static_cast<std::size_t>(s - 1)] = acols[static_cast<std::size_t>(idx[s])];
    accumulate_product(out, x.c[t], factors);

    factors[0] = alg.multiply_basis(idx[static_cast<std::size_t>(n)], idx[0]);
    for (int s = 1; s <= n - 1; ++s)
      factors[static_cast<std::size_t>(s)] = acols[static_cast<std::size_t>(idx[s])];
    accumulate_product(out, x.c[t] * parity_sign(n), factors);

    for (int i = 1; i <= n - 1; ++i) {
      factors[0] = acols[static_cast<std::size_t>(idx[0])];
      for (int s = 1; s < i; ++s)
        factors[static_cast<std::size_t>(s)] = acols[static_cast<std::size_t>(idx[s])];
      factors[static_cast<std::size_t>(i)] =
          alg.multiply_basis(idx[static_cast<std::size_t>(i)],
                             idx[static_cast<std::size_t>(i + 1)]);
      for (int s = i + 2; s <= n; ++s)
        factors[static_cast<std::size_t>(s - 1)] = acols[static_cast<std::size_t>(idx[s])];
      accumulate_product(out, x.c[t] * parity_sign(i), factors);
    }
  }
  return out;
}

Chain cap(const HomAlgebra& alg, const Cochain& f, const Chain& x) {
  if (f.degree > x.degree) throw DimensionError("cap: cochain degree exceeds chain degree");
  Cochain pi = multiplication_cochain(alg);
  return bullet0(alg, comp(alg, pi, 2, f), x);
}

Chain cap_explicit(const HomAlgebra& alg, const Cochain& f, const Chain& x) {
  int p = f.degree, n = x.degree;
  if (p > n) throw DimensionError("cap: cochain degree exceeds chain degree");
  int dim = alg.dim();
  std::vector<Vector> head = alpha_power_columns(alg, p - 1);
  std::vector<Vector> tail = alpha_power_columns(alg, p);

  Chain out = zero_chain(alg, n - p);
  std::vector<Vector> factors(static_cast<std::size_t>(n - p + 1));
  for (std::size_t t = 0; t < x.c.size(); ++t) {
    if (x.c[t] == 0) continue;
    std::vector<int> idx = unflatten_index(t, dim, n + 1);
    Vector fv;
    if (p == 0) {
      fv = f.value_at(0);
    } else {
      std::vector<int> sub(idx.begin() + 1, idx.begin() + 1 + p);
      fv = f.value_at(flat_index(sub, dim));
    }
    factors[0] = alg.multiply(head[static_cast<std::size_t>(idx[0])], fv);
    for (int s = p + 1; s <= n; ++s)
      factors[static_cast<std::size_t>(s - p)] = tail[static_cast<std::size_t>(idx[s])];
    accumulate_product(out, x.c[t], factors);
  }
  return out;
}

Chain lie(const HomAlgebra& alg, const Cochain& f, const Chain& x) {
  int p = f.degree, n = x.degree;
  if (p > n + 1) throw DimensionError("lie: cochain degree exceeds n+1");
  if (p == n + 1) {
    Chain out = zero_chain(alg, 0);
    for (int i = 0; i <= n; ++i) {
      Chain term = bullet0(alg, f, cyclic_t_power(x, i));
      term *= Rational(parity_sign(static_cast<long>(i) * n));
      out += term;
    }
    out *= Rational(parity_sign(p - 1));
    return out;
  }
  Chain out = zero_chain(alg, n - p + 1);
  for (int i = 1; i <= n - p + 1; ++i) {
    Chain term = bullet(alg, f, i, x);
    term *= Rational(parity_sign(static_cast<long>(p - 1) * (i - 1)));
    out += term;
  }
  for (int i = 1; i <= p; ++i) {
    Chain term = bullet0(alg, f, cyclic_t_power(x, i - 1));
    term *= Rational(parity_sign(static_cast<long>(n) * (i - 1) + p - 1));
    out += term;
  }
  return out;
}

Chain lie_explicit(const HomAlgebra& alg, const Cochain& f, const Chain& x) {
  int p = f.degree, n = x.degree;
  if (p >= n + 1) throw DimensionError("lie_explicit covers deg f < deg x + 1 only");
  int dim = alg.dim();
  std::vector<Vector> edge = alpha_power_columns(alg, p - 1);

  Chain out = zero_chain(alg, n - p + 1);
  for (std::size_t t = 0; t < x.c.size(); ++t) {
    if (x.c[t] == 0) continue;
    std::vector<int> idx = unflatten_index(t, dim, n + 1);

    // insertions away from slot 0
    for (int i = 1; i <= n - p + 1; ++i) {
      std::vector<Vector> factors(static_cast<std::size_t>(n - p + 2));
      for (int s = 0; s < i; ++s)
        factors[static_cast<std::size_t>(s)] = edge[static_cast<std::size_t>(idx[s])];
      if (p == 0) {
        factors[static_cast<std::size_t>(i)] = f.value_at(0);
      } else {
        std::vector<int> sub(idx.begin() + i, idx.begin() + i + p);
        factors[static_cast<std::size_t>(i)] = f.value_at(flat_index(sub, dim));
      }
      for (int s = i + p; s <= n; ++s)
        factors[static_cast<std::size_t>(s - p + 1)] = edge[static_cast<std::size_t>(idx[s])];
      accumulate_product(out, x.c[t] * parity_sign(static_cast<long>(p - 1) * (i - 1)),
                         factors);
    }
    // wrap-around terms: rotate by i-1, apply f to the leading block
    for (int i = 1; i <= p; ++i) {
      std::vector<int> rot = rotate_tuple(idx, i - 1);
      std::vector<Vector> factors(static_cast<std::size_t>(n - p + 2));
      std::vector<int> sub(rot.begin(), rot.begin() + p);
      factors[0] = f.value_at(flat_index(sub, dim));
      for (int s = p; s <= n; ++s)
        factors[static_cast<std::size_t>(s - p + 1)] = edge[static_cast<std::size_t>(rot[s])];
      accumulate_product(out,
                         x.c[t] * parity_sign(static_cast<long>(n) * (i - 1) + p - 1),
                         factors);
    }
  }
  return out;
}

Chain connes_B(const HomAlgebra& alg, const Chain& x) {
  if (!alg.regular_unital())
    throw RegularityError("Connes operator needs a regular unital algebra");
  Cochain e = unit_cochain(alg);
  int n = x.degree;
  Chain out = zero_chain(alg, n + 1);
  for (int i = 0; i <= n; ++i) {
    Chain y = cyclic_t(bullet(alg, e, n + 1, cyclic_t_power(x, i)));
    Chain term = y - cyclic_t(y);
    term *= Rational(parity_sign(static_cast<long>(i) * n));
    out += term;
  }
  return out;
}

Chain homotopy_S(const HomAlgebra& alg, const Cochain& f, const Chain& x) {
  if (!alg.regular_unital())
    throw RegularityError("Cartan homotopy needs a regular unital algebra");
  int p = f.degree, n = x.degree;
  if (n - p + 2 < 0) throw DimensionError("homotopy_S: degree out of range");
  if (p > n) return zero_chain(alg, n - p + 2);
  Cochain e = unit_cochain(alg);
  Chain out = zero_chain(alg, n - p + 2);
  for (int j = 1; j <= n - p + 1; ++j) {
    Chain rotated = cyclic_t_power(x, j - 1);
    for (int i = j; i <= n - p + 1; ++i) {
      Chain term = bullet0(alg, e, bullet(alg, f, i, rotated));
      term *= Rational(
          parity_sign(static_cast<long>(n) * (j - 1) + static_cast<long>(p - 1) * (i - 1)));
      out += term;
    }
  }
  return out;
}

namespace {

// Spanning set of the degenerate subspace D(n).
std::vector<Vector> degenerate_generators(const HomAlgebra& alg, int n) {
  int dim = alg.dim();
  std::vector<Vector> gens;
  if (n < 1) return gens;
  const Vector& one = alg.unit();
  std::size_t ambient = pow_size(dim, n + 1);
  for (int s = 1; s <= n; ++s) {
    std::vector<int> rest(static_cast<std::size_t>(n), 0);  // slots except s
    do {
      Vector v(ambient);
      for (int j = 0; j < dim; ++j) {
        if (one[j] == 0) continue;
        std::vector<int> idx(rest.begin(), rest.begin() + s);
        idx.push_back(j);
        idx.insert(idx.end(), rest.begin() + s, rest.end());
        v[flat_index(idx, dim)] += one[j];
      }
      gens.push_back(std::move(v));
    } while (next_index(rest, dim));
  }
  return gens;
}

std::string first_witness(const Vector& v) {
  std::ostringstream os;
  os << "coefficient vector [";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << to_string(v[i]);
  }
  os << "]";
  return os.str();
}

}  // namespace

bool NormalizedQuotient::contains_degenerate(const Chain& x) const {
  IncrementalSpan span(ambient_dim);
  for (const Vector& d : degenerate_basis) span.add(d);
  return span.contains(Vector(x.c));
}

Vector NormalizedQuotient::class_coords(const Chain& x) const {
  std::vector<Vector> cols;
  cols.reserve(degenerate_basis.size() + representatives.size());
  for (const Vector& d : degenerate_basis) cols.push_back(d);
  for (const Vector& r : representatives) cols.push_back(r);
  auto sol = solve(Matrix::from_columns(cols, ambient_dim), Vector(x.c));
  if (!sol)
    throw InternalConsistencyError("normalized quotient basis does not span the ambient space");
  Vector out(representatives.size());
  for (std::size_t i = 0; i < representatives.size(); ++i)
    out[i] = (*sol)[degenerate_basis.size() + i];
  return out;
}

NormalizedQuotient normalized_quotient(const HomAlgebra& alg, int n) {
  if (!alg.unital())
    throw RegularityError("normalized quotient needs a unital algebra");
  if (n < 0) throw DimensionError("normalized quotient: degree must be >= 0");
  int dim = alg.dim();
  std::size_t ambient = pow_size(dim, n + 1);

  NormalizedQuotient q;
  q.degree = n;
  q.ambient_dim = ambient;
  IncrementalSpan span(ambient);
  for (Vector& g : degenerate_generators(alg, n))
    if (span.add(g)) q.degenerate_basis.push_back(std::move(g));

  std::vector<Vector> std_basis;
  std_basis.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i) std_basis.push_back(Vector::unit(ambient, i));
  q.representatives = quotient_representatives(q.degenerate_basis, std_basis);

  // closure gate: b and (when defined) B must preserve degeneracy
  if (n >= 1) {
    IncrementalSpan lower(pow_size(dim, n));
    for (const Vector& g : degenerate_generators(alg, n - 1)) lower.add(g);
    for (const Vector& d : q.degenerate_basis) {
      Chain bd = boundary_b(alg, make_chain(alg, n, d.entries));
      if (!lower.contains(Vector(bd.c)))
        throw InternalConsistencyError(
            "boundary does not preserve the degenerate subspace; witness " +
            first_witness(d));
    }
  }
  if (alg.regular_unital()) {
    IncrementalSpan upper(pow_size(dim, n + 2));
    for (const Vector& g : degenerate_generators(alg, n + 1)) upper.add(g);
    for (const Vector& d : q.degenerate_basis) {
      Chain Bd = connes_B(alg, make_chain(alg, n, d.entries));
      if (!upper.contains(Vector(Bd.c)))
        throw InternalConsistencyError(
            "Connes operator does not preserve the degenerate subspace; witness " +
            first_witness(d));
    }
  }
  return q;
}

}  // namespace homcalc
