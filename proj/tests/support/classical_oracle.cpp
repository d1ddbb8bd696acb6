#include "classical_oracle.hpp"

#include <stdexcept>

#include "homcalc/indexing.hpp"

namespace homcalc::classical {
namespace {

void require_classical(const HomAlgebra& alg) {
  if (!(alg.alpha() == Matrix::identity(static_cast<std::size_t>(alg.dim()))))
    throw std::invalid_argument("classical oracle requires alpha = id");
}

Vector basis_vec(int dim, int i) {
  return Vector::unit(static_cast<std::size_t>(dim), static_cast<std::size_t>(i));
}

// out += coef * (v_0 x v_1 x ... x v_m), expanding each vector factor.
void add_tensor(Chain& out, const Rational& coef, const std::vector<Vector>& factors) {
  int dim = out.dim;
  std::vector<int> idx(factors.size(), 0);
  do {
    Rational c = coef;
    bool zero = false;
    for (std::size_t s = 0; s < factors.size() && !zero; ++s) {
      if (factors[s][static_cast<std::size_t>(idx[s])] == 0)
        zero = true;
      else
        c *= factors[s][static_cast<std::size_t>(idx[s])];
    }
    if (!zero) out.c[flat_index(idx, dim)] += c;
  } while (next_index(idx, dim));
}

std::vector<int> rotate(const std::vector<int>& idx, int k) {
  int len = static_cast<int>(idx.size());
  k = ((k % len) + len) % len;
  std::vector<int> out(idx.size());
  for (int s = 0; s < len; ++s)
    out[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>((s - k + len) % len)];
  return out;
}

Chain rotate_chain(const Chain& x) {
  if (x.degree == 0) return x;
  Chain out = x;
  for (auto& v : out.c) v = 0;
  for (std::size_t t = 0; t < x.c.size(); ++t) {
    if (x.c[t] == 0) continue;
    out.c[flat_index(rotate(unflatten_index(t, x.dim, x.degree + 1), 1), x.dim)] += x.c[t];
  }
  return out;
}

Vector value_on(const Cochain& f, const std::vector<int>& tuple) {
  if (f.degree == 0) return f.value_at(0);
  return f.value_at(flat_index(tuple, f.dim));
}

}  // namespace

Cochain delta(const HomAlgebra& alg, const Cochain& f) {
  require_classical(alg);
  int p = f.degree, dim = alg.dim();
  Cochain out = zero_cochain(alg, p + 1, f.coeffs);
  if (f.coeffs != Coeffs::Algebra)
    throw std::invalid_argument("classical delta: algebra coefficients only");
  for (std::size_t t = 0; t < out.input_tuples(); ++t) {
    std::vector<int> idx = unflatten_index(t, dim, p + 1);
    Vector acc(static_cast<std::size_t>(dim));
    acc += alg.multiply(basis_vec(dim, idx[0]),
                        value_on(f, {idx.begin() + 1, idx.end()}));
    for (int i = 1; i <= p; ++i) {
      std::vector<Vector> args;
      args.reserve(static_cast<std::size_t>(p));
      for (int s = 0; s < i - 1; ++s) args.push_back(basis_vec(dim, idx[s]));
      args.push_back(alg.multiply(basis_vec(dim, idx[i - 1]), basis_vec(dim, idx[i])));
      for (int s = i + 1; s <= p; ++s) args.push_back(basis_vec(dim, idx[s]));
      Vector term = f.eval(args);
      term *= Rational(parity_sign(i));
      acc += term;
    }
    Vector last = alg.multiply(value_on(f, {idx.begin(), idx.end() - 1}),
                               basis_vec(dim, idx[p]));
    last *= Rational(parity_sign(p + 1));
    acc += last;
    for (int k = 0; k < dim; ++k) out.entry(t, k) = acc[k];
  }
  return out;
}

Chain boundary(const HomAlgebra& alg, const Chain& x) {
  require_classical(alg);
  int n = x.degree, dim = alg.dim();
  if (n < 1) throw std::invalid_argument("classical boundary needs degree >= 1");
  Chain out = zero_chain(alg, n - 1);
  for (std::size_t t = 0; t < x.c.size(); ++t) {
    if (x.c[t] == 0) continue;
    std::vector<int> idx = unflatten_index(t, dim, n + 1);
    for (int i = 0; i <= n - 1; ++i) {
      std::vector<Vector> factors;
      factors.reserve(static_cast<std::size_t>(n));
      for (int s = 0; s < i; ++s) factors.push_back(basis_vec(dim, idx[s]));
      factors.push_back(alg.multiply_basis(idx[i], idx[i + 1]));
      for (int s = i + 2; s <= n; ++s) factors.push_back(basis_vec(dim, idx[s]));
      add_tensor(out, x.c[t] * parity_sign(i), factors);
    }
    std::vector<Vector> last;
    last.reserve(static_cast<std::size_t>(n));
    last.push_back(alg.multiply_basis(idx[n], idx[0]));
    for (int s = 1; s <= n - 1; ++s) last.push_back(basis_vec(dim, idx[s]));
    add_tensor(out, x.c[t] * parity_sign(n), last);
  }
  return out;
}

Cochain insert(const HomAlgebra& alg, const Cochain& f, int i, const Cochain& g) {
  require_classical(alg);
  int p = f.degree, q = g.degree, dim = alg.dim();
  if (p < 1 || i < 1 || i > p) throw std::invalid_argument("classical insert: bad slot");
  Cochain out = zero_cochain(alg, p + q - 1);
  for (std::size_t t = 0; t < out.input_tuples(); ++t) {
    std::vector<int> idx = unflatten_index(t, dim, p + q - 1);
    std::vector<Vector> args;
    args.reserve(static_cast<std::size_t>(p));
    for (int s = 0; s < i - 1; ++s) args.push_back(basis_vec(dim, idx[s]));
    args.push_back(value_on(g, {idx.begin() + (i - 1), idx.begin() + (i - 1) + q}));
    for (int s = i - 1 + q; s < p + q - 1; ++s) args.push_back(basis_vec(dim, idx[s]));
    Vector v = f.eval(args);
    for (int k = 0; k < dim; ++k) out.entry(t, k) = v[k];
  }
  return out;
}

Cochain cup(const HomAlgebra& alg, const Cochain& f, const Cochain& g) {
  require_classical(alg);
  int p = f.degree, q = g.degree, dim = alg.dim();
  Cochain out = zero_cochain(alg, p + q);
  for (std::size_t t = 0; t < out.input_tuples(); ++t) {
    std::vector<int> idx = unflatten_index(t, dim, p + q);
    Vector v = alg.multiply(value_on(g, {idx.begin(), idx.begin() + q}),
                            value_on(f, {idx.begin() + q, idx.end()}));
    for (int k = 0; k < dim; ++k) out.entry(t, k) = v[k];
  }
  return out;
}

Cochain bracket(const HomAlgebra& alg, const Cochain& f, const Cochain& g) {
  require_classical(alg);
  int p = f.degree, q = g.degree;
  if (p + q < 1) throw std::invalid_argument("classical bracket needs p + q >= 1");
  Cochain out = zero_cochain(alg, p + q - 1);
  for (int i = 1; i <= p; ++i) {
    Cochain term = insert(alg, f, i, g);
    term *= Rational(parity_sign(static_cast<long>(q - 1) * (i - 1)));
    out += term;
  }
  int outer = parity_sign(static_cast<long>(p - 1) * (q - 1));
  for (int i = 1; i <= q; ++i) {
    Cochain term = insert(alg, g, i, f);
    term *= Rational(-outer * parity_sign(static_cast<long>(p - 1) * (i - 1)));
    out += term;
  }
  return out;
}

Chain cap(const HomAlgebra& alg, const Cochain& f, const Chain& x) {
  require_classical(alg);
  int p = f.degree, n = x.degree, dim = alg.dim();
  if (p > n) throw std::invalid_argument("classical cap: degree out of range");
  Chain out = zero_chain(alg, n - p);
  for (std::size_t t = 0; t < x.c.size(); ++t) {
    if (x.c[t] == 0) continue;
    std::vector<int> idx = unflatten_index(t, dim, n + 1);
    std::vector<Vector> factors;
    factors.reserve(static_cast<std::size_t>(n - p + 1));
    factors.push_back(alg.multiply(basis_vec(dim, idx[0]),
                                   value_on(f, {idx.begin() + 1, idx.begin() + 1 + p})));
    for (int s = p + 1; s <= n; ++s) factors.push_back(basis_vec(dim, idx[s]));
    add_tensor(out, x.c[t], factors);
  }
  return out;
}

Chain lie(const HomAlgebra& alg, const Cochain& f, const Chain& x) {
  require_classical(alg);
  int p = f.degree, n = x.degree, dim = alg.dim();
  if (p > n) throw std::invalid_argument("classical lie: degree out of range");
  Chain out = zero_chain(alg, n - p + 1);
  for (std::size_t t = 0; t < x.c.size(); ++t) {
    if (x.c[t] == 0) continue;
    std::vector<int> idx = unflatten_index(t, dim, n + 1);
    for (int i = 1; i <= n - p + 1; ++i) {
      std::vector<Vector> factors;
      factors.reserve(static_cast<std::size_t>(n - p + 2));
      for (int s = 0; s < i; ++s) factors.push_back(basis_vec(dim, idx[s]));
      factors.push_back(value_on(f, {idx.begin() + i, idx.begin() + i + p}));
      for (int s = i + p; s <= n; ++s) factors.push_back(basis_vec(dim, idx[s]));
      add_tensor(out, x.c[t] * parity_sign(static_cast<long>(p - 1) * (i - 1)), factors);
    }
    for (int i = 1; i <= p; ++i) {
      std::vector<int> rot = rotate(idx, i - 1);
      std::vector<Vector> factors;
      factors.reserve(static_cast<std::size_t>(n - p + 2));
      factors.push_back(value_on(f, {rot.begin(), rot.begin() + p}));
      for (int s = p; s <= n; ++s) factors.push_back(basis_vec(dim, rot[s]));
      add_tensor(out, x.c[t] * parity_sign(static_cast<long>(n) * (i - 1) + p - 1),
                 factors);
    }
  }
  return out;
}

Chain connes(const HomAlgebra& alg, const Chain& x) {
  require_classical(alg);
  if (!alg.unital()) throw std::invalid_argument("classical connes needs a unit");
  int n = x.degree;
  Chain out = zero_chain(alg, n + 1);
  for (int i = 0; i <= n; ++i) {
    // y = 1 x t^i(x)
    Chain y = zero_chain(alg, n + 1);
    for (std::size_t t = 0; t < x.c.size(); ++t) {
      if (x.c[t] == 0) continue;
      std::vector<int> rot = rotate(unflatten_index(t, x.dim, n + 1), i);
      std::vector<Vector> factors;
      factors.reserve(static_cast<std::size_t>(n + 2));
      factors.push_back(alg.unit());
      for (int s = 0; s <= n; ++s) factors.push_back(basis_vec(x.dim, rot[s]));
      add_tensor(y, x.c[t], factors);
    }
    Chain term = y - rotate_chain(y);
    term *= Rational(parity_sign(static_cast<long>(i) * n));
    out += term;
  }
  return out;
}

}  // namespace homcalc::classical
