#include "homcalc/homology.hpp"

#include <string>

#include "homcalc/errors.hpp"

namespace homcalc {

namespace {

Vector raw_tensor(const Cochain& f) { return Vector(f.c); }

Vector raw_tensor(const Chain& x) { return Vector(x.c); }

// Coordinates of v in the span of basis vectors, or throws with `what`.
Vector coords_or_throw(std::span<const Vector> basis, const Vector& v, const char* what) {
  auto sol = coords_in_span(basis, v);
  if (!sol) throw InternalConsistencyError(what);
  return *sol;
}

}  // namespace

Vector Subquotient::class_coords(const Vector& v) const {
  std::vector<Vector> cols;
  cols.reserve(boundaries.size() + representatives.size());
  for (const Vector& b : boundaries) cols.push_back(b);
  for (const Vector& r : representatives) cols.push_back(r);
  auto sol = coords_in_span(cols, v);
  if (!sol)
    throw InternalConsistencyError("class_coords: vector is not a cycle in degree " +
                                   std::to_string(degree));
  Vector out(representatives.size());
  for (std::size_t i = 0; i < representatives.size(); ++i)
    out[i] = (*sol)[boundaries.size() + i];
  return out;
}

Subquotient make_subquotient(int degree, std::size_t ambient_dim, const Matrix* outgoing,
                             const Matrix* incoming) {
  Subquotient s;
  s.degree = degree;
  s.ambient_dim = ambient_dim;
  if (outgoing) {
    if (outgoing->cols != ambient_dim)
      throw DimensionError("make_subquotient: outgoing differential shape mismatch");
    s.cycles = kernel_basis(*outgoing);
  } else {
    for (std::size_t i = 0; i < ambient_dim; ++i)
      s.cycles.push_back(Vector::unit(ambient_dim, i));
  }
  if (incoming) {
    if (incoming->rows != ambient_dim)
      throw DimensionError("make_subquotient: incoming differential shape mismatch");
    s.boundaries = column_space_basis(*incoming);
  }
  IncrementalSpan cyc(ambient_dim);
  for (const Vector& c : s.cycles) cyc.add(c);
  for (const Vector& b : s.boundaries)
    if (!cyc.contains(b))
      throw InternalConsistencyError(
          "make_subquotient: boundary outside cycles in degree " + std::to_string(degree));
  s.representatives = quotient_representatives(s.boundaries, s.cycles);
  return s;
}

CochainComplex::CochainComplex(const HomAlgebra& alg, int max_degree, Coeffs coeffs,
                               bool normalized)
    : alg_(&alg), coeffs_(coeffs), normalized_(normalized), max_degree_(max_degree) {
  if (max_degree < 1) throw DimensionError("CochainComplex: max_degree must be >= 1");
  if (coeffs == Coeffs::Dual && !alg.regular_unital())
    throw RegularityError("dual coefficients need a regular unital algebra");
  min_degree_ = alg.regular() ? 0 : 1;
  if (normalized_ && !alg.unital())
    throw RegularityError("normalized cochain complex needs a unital algebra");

  for (int p = min_degree_; p <= max_degree_ + 1; ++p)
    bases_.push_back(normalized_ && p >= 1 ? normalized_cochain_space_basis(alg, p, coeffs)
                                           : cochain_space_basis(alg, p, coeffs));

  for (int p = min_degree_; p <= max_degree_; ++p) {
    const auto& dom = basis(p);
    const auto& codom = basis(p + 1);
    std::vector<Vector> codom_raw;
    codom_raw.reserve(codom.size());
    for (const Cochain& g : codom) codom_raw.push_back(raw_tensor(g));
    std::size_t raw_dim =
        pow_size(alg.dim(), p + 1) * static_cast<std::size_t>(alg.dim());
    Matrix d(codom.size(), dom.size());
    for (std::size_t j = 0; j < dom.size(); ++j) {
      Vector img = raw_tensor(delta_alpha(alg, dom[j]));
      if (img.size() != raw_dim) throw InternalConsistencyError("delta image shape mismatch");
      Vector co = coords_or_throw(codom_raw, img,
                                  "coboundary leaves the (normalized) cochain space");
      for (std::size_t i = 0; i < codom.size(); ++i) d.at(i, j) = co[i];
    }
    deltas_.push_back(std::move(d));
  }

  for (int p = min_degree_; p <= max_degree_; ++p) {
    const Matrix* out = &deltas_[static_cast<std::size_t>(p - min_degree_)];
    const Matrix* in =
        p > min_degree_ ? &deltas_[static_cast<std::size_t>(p - 1 - min_degree_)] : nullptr;
    spaces_.push_back(make_subquotient(p, basis(p).size(), out, in));
  }
}

const std::vector<Cochain>& CochainComplex::basis(int p) const {
  if (p < min_degree_ || p > max_degree_ + 1)
    throw DimensionError("CochainComplex: degree out of range");
  return bases_[static_cast<std::size_t>(p - min_degree_)];
}

const Matrix& CochainComplex::delta_matrix(int p) const {
  if (p < min_degree_ || p > max_degree_)
    throw DimensionError("CochainComplex: delta degree out of range");
  return deltas_[static_cast<std::size_t>(p - min_degree_)];
}

Vector CochainComplex::coords(const Cochain& f) const {
  if (f.coeffs != coeffs_) throw DimensionError("cochain has wrong coefficient type");
  const auto& b = basis(f.degree);
  std::vector<Vector> raws;
  raws.reserve(b.size());
  for (const Cochain& g : b) raws.push_back(raw_tensor(g));
  return coords_or_throw(raws, raw_tensor(f),
                         "cochain lies outside the (normalized) cochain space");
}

Cochain CochainComplex::from_coords(int p, const Vector& v) const {
  const auto& b = basis(p);
  if (v.size() != b.size()) throw DimensionError("from_coords: wrong coordinate length");
  Cochain f = zero_cochain(*alg_, p, coeffs_);
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (v[j] == 0) continue;
    Cochain t = b[j];
    t *= v[j];
    f += t;
  }
  return f;
}

const Subquotient& CochainComplex::cohomology(int p) const {
  if (p < min_degree_ || p > max_degree_)
    throw DimensionError("CochainComplex: cohomology degree out of range");
  return spaces_[static_cast<std::size_t>(p - min_degree_)];
}

bool CochainComplex::is_cocycle(const Cochain& f) const {
  return delta_matrix(f.degree).apply(coords(f)).is_zero();
}

Vector CochainComplex::class_of(const Cochain& f) const {
  Vector co = coords(f);
  if (!delta_matrix(f.degree).apply(co).is_zero())
    throw InternalConsistencyError("class_of: cochain is not a cocycle");
  return cohomology(f.degree).class_coords(co);
}

bool CochainComplex::same_class(const Cochain& f, const Cochain& g) const {
  return class_of(f) == class_of(g);
}

Cochain CochainComplex::class_representative(int p, std::size_t k) const {
  return from_coords(p, cohomology(p).representatives.at(k));
}

Cochain CochainComplex::class_lift(int p, const Vector& cls) const {
  const Subquotient& s = cohomology(p);
  if (cls.size() != s.dim()) throw DimensionError("class_lift: wrong class coordinate length");
  Vector co(space_dim(p));
  for (std::size_t k = 0; k < s.dim(); ++k)
    if (cls[k] != 0) co += cls[k] * s.representatives[k];
  return from_coords(p, co);
}

ChainComplex::ChainComplex(const HomAlgebra& alg, int max_degree, bool normalized)
    : alg_(&alg), normalized_(normalized), max_degree_(max_degree) {
  if (max_degree < 1) throw DimensionError("ChainComplex: max_degree must be >= 1");
  if (normalized_)
    for (int n = 0; n <= max_degree_ + 1; ++n)
      quotients_.push_back(normalized_quotient(alg, n));

  for (int n = 1; n <= max_degree_ + 1; ++n) {
    Matrix b(space_dim(n - 1), space_dim(n));
    for (std::size_t j = 0; j < space_dim(n); ++j) {
      Vector img = coords(boundary_b(alg, lift(n, Vector::unit(space_dim(n), j))));
      for (std::size_t i = 0; i < b.rows; ++i) b.at(i, j) = img[i];
    }
    boundaries_.push_back(std::move(b));
  }

  if (has_connes()) {
    for (int n = 0; n <= max_degree_; ++n) {
      Matrix B(space_dim(n + 1), space_dim(n));
      for (std::size_t j = 0; j < space_dim(n); ++j) {
        Vector img = coords(connes_B(alg, lift(n, Vector::unit(space_dim(n), j))));
        for (std::size_t i = 0; i < B.rows; ++i) B.at(i, j) = img[i];
      }
      connes_.push_back(std::move(B));
    }
  }

  for (int n = 0; n <= max_degree_; ++n) {
    const Matrix* out = n >= 1 ? &boundaries_[static_cast<std::size_t>(n - 1)] : nullptr;
    const Matrix* in = &boundaries_[static_cast<std::size_t>(n)];
    spaces_.push_back(make_subquotient(n, space_dim(n), out, in));
  }
}

bool ChainComplex::has_connes() const { return normalized_ && alg_->regular_unital(); }

std::size_t ChainComplex::space_dim(int n) const {
  if (n < 0 || n > max_degree_ + 1) throw DimensionError("ChainComplex: degree out of range");
  if (normalized_) return quotients_[static_cast<std::size_t>(n)].representatives.size();
  return pow_size(alg_->dim(), n + 1);
}

Vector ChainComplex::coords(const Chain& x) const {
  if (normalized_) return quotient(x.degree).class_coords(x);
  return raw_tensor(x);
}

Chain ChainComplex::lift(int n, const Vector& v) const {
  if (v.size() != space_dim(n)) throw DimensionError("lift: wrong coordinate length");
  if (!normalized_) return make_chain(*alg_, n, v.entries);
  const auto& reps = quotient(n).representatives;
  Chain x = zero_chain(*alg_, n);
  for (std::size_t j = 0; j < reps.size(); ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < x.c.size(); ++i) x.c[i] += v[j] * reps[j][i];
  }
  return x;
}

const Matrix& ChainComplex::boundary_matrix(int n) const {
  if (n < 1 || n > max_degree_ + 1)
    throw DimensionError("ChainComplex: boundary degree out of range");
  return boundaries_[static_cast<std::size_t>(n - 1)];
}

const Matrix& ChainComplex::connes_matrix(int n) const {
  if (!has_connes())
    throw RegularityError("Connes matrix needs a normalized complex over a regular unital algebra");
  if (n < 0 || n > max_degree_) throw DimensionError("ChainComplex: Connes degree out of range");
  return connes_[static_cast<std::size_t>(n)];
}

const Subquotient& ChainComplex::homology(int n) const {
  if (n < 0 || n > max_degree_) throw DimensionError("ChainComplex: homology degree out of range");
  return spaces_[static_cast<std::size_t>(n)];
}

bool ChainComplex::is_cycle(const Chain& x) const {
  if (x.degree == 0) return true;
  return boundary_matrix(x.degree).apply(coords(x)).is_zero();
}

Vector ChainComplex::class_of(const Chain& x) const {
  if (!is_cycle(x)) throw InternalConsistencyError("class_of: chain is not a cycle");
  return homology(x.degree).class_coords(coords(x));
}

bool ChainComplex::same_class(const Chain& x, const Chain& y) const {
  return class_of(x) == class_of(y);
}

Chain ChainComplex::class_representative(int n, std::size_t k) const {
  return lift(n, homology(n).representatives.at(k));
}

Chain ChainComplex::class_lift(int n, const Vector& cls) const {
  const Subquotient& s = homology(n);
  if (cls.size() != s.dim()) throw DimensionError("class_lift: wrong class coordinate length");
  Vector co(space_dim(n));
  for (std::size_t k = 0; k < s.dim(); ++k)
    if (cls[k] != 0) co += cls[k] * s.representatives[k];
  return lift(n, co);
}

const NormalizedQuotient& ChainComplex::quotient(int n) const {
  if (!normalized_) throw DimensionError("quotient: complex is not normalized");
  if (n < 0 || n > max_degree_ + 1) throw DimensionError("quotient: degree out of range");
  return quotients_[static_cast<std::size_t>(n)];
}

Vector induced_cup(const CochainComplex& cc, const Cochain& f, const Cochain& g) {
  if (!cc.is_cocycle(f) || !cc.is_cocycle(g))
    throw InternalConsistencyError("induced_cup: operand is not a cocycle");
  return cc.class_of(cup(cc.algebra(), f, g));
}

Vector induced_bracket(const CochainComplex& cc, const Cochain& f, const Cochain& g) {
  if (!cc.is_cocycle(f) || !cc.is_cocycle(g))
    throw InternalConsistencyError("induced_bracket: operand is not a cocycle");
  return cc.class_of(bracket(cc.algebra(), f, g));
}

Vector induced_cap(const CochainComplex& cc, const ChainComplex& mc, const Cochain& f,
                   const Chain& x) {
  if (!cc.is_cocycle(f)) throw InternalConsistencyError("induced_cap: f is not a cocycle");
  if (!mc.is_cycle(x)) throw InternalConsistencyError("induced_cap: x is not a cycle");
  return mc.class_of(cap(cc.algebra(), f, x));
}

Vector induced_lie(const CochainComplex& cc, const ChainComplex& mc, const Cochain& f,
                   const Chain& x) {
  if (!cc.is_cocycle(f)) throw InternalConsistencyError("induced_lie: f is not a cocycle");
  if (!mc.is_cycle(x)) throw InternalConsistencyError("induced_lie: x is not a cycle");
  return mc.class_of(lie(cc.algebra(), f, x));
}

Vector induced_connes(const ChainComplex& mc, const Chain& x) {
  if (!mc.is_cycle(x)) throw InternalConsistencyError("induced_connes: x is not a cycle");
  return mc.class_of(connes_B(mc.algebra(), x));
}

Rational pairing(const Cochain& m, const Chain& x) {
  if (m.coeffs != Coeffs::Dual) throw DimensionError("pairing: m must be dual-valued");
  if (m.degree != x.degree || m.dim != x.dim) throw DimensionError("pairing: degree mismatch");
  int dim = x.dim, n = x.degree;
  Rational acc(0);
  for (std::size_t t = 0; t < x.c.size(); ++t) {
    if (x.c[t] == 0) continue;
    std::vector<int> idx = unflatten_index(t, dim, n + 1);
    std::vector<int> rest(idx.begin() + 1, idx.end());
    const Rational& mv = m.entry(flat_index(rest, dim), idx[0]);
    if (mv != 0) acc += x.c[t] * mv;
  }
  return acc;
}

Cochain dot_product(const HomAlgebra& alg, const Cochain& f, const Cochain& m) {
  if (f.coeffs != Coeffs::Algebra || m.coeffs != Coeffs::Dual)
    throw DimensionError("dot_product takes (algebra cochain, dual cochain)");
  Bimodule dual = dual_bimodule(alg);
  int p = f.degree, q = m.degree, dim = alg.dim();
  Cochain out = zero_cochain(alg, p + q, Coeffs::Dual);
  std::vector<int> idx(static_cast<std::size_t>(p + q), 0);
  std::size_t t = 0;
  if (p + q == 0) {
    Vector v = dual.left_act(f.value_at(0), m.value_at(0));
    for (int k = 0; k < dim; ++k) out.entry(0, k) = v[k];
    return out;
  }
  do {
    std::vector<int> head(idx.begin(), idx.begin() + p);
    std::vector<int> tail(idx.begin() + p, idx.end());
    Vector v = dual.left_act(f.value_at(flat_index(head, dim)),
                             m.value_at(flat_index(tail, dim)));
    for (int k = 0; k < dim; ++k) out.entry(t, k) = v[k];
    ++t;
  } while (next_index(idx, dim));
  return out;
}

Cochain connes_B_star(const HomAlgebra& alg, const Cochain& m) {
  if (m.coeffs != Coeffs::Dual) throw DimensionError("connes_B_star: m must be dual-valued");
  if (m.degree < 1) throw DimensionError("connes_B_star: degree must be >= 1");
  int n = m.degree - 1, dim = alg.dim();
  Rational sign(parity_sign(m.degree));
  Cochain out = zero_cochain(alg, n, Coeffs::Dual);
  for (std::size_t t = 0; t < pow_size(dim, n + 1); ++t) {
    Chain Bx = connes_B(alg, basis_chain(alg, n, t));
    Rational val = sign * pairing(m, Bx);
    if (val == 0) continue;
    std::vector<int> idx = unflatten_index(t, dim, n + 1);
    std::vector<int> rest(idx.begin() + 1, idx.end());
    out.entry(flat_index(rest, dim), idx[0]) = val;
  }
  if (!is_equivariant(alg, out))
    throw InternalConsistencyError("connes_B_star: result is not equivariant");
  return out;
}

const Matrix& DegreeOneLoweringOperator::at(int p) const {
  if (p < min_degree || p > max_degree)
    throw DimensionError("BV operator: degree out of range");
  return matrices[static_cast<std::size_t>(p - min_degree)];
}

namespace {

Matrix invert_or_throw(const Matrix& m, const std::string& what, bool hypothesis) {
  auto inv = (m.rows == m.cols) ? inverse(m) : std::nullopt;
  if (!inv) {
    if (hypothesis) throw HypothesisNotSatisfied(what);
    throw InternalConsistencyError(what);
  }
  return *inv;
}

}  // namespace

DegreeOneLoweringOperator bv_from_homology_class(const CochainComplex& cc,
                                                 const ChainComplex& mc, const Chain& c) {
  const HomAlgebra& alg = cc.algebra();
  if (!cc.normalized() || !mc.normalized() || cc.coeffs() != Coeffs::Algebra)
    throw DimensionError("bv_from_homology_class needs normalized complexes, algebra coefficients");
  if (!mc.has_connes()) throw RegularityError("bv_from_homology_class needs a regular unital algebra");
  int d = c.degree;
  if (d + 1 > mc.max_degree())
    throw DimensionError("bv_from_homology_class: chain complex too short (need degree d+1)");
  if (!mc.is_cycle(c)) throw HypothesisNotSatisfied("c is not a cycle");
  if (!mc.class_of(connes_B(alg, c)).is_zero())
    throw HypothesisNotSatisfied("B(c) is a nonzero homology class");

  int pmax = std::min(cc.max_degree(), d);
  for (int p = d + 1; p <= cc.max_degree(); ++p)
    if (cc.cohomology(p).dim() > 0)
      throw HypothesisNotSatisfied("cap map at degree " + std::to_string(p) +
                                   " cannot be an isomorphism (H^" + std::to_string(p) +
                                   " nonzero, chain side vanishes)");

  // T_p : H^p -> H_{d-p}, [f] -> [i_f c]
  std::vector<Matrix> T, Tinv;
  for (int p = cc.min_degree(); p <= pmax; ++p) {
    const Subquotient& hp = cc.cohomology(p);
    const Subquotient& hd = mc.homology(d - p);
    Matrix t(hd.dim(), hp.dim());
    for (std::size_t k = 0; k < hp.dim(); ++k) {
      Vector cls = mc.class_of(cap(alg, cc.class_representative(p, k), c));
      for (std::size_t i = 0; i < t.rows; ++i) t.at(i, k) = cls[i];
    }
    Tinv.push_back(invert_or_throw(
        t, "cap map at degree " + std::to_string(p) + " is not an isomorphism", true));
    T.push_back(std::move(t));
  }

  DegreeOneLoweringOperator bv;
  bv.min_degree = cc.min_degree();
  bv.max_degree = pmax;
  for (int p = cc.min_degree(); p <= pmax; ++p) {
    if (p == cc.min_degree() && p == 0) {
      bv.matrices.push_back(Matrix(0, cc.cohomology(0).dim()));
      continue;
    }
    // induced B on homology classes: H_{d-p} -> H_{d-p+1}
    const Subquotient& dom = mc.homology(d - p);
    const Subquotient& codom = mc.homology(d - p + 1);
    Matrix Bh(codom.dim(), dom.dim());
    for (std::size_t k = 0; k < dom.dim(); ++k) {
      Vector cls = mc.class_of(connes_B(alg, mc.class_representative(d - p, k)));
      for (std::size_t i = 0; i < Bh.rows; ++i) Bh.at(i, k) = cls[i];
    }
    std::size_t ip = static_cast<std::size_t>(p - cc.min_degree());
    bv.matrices.push_back(Tinv[ip - 1] * Bh * T[ip]);
  }
  return bv;
}

DegreeOneLoweringOperator bv_from_symmetric(const CochainComplex& cc,
                                            const CochainComplex& dual_cc,
                                            const SymmetricStructure& theta) {
  const HomAlgebra& alg = cc.algebra();
  if (cc.coeffs() != Coeffs::Algebra || dual_cc.coeffs() != Coeffs::Dual)
    throw DimensionError("bv_from_symmetric: wrong coefficient types");
  if (!cc.normalized() || !dual_cc.normalized())
    throw DimensionError("bv_from_symmetric needs normalized complexes");
  int pmax = std::min(cc.max_degree(), dual_cc.max_degree());

  // m0 = Theta(1), a 0-cocycle in C^0(A, A*)
  Vector m0v = theta.theta.apply(alg.unit());
  Cochain m0 = make_cochain(alg, 0, m0v.entries, Coeffs::Dual);
  if (!dual_cc.is_cocycle(m0))
    throw InternalConsistencyError("Theta(1) is not a 0-cocycle in C^0(A, A*)");

  // T_p : H^p(A) -> H^p(A, A*), [f] -> [f . m0]
  std::vector<Matrix> T, Tinv;
  for (int p = cc.min_degree(); p <= pmax; ++p) {
    const Subquotient& hp = cc.cohomology(p);
    const Subquotient& hd = dual_cc.cohomology(p);
    Matrix t(hd.dim(), hp.dim());
    for (std::size_t k = 0; k < hp.dim(); ++k) {
      Vector cls = dual_cc.class_of(dot_product(alg, cc.class_representative(p, k), m0));
      for (std::size_t i = 0; i < t.rows; ++i) t.at(i, k) = cls[i];
    }
    Tinv.push_back(invert_or_throw(
        t,
        "induced map H^" + std::to_string(p) + "(A) -> H^" + std::to_string(p) +
            "(A, A*) by f -> f.Theta(1) is not an isomorphism",
        false));
    T.push_back(std::move(t));
  }

  DegreeOneLoweringOperator bv;
  bv.min_degree = cc.min_degree();
  bv.max_degree = pmax;
  for (int p = cc.min_degree(); p <= pmax; ++p) {
    if (p == 0) {
      bv.matrices.push_back(Matrix(0, cc.cohomology(0).dim()));
      continue;
    }
    const Subquotient& dom = dual_cc.cohomology(p);
    const Subquotient& codom = dual_cc.cohomology(p - 1);
    Matrix Bs(codom.dim(), dom.dim());
    for (std::size_t k = 0; k < dom.dim(); ++k) {
      Vector cls = dual_cc.class_of(connes_B_star(alg, dual_cc.class_representative(p, k)));
      for (std::size_t i = 0; i < Bs.rows; ++i) Bs.at(i, k) = cls[i];
    }
    std::size_t ip = static_cast<std::size_t>(p - cc.min_degree());
    bv.matrices.push_back(Tinv[ip - 1] * Bs * T[ip]);
  }
  return bv;
}

std::vector<Matrix> transported_isomorphism(const CochainComplex& cc,
                                            const CochainComplex& dual_cc,
                                            const SymmetricStructure& theta) {
  const HomAlgebra& alg = cc.algebra();
  int pmax = std::min(cc.max_degree(), dual_cc.max_degree());
  std::vector<Matrix> out;
  for (int p = cc.min_degree(); p <= pmax; ++p) {
    const Subquotient& hp = cc.cohomology(p);
    const Subquotient& hd = dual_cc.cohomology(p);
    Matrix t(hd.dim(), hp.dim());
    for (std::size_t k = 0; k < hp.dim(); ++k) {
      Cochain f = cc.class_representative(p, k);
      Cochain tf = zero_cochain(alg, p, Coeffs::Dual);
      for (std::size_t tuple = 0; tuple < f.input_tuples(); ++tuple) {
        Vector v = theta.theta.apply(f.value_at(tuple));
        for (int j = 0; j < alg.dim(); ++j) tf.entry(tuple, j) = v[j];
      }
      Vector cls = dual_cc.class_of(tf);
      for (std::size_t i = 0; i < t.rows; ++i) t.at(i, k) = cls[i];
    }
    invert_or_throw(t,
                    "Theta does not induce an isomorphism H^" + std::to_string(p) +
                        "(A) -> H^" + std::to_string(p) + "(A, A*)",
                    false);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace homcalc
