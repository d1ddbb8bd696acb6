#include "homcalc/linalg.hpp"

#include <algorithm>

#include "homcalc/errors.hpp"

namespace homcalc {

bool Vector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Rational& r) { return r == 0; });
}

Vector& Vector::operator+=(const Vector& o) {
  if (size() != o.size()) throw DimensionError("vector size mismatch in +");
  for (std::size_t i = 0; i < size(); ++i) entries[i] += o.entries[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (size() != o.size()) throw DimensionError("vector size mismatch in -");
  for (std::size_t i = 0; i < size(); ++i) entries[i] -= o.entries[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& e : entries) e *= s;
  return *this;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols) throw DimensionError("matrix-vector size mismatch");
  Vector out(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    Rational acc(0);
    for (std::size_t c = 0; c < cols; ++c) acc += at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows) throw DimensionError("matrix-matrix size mismatch");
  Matrix out(rows, o.cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < cols; ++k) {
      const Rational& x = at(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < o.cols; ++c) out.at(r, c) += x * o.at(k, c);
    }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r == 0; });
}

Matrix Matrix::from_columns(std::span<const Vector> cols_in, std::size_t ambient_rows) {
  Matrix m(ambient_rows, cols_in.size());
  for (std::size_t c = 0; c < cols_in.size(); ++c) {
    if (cols_in[c].size() != ambient_rows)
      throw DimensionError("column length mismatch in from_columns");
    for (std::size_t r = 0; r < ambient_rows; ++r) m.at(r, c) = cols_in[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows_in, std::size_t ambient_cols) {
  Matrix m(rows_in.size(), ambient_cols);
  for (std::size_t r = 0; r < rows_in.size(); ++r) {
    if (rows_in[r].size() != ambient_cols)
      throw DimensionError("row length mismatch in from_rows");
    for (std::size_t c = 0; c < ambient_cols; ++c) m.at(r, c) = rows_in[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows);
  for (std::size_t r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols);
  for (std::size_t c = 0; c < cols; ++c) v[c] = at(r, c);
  return v;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}};
  Matrix& a = res.reduced;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols && lead < a.rows; ++c) {
    std::size_t piv = lead;
    while (piv < a.rows && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows) continue;
    if (piv != lead)
      for (std::size_t k = 0; k < a.cols; ++k) std::swap(a.at(piv, k), a.at(lead, k));
    Rational inv = 1 / a.at(lead, c);
    for (std::size_t k = c; k < a.cols; ++k) a.at(lead, k) *= inv;
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == lead || a.at(r, c) == 0) continue;
      Rational f = a.at(r, c);
      for (std::size_t k = c; k < a.cols; ++k) a.at(r, k) -= f * a.at(lead, k);
    }
    res.pivot_columns.push_back(c);
    ++lead;
  }
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_columns.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free_c = 0; free_c < m.cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vector v(m.cols);
    v[free_c] = 1;
    for (std::size_t pi = 0; pi < rr.pivot_columns.size(); ++pi)
      v[rr.pivot_columns[pi]] = -rr.reduced.at(pi, free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows) throw DimensionError("solve: rhs length != rows");
  // Reduce the augmented matrix [m | b].
  Matrix aug(m.rows, m.cols + 1);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  RrefResult rr = rref(aug);
  for (std::size_t c : rr.pivot_columns)
    if (c == m.cols) return std::nullopt;  // pivot in the rhs column: inconsistent
  Vector x(m.cols);
  for (std::size_t pi = 0; pi < rr.pivot_columns.size(); ++pi)
    x[rr.pivot_columns[pi]] = rr.reduced.at(pi, m.cols);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  std::size_t n = m.rows;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  RrefResult rr = rref(aug);
  if (rr.pivot_columns.size() != n || (n > 0 && rr.pivot_columns.back() != n - 1))
    return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rr.reduced.at(r, n + c);
  return inv;
}

std::vector<Vector> column_space_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<Vector> basis;
  basis.reserve(rr.pivot_columns.size());
  for (std::size_t c : rr.pivot_columns) basis.push_back(m.column(c));
  return basis;
}

std::optional<Vector> coords_in_span(std::span<const Vector> basis, const Vector& v) {
  if (basis.empty()) {
    if (v.is_zero()) return Vector(0);
    return std::nullopt;
  }
  return solve(Matrix::from_columns(basis, v.size()), v);
}

Vector IncrementalSpan::reduce(Vector v) const {
  if (v.size() != ambient_) throw DimensionError("IncrementalSpan: vector size mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& coef = v[pivots_[k]];
    if (coef == 0) continue;
    Rational f = coef;  // rows are normalized to a leading 1
    for (std::size_t j = 0; j < ambient_; ++j)
      if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
  }
  return v;
}

bool IncrementalSpan::add(const Vector& v) {
  Vector r = reduce(v);
  std::size_t pc = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (r[j] != 0) {
      pc = j;
      break;
    }
  if (pc == ambient_) return false;
  Rational inv = 1 / r[pc];
  r *= inv;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational f = rows_[k][pc];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (r[j] != 0) rows_[k][j] -= f * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pc);
  return true;
}

std::vector<Vector> quotient_representatives(std::span<const Vector> sub,
                                             std::span<const Vector> ambient) {
  std::size_t n = 0;
  if (!ambient.empty())
    n = ambient.front().size();
  else if (!sub.empty())
    n = sub.front().size();

  IncrementalSpan ambient_span(n);
  for (const Vector& v : ambient) ambient_span.add(v);
  for (const Vector& s : sub)
    if (!ambient_span.contains(s))
      throw DimensionError("quotient_representatives: sub not contained in span(ambient)");

  // Greedy completion of a basis of span(sub) by ambient vectors in order.
  IncrementalSpan span(n);
  for (const Vector& s : sub) span.add(s);
  std::vector<Vector> reps;
  for (const Vector& cand : ambient)
    if (span.add(cand)) reps.push_back(cand);
  return reps;
}

}  // namespace homcalc
