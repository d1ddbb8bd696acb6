#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "homcalc/rational.hpp"

namespace homcalc {

struct Vector {
  std::vector<Rational> entries;

  Vector() = default;
  explicit Vector(std::size_t n) : entries(n, Rational(0)) {}
  explicit Vector(std::vector<Rational> e) : entries(std::move(e)) {}

  std::size_t size() const { return entries.size(); }
  Rational& operator[](std::size_t i) { return entries[i]; }
  const Rational& operator[](std::size_t i) const { return entries[i]; }

  bool is_zero() const;
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector&, const Vector&) = default;

  static Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
  }
};

struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> a;  // row-major, rows*cols entries

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

  Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Matrix identity(std::size_t n);
  Matrix transpose() const;
  Vector apply(const Vector& v) const;  // throws DimensionError on mismatch
  Matrix operator*(const Matrix& o) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;
  bool is_zero() const;

  static Matrix from_columns(std::span<const Vector> cols_in, std::size_t ambient_rows);
  static Matrix from_rows(std::span<const Vector> rows_in, std::size_t ambient_cols);
  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Basis of { v : m v = 0 }, ordered by free column index.
std::vector<Vector> kernel_basis(const Matrix& m);

// Some v with m v = b, or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);

// Basis of the column space, chosen as the pivot columns of m in order.
std::vector<Vector> column_space_basis(const Matrix& m);

// Coordinates of v in span(basis), or nullopt if v is outside the span.
std::optional<Vector> coords_in_span(std::span<const Vector> basis, const Vector& v);

// Representatives of a basis of span(ambient)/span(sub), chosen greedily from
// `ambient` in order (pivot rule: keep each vector that enlarges the span).
// Throws DimensionError if sub is not contained in span(ambient).
std::vector<Vector> quotient_representatives(std::span<const Vector> sub,
                                             std::span<const Vector> ambient);

// Row space maintained in reduced echelon form, grown one vector at a time.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  // Residual of v after eliminating all pivots; zero iff v is in the span.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return reduce(v).is_zero(); }
  // Adds v; returns true iff the span grew.
  bool add(const Vector& v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace homcalc
