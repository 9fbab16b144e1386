#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "infdef/scalar.hpp"

namespace infdef {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);

/// Dense matrix over an exact field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  /// Matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(const Field& field, std::size_t rows,
                             const std::vector<Vector>& columns);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form; pivots are chosen at the leftmost nonzero column.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon row_echelon(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column, in column order.
/// Each basis vector has a 1 at its free column and 0 at the other free
/// columns.
std::vector<Vector> nullspace(const Matrix& m);

/// Some solution x of m x = b, free variables set to zero; nullopt if none.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Incrementally maintained subspace of k^n in reduced echelon form.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  static Subspace span(const Field& field, std::size_t ambient,
                       const std::vector<Vector>& vectors);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<Vector>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Remainder of v after elimination against the basis.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  /// Adds v; returns true when the dimension grew.
  bool insert(Vector v);
  bool contains(const Subspace& other) const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace infdef
