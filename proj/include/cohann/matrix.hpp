#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cohann/groebner.hpp"

namespace cohann {

/// Polynomial matrix stored by columns. A map P^cols -> P^rows; its column
/// span is the submodule it generates.
class Matrix {
public:
  Matrix(RingPtr ring, std::size_t rows) : ring_(std::move(ring)), rows_(rows) {}
  Matrix(RingPtr ring, std::size_t rows, std::vector<Vector> cols);

  static Matrix zero(RingPtr ring, std::size_t rows, std::size_t cols);
  static Matrix identity(RingPtr ring, std::size_t n);
  /// Column-major from a row-major nested list.
  static Matrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const Polynomial& at(std::size_t i, std::size_t j) const { return cols_[j][i]; }
  Polynomial& at(std::size_t i, std::size_t j) { return cols_[j][i]; }
  const Vector& column(std::size_t j) const { return cols_[j]; }
  const std::vector<Vector>& columns() const { return cols_; }

  void add_column(Vector v);
  bool is_zero() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector apply(const Vector& v) const;
  Matrix scaled(const Polynomial& a) const;
  /// this (x) Id_h: every entry becomes an h x h scalar block.
  Matrix kron_identity(std::size_t h) const;
  /// Block-diagonal with `copies` copies of this.
  Matrix repeat_diagonal(std::size_t copies) const;
  static Matrix block_diagonal(const Matrix& a, const Matrix& b);
  static Matrix hstack(const Matrix& a, const Matrix& b);

  /// Row-major strings, for reports.
  std::vector<std::vector<std::string>> to_strings() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_;
  }

private:
  RingPtr ring_;
  std::size_t rows_;
  std::vector<Vector> cols_;
};

Vector zero_vector(const RingPtr& ring, std::size_t n);
Vector unit_vector(const RingPtr& ring, std::size_t n, std::size_t i);
bool is_zero_vector(const Vector& v);
Vector add_vectors(const Vector& a, const Vector& b);
Vector scale_vector(const Vector& v, const Polynomial& a);

/// Rank over the fraction field of the polynomial ring (fraction-free
/// elimination).
std::size_t generic_rank(const Matrix& m);

/// Determinant by cofactor expansion (small matrices only).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& rows);

}  // namespace cohann
