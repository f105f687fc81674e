#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cohann/coefficient.hpp"

namespace cohann {

/// Dense matrix over a Field, row-major.
class DenseMatrix {
public:
  DenseMatrix(Field field, std::size_t rows, std::size_t cols);

  static DenseMatrix identity(Field field, std::size_t n);
  static DenseMatrix from_ints(Field field, const std::vector<std::vector<long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Coefficient& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Coefficient& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  bool is_zero() const;
  DenseMatrix transpose() const;
  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  DenseMatrix scaled(const Coefficient& c) const;
  std::vector<Coefficient> apply(const std::vector<Coefficient>& v) const;

  std::vector<Coefficient> column(std::size_t j) const;
  /// Columns [from, from+count).
  DenseMatrix columns(std::size_t from, std::size_t count) const;
  DenseMatrix select_columns(const std::vector<std::size_t>& idx) const;
  static DenseMatrix from_columns(Field field, std::size_t rows,
                                  const std::vector<std::vector<Coefficient>>& cols);
  static DenseMatrix hstack(const DenseMatrix& a, const DenseMatrix& b);
  static DenseMatrix vstack(const DenseMatrix& a, const DenseMatrix& b);
  /// Block-diagonal with `copies` copies.
  DenseMatrix repeat_diagonal(std::size_t copies) const;

  std::vector<std::vector<std::string>> to_strings() const;

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coefficient> a_;
};

struct RowEchelon {
  DenseMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivots are taken in column order, the first
/// nonzero row below the current one serving as pivot row.
RowEchelon row_reduce(DenseMatrix m);
std::size_t rank(const DenseMatrix& m);
/// Basis of {v : m v = 0}, as columns, one per free column.
DenseMatrix nullspace(const DenseMatrix& m);
/// The columns of m that are independent of the ones before them.
DenseMatrix column_basis(const DenseMatrix& m);
/// X with a X = b, or nullopt.
std::optional<DenseMatrix> solve(const DenseMatrix& a, const DenseMatrix& b);
/// Every column of b lies in the column span of a.
bool spans(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace cohann
