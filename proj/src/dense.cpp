#include "cohann/dense.hpp"

#include "cohann/error.hpp"

namespace cohann {

DenseMatrix::DenseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, Coefficient::zero(field)) {}

DenseMatrix DenseMatrix::identity(Field field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Coefficient::one(field);
  return m;
}

DenseMatrix DenseMatrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  DenseMatrix m(field, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Coefficient::from_int(field, rows[i][j]);
  }
  return m;
}

bool DenseMatrix::is_zero() const {
  for (const auto& c : a_)
    if (!c.is_zero()) return false;
  return true;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("dense matrix shapes do not match");
  DenseMatrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Coefficient& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Coefficient& y = o.at(k, j);
        if (!y.is_zero()) out.at(i, j) += x * y;
      }
    }
  return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("dense matrix shapes do not match");
  DenseMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
  return *this + o.scaled(-Coefficient::one(field_));
}

DenseMatrix DenseMatrix::scaled(const Coefficient& c) const {
  DenseMatrix out = *this;
  for (auto& x : out.a_) x *= c;
  return out;
}

std::vector<Coefficient> DenseMatrix::apply(const std::vector<Coefficient>& v) const {
  if (v.size() != cols_) throw DomainError("vector length does not match");
  std::vector<Coefficient> out(rows_, Coefficient::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<Coefficient> DenseMatrix::column(std::size_t j) const {
  std::vector<Coefficient> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

DenseMatrix DenseMatrix::columns(std::size_t from, std::size_t count) const {
  DenseMatrix out(field_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out.at(i, j) = at(i, from + j);
  return out;
}

DenseMatrix DenseMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  DenseMatrix out(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out.at(i, j) = at(i, idx[j]);
  return out;
}

DenseMatrix DenseMatrix::from_columns(Field field, std::size_t rows,
                                      const std::vector<std::vector<Coefficient>>& cols) {
  DenseMatrix out(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DomainError("column length does not match");
    for (std::size_t i = 0; i < rows; ++i) out.at(i, j) = cols[j][i];
  }
  return out;
}

DenseMatrix DenseMatrix::hstack(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_) throw DomainError("hstack: row counts differ");
  DenseMatrix out(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
  }
  return out;
}

DenseMatrix DenseMatrix::vstack(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.cols_) throw DomainError("vstack: column counts differ");
  DenseMatrix out(a.field_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) {
    for (std::size_t i = 0; i < a.rows_; ++i) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i) out.at(a.rows_ + i, j) = b.at(i, j);
  }
  return out;
}

DenseMatrix DenseMatrix::repeat_diagonal(std::size_t copies) const {
  DenseMatrix out(field_, rows_ * copies, cols_ * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(c * rows_ + i, c * cols_ + j) = at(i, j);
  return out;
}

std::vector<std::vector<std::string>> DenseMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(at(i, j).to_string());
  return out;
}

RowEchelon row_reduce(DenseMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Coefficient inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Coefficient f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const DenseMatrix& m) { return row_reduce(m).pivots.size(); }

DenseMatrix nullspace(const DenseMatrix& m) {
  auto [red, piv] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::vector<Coefficient>> cols;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Coefficient> v(m.cols(), Coefficient::zero(m.field()));
    v[f] = Coefficient::one(m.field());
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -red.at(r, f);
    cols.push_back(std::move(v));
  }
  return DenseMatrix::from_columns(m.field(), m.cols(), cols);
}

DenseMatrix column_basis(const DenseMatrix& m) {
  return m.select_columns(row_reduce(m).pivots);
}

std::optional<DenseMatrix> solve(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError("solve: row counts differ");
  auto [red, piv] = row_reduce(DenseMatrix::hstack(a, b));
  for (auto p : piv)
    if (p >= a.cols()) return std::nullopt;
  DenseMatrix x(a.field(), a.cols(), b.cols());
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(piv[r], j) = red.at(r, a.cols() + j);
  return x;
}

bool spans(const DenseMatrix& a, const DenseMatrix& b) {
  return rank(DenseMatrix::hstack(a, b)) == rank(a);
}

}  // namespace cohann
