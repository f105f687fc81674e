#include "cohann/matrix.hpp"

#include "cohann/error.hpp"

namespace cohann {

Vector zero_vector(const RingPtr& ring, std::size_t n) { return Vector(n, Polynomial(ring)); }

Vector unit_vector(const RingPtr& ring, std::size_t n, std::size_t i) {
  Vector v = zero_vector(ring, n);
  v[i] = Polynomial::constant(ring, 1);
  return v;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

Vector add_vectors(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DomainError("vector lengths differ");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector scale_vector(const Vector& v, const Polynomial& a) {
  Vector out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p * a);
  return out;
}

Matrix::Matrix(RingPtr ring, std::size_t rows, std::vector<Vector> cols)
    : ring_(std::move(ring)), rows_(rows), cols_(std::move(cols)) {
  for (const auto& c : cols_)
    if (c.size() != rows_) throw DomainError("matrix column has wrong length");
}

Matrix Matrix::zero(RingPtr ring, std::size_t rows, std::size_t cols) {
  Matrix m(ring, rows);
  for (std::size_t j = 0; j < cols; ++j) m.cols_.push_back(zero_vector(ring, rows));
  return m;
}

Matrix Matrix::identity(RingPtr ring, std::size_t n) {
  Matrix m(ring, n);
  for (std::size_t j = 0; j < n; ++j) m.cols_.push_back(unit_vector(ring, n, j));
  return m;
}

Matrix Matrix::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != ncols) throw DomainError("ragged matrix rows");
  Matrix m = zero(ring, rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

void Matrix::add_column(Vector v) {
  if (v.size() != rows_) throw DomainError("matrix column has wrong length");
  cols_.push_back(std::move(v));
}

bool Matrix::is_zero() const {
  for (const auto& c : cols_)
    if (!is_zero_vector(c)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t = zero(ring_, cols(), rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols(); ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols() != o.rows()) throw DomainError("matrix dimensions do not match");
  Matrix out(ring_, rows_);
  for (const auto& c : o.cols_) out.cols_.push_back(apply(c));
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols()) throw DomainError("matrix-vector dimensions do not match");
  Vector out = zero_vector(ring_, rows_);
  for (std::size_t j = 0; j < cols(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!cols_[j][i].is_zero()) out[i] += cols_[j][i] * v[j];
  }
  return out;
}

Matrix Matrix::scaled(const Polynomial& a) const {
  Matrix out(ring_, rows_);
  for (const auto& c : cols_) out.cols_.push_back(scale_vector(c, a));
  return out;
}

Matrix Matrix::kron_identity(std::size_t h) const {
  Matrix out = zero(ring_, rows_ * h, cols() * h);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      for (std::size_t k = 0; k < h; ++k) out.at(i * h + k, j * h + k) = at(i, j);
  return out;
}

Matrix Matrix::repeat_diagonal(std::size_t copies) const {
  Matrix out = zero(ring_, rows_ * copies, cols() * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols(); ++j) out.at(c * rows_ + i, c * cols() + j) = at(i, j);
  return out;
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out = zero(a.ring_, a.rows_ + b.rows_, a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows_ + i, a.cols() + j) = b.at(i, j);
  return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw DomainError("hstack needs equal row counts");
  Matrix out = a;
  for (const auto& c : b.cols_) out.cols_.push_back(c);
  return out;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols(); ++j) out[i].push_back(at(i, j).to_string());
  return out;
}

std::size_t generic_rank(const Matrix& m) {
  // Row-major working copy; pivot rows are eliminated fraction-free.
  std::vector<std::vector<Polynomial>> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i].push_back(m.at(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < a.size(); ++col) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][col].is_zero()) continue;
      Polynomial f = a[r][col];
      for (std::size_t c = col; c < m.cols(); ++c)
        a[r][c] = a[rank][col] * a[r][c] - f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& rows) {
  std::size_t n = rows.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  for (const auto& r : rows)
    if (r.size() != n) throw DomainError("determinant needs a square matrix");
  if (n == 1) return rows[0][0];
  const RingPtr& ring = rows[0][0].ring();
  Polynomial det(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (rows[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> r;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(rows[i][k]);
      minor.push_back(std::move(r));
    }
    Polynomial term = rows[0][j] * determinant(minor);
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

}  // namespace cohann
