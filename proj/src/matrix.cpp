#include "galoisazu/matrix.hpp"

#include <algorithm>

namespace galoisazu {

Vec zero_vec(const Field& field, std::size_t n) { return Vec(n, field.zero()); }

bool is_zero_vec(const Field& field, const Vec& v) {
  return std::all_of(v.begin(), v.end(), [&](const Scalar& s) { return field.is_zero(s); });
}

Vec add_vec(const Field& field, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.add(a[i], b[i]);
  return out;
}

Vec sub_vec(const Field& field, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.sub(a[i], b[i]);
  return out;
}

Vec scale_vec(const Field& field, const Vec& a, const Scalar& c) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.mul(a[i], c);
  return out;
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field_->one();
  return m;
}

Matrix Matrix::from_columns(FieldPtr field, std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(std::move(field), rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) raise(ErrorCode::ParseError, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) raise(ErrorCode::ParseError, "column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) raise(ErrorCode::ParseError, "vector length does not match matrix");
  Vec out = zero_vec(*field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (field_->is_zero(v[j])) continue;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!field_->is_zero(at(i, j))) field_->add_mul(out[i], at(i, j), v[j]);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_->add(data_[k], o.data_[k]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_->sub(data_[k], o.data_[k]);
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_->mul(data_[k], c);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [&](const Scalar& s) { return field_->is_zero(s); });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i == j ? !field_->is_one(at(i, j)) : !field_->is_zero(at(i, j))) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::size_t Matrix::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [&](const Scalar& s) { return !field_->is_zero(s); }));
}

Matrix block_diagonal(const Matrix& block, std::size_t copies) {
  Matrix out(block.field(), block.rows() * copies, block.cols() * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) out.at(c * block.rows() + i, c * block.cols() + j) = block.at(i, j);
  return out;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) raise(ErrorCode::ParseError, "determinant of a non-square matrix");
  const auto& F = *m.field();
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = F.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && F.is_zero(a.at(p, c))) ++p;
    if (p == n) return F.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, a.at(c, c));
    const Scalar inv = F.inv(a.at(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (F.is_zero(a.at(r, c))) continue;
      const Scalar factor = F.mul(a.at(r, c), inv);
      for (std::size_t j = c; j < n; ++j)
        if (!F.is_zero(a.at(c, j))) F.sub_mul(a.at(r, j), factor, a.at(c, j));
    }
  }
  return det;
}

}  // namespace galoisazu
