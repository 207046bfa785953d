#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "galoisazu/field.hpp"

namespace galoisazu {

/// Dense coefficient vector over a field.
using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& field, std::size_t n);
bool is_zero_vec(const Field& field, const Vec& v);
Vec add_vec(const Field& field, const Vec& a, const Vec& b);
Vec sub_vec(const Field& field, const Vec& a, const Vec& b);
Vec scale_vec(const Field& field, const Vec& a, const Scalar& c);

/// Dense row-major matrix with exact entries.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_columns(FieldPtr field, std::size_t rows, const std::vector<Vec>& columns);
  static Matrix from_rows(FieldPtr field, std::size_t cols, const std::vector<Vec>& rows);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_column(std::size_t j, const Vec& v);

  Matrix transpose() const;
  /// M * v for a column vector v.
  Vec apply(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const;
  std::size_t nonzeros() const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form and its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Each kernel exists twice: `serial` is the reference implementation and
// `omp` parallelises the inner loops. Results are bitwise identical.
#define GALOISAZU_KERNEL_DECLS                                          \
  Matrix matmul(const Matrix& a, const Matrix& b);                      \
  Echelon rref(Matrix m);                                               \
  std::size_t rank(const Matrix& m);                                    \
  Matrix nullspace(const Matrix& m);                                    \
  std::optional<Matrix> inverse(const Matrix& m);                       \
  std::optional<Matrix> solve(const Matrix& a, const Matrix& b);        \
  Matrix kron(const Matrix& a, const Matrix& b);

namespace serial {
GALOISAZU_KERNEL_DECLS
}  // namespace serial

namespace omp {
GALOISAZU_KERNEL_DECLS
}  // namespace omp

#undef GALOISAZU_KERNEL_DECLS

using omp::inverse;
using omp::kron;
using omp::matmul;
using omp::nullspace;
using omp::rank;
using omp::rref;
using omp::solve;

/// Block-diagonal matrix with `copies` copies of `block`.
Matrix block_diagonal(const Matrix& block, std::size_t copies);
/// Entrywise image of `m` under a map of scalars into another field.
template <class F>
Matrix map_entries(const Matrix& m, FieldPtr target, F&& f) {
  Matrix out(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = f(m.at(i, j));
  return out;
}

/// Determinant by elimination.
Scalar determinant(const Matrix& m);

}  // namespace galoisazu
