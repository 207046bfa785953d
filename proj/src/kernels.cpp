#include <cstddef>
#include <utility>

#include "galoisazu/matrix.hpp"

namespace galoisazu {

namespace {

using Index = std::ptrdiff_t;

template <bool Par>
Matrix matmul_impl(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) raise(ErrorCode::ParseError, "matmul shape mismatch");
  const auto& F = *a.field();
  Matrix c(a.field(), a.rows(), b.cols());
  std::vector<std::vector<std::size_t>> b_nonzero(b.rows());
  for (std::size_t k = 0; k < b.rows(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!F.is_zero(b.at(k, j))) b_nonzero[k].push_back(j);
  const Index rows = static_cast<Index>(a.rows());
#pragma omp parallel for schedule(dynamic) if (Par)
  for (Index i = 0; i < rows; ++i) {
    const auto r = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(r, k);
      if (F.is_zero(aik)) continue;
      for (std::size_t j : b_nonzero[k]) F.add_mul(c.at(r, j), aik, b.at(k, j));
    }
  }
  return c;
}

template <bool Par>
Echelon rref_impl(Matrix m) {
  const auto& F = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  std::vector<std::size_t> support;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t p = lead_row;
    while (p < m.rows() && F.is_zero(m.at(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(lead_row, j));

    const Scalar inv = F.inv(m.at(lead_row, col));
    support.clear();
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (F.is_zero(m.at(lead_row, j))) continue;
      m.at(lead_row, j) = F.mul(m.at(lead_row, j), inv);
      support.push_back(j);
    }

    const Index rows = static_cast<Index>(m.rows());
#pragma omp parallel for schedule(dynamic) if (Par)
    for (Index i = 0; i < rows; ++i) {
      const auto r = static_cast<std::size_t>(i);
      if (r == lead_row || F.is_zero(m.at(r, col))) continue;
      const Scalar factor = m.at(r, col);
      for (std::size_t j : support) F.sub_mul(m.at(r, j), factor, m.at(lead_row, j));
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

template <bool Par>
Matrix nullspace_impl(const Matrix& m) {
  const auto& F = *m.field();
  auto [r, pivots] = rref_impl<Par>(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(F, m.cols());
    v[free] = F.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = F.neg(r.at(k, free));
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(m.field(), m.cols(), basis);
}

Matrix augment(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) raise(ErrorCode::ParseError, "augment shape mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

template <bool Par>
std::optional<Matrix> solve_impl(const Matrix& a, const Matrix& b) {
  auto [r, pivots] = rref_impl<Par>(augment(a, b));
  if (!pivots.empty() && pivots.back() >= a.cols()) return std::nullopt;
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[k], j) = r.at(k, a.cols() + j);
  return x;
}

template <bool Par>
std::optional<Matrix> inverse_impl(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  auto [r, pivots] = rref_impl<Par>(augment(m, Matrix::identity(m.field(), n)));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

template <bool Par>
Matrix kron_impl(const Matrix& a, const Matrix& b) {
  const auto& F = *a.field();
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  const Index rows = static_cast<Index>(a.rows());
#pragma omp parallel for if (Par)
  for (Index ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a.at(i, j);
      if (F.is_zero(aij)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!F.is_zero(b.at(k, l))) out.at(i * b.rows() + k, j * b.cols() + l) = F.mul(aij, b.at(k, l));
    }
  }
  return out;
}

}  // namespace

#define GALOISAZU_KERNEL_DEFS(PAR)                                                                   \
  Matrix matmul(const Matrix& a, const Matrix& b) { return matmul_impl<PAR>(a, b); }                \
  Echelon rref(Matrix m) { return rref_impl<PAR>(std::move(m)); }                                    \
  std::size_t rank(const Matrix& m) { return rref_impl<PAR>(m).pivots.size(); }                      \
  Matrix nullspace(const Matrix& m) { return nullspace_impl<PAR>(m); }                               \
  std::optional<Matrix> inverse(const Matrix& m) { return inverse_impl<PAR>(m); }                    \
  std::optional<Matrix> solve(const Matrix& a, const Matrix& b) { return solve_impl<PAR>(a, b); }   \
  Matrix kron(const Matrix& a, const Matrix& b) { return kron_impl<PAR>(a, b); }

namespace serial {
GALOISAZU_KERNEL_DEFS(false)
}  // namespace serial

namespace omp {
GALOISAZU_KERNEL_DEFS(true)
}  // namespace omp

#undef GALOISAZU_KERNEL_DEFS

}  // namespace galoisazu
