#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galoisazu/field.hpp"
#include "galoisazu/group.hpp"
#include "galoisazu/matrix.hpp"

namespace galoisazu {

struct SparseEntry {
  std::uint32_t index;
  Scalar value;
};
using SparseVec = std::vector<SparseEntry>;

SparseVec to_sparse(const Field& field, const Vec& v);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Dimension cap for a single algebra: 64, or GALOISAZU_MAX_DIM up to 128.
std::size_t max_algebra_dim();
inline constexpr std::size_t kMaxTensorDim = 4096;

/// Finite-dimensional unital associative algebra given by structure constants.
/// Associativity and the unit are verified exhaustively on construction.
class Algebra {
 public:
  /// `products[i * dim + j]` is the coefficient vector of b_i * b_j.
  static AlgebraPtr create(FieldPtr field, std::vector<std::string> labels, const std::vector<Vec>& products,
                           Vec unit);

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vec product_dense(std::size_t i, std::size_t j) const;

  Vec basis_vector(std::size_t i) const;
  Vec zero() const { return zero_vec(*field_, dim_); }
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec power(const Vec& a, std::uint64_t n) const;
  Vec scalar(const Scalar& c) const;
  /// Matrix of x -> a x.
  Matrix left_mult_matrix(const Vec& a) const;
  /// Matrix of x -> x a.
  Matrix right_mult_matrix(const Vec& a) const;
  bool is_commutative() const;
  std::optional<std::size_t> label_index(std::string_view label) const;
  std::string format(const Vec& v) const;
  bool operator==(const Algebra& o) const;

 private:
  Algebra() = default;

  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  Vec unit_;
};

/// First basis triple (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k), if any.
std::optional<std::array<std::size_t, 3>> find_associativity_failure(const Algebra& a, bool parallel = true);

/// A nonzero element together with its algebra.
class AlgElement {
 public:
  AlgElement(AlgebraPtr algebra, Vec coeffs);
  const AlgebraPtr& algebra() const { return algebra_; }
  const Vec& coeffs() const { return coeffs_; }
  AlgElement operator+(const AlgElement& o) const;
  AlgElement operator*(const AlgElement& o) const;
  bool operator==(const AlgElement& o) const { return coeffs_ == o.coeffs_; }
  std::string to_string() const { return algebra_->format(coeffs_); }

 private:
  AlgebraPtr algebra_;
  Vec coeffs_;
};

/// Two-sided inverse, raising NotAUnit when none exists.
Vec invert(const Algebra& a, const Vec& s);
std::optional<Vec> try_invert(const Algebra& a, const Vec& s);

// Constructors ---------------------------------------------------------------

AlgebraPtr field_algebra(FieldPtr field);
/// (a, b / F): i^2 = a, j^2 = b, ij = -ji = k, basis (1, i, j, k).
AlgebraPtr quaternion_algebra(FieldPtr field, const Scalar& a, const Scalar& b);
/// Characteristic 2: e1^2 = e1 + a, e2^2 = b, e2 e1 = e1 e2 + e2, basis (1, e1, e2, e1e2).
AlgebraPtr char2_quaternion(FieldPtr field, const Scalar& a, const Scalar& b);
/// (a, b, zeta)_F: x^n = a, u^n = b, ux = zeta xu, basis x^m u^m' in lexicographic (m, m').
AlgebraPtr symbol_algebra(FieldPtr field, const Scalar& a, const Scalar& b, const Scalar& zeta, int n);
AlgebraPtr matrix_algebra(FieldPtr field, int n);
/// S(G) with basis s_i delta_g at index g * dim(S) + i.
AlgebraPtr function_algebra(const AlgebraPtr& s, const GroupSpec& group);
/// Componentwise product, basis a_i (x) b_j at index i * dim(B) + j.
AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
AlgebraPtr opposite(const AlgebraPtr& a);
/// F[X]/(f) for monic f (coefficients lowest first), basis 1, x, ..., x^(d-1).
AlgebraPtr quotient_algebra(FieldPtr field, const Vec& monic);
/// Same algebra with structure constants mapped into another field.
template <class Map>
AlgebraPtr map_scalars(const AlgebraPtr& a, FieldPtr target, Map&& f);

// Subalgebras -----------------------------------------------------------------

/// A unital subalgebra spanned by linearly independent columns, in reduced
/// echelon form. Closure and unit membership are verified on construction.
class SubalgebraBasis {
 public:
  SubalgebraBasis(AlgebraPtr algebra, const std::vector<Vec>& spanning);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<Vec>& vectors() const { return vectors_; }
  /// Coordinates of v in this basis, or nullopt when v is not a member.
  std::optional<Vec> coordinates(const Vec& v) const;
  bool contains(const Vec& v) const { return coordinates(v).has_value(); }
  bool same_span(const SubalgebraBasis& o) const;
  bool is_commutative() const;

 private:
  AlgebraPtr algebra_;
  std::vector<Vec> vectors_;
  Matrix basis_;
};

/// The subalgebra as an algebra in its own basis.
AlgebraPtr subalgebra_as_algebra(const SubalgebraBasis& sub, std::vector<std::string> labels = {});

SubalgebraBasis centre(const AlgebraPtr& a);
SubalgebraBasis centralizer(const AlgebraPtr& a, const std::vector<Vec>& elements);

struct AzumayaReport {
  bool azumaya = false;
  std::size_t centre_dim = 0;
  /// Rank of A (x) A^op -> End_F(A).
  std::size_t sandwich_rank = 0;
};
AzumayaReport is_azumaya_over_field(const AlgebraPtr& a);

struct Char2SkewFieldReport {
  /// The quartic form has only the trivial zero.
  bool form_anisotropic = false;
  /// Independent check that every nonzero element is a unit; only for |F| <= 16.
  std::optional<bool> all_nonzero_units;
  std::uint64_t tuples_checked = 0;
  std::optional<std::array<Scalar, 4>> form_zero;
};
/// Exhaustive test over F^4 (|F| <= 64) of X0^2 + X0X1 + aX1^2 + b(X2^2 + X1X2 + aX3^2).
Char2SkewFieldReport char2_skewfield_test(FieldPtr field, const Scalar& a, const Scalar& b);

// ---------------------------------------------------------------------------

template <class Map>
AlgebraPtr map_scalars(const AlgebraPtr& a, FieldPtr target, Map&& f) {
  std::vector<Vec> products;
  products.reserve(a->dim() * a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j) {
      Vec v;
      for (const auto& s : a->product_dense(i, j)) v.push_back(f(s));
      products.push_back(std::move(v));
    }
  Vec unit;
  for (const auto& s : a->unit()) unit.push_back(f(s));
  return Algebra::create(std::move(target), a->labels(), products, std::move(unit));
}

}  // namespace galoisazu
