#pragma once

#include <array>
#include <optional>
#include <vector>

#include "galoisazu/galois.hpp"

namespace galoisazu {

/// Element of the tensor power S^(x)k over the ground field, basis indexed
/// lexicographically: b_i1 (x) ... (x) b_ik at ((i1 * d + i2) * d + ...) + ik.
struct TensorElement {
  AlgebraPtr algebra;
  int order = 2;
  Vec coeffs;

  bool operator==(const TensorElement& o) const { return order == o.order && coeffs == o.coeffs; }
};

TensorElement tensor_element(const AlgebraPtr& algebra, int order, Vec coeffs);
/// x1 (x) ... (x) xk.
TensorElement pure_tensor_power(const AlgebraPtr& algebra, const std::vector<Vec>& legs);
TensorElement tensor_unit(const AlgebraPtr& algebra, int order);
/// Legwise product in S^(x)k.
TensorElement multiply(const TensorElement& a, const TensorElement& b);

enum class Slot { S12, S23, S13 };
/// X12 = sum x (x) y (x) 1, X23 = 1 (x) x (x) y, X13 = x (x) 1 (x) y.
TensorElement embed(const TensorElement& x, Slot slot);

struct FsResult {
  /// X12 X23 = X23 X13.
  bool first = false;
  /// X23 X13 = X13 X12.
  bool second = false;
  bool holds() const { return first && second; }
};
FsResult check_fs_equation(const TensorElement& eta);
/// X12 X23 X12 = X23 X12 X23.
bool check_yang_baxter(const TensorElement& eta);

/// Left multiplication by eta on S (x) S; columns are eta (b_i (x) b_j).
struct RMatrixOperator {
  TensorElement eta;
  Matrix matrix;
};
RMatrixOperator left_mult_operator(const TensorElement& eta);
bool invertible(const RMatrixOperator& op);

/// The Galois element of a ground-field certificate as a tensor; raises
/// Unsupported over an intermediate base.
TensorElement galois_tensor(const GaloisCertificate& cert);

struct QuaternionBlocks {
  /// Ordered bases of V_1, V_i, V_j, V_k as index pairs (p, q) for b_p (x) b_q.
  std::array<std::array<std::array<std::size_t, 2>, 4>, 4> bases;
  /// Restriction of l_eta to V_u in that basis; column c is the image of the c-th basis vector.
  std::array<Matrix, 4> xi;
};
/// Blocks of l_eta for the Galois element of (a, b / F) under V. The direct sum
/// decomposition and the invariance of each V_u are asserted.
QuaternionBlocks quaternion_blocks(const AlgebraPtr& quaternion);

/// Largest S^(x)n handled by braid_representation.
inline constexpr std::size_t kMaxBraidDim = 256;

/// rho(sigma_i) = id^(i-1) (x) l_eta (x) id^(n-i-1), 2 <= n <= 4. Braid
/// relations are verified before returning; raises NotInvertible,
/// DimensionTooLarge or CheckFailed.
std::vector<Matrix> braid_representation(const TensorElement& eta, int n);

struct RepMorphismReport {
  std::vector<Check> checks;
  bool all_passed() const;
};
/// phi^(x)n rho(sigma_i) = rho'(sigma_i) phi^(x)n for n = 2, 3. When the
/// fields differ the embedding maps the source side; errors from
/// check_morphism or check_base_change_morphism propagate.
RepMorphismReport check_rep_morphism(const GaloisCertificate& a, const GaloisCertificate& b, const Matrix& phi,
                                     const std::optional<FieldEmbedding>& embedding = std::nullopt);

}  // namespace galoisazu
