#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galoisazu/action.hpp"
#include "galoisazu/algebra.hpp"
#include "galoisazu/matrix.hpp"

namespace galoisazu {

/// psi: R -> S with R either the ground field F*1 or a commutative field U
/// inside S. Over U, S is presented as a free right module on e'_k and a free
/// left module on e_l; S (x)_U S then has F-basis e'_k (x) w_m e_l, indexed
/// (k * m_U + m) * r + l, where w_m is the F-basis of U and r = dim_U S.
class Extension {
 public:
  Extension() = default;
  static Extension ground(AlgebraPtr total);
  /// Verifies that U is a commutative field and that both module bases exist.
  static Extension over(AlgebraPtr total, SubalgebraBasis base);

  bool is_ground() const { return ground_; }
  const AlgebraPtr& total() const { return total_; }
  const SubalgebraBasis& base() const { return *base_; }
  std::size_t base_dim() const { return base_->dim(); }
  /// dim_U S.
  std::size_t rank() const { return right_basis_.size(); }
  std::size_t tensor_dim() const { return rank() * total_->dim(); }
  const std::vector<Vec>& right_basis() const { return right_basis_; }
  const std::vector<Vec>& left_basis() const { return left_basis_; }

  /// Coordinates of x (x) y in S (x)_U S.
  Vec pure_tensor(const Vec& x, const Vec& y) const;
  /// Left and right legs of the tensor basis element t: e'_k and w_m e_l.
  Vec left_leg(std::size_t t) const;
  Vec right_leg(std::size_t t) const;
  /// s . (x (x) y) = s x (x) y.
  Vec left_act(const Vec& s, const Vec& tensor) const;
  /// (x (x) y) . s = x (x) y s.
  Vec right_act(const Vec& tensor, const Vec& s) const;
  /// Multiplication map x (x) y -> x y.
  Vec multiply_out(const Vec& tensor) const;
  /// Applies f (x) g leg by leg; well defined when f is right U-linear and g left U-linear.
  Vec map_legs(const Vec& tensor, const Matrix& f, const Matrix& g) const;
  std::string describe() const;

 private:
  bool ground_ = true;
  AlgebraPtr total_;
  std::shared_ptr<const SubalgebraBasis> base_;
  std::vector<Vec> right_basis_;
  std::vector<Vec> left_basis_;
  /// Inverse of the columns e'_k w_m, indexed k * m_U + m.
  Matrix right_expand_;
  /// Inverse of the columns w_m e_l, indexed m * r + l.
  Matrix left_expand_;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct GaloisBasis {
  std::vector<Vec> x;
  std::vector<Vec> y;
};

struct GaloisCertificate {
  Extension extension;
  AlgebraAction action;
  Matrix gamma;
  Matrix gamma_inverse;
  /// eta[g] = Gamma^{-1}(delta_g) in S (x)_R S.
  std::vector<Vec> eta;
  GaloisBasis basis;
  bool invariants_ok = false;
  bool gamma_bijective = false;
  bool strict = false;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool all_passed() const;
};

/// Matrix of Gamma(s (x) t) = sum_g s g(t) delta_g; rows are g * dim S + i.
/// Raises ActionMovesBase when a generator moves the base.
Matrix gamma_matrix(const Extension& ext, const AlgebraAction& action);
/// Raises InvariantsMismatch or GammaSingular; otherwise every identity is
/// checked and recorded.
GaloisCertificate certify_galois(const Extension& ext, const AlgebraAction& action);

const Vec& galois_element(const GaloisCertificate& cert);
const GaloisBasis& galois_basis(const GaloisCertificate& cert);
/// eta_g = sum_i x_i (x) g^{-1}(y_i), checked against Gamma^{-1}(delta_g).
Vec eta_of(const GaloisCertificate& cert, std::size_t g);
/// delta_g in S(G) as a column for Gamma.
Vec delta(const GaloisCertificate& cert, std::size_t g);

/// tr(s) = sum_g g(s).
Vec trace(const GaloisCertificate& cert, const Vec& s);
Matrix trace_map(const GaloisCertificate& cert);

/// G x G' acting on S (x)_F S'. Both certificates must be over the ground field.
GaloisCertificate tensor_galois(const GaloisCertificate& a, const GaloisCertificate& b);
/// Re-certifies over the opposite algebra and checks Gamma_op(sum y_i^o (x) g^{-1}(x_i)^o) = delta_g.
GaloisCertificate opposite_extension(const GaloisCertificate& cert);

struct FixedRingResult {
  SubalgebraBasis fixed_ring;
  /// U -> S, H-Galois.
  GaloisCertificate upper;
  /// R -> U, G/H-Galois; present when H is a product of whole factors of G.
  std::optional<GaloisCertificate> lower;
  std::vector<std::string> notes;
};
/// Raises NotStrict, Unsupported (noncommutative U), FixedRingNotField.
FixedRingResult fixed_ring_extension(const GaloisCertificate& cert, const std::vector<GroupSpec::Element>& subgroup);
/// R -> S^H as a G/H-Galois extension; raises SubgroupNotFactor unless H is a product of whole factors.
GaloisCertificate quotient_extension(const GaloisCertificate& cert, const std::vector<GroupSpec::Element>& subgroup);

/// Field morphism F -> T: canonical on prime fields and Q, otherwise given by
/// the image of the generator. Raises EmbeddingInvalid.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr source, FieldPtr target, std::optional<Scalar> generator_image = std::nullopt);
  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  Scalar operator()(const Scalar& s) const;
  bool is_identity() const;

 private:
  FieldPtr source_;
  FieldPtr target_;
  std::optional<Scalar> image_;
};

GaloisCertificate base_change(const GaloisCertificate& cert, const FieldEmbedding& embedding);

struct MorphismReport {
  std::vector<Check> checks;
  bool all_passed() const;
};
/// Raises NotAlgebraMorphism or NotEquivariant; then checks
/// blockdiag(phi) Gamma = Gamma' (phi (x) phi) and (phi (x) phi)(eta_e) = eta'_e.
MorphismReport check_morphism(const GaloisCertificate& a, const GaloisCertificate& b, const Matrix& phi);
/// The insertion S -> S (x)_F T against a base-changed certificate.
MorphismReport check_base_change_morphism(const GaloisCertificate& source, const GaloisCertificate& changed,
                                          const FieldEmbedding& embedding);

struct TensorBaseResult {
  /// S -> S (x) S', base S (x) 1, group G' acting on the second factor.
  GaloisCertificate first;
  /// S' -> S (x) S', base 1 (x) S', group G acting on the first factor.
  GaloisCertificate second;
};
/// Raises NotCommutative or NotStrict.
TensorBaseResult prop32_check(const GaloisCertificate& a, const GaloisCertificate& b);

}  // namespace galoisazu
