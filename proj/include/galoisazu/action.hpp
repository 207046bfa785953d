#pragma once

#include <vector>

#include "galoisazu/algebra.hpp"
#include "galoisazu/group.hpp"
#include "galoisazu/matrix.hpp"

namespace galoisazu {

/// Action of a finite abelian group on an algebra by verified automorphisms.
/// Matrices act on coefficient columns: g(b_j) = sum_i M(i, j) b_i.
class AlgebraAction {
 public:
  /// Raises NotAutomorphism, WrongOrder or NonCommuting.
  static AlgebraAction make(GroupSpec group, AlgebraPtr algebra, std::vector<Matrix> generators);

  const GroupSpec& group() const { return group_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Matrix>& generators() const { return generators_; }
  /// Matrix of the group element with flat index g.
  const Matrix& element_matrix(std::size_t g) const { return elements_.at(g); }
  Vec act(std::size_t g, const Vec& s) const { return elements_.at(g).apply(s); }

 private:
  GroupSpec group_;
  AlgebraPtr algebra_;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
};

/// phi(b_i b_j) = phi(b_i) phi(b_j) on all basis pairs.
bool is_multiplicative(const Algebra& source, const Algebra& target, const Matrix& phi);
bool is_unital(const Algebra& source, const Algebra& target, const Matrix& phi);

SubalgebraBasis invariants(const AlgebraAction& action);
/// The same matrices acting on opposite(A); automorphism checks re-run.
AlgebraAction opposite_action(const AlgebraAction& action, const AlgebraPtr& opposite_algebra);
/// Action of the subgroup generated by `generators`, which must be independent
/// (closure order equal to the product of their orders); raises UnsupportedSubgroup.
AlgebraAction restrict_action(const AlgebraAction& action, const std::vector<GroupSpec::Element>& generators);
/// All elements of the subgroup generated by `generators`, as flat indices.
std::vector<std::size_t> subgroup_closure(const GroupSpec& group, const std::vector<GroupSpec::Element>& generators);

// Standard actions --------------------------------------------------------------

/// V on (a, b / F): alpha(i) = i, alpha(j) = -j; beta(i) = -i, beta(j) = j.
AlgebraAction quaternion_v_action(const AlgebraPtr& quaternion);
/// (Z/n)^2 on (a, b, zeta)_F: (i, j)(x^k u^l) = zeta^(jk + il) x^k u^l.
AlgebraAction symbol_action(const AlgebraPtr& symbol, const Scalar& zeta, int n);
/// G on S(G) for S = F: g(r delta_h) = r delta_(h - g).
AlgebraAction translation_action(const AlgebraPtr& function_alg, const GroupSpec& group);
/// Z/order on F[X]/(f) by x -> image, for an automorphism of that order.
AlgebraAction substitution_action(const AlgebraPtr& quotient, const Vec& image_of_x, int order);
/// (Z/n)^2 on M_n(F): alpha = conjugation by diag(1, zeta, ..., zeta^(n-1)), beta = conjugation by the cyclic shift.
AlgebraAction matrix_action(const AlgebraPtr& matrices, const Scalar& zeta, int n);
/// Diagonal G x G' action on A (x) B.
AlgebraAction tensor_action(const AlgebraAction& a, const AlgebraAction& b, const AlgebraPtr& product);

}  // namespace galoisazu
