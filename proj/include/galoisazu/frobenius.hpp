#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galoisazu/galois.hpp"

namespace galoisazu {

/// Pairs (u_i, v_i) with a bimodule map tau: S -> R. tau is stored as a
/// base_dim x dim S matrix into the coordinates of the base.
struct FrobeniusSystem {
  Extension extension;
  std::vector<Vec> u;
  std::vector<Vec> v;
  Matrix tau;
  std::vector<Check> checks;

  bool all_passed() const;
  /// tau(s) as an element of S.
  Vec tau_of(const Vec& s) const;
};

/// Validates the bimodule property and both normalizing conditions
/// sum u_i tau(v_i s) = s = sum tau(s u_i) v_i on every basis vector.
FrobeniusSystem make_frobenius_system(const Extension& ext, std::vector<Vec> u, std::vector<Vec> v, Matrix tau);
/// ((x_i, y_i), tr) from the Galois basis.
FrobeniusSystem frobenius_from_galois(const GaloisCertificate& cert);

struct SeparabilityReport {
  Vec eta;
  bool casimir_ok = false;
  bool mu_one_ok = false;
  /// e(eta)^2 = e(eta) in S (x) S^op; only evaluated over the ground field.
  std::optional<bool> idempotent_ok;

  bool all_passed() const { return casimir_ok && mu_one_ok && idempotent_ok.value_or(true); }
  /// A separability element must give an idempotent.
  bool consistent() const { return !(casimir_ok && mu_one_ok) || idempotent_ok.value_or(true); }
};
SeparabilityReport separability_check(const Extension& ext, const Vec& eta);

struct NakayamaResult {
  /// nu(d) = sum_i tr(x_i d) y_i, columnwise.
  Matrix nu;
  std::vector<Check> checks;
  bool all_passed() const;
};
/// Raises NotCentralizing unless the base is the ground field.
NakayamaResult nakayama(const GaloisCertificate& cert);

enum class SymmetryOutcome { Symmetric, NotInner, NotFoundAtDeskScale };
std::string_view to_string(SymmetryOutcome outcome);

struct SymmetryResult {
  SymmetryOutcome outcome = SymmetryOutcome::NotFoundAtDeskScale;
  /// Invertible w with nu(s) w = w s for all s, verified by conjugation.
  std::optional<Vec> witness;
  /// Dimension of the solution space of nu(s) w = w s.
  std::size_t solution_dim = 0;
  std::uint64_t candidates_tested = 0;
  std::string method;

  bool symmetric() const { return outcome == SymmetryOutcome::Symmetric; }
};
/// Searches for w realising nu as an inner automorphism. Exhaustive over the
/// solution space when it has at most 10^6 points; otherwise tries the basis
/// vectors and the combination with distinct prime coefficients.
SymmetryResult is_symmetric(const GaloisCertificate& cert, const Matrix& nu);

}  // namespace galoisazu
