#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galoisazu/algebra.hpp"
#include "galoisazu/field.hpp"

namespace galoisazu {

/// A place of Q: a prime p, or the real place (p == 0).
struct Place {
  std::int64_t p = 0;

  static Place infinity() { return Place{0}; }
  bool is_infinite() const { return p == 0; }
  std::string to_string() const { return p == 0 ? "inf" : std::to_string(p); }
  /// Primes ascending, the real place last.
  bool operator<(const Place& o) const { return (p == 0 ? INT64_MAX : p) < (o.p == 0 ? INT64_MAX : o.p); }
  bool operator==(const Place& o) const { return p == o.p; }
};
/// "inf" or a prime.
Place parse_place(std::string_view text);

/// Squarefree integer in the square class of a nonzero rational; raises
/// ZeroParameter, or Unsupported beyond the trial-division bound 10^12.
std::int64_t squarefree_representative(const mpq_class& a);

/// +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over Q_v. The real
/// place uses signs; p = 2 searches primitive triples mod 32; odd p searches
/// the reduced conic mod p. Both searches accept a point only when Hensel's
/// criterion f = 0 mod p^(2m+1), m the least valuation of a partial
/// derivative, certifies a p-adic lift.
int hilbert_symbol(const mpq_class& a, const mpq_class& b, Place place);

/// Places where the local symbol is -1.
struct QuaternionClass {
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::vector<Place> ramified;
  std::vector<std::string> notes;

  bool is_trivial() const { return ramified.empty(); }
};
/// Evaluates the real place and every prime dividing 2ab; the symbol is +1 at
/// every other prime. The even-cardinality invariant is asserted.
QuaternionClass quaternion_class(const mpq_class& a, const mpq_class& b);

/// A product of quaternion classes, tracked by its local invariants.
struct BrauerClass {
  std::vector<std::pair<std::int64_t, std::int64_t>> factors;
  std::vector<Place> ramified;

  static BrauerClass trivial() { return {}; }
  static BrauerClass of(const QuaternionClass& c) { return {{{c.a, c.b}}, c.ramified}; }
  bool is_trivial() const { return ramified.empty(); }
  /// Same local invariants.
  bool same_class(const BrauerClass& o) const { return ramified == o.ramified; }
};
/// Placewise product: the ramified set is the symmetric difference.
BrauerClass class_product(const BrauerClass& x, const BrauerClass& y);

/// Q: split iff no place ramifies. Finite fields: always split. Otherwise
/// raises UnsupportedField.
bool is_split(const FieldPtr& field, const Scalar& a, const Scalar& b);

struct SteinbergReport {
  std::size_t relations_checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};
/// Placewise bilinearity (ab, c) = (a, c)(b, c) on consecutive sample triples,
/// and (a, 1 - a) = 1 for every sample other than 0 and 1.
SteinbergReport steinberg_checks(const std::vector<mpq_class>& samples);
/// The same relations over a finite field, with the symbol computed by the
/// norm criterion for n = 2.
SteinbergReport steinberg_checks(const FieldPtr& field, const std::vector<Scalar>& samples);

struct NormCriterionReport {
  /// x^n - a is irreducible, so E is a field.
  bool field_extension = false;
  bool split = false;
  /// Size of N(E^x) inside F^x.
  std::uint64_t norm_image_size = 0;
};
/// Whether b lies in N_{E/F}(E^x) for E = F[x]/(x^n - a), by enumerating E^x.
/// When x^n - a is reducible the criterion is vacuously split. Raises
/// FieldTooLarge when |F| > 1000 or |E| > 10^6.
NormCriterionReport norm_criterion_split(const FieldPtr& field, const Scalar& a, const Scalar& b, int n);

}  // namespace galoisazu
