#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "galoisazu/error.hpp"

namespace galoisazu {

enum class FieldKind { Rationals, Prime, Extension, Cyclotomic };

/// Canonical representation of one field element, interpreted by its Field:
/// rationals hold a reduced mpq, prime fields a residue in [0, p), extension
/// fields a residue vector of length deg(modulus), cyclotomic fields a
/// rational vector of length phi(n). Equal canonical forms are equal elements.
using Scalar = std::variant<mpq_class, std::int64_t, std::vector<mpq_class>, std::vector<std::int64_t>>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::int64_t kMaxPrime = 1'000'000;
inline constexpr int kMaxExtensionDegree = 12;
inline constexpr int kMaxCyclotomicOrder = 24;

/// An exact field: Q, F_p, F_p[X]/(f) or Q(zeta_n). Immutable.
class Field {
 public:
  static FieldPtr rationals();
  static FieldPtr prime(std::int64_t p);
  /// `modulus` is monic, lowest coefficient first, irreducible over F_p.
  static FieldPtr extension(std::int64_t p, std::vector<std::int64_t> modulus);
  static FieldPtr cyclotomic(int n);
  /// Parses "Q", "Fp:5", "Fq:3:x^2+1", "Qzeta:4".
  static FieldPtr parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  std::int64_t characteristic() const { return characteristic_; }
  /// Number of elements; nullopt for infinite fields.
  const std::optional<mpz_class>& cardinality() const { return cardinality_; }
  bool is_finite() const { return cardinality_.has_value(); }
  /// Degree over the prime field (1 for Q and F_p).
  int degree() const { return degree_; }
  /// Monic modulus over the prime field for Extension; Phi_n for Cyclotomic.
  const std::vector<std::int64_t>& extension_modulus() const { return ext_modulus_; }
  const std::vector<mpq_class>& cyclotomic_modulus() const { return cyc_modulus_; }
  int cyclotomic_order() const { return cyc_order_; }

  std::string descriptor() const;
  bool same_as(const Field& other) const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const mpq_class& v) const;
  /// Image of X in F_p[X]/(f) or Q[X]/(Phi_n).
  Scalar generator() const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, const mpz_class& exponent) const;
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }
  /// acc -= c * x, in place.
  void sub_mul(Scalar& acc, const Scalar& c, const Scalar& x) const;
  /// acc += c * x, in place.
  void add_mul(Scalar& acc, const Scalar& c, const Scalar& x) const;

  /// Checks that the variant alternative and length fit this field.
  bool is_canonical(const Scalar& a) const;

  /// Enumeration of a finite field in canonical order: index = sum c_i p^i
  /// over the residue coefficients, so 0, 1, ..., p-1, X, X+1, ...
  std::uint64_t index_of(const Scalar& a) const;
  Scalar element_at(std::uint64_t index) const;
  /// Cardinality as a machine integer, raising FieldTooLarge above `cap`.
  std::uint64_t enumerable_size(std::uint64_t cap) const;

  /// Rational value of a prime-field or Q element (embedding of the prime field).
  std::string format(const Scalar& a) const;
  /// Accepts "p/q" or "n" for Q and F_p; for polynomial kinds a bare integer
  /// or fraction (a constant) or a bracketed list "[c0,c1,...]".
  Scalar parse_element(std::string_view text) const;
  Scalar from_coefficients(std::span<const std::string> coefficients) const;
  std::vector<std::string> coefficient_strings(const Scalar& a) const;
  bool is_polynomial_kind() const { return kind_ == FieldKind::Extension || kind_ == FieldKind::Cyclotomic; }

 private:
  Field() = default;

  FieldKind kind_ = FieldKind::Rationals;
  std::int64_t characteristic_ = 0;
  std::optional<mpz_class> cardinality_;
  int degree_ = 1;
  std::vector<std::int64_t> ext_modulus_;
  std::vector<mpq_class> cyc_modulus_;
  int cyc_order_ = 0;
};

/// A field element bound to its field; the user-facing arithmetic type.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Scalar value);
  static FieldElement zero(FieldPtr field);
  static FieldElement one(FieldPtr field);
  static FieldElement from_int(FieldPtr field, std::int64_t v);
  static FieldElement parse(FieldPtr field, std::string_view text);

  const FieldPtr& field() const { return field_; }
  const Scalar& value() const { return value_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(const mpz_class& exponent) const;
  bool is_zero() const { return field_->is_zero(value_); }
  bool operator==(const FieldElement& o) const;
  std::string to_string() const { return field_->format(value_); }

 private:
  void require_same(const FieldElement& o) const;

  FieldPtr field_;
  Scalar value_;
};

/// Euler totient by trial division.
std::int64_t euler_phi(std::int64_t n);
bool is_prime(std::int64_t n);
/// Distinct prime divisors in ascending order.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// Phi_n over Q, lowest coefficient first, via X^n - 1 = prod_{d | n} Phi_d.
std::vector<mpq_class> cyclotomic_polynomial(int n);

/// Multiplicative order of a nonzero element when it is a root of unity of
/// order at most `bound`; nullopt otherwise.
std::optional<std::int64_t> multiplicative_order(const Field& field, const Scalar& a, std::int64_t bound);

/// First element of exact multiplicative order n in canonical order (finite
/// fields), or the power g^(N/n) of the standard generator g of the roots of
/// unity of Q(zeta_m) (cyclotomic fields). NoSuchElement when none exists.
FieldElement element_of_order(const FieldPtr& field, std::int64_t n);

/// Ben-Or irreducibility test over F_p for a monic polynomial.
bool is_irreducible_mod_p(std::int64_t p, const std::vector<std::int64_t>& monic);

/// Parses an integer-coefficient polynomial in x, e.g. "x^3+2*x+1" or "x^2-3".
std::vector<mpz_class> parse_integer_polynomial(std::string_view text);
std::string format_polynomial(const std::vector<std::int64_t>& coefficients);

}  // namespace galoisazu
