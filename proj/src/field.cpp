#include "galoisazu/field.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "galoisazu/detail/poly_ops.hpp"

namespace galoisazu {

namespace {

using detail::ModP;
using detail::RationalRing;

constexpr std::uint64_t kOrderSearchLimit = 10'000'000;

std::vector<std::int64_t> pad_ext(std::vector<std::int64_t> v, int d) {
  v.resize(static_cast<std::size_t>(d), 0);
  return v;
}

std::vector<mpq_class> pad_cyc(std::vector<mpq_class> v, int d) {
  v.resize(static_cast<std::size_t>(d), mpq_class(0));
  return v;
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) raise(ErrorCode::ParseError, "empty number");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digits_before = false, digits_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (seen_slash) raise(ErrorCode::ParseError, "malformed rational '" + s + "'");
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      (seen_slash ? digits_after : digits_before) = true;
    } else {
      raise(ErrorCode::ParseError, "malformed rational '" + s + "'");
    }
  }
  if (!digits_before || (seen_slash && !digits_after)) raise(ErrorCode::ParseError, "malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) raise(ErrorCode::ParseError, "malformed rational '" + s + "'");
  if (q.get_den() == 0) raise(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::int64_t reduce_mod(const mpz_class& v, std::int64_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r.get_si();
}

}  // namespace

// ---------------------------------------------------------------------------
// number theory helpers

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 0) n = -n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (auto p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<mpq_class> cyclotomic_polynomial(int n) {
  if (n < 1) raise(ErrorCode::InvalidField, "cyclotomic order must be >= 1");
  RationalRing ring;
  std::vector<mpq_class> numerator(static_cast<std::size_t>(n) + 1, mpq_class(0));
  numerator[0] = -1;
  numerator[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = detail::divmod(ring, numerator, cyclotomic_polynomial(d));
    if (!r.empty()) raise(ErrorCode::Unsupported, "cyclotomic division left a remainder");
    numerator = std::move(q);
  }
  return numerator;
}

bool is_irreducible_mod_p(std::int64_t p, const std::vector<std::int64_t>& monic) {
  ModP ring{p};
  std::vector<std::int64_t> f = monic;
  detail::trim(ring, f);
  const int d = detail::degree<ModP>(f);
  if (d < 1) return false;
  if (d == 1) return true;
  const std::vector<std::int64_t> x{0, 1};
  auto h = x;
  for (int i = 1; i <= d / 2; ++i) {
    h = detail::powmod(ring, h, mpz_class(static_cast<long>(p)), f);
    auto g = detail::gcd(ring, detail::sub(ring, h, x), f);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<mpz_class> parse_integer_polynomial(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) raise(ErrorCode::ParseError, "empty polynomial");
  std::vector<mpz_class> coeffs;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { raise(ErrorCode::ParseError, "polynomial '" + s + "': " + why); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-'");
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits);
    std::size_t power = 0;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) fail("dangling '*'");
      ++i;
      if (i >= s.size() || s[i] != 'x') fail("expected x after '*'");
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string exp;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) exp.push_back(s[i++]);
        if (exp.empty()) fail("missing exponent");
        power = std::stoul(exp);
        if (power > 4096) fail("exponent too large");
      }
    } else if (digits.empty()) {
      fail("empty term");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, mpz_class(0));
    coeffs[power] += sign * c;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

std::string format_polynomial(const std::vector<std::int64_t>& coefficients) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const auto c = coefficients[k];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? "-" : "+");
    else if (c < 0) out << "-";
    const auto mag = c < 0 ? -c : c;
    if (k == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "x";
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

// ---------------------------------------------------------------------------
// construction

FieldPtr Field::rationals() {
  static const FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Rationals;
    return f;
  }();
  return q;
}

FieldPtr Field::prime(std::int64_t p) {
  if (!is_prime(p)) raise(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  if (p > kMaxPrime) raise(ErrorCode::InvalidField, "prime exceeds the cap " + std::to_string(kMaxPrime));
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Prime;
  f->characteristic_ = p;
  f->cardinality_ = mpz_class(static_cast<long>(p));
  return f;
}

FieldPtr Field::extension(std::int64_t p, std::vector<std::int64_t> modulus) {
  if (!is_prime(p)) raise(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  if (p > kMaxPrime) raise(ErrorCode::InvalidField, "prime exceeds the cap " + std::to_string(kMaxPrime));
  ModP ring{p};
  for (auto& c : modulus) c = ring.from_int(c);
  detail::trim(ring, modulus);
  const int d = detail::degree<ModP>(modulus);
  if (d < 1) raise(ErrorCode::InvalidField, "extension modulus must have positive degree");
  if (d > kMaxExtensionDegree) raise(ErrorCode::InvalidField, "extension degree exceeds " + std::to_string(kMaxExtensionDegree));
  if (modulus.back() != 1) raise(ErrorCode::InvalidField, "extension modulus must be monic");
  if (!is_irreducible_mod_p(p, modulus))
    raise(ErrorCode::InvalidField, format_polynomial(modulus) + " is reducible over F_" + std::to_string(p));
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Extension;
  f->characteristic_ = p;
  f->degree_ = d;
  mpz_class card;
  mpz_ui_pow_ui(card.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  f->cardinality_ = card;
  f->ext_modulus_ = std::move(modulus);
  return f;
}

FieldPtr Field::cyclotomic(int n) {
  if (n < 1 || n > kMaxCyclotomicOrder)
    raise(ErrorCode::InvalidField, "cyclotomic order must lie in [1, " + std::to_string(kMaxCyclotomicOrder) + "]");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Cyclotomic;
  f->cyc_order_ = n;
  f->cyc_modulus_ = cyclotomic_polynomial(n);
  f->degree_ = static_cast<int>(f->cyc_modulus_.size()) - 1;
  return f;
}

FieldPtr Field::parse(std::string_view text) {
  std::string s(text);
  if (s == "Q") return rationals();
  auto parse_int = [&](const std::string& part) -> std::int64_t {
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c); }))
      raise(ErrorCode::ParseError, "bad integer in field descriptor '" + s + "'");
    if (part.size() > 12) raise(ErrorCode::InvalidField, "integer too large in field descriptor '" + s + "'");
    return std::stoll(part);
  };
  if (s.rfind("Fp:", 0) == 0) return prime(parse_int(s.substr(3)));
  if (s.rfind("Qzeta:", 0) == 0) {
    auto n = parse_int(s.substr(6));
    if (n > kMaxCyclotomicOrder) raise(ErrorCode::InvalidField, "cyclotomic order too large");
    return cyclotomic(static_cast<int>(n));
  }
  if (s.rfind("Fq:", 0) == 0) {
    auto rest = s.substr(3);
    auto colon = rest.find(':');
    if (colon == std::string::npos) raise(ErrorCode::ParseError, "expected Fq:p:modulus, got '" + s + "'");
    auto p = parse_int(rest.substr(0, colon));
    if (!is_prime(p)) raise(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
    auto coeffs = parse_integer_polynomial(rest.substr(colon + 1));
    std::vector<std::int64_t> modulus;
    for (const auto& c : coeffs) modulus.push_back(reduce_mod(c, p));
    return extension(p, std::move(modulus));
  }
  raise(ErrorCode::ParseError, "unknown field descriptor '" + s + "'");
}

std::string Field::descriptor() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Prime: return "Fp:" + std::to_string(characteristic_);
    case FieldKind::Extension: return "Fq:" + std::to_string(characteristic_) + ":" + format_polynomial(ext_modulus_);
    case FieldKind::Cyclotomic: return "Qzeta:" + std::to_string(cyc_order_);
  }
  return "?";
}

bool Field::same_as(const Field& other) const {
  if (this == &other) return true;
  return kind_ == other.kind_ && characteristic_ == other.characteristic_ && ext_modulus_ == other.ext_modulus_ &&
         cyc_order_ == other.cyc_order_;
}

// ---------------------------------------------------------------------------
// arithmetic

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  switch (kind_) {
    case FieldKind::Rationals: return mpq_class(static_cast<long>(v));
    case FieldKind::Prime: return ModP{characteristic_}.from_int(v);
    case FieldKind::Extension: {
      std::vector<std::int64_t> c(static_cast<std::size_t>(degree_), 0);
      c[0] = ModP{characteristic_}.from_int(v);
      return c;
    }
    case FieldKind::Cyclotomic: {
      std::vector<mpq_class> c(static_cast<std::size_t>(degree_), mpq_class(0));
      c[0] = static_cast<long>(v);
      return c;
    }
  }
  return mpq_class(0);
}

Scalar Field::from_rational(const mpq_class& input) const {
  mpq_class v = input;
  if (v.get_den() == 0) raise(ErrorCode::DivisionByZero, "zero denominator");
  v.canonicalize();
  switch (kind_) {
    case FieldKind::Rationals: return v;
    case FieldKind::Cyclotomic: {
      std::vector<mpq_class> c(static_cast<std::size_t>(degree_), mpq_class(0));
      c[0] = v;
      return c;
    }
    case FieldKind::Prime:
    case FieldKind::Extension: {
      ModP ring{characteristic_};
      auto num = reduce_mod(v.get_num(), characteristic_);
      auto den = reduce_mod(v.get_den(), characteristic_);
      if (den == 0) raise(ErrorCode::DivisionByZero, "denominator vanishes in characteristic " + std::to_string(characteristic_));
      auto r = ring.mul(num, ring.inv(den));
      if (kind_ == FieldKind::Prime) return r;
      std::vector<std::int64_t> c(static_cast<std::size_t>(degree_), 0);
      c[0] = r;
      return c;
    }
  }
  return mpq_class(0);
}

Scalar Field::generator() const {
  switch (kind_) {
    case FieldKind::Extension: {
      if (degree_ == 1) return pad_ext({ModP{characteristic_}.neg(ext_modulus_[0])}, 1);
      std::vector<std::int64_t> c(static_cast<std::size_t>(degree_), 0);
      c[1] = 1;
      return c;
    }
    case FieldKind::Cyclotomic: {
      if (degree_ == 1) return std::vector<mpq_class>{-cyc_modulus_[0]};
      std::vector<mpq_class> c(static_cast<std::size_t>(degree_), mpq_class(0));
      c[1] = 1;
      return c;
    }
    default: raise(ErrorCode::Unsupported, "field " + descriptor() + " has no polynomial generator");
  }
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case FieldKind::Rationals: return std::get<mpq_class>(a) + std::get<mpq_class>(b);
    case FieldKind::Prime: return ModP{characteristic_}.add(std::get<std::int64_t>(a), std::get<std::int64_t>(b));
    case FieldKind::Extension: {
      ModP ring{characteristic_};
      const auto& x = std::get<std::vector<std::int64_t>>(a);
      const auto& y = std::get<std::vector<std::int64_t>>(b);
      std::vector<std::int64_t> out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = ring.add(x[i], y[i]);
      return out;
    }
    case FieldKind::Cyclotomic: {
      const auto& x = std::get<std::vector<mpq_class>>(a);
      const auto& y = std::get<std::vector<mpq_class>>(b);
      std::vector<mpq_class> out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
      return out;
    }
  }
  return a;
}

Scalar Field::neg(const Scalar& a) const {
  switch (kind_) {
    case FieldKind::Rationals: return mpq_class(-std::get<mpq_class>(a));
    case FieldKind::Prime: return ModP{characteristic_}.neg(std::get<std::int64_t>(a));
    case FieldKind::Extension: {
      ModP ring{characteristic_};
      auto out = std::get<std::vector<std::int64_t>>(a);
      for (auto& c : out) c = ring.neg(c);
      return out;
    }
    case FieldKind::Cyclotomic: {
      auto out = std::get<std::vector<mpq_class>>(a);
      for (auto& c : out) c = -c;
      return out;
    }
  }
  return a;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case FieldKind::Rationals: return std::get<mpq_class>(a) - std::get<mpq_class>(b);
    case FieldKind::Prime: return ModP{characteristic_}.sub(std::get<std::int64_t>(a), std::get<std::int64_t>(b));
    default: return add(a, neg(b));
  }
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case FieldKind::Rationals: return std::get<mpq_class>(a) * std::get<mpq_class>(b);
    case FieldKind::Prime: return ModP{characteristic_}.mul(std::get<std::int64_t>(a), std::get<std::int64_t>(b));
    case FieldKind::Extension: {
      ModP ring{characteristic_};
      auto x = std::get<std::vector<std::int64_t>>(a);
      auto y = std::get<std::vector<std::int64_t>>(b);
      detail::trim(ring, x);
      detail::trim(ring, y);
      return pad_ext(detail::mulmod(ring, x, y, ext_modulus_), degree_);
    }
    case FieldKind::Cyclotomic: {
      RationalRing ring;
      auto x = std::get<std::vector<mpq_class>>(a);
      auto y = std::get<std::vector<mpq_class>>(b);
      detail::trim(ring, x);
      detail::trim(ring, y);
      return pad_cyc(detail::mulmod(ring, x, y, cyc_modulus_), degree_);
    }
  }
  return a;
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) raise(ErrorCode::DivisionByZero, "inverse of zero in " + descriptor());
  switch (kind_) {
    case FieldKind::Rationals: return mpq_class(1 / std::get<mpq_class>(a));
    case FieldKind::Prime: return ModP{characteristic_}.inv(std::get<std::int64_t>(a));
    case FieldKind::Extension: {
      ModP ring{characteristic_};
      auto x = std::get<std::vector<std::int64_t>>(a);
      detail::trim(ring, x);
      return pad_ext(detail::inverse_mod(ring, x, ext_modulus_), degree_);
    }
    case FieldKind::Cyclotomic: {
      RationalRing ring;
      auto x = std::get<std::vector<mpq_class>>(a);
      detail::trim(ring, x);
      return pad_cyc(detail::inverse_mod(ring, x, cyc_modulus_), degree_);
    }
  }
  return a;
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

void Field::sub_mul(Scalar& acc, const Scalar& c, const Scalar& x) const {
  switch (kind_) {
    case FieldKind::Rationals: std::get<mpq_class>(acc) -= std::get<mpq_class>(c) * std::get<mpq_class>(x); return;
    case FieldKind::Prime: {
      ModP ring{characteristic_};
      auto& a = std::get<std::int64_t>(acc);
      a = ring.sub(a, ring.mul(std::get<std::int64_t>(c), std::get<std::int64_t>(x)));
      return;
    }
    default: acc = sub(acc, mul(c, x));
  }
}

void Field::add_mul(Scalar& acc, const Scalar& c, const Scalar& x) const {
  switch (kind_) {
    case FieldKind::Rationals: std::get<mpq_class>(acc) += std::get<mpq_class>(c) * std::get<mpq_class>(x); return;
    case FieldKind::Prime: {
      ModP ring{characteristic_};
      auto& a = std::get<std::int64_t>(acc);
      a = ring.add(a, ring.mul(std::get<std::int64_t>(c), std::get<std::int64_t>(x)));
      return;
    }
    default: acc = add(acc, mul(c, x));
  }
}

Scalar Field::pow(const Scalar& a, const mpz_class& exponent) const {
  if (exponent < 0) return pow(inv(a), -exponent);
  Scalar result = one();
  Scalar base = a;
  mpz_class e = exponent;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

bool Field::is_zero(const Scalar& a) const {
  switch (kind_) {
    case FieldKind::Rationals: return sgn(std::get<mpq_class>(a)) == 0;
    case FieldKind::Prime: return std::get<std::int64_t>(a) == 0;
    case FieldKind::Extension: {
      const auto& v = std::get<std::vector<std::int64_t>>(a);
      return std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; });
    }
    case FieldKind::Cyclotomic: {
      const auto& v = std::get<std::vector<mpq_class>>(a);
      return std::all_of(v.begin(), v.end(), [](const mpq_class& c) { return sgn(c) == 0; });
    }
  }
  return false;
}

bool Field::is_one(const Scalar& a) const { return a == one(); }

bool Field::is_canonical(const Scalar& a) const {
  switch (kind_) {
    case FieldKind::Rationals: {
      if (!std::holds_alternative<mpq_class>(a)) return false;
      mpq_class q = std::get<mpq_class>(a);
      q.canonicalize();
      return q == std::get<mpq_class>(a) && std::get<mpq_class>(a).get_den() > 0;
    }
    case FieldKind::Prime: {
      if (!std::holds_alternative<std::int64_t>(a)) return false;
      auto v = std::get<std::int64_t>(a);
      return v >= 0 && v < characteristic_;
    }
    case FieldKind::Extension: {
      if (!std::holds_alternative<std::vector<std::int64_t>>(a)) return false;
      const auto& v = std::get<std::vector<std::int64_t>>(a);
      return static_cast<int>(v.size()) == degree_ &&
             std::all_of(v.begin(), v.end(), [&](std::int64_t c) { return c >= 0 && c < characteristic_; });
    }
    case FieldKind::Cyclotomic: {
      if (!std::holds_alternative<std::vector<mpq_class>>(a)) return false;
      return static_cast<int>(std::get<std::vector<mpq_class>>(a).size()) == degree_;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// enumeration

std::uint64_t Field::enumerable_size(std::uint64_t cap) const {
  if (!is_finite()) raise(ErrorCode::InfiniteField, descriptor() + " is infinite");
  if (*cardinality_ > mpz_class(static_cast<unsigned long>(cap)))
    raise(ErrorCode::FieldTooLarge, descriptor() + " has more than " + std::to_string(cap) + " elements");
  return cardinality_->get_ui();
}

std::uint64_t Field::index_of(const Scalar& a) const {
  switch (kind_) {
    case FieldKind::Prime: return static_cast<std::uint64_t>(std::get<std::int64_t>(a));
    case FieldKind::Extension: {
      const auto& v = std::get<std::vector<std::int64_t>>(a);
      std::uint64_t idx = 0;
      for (std::size_t k = v.size(); k-- > 0;) idx = idx * static_cast<std::uint64_t>(characteristic_) + static_cast<std::uint64_t>(v[k]);
      return idx;
    }
    default: raise(ErrorCode::InfiniteField, descriptor() + " cannot be enumerated");
  }
}

Scalar Field::element_at(std::uint64_t index) const {
  switch (kind_) {
    case FieldKind::Prime: return static_cast<std::int64_t>(index % static_cast<std::uint64_t>(characteristic_));
    case FieldKind::Extension: {
      std::vector<std::int64_t> v(static_cast<std::size_t>(degree_), 0);
      for (auto& c : v) {
        c = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(characteristic_));
        index /= static_cast<std::uint64_t>(characteristic_);
      }
      return v;
    }
    default: raise(ErrorCode::InfiniteField, descriptor() + " cannot be enumerated");
  }
}

// ---------------------------------------------------------------------------
// text

std::string Field::format(const Scalar& a) const {
  switch (kind_) {
    case FieldKind::Rationals: return std::get<mpq_class>(a).get_str();
    case FieldKind::Prime: return std::to_string(std::get<std::int64_t>(a));
    default: {
      std::string out = "[";
      auto parts = coefficient_strings(a);
      for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
      return out + "]";
    }
  }
}

std::vector<std::string> Field::coefficient_strings(const Scalar& a) const {
  std::vector<std::string> out;
  switch (kind_) {
    case FieldKind::Rationals: out.push_back(std::get<mpq_class>(a).get_str()); break;
    case FieldKind::Prime: out.push_back(std::to_string(std::get<std::int64_t>(a))); break;
    case FieldKind::Extension:
      for (auto c : std::get<std::vector<std::int64_t>>(a)) out.push_back(std::to_string(c));
      break;
    case FieldKind::Cyclotomic:
      for (const auto& c : std::get<std::vector<mpq_class>>(a)) out.push_back(c.get_str());
      break;
  }
  return out;
}

Scalar Field::from_coefficients(std::span<const std::string> coefficients) const {
  if (!is_polynomial_kind()) {
    if (coefficients.size() != 1) raise(ErrorCode::ParseError, "expected a single coefficient for " + descriptor());
    return from_rational(parse_rational(coefficients[0]));
  }
  if (static_cast<int>(coefficients.size()) > degree_)
    raise(ErrorCode::ParseError, "too many coefficients for " + descriptor());
  Scalar acc = zero();
  Scalar power = one();
  const Scalar x = generator();
  for (const auto& c : coefficients) {
    acc = add(acc, mul(from_rational(parse_rational(c)), power));
    power = mul(power, x);
  }
  return acc;
}

Scalar Field::parse_element(std::string_view text) const {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') raise(ErrorCode::ParseError, "unterminated coefficient list '" + s + "'");
    std::vector<std::string> parts;
    std::string inner = s.substr(1, s.size() - 2);
    std::string cur;
    for (char c : inner) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else if (c != '"') {
        cur.push_back(c);
      }
    }
    if (!inner.empty()) parts.push_back(cur);
    if (parts.empty()) return zero();
    return from_coefficients(parts);
  }
  return from_rational(parse_rational(s));
}

// ---------------------------------------------------------------------------
// roots of unity

std::optional<std::int64_t> multiplicative_order(const Field& field, const Scalar& a, std::int64_t bound) {
  if (field.is_zero(a)) return std::nullopt;
  Scalar power = a;
  for (std::int64_t m = 1; m <= bound; ++m) {
    if (field.is_one(power)) return m;
    power = field.mul(power, a);
  }
  return std::nullopt;
}

FieldElement element_of_order(const FieldPtr& field, std::int64_t n) {
  if (n < 1) raise(ErrorCode::NoSuchElement, "order must be >= 1");
  const auto& F = *field;
  if (F.characteristic() != 0 && n % F.characteristic() == 0)
    raise(ErrorCode::NoSuchElement, "characteristic divides " + std::to_string(n));
  if (n == 1) return FieldElement::one(field);
  auto has_exact_order = [&](const Scalar& a) {
    if (!F.is_one(F.pow(a, mpz_class(static_cast<long>(n))))) return false;
    for (auto r : prime_divisors(n))
      if (F.is_one(F.pow(a, mpz_class(static_cast<long>(n / r))))) return false;
    return true;
  };
  switch (F.kind()) {
    case FieldKind::Rationals:
      if (n == 2) return FieldElement(field, F.from_int(-1));
      raise(ErrorCode::NoSuchElement, "Q has no element of order " + std::to_string(n));
    case FieldKind::Cyclotomic: {
      const std::int64_t m = F.cyclotomic_order();
      const std::int64_t N = std::lcm<std::int64_t>(2, m);
      if (N % n != 0) raise(ErrorCode::NoSuchElement, F.descriptor() + " has no element of order " + std::to_string(n));
      Scalar g = (m % 2 == 0) ? F.generator() : F.neg(F.generator());
      auto zeta = F.pow(g, mpz_class(static_cast<long>(N / n)));
      if (!has_exact_order(zeta)) raise(ErrorCode::NoSuchElement, "root-of-unity generator check failed");
      return FieldElement(field, zeta);
    }
    case FieldKind::Prime:
    case FieldKind::Extension: {
      const mpz_class group_order = *F.cardinality() - 1;
      if (group_order % n != 0)
        raise(ErrorCode::NoSuchElement, std::to_string(n) + " does not divide |" + F.descriptor() + "^x|");
      mpz_class limit = *F.cardinality();
      const std::uint64_t steps = limit > mpz_class(static_cast<unsigned long>(kOrderSearchLimit))
                                      ? kOrderSearchLimit
                                      : limit.get_ui();
      for (std::uint64_t idx = 1; idx < steps; ++idx) {
        auto a = F.element_at(idx);
        if (has_exact_order(a)) return FieldElement(field, a);
      }
      raise(ErrorCode::NoSuchElement, "search limit reached before finding an element of order " + std::to_string(n));
    }
  }
  raise(ErrorCode::NoSuchElement, "unreachable");
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr field, Scalar value) : field_(std::move(field)), value_(std::move(value)) {
  if (!field_->is_canonical(value_)) raise(ErrorCode::FieldMismatch, "value is not a canonical element of " + field_->descriptor());
}

FieldElement FieldElement::zero(FieldPtr field) {
  auto v = field->zero();
  return FieldElement(std::move(field), std::move(v));
}

FieldElement FieldElement::one(FieldPtr field) {
  auto v = field->one();
  return FieldElement(std::move(field), std::move(v));
}

FieldElement FieldElement::from_int(FieldPtr field, std::int64_t v) {
  auto s = field->from_int(v);
  return FieldElement(std::move(field), std::move(s));
}

FieldElement FieldElement::parse(FieldPtr field, std::string_view text) {
  auto s = field->parse_element(text);
  return FieldElement(std::move(field), std::move(s));
}

void FieldElement::require_same(const FieldElement& o) const {
  if (!field_->same_as(*o.field_))
    raise(ErrorCode::FieldMismatch, field_->descriptor() + " vs " + o.field_->descriptor());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(const mpz_class& exponent) const { return {field_, field_->pow(value_, exponent)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  return field_->same_as(*o.field_) && value_ == o.value_;
}

}  // namespace galoisazu
