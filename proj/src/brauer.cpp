#include "galoisazu/brauer.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <set>

namespace galoisazu {

namespace {

constexpr std::int64_t kTrialDivisionBound = 1'000'000'000'000;

std::int64_t mod(std::int64_t a, std::int64_t p) {
  const std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod(a, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
  }
  return r;
}

bool is_square_mod(std::int64_t t, std::int64_t p) {
  t = mod(t, p);
  return t == 0 || powmod(t, (p - 1) / 2, p) == 1;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) { return powmod(a, p - 2, p); }

// A projective point of c1 x1^2 + c2 x2^2 + c3 x3^2 = 0 over F_p (p odd) with
// some coordinate x_i != 0 where c_i != 0, i.e. a nonvanishing partial derivative.
bool smooth_point(std::array<std::int64_t, 3> c, std::int64_t p) {
  for (auto& x : c) x = mod(x, p);
  const auto smooth = [&](bool n1, bool n2, bool n3) {
    return (n1 && c[0] != 0) || (n2 && c[1] != 0) || (n3 && c[2] != 0);
  };
  // x3 = 1
  for (std::int64_t x1 = 0; x1 < p; ++x1) {
    const std::int64_t rest = mod(mulmod(c[0], mulmod(x1, x1, p), p) + c[2], p);
    if (c[1] == 0) {
      if (rest == 0 && smooth(x1 != 0, true, true)) return true;
      continue;
    }
    const std::int64_t t = mulmod(p - rest, inverse_mod(c[1], p), p);
    if (is_square_mod(t, p) && smooth(x1 != 0, t != 0, true)) return true;
  }
  // x3 = 0, x2 = 1
  for (std::int64_t x1 = 0; x1 < p; ++x1)
    if (mod(mulmod(c[0], mulmod(x1, x1, p), p) + c[1], p) == 0 && smooth(x1 != 0, true, false)) return true;
  // (1, 0, 0) lies on the conic only when c1 = 0, and is then singular
  return false;
}

int v2(std::int64_t n) {
  if (n == 0) return std::numeric_limits<int>::max();
  int v = 0;
  for (; n % 2 == 0; n /= 2) ++v;
  return v;
}

int hilbert_two(std::int64_t a, std::int64_t b) {
  std::array<std::vector<std::int64_t>, 32> roots;
  for (std::int64_t z = 0; z < 32; ++z) roots[static_cast<std::size_t>(z * z % 32)].push_back(z);
  const std::int64_t a32 = mod(a, 32), b32 = mod(b, 32);
  for (std::int64_t x = 0; x < 32; ++x)
    for (std::int64_t y = 0; y < 32; ++y) {
      const std::size_t r = static_cast<std::size_t>(mod(a32 * x * x + b32 * y * y, 32));
      for (std::int64_t z : roots[r]) {
        if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
        const std::int64_t f = a * x * x + b * y * y - z * z;
        const int m = std::min({v2(2 * a * x), v2(2 * b * y), v2(2 * z)});
        if (2 * m + 1 <= 5 && f % (std::int64_t{1} << (2 * m + 1)) == 0) return 1;
      }
    }
  return -1;
}

int hilbert_odd(std::int64_t a, std::int64_t b, std::int64_t p) {
  const bool pa = a % p == 0, pb = b % p == 0;
  if (!pa && !pb) return smooth_point({a, b, -1}, p) ? 1 : -1;
  // p | a only: a primitive solution has y or z a unit, so m = 0 and the conic
  // b y^2 = z^2 mod p decides.
  if (pa && !pb) return smooth_point({0, b, -1}, p) ? 1 : -1;
  if (!pa && pb) return smooth_point({a, 0, -1}, p) ? 1 : -1;
  // p | a and p | b: z = p z', and a' x^2 + b' y^2 - p z'^2 lifts from a point
  // mod p with a' x or b' y a unit.
  return smooth_point({a / p, b / p, 0}, p) ? 1 : -1;
}

std::vector<Place> relevant_places(std::initializer_list<std::int64_t> values) {
  std::set<std::int64_t> primes{2};
  for (std::int64_t v : values)
    for (std::int64_t p : prime_divisors(v < 0 ? -v : v)) primes.insert(p);
  std::vector<Place> out;
  for (std::int64_t p : primes) out.push_back(Place{p});
  out.push_back(Place::infinity());
  return out;
}

std::string rational_string(const mpq_class& a) { return a.get_str(); }

}  // namespace

Place parse_place(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return Place::infinity();
  std::int64_t p = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size() || !is_prime(p))
    raise(ErrorCode::ParseError, "place must be 'inf' or a prime, got '" + std::string(text) + "'");
  return Place{p};
}

std::int64_t squarefree_representative(const mpq_class& a) {
  if (a == 0) raise(ErrorCode::ZeroParameter, "Hilbert symbols need nonzero entries");
  mpz_class n = a.get_num() * a.get_den();
  if (abs(n) > mpz_class(static_cast<long>(kTrialDivisionBound)))
    raise(ErrorCode::Unsupported, "|num * den| exceeds the trial-division bound 10^12");
  std::int64_t v = n.get_si();
  const std::int64_t sign = v < 0 ? -1 : 1;
  v *= sign;
  std::int64_t out = 1;
  for (std::int64_t p = 2; p * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return sign * out * v;
}

int hilbert_symbol(const mpq_class& a, const mpq_class& b, Place place) {
  const std::int64_t A = squarefree_representative(a), B = squarefree_representative(b);
  if (place.is_infinite()) return A < 0 && B < 0 ? -1 : 1;
  if (!is_prime(place.p)) raise(ErrorCode::ParseError, std::to_string(place.p) + " is not a prime");
  if (place.p == 2) return hilbert_two(A, B);
  return hilbert_odd(A, B, place.p);
}

QuaternionClass quaternion_class(const mpq_class& a, const mpq_class& b) {
  QuaternionClass c;
  c.a = squarefree_representative(a);
  c.b = squarefree_representative(b);
  for (const Place& v : relevant_places({c.a, c.b}))
    if (hilbert_symbol(c.a, c.b, v) == -1) c.ramified.push_back(v);
  std::sort(c.ramified.begin(), c.ramified.end());
  c.notes.push_back("the symbol is +1 at every odd prime not dividing ab: the conic has a smooth point mod p");
  if (c.ramified.size() % 2 != 0)
    raise(ErrorCode::CheckFailed, "odd number of ramified places for (" + rational_string(a) + ", " +
                                      rational_string(b) + ")");
  return c;
}

BrauerClass class_product(const BrauerClass& x, const BrauerClass& y) {
  BrauerClass out;
  out.factors = x.factors;
  out.factors.insert(out.factors.end(), y.factors.begin(), y.factors.end());
  std::set_symmetric_difference(x.ramified.begin(), x.ramified.end(), y.ramified.begin(), y.ramified.end(),
                                std::back_inserter(out.ramified));
  return out;
}

bool is_split(const FieldPtr& field, const Scalar& a, const Scalar& b) {
  if (field->is_zero(a) || field->is_zero(b)) raise(ErrorCode::ZeroParameter, "quaternion parameters must be nonzero");
  switch (field->kind()) {
    case FieldKind::Rationals:
      return quaternion_class(std::get<mpq_class>(a), std::get<mpq_class>(b)).is_trivial();
    case FieldKind::Prime:
    case FieldKind::Extension:
      return true;
    default:
      raise(ErrorCode::UnsupportedField, "is_split handles Q and finite fields, not " + field->descriptor());
  }
}

SteinbergReport steinberg_checks(const std::vector<mpq_class>& samples) {
  SteinbergReport rep;
  for (const auto& a : samples) {
    if (a == 0 || a == 1) continue;
    const auto c = quaternion_class(a, 1 - a);
    ++rep.relations_checked;
    if (!c.is_trivial())
      rep.failures.push_back("(" + rational_string(a) + ", " + rational_string(1 - a) + ") ramifies at " +
                             c.ramified.front().to_string());
  }
  const std::size_t n = samples.size();
  for (std::size_t i = 0; n >= 3 && i < n; ++i) {
    const mpq_class &a = samples[i], &b = samples[(i + 1) % n], &c = samples[(i + 2) % n];
    if (a == 0 || b == 0 || c == 0) continue;
    const std::int64_t A = squarefree_representative(a), B = squarefree_representative(b),
                       C = squarefree_representative(c);
    for (const Place& v : relevant_places({A, B, C})) {
      ++rep.relations_checked;
      const mpq_class ab = a * b;
      if (hilbert_symbol(ab, c, v) != hilbert_symbol(a, c, v) * hilbert_symbol(b, c, v))
        rep.failures.push_back("bilinearity fails for (" + rational_string(a) + ", " + rational_string(b) + ", " +
                               rational_string(c) + ") at " + v.to_string());
    }
  }
  return rep;
}

SteinbergReport steinberg_checks(const FieldPtr& field, const std::vector<Scalar>& samples) {
  if (!field->is_finite() || field->characteristic() == 2)
    raise(ErrorCode::UnsupportedField, "the norm criterion symbol needs a finite field of odd characteristic");
  const auto& F = *field;
  auto symbol = [&](const Scalar& a, const Scalar& b) { return norm_criterion_split(field, a, b, 2).split ? 1 : -1; };
  SteinbergReport rep;
  for (const auto& a : samples) {
    if (F.is_zero(a) || F.is_one(a)) continue;
    ++rep.relations_checked;
    if (symbol(a, F.sub(F.one(), a)) != 1) rep.failures.push_back("(a, 1 - a) nontrivial for a = " + F.format(a));
  }
  const std::size_t n = samples.size();
  for (std::size_t i = 0; n >= 3 && i < n; ++i) {
    const Scalar &a = samples[i], &b = samples[(i + 1) % n], &c = samples[(i + 2) % n];
    if (F.is_zero(a) || F.is_zero(b) || F.is_zero(c)) continue;
    ++rep.relations_checked;
    if (symbol(F.mul(a, b), c) != symbol(a, c) * symbol(b, c))
      rep.failures.push_back("bilinearity fails at a = " + F.format(a) + ", b = " + F.format(b));
  }
  return rep;
}

NormCriterionReport norm_criterion_split(const FieldPtr& field, const Scalar& a, const Scalar& b, int n) {
  const auto& F = *field;
  if (!F.is_finite()) raise(ErrorCode::InfiniteField, "the norm criterion enumerates a finite field");
  if (n < 2) raise(ErrorCode::BadRootOrder, "n must be at least 2");
  if (F.is_zero(a) || F.is_zero(b)) raise(ErrorCode::ZeroParameter, "symbol parameters must be nonzero");
  const std::uint64_t q = F.enumerable_size(1000);
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > 1'000'000 / q) raise(ErrorCode::FieldTooLarge, "F[x]/(x^n - a) has more than 10^6 elements");
    size *= q;
  }
  Vec f = zero_vec(F, static_cast<std::size_t>(n) + 1);
  f[0] = F.neg(a);
  f.back() = F.one();
  const AlgebraPtr E = quotient_algebra(field, f);

  NormCriterionReport rep;
  std::vector<char> seen(q, 0);
  for (std::uint64_t idx = 1; idx < size; ++idx) {
    Vec e(static_cast<std::size_t>(n));
    for (std::size_t k = 0, r = idx; k < e.size(); ++k, r /= q) e[k] = F.element_at(r % q);
    const Scalar norm = determinant(E->left_mult_matrix(e));
    if (F.is_zero(norm)) {
      rep.field_extension = false;
      rep.split = true;
      rep.norm_image_size = 0;
      return rep;
    }
    const std::uint64_t k = F.index_of(norm);
    if (!seen[k]) {
      seen[k] = 1;
      ++rep.norm_image_size;
    }
  }
  rep.field_extension = true;
  rep.split = seen[F.index_of(b)] != 0;
  return rep;
}

}  // namespace galoisazu
