#pragma once

// Dense univariate polynomial arithmetic over a coefficient field policy.
//
// A policy R exposes `value_type`, `zero()`, `one()`, `add`, `sub`, `mul`,
// `neg`, `inv` and `is_zero`. Polynomials are coefficient vectors, lowest
// degree first, with no trailing zeros; the zero polynomial is empty.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "galoisazu/error.hpp"

namespace galoisazu::detail {

struct ModP {
  using value_type = std::int64_t;
  std::int64_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const {
    value_type s = a - b;
    return s < 0 ? s + p : s;
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<__int128>(a) * b) % p);
  }
  value_type inv(value_type a) const {
    if (a == 0) raise(ErrorCode::DivisionByZero, "inverse of 0 modulo " + std::to_string(p));
    // extended Euclid on (a, p)
    std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      r0 = r1;
      r1 = r2;
      std::int64_t t2 = t0 - q * t1;
      t0 = t1;
      t1 = t2;
    }
    if (r0 != 1) raise(ErrorCode::DivisionByZero, "element not invertible modulo " + std::to_string(p));
    return t0 < 0 ? t0 + p : t0;
  }
  bool is_zero(value_type a) const { return a == 0; }
  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
  }
};

struct RationalRing {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) raise(ErrorCode::DivisionByZero, "inverse of 0 in Q");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
};

template <class R>
using PolyOf = std::vector<typename R::value_type>;

template <class R>
void trim(const R& ring, PolyOf<R>& a) {
  while (!a.empty() && ring.is_zero(a.back())) a.pop_back();
}

template <class R>
int degree(const PolyOf<R>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class R>
PolyOf<R> add(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b) {
  PolyOf<R> out(std::max(a.size(), b.size()), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = ring.add(out[i], b[i]);
  trim(ring, out);
  return out;
}

template <class R>
PolyOf<R> sub(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b) {
  PolyOf<R> out(std::max(a.size(), b.size()), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = ring.sub(out[i], b[i]);
  trim(ring, out);
  return out;
}

template <class R>
PolyOf<R> mul(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b) {
  if (a.empty() || b.empty()) return {};
  PolyOf<R> out(a.size() + b.size() - 1, ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
  }
  trim(ring, out);
  return out;
}

template <class R>
PolyOf<R> scale(const R& ring, const PolyOf<R>& a, const typename R::value_type& c) {
  PolyOf<R> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(ring.mul(x, c));
  trim(ring, out);
  return out;
}

/// Quotient and remainder of a by b; b must be nonzero.
template <class R>
std::pair<PolyOf<R>, PolyOf<R>> divmod(const R& ring, PolyOf<R> a, const PolyOf<R>& b) {
  if (b.empty()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  trim(ring, a);
  if (a.size() < b.size()) return {{}, a};
  const auto lead_inv = ring.inv(b.back());
  PolyOf<R> q(a.size() - b.size() + 1, ring.zero());
  for (std::size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
    const auto c = ring.mul(a[shift + b.size() - 1], lead_inv);
    q[shift] = c;
    if (ring.is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ring.sub(a[shift + j], ring.mul(c, b[j]));
  }
  trim(ring, q);
  a.resize(b.size() - 1);
  trim(ring, a);
  return {q, a};
}

template <class R>
PolyOf<R> mod(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b) {
  return divmod(ring, a, b).second;
}

template <class R>
PolyOf<R> make_monic(const R& ring, const PolyOf<R>& a) {
  if (a.empty()) return a;
  return scale(ring, a, ring.inv(a.back()));
}

/// Monic greatest common divisor (zero if both inputs are zero).
template <class R>
PolyOf<R> gcd(const R& ring, PolyOf<R> a, PolyOf<R> b) {
  trim(ring, a);
  trim(ring, b);
  while (!b.empty()) {
    auto r = mod(ring, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(ring, a);
}

/// Inverse of a modulo m, raising DivisionByZero when gcd(a, m) != 1.
template <class R>
PolyOf<R> inverse_mod(const R& ring, const PolyOf<R>& a, const PolyOf<R>& m) {
  PolyOf<R> r0 = m, r1 = mod(ring, a, m);
  PolyOf<R> t0, t1{ring.one()};
  while (!r1.empty()) {
    auto [q, r2] = divmod(ring, r0, r1);
    auto t2 = sub(ring, t0, mul(ring, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) raise(ErrorCode::DivisionByZero, "polynomial is not invertible modulo the modulus");
  return mod(ring, scale(ring, t0, ring.inv(r0[0])), m);
}

template <class R>
PolyOf<R> mulmod(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b, const PolyOf<R>& m) {
  return mod(ring, mul(ring, a, b), m);
}

template <class R>
PolyOf<R> powmod(const R& ring, PolyOf<R> base, mpz_class exponent, const PolyOf<R>& m) {
  PolyOf<R> result{ring.one()};
  result = mod(ring, result, m);
  base = mod(ring, base, m);
  while (exponent > 0) {
    if (mpz_odd_p(exponent.get_mpz_t())) result = mulmod(ring, result, base, m);
    base = mulmod(ring, base, base, m);
    exponent >>= 1;
  }
  return result;
}

template <class R>
typename R::value_type evaluate(const R& ring, const PolyOf<R>& a, const typename R::value_type& x) {
  auto acc = ring.zero();
  for (std::size_t k = a.size(); k-- > 0;) acc = ring.add(ring.mul(acc, x), a[k]);
  return acc;
}

}  // namespace galoisazu::detail
