#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "galoisazu/field.hpp"
#include "test_util.hpp"

using namespace galoisazu;
using galoisazu::testing::rat;

namespace {

Scalar random_element(const Field& F, std::mt19937& rng) {
  std::uniform_int_distribution<long> small(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  switch (F.kind()) {
    case FieldKind::Rationals: return F.from_rational(mpq_class(small(rng), den(rng)));
    case FieldKind::Prime:
    case FieldKind::Extension: {
      std::uniform_int_distribution<std::uint64_t> idx(0, F.cardinality()->get_ui() - 1);
      return F.element_at(idx(rng));
    }
    case FieldKind::Cyclotomic: {
      std::vector<std::string> coeffs;
      for (int i = 0; i < F.degree(); ++i) coeffs.push_back(mpq_class(small(rng), den(rng)).get_str());
      return F.from_coefficients(coeffs);
    }
  }
  return F.zero();
}

// Orders of all nonzero elements by repeated multiplication.
std::set<std::int64_t> orders_present(const Field& F) {
  std::set<std::int64_t> out;
  const auto q = F.cardinality()->get_ui();
  for (std::uint64_t idx = 1; idx < q; ++idx) {
    const Scalar a = F.element_at(idx);
    Scalar p = a;
    std::int64_t k = 1;
    while (!F.is_one(p)) {
      p = F.mul(p, a);
      ++k;
    }
    out.insert(k);
  }
  return out;
}

// Monic polynomials over F_p as coefficient vectors, lowest first.
std::vector<std::vector<std::int64_t>> monic_polys(std::int64_t p, int deg) {
  std::vector<std::vector<std::int64_t>> out;
  std::int64_t count = 1;
  for (int i = 0; i < deg; ++i) count *= p;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::vector<std::int64_t> c;
    std::int64_t r = idx;
    for (int i = 0; i < deg; ++i) {
      c.push_back(r % p);
      r /= p;
    }
    c.push_back(1);
    out.push_back(c);
  }
  return out;
}

bool divides_mod_p(const std::vector<std::int64_t>& g, std::vector<std::int64_t> f, std::int64_t p) {
  const std::size_t dg = g.size() - 1;
  while (f.size() - 1 >= dg) {
    const std::int64_t c = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    f.pop_back();
    if (f.empty()) return true;
    if (f.size() - 1 < dg) break;
  }
  return std::all_of(f.begin(), f.end(), [](std::int64_t c) { return c == 0; });
}

bool irreducible_by_trial_division(const std::vector<std::int64_t>& f, std::int64_t p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d)
    for (const auto& g : monic_polys(p, d))
      if (divides_mod_p(g, f, p)) return false;
  return true;
}

}  // namespace

TEST(FieldArith, InverseOfTwoModFive) {
  auto F = Field::prime(5);
  EXPECT_EQ(F->inv(F->from_int(2)), F->from_int(3));
}

TEST(FieldArith, InverseOfGeneratorInQzeta4) {
  auto F = Field::cyclotomic(4);
  const Scalar x = F->generator();
  EXPECT_EQ(F->inv(x), F->neg(x));
}

TEST(FieldArith, RationalSum) {
  auto F = Field::rationals();
  EXPECT_EQ(F->add(rat(*F, "2/3"), rat(*F, "1/6")), rat(*F, "5/6"));
}

TEST(FieldArith, DivisionByZeroAndMismatch) {
  auto F = Field::prime(7);
  try {
    F->inv(F->zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
  auto a = FieldElement::from_int(Field::prime(5), 1);
  auto b = FieldElement::from_int(Field::prime(7), 1);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
}

TEST(FieldArith, AxiomsOnRandomElements) {
  std::mt19937 rng(20240611);
  for (const char* desc : {"Q", "Fp:5", "Fp:101", "Fq:3:x^2+1", "Fq:2:x^3+x+1", "Qzeta:4", "Qzeta:5", "Qzeta:12"}) {
    auto F = Field::parse(desc);
    for (int trial = 0; trial < 40; ++trial) {
      const Scalar a = random_element(*F, rng), b = random_element(*F, rng), c = random_element(*F, rng);
      EXPECT_EQ(F->add(a, b), F->add(b, a)) << desc;
      EXPECT_EQ(F->mul(a, b), F->mul(b, a)) << desc;
      EXPECT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c))) << desc;
      EXPECT_EQ(F->add(F->add(a, b), c), F->add(a, F->add(b, c))) << desc;
      EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c))) << desc;
      EXPECT_TRUE(F->is_zero(F->add(a, F->neg(a)))) << desc;
      if (!F->is_zero(a)) {
        EXPECT_TRUE(F->is_one(F->mul(a, F->inv(a)))) << desc;
      }
      EXPECT_TRUE(F->is_canonical(F->mul(a, b))) << desc;
    }
  }
}

TEST(FieldArith, PowMatchesRepeatedMultiplication) {
  auto F = Field::parse("Fq:3:x^2+1");
  const Scalar x = F->generator();
  Scalar acc = F->one();
  for (long e = 0; e < 12; ++e) {
    EXPECT_EQ(F->pow(x, mpz_class(e)), acc);
    acc = F->mul(acc, x);
  }
}

TEST(FieldDescriptor, ParseAndFormat) {
  EXPECT_EQ(Field::parse("Q")->descriptor(), "Q");
  EXPECT_EQ(Field::parse("Fp:5")->descriptor(), "Fp:5");
  EXPECT_EQ(Field::parse("Qzeta:4")->descriptor(), "Qzeta:4");
  auto F = Field::parse("Fq:3:x^2+1");
  EXPECT_EQ(F->kind(), FieldKind::Extension);
  EXPECT_EQ(*F->cardinality(), 9);
  EXPECT_EQ(F->characteristic(), 3);
  EXPECT_TRUE(Field::parse(F->descriptor())->same_as(*F));
  EXPECT_EQ(Field::rationals()->characteristic(), 0);
  EXPECT_EQ(Field::cyclotomic(7)->characteristic(), 0);
}

TEST(FieldDescriptor, RejectsBadInput) {
  auto code_of = [](const char* text) {
    try {
      Field::parse(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;  // unreachable sentinel, tested below
  };
  EXPECT_EQ(code_of("Fp:6"), ErrorCode::InvalidField);
  EXPECT_EQ(code_of("Fq:3:x^2+2"), ErrorCode::InvalidField);  // x^2 - 1
  EXPECT_EQ(code_of("Qzeta:25"), ErrorCode::InvalidField);
  EXPECT_EQ(code_of("R"), ErrorCode::ParseError);
  EXPECT_THROW(Field::parse("Fp:1000003"), Error);
  EXPECT_NO_THROW(Field::parse("Fp:999983"));
}

TEST(FieldElements, ParseElement) {
  auto F = Field::cyclotomic(4);
  EXPECT_EQ(F->parse_element("[0,1]"), F->generator());
  EXPECT_EQ(F->parse_element("-3/4"), rat(*F, "-3/4"));
  auto P = Field::prime(7);
  EXPECT_EQ(P->parse_element("-1"), P->from_int(6));
  EXPECT_EQ(P->parse_element("1/2"), P->from_int(4));
}

TEST(FieldElements, EnumerationRoundTrip) {
  auto F = Field::parse("Fq:2:x^3+x+1");
  for (std::uint64_t i = 0; i < 8; ++i) EXPECT_EQ(F->index_of(F->element_at(i)), i);
  EXPECT_THROW(Field::rationals()->enumerable_size(10), Error);
}

TEST(ElementOfOrder, SpecExamples) {
  auto F5 = Field::prime(5);
  EXPECT_EQ(element_of_order(F5, 4).value(), F5->from_int(2));
  auto F7 = Field::prime(7);
  EXPECT_EQ(element_of_order(F7, 3).value(), F7->from_int(2));
  auto Q = Field::rationals();
  EXPECT_EQ(element_of_order(Q, 2).value(), Q->from_int(-1));
  EXPECT_EQ(element_of_order(Q, 1).value(), Q->one());
}

TEST(ElementOfOrder, NoSuchElement) {
  auto code_of = [](const FieldPtr& F, std::int64_t n) {
    try {
      element_of_order(F, n);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of(Field::rationals(), 3), ErrorCode::NoSuchElement);
  EXPECT_EQ(code_of(Field::prime(7), 4), ErrorCode::NoSuchElement);
  EXPECT_EQ(code_of(Field::prime(5), 5), ErrorCode::NoSuchElement);
}

TEST(ElementOfOrder, ExactOrderInCyclotomicFields) {
  for (int m = 1; m <= 24; ++m) {
    auto F = Field::cyclotomic(m);
    const std::int64_t N = std::lcm<std::int64_t>(2, m);
    for (std::int64_t n = 1; n <= N; ++n) {
      if (N % n != 0) {
        EXPECT_THROW(element_of_order(F, n), Error);
        continue;
      }
      const Scalar z = element_of_order(F, n).value();
      Scalar p = F->one();
      for (std::int64_t k = 1; k < n; ++k) {
        p = F->mul(p, z);
        EXPECT_FALSE(F->is_one(p)) << m << " " << n << " " << k;
      }
      EXPECT_TRUE(F->is_one(F->mul(p, z)));
    }
  }
}

TEST(ElementOfOrder, SucceedsIffOrderDividesGroupOrder) {
  std::vector<FieldPtr> fields;
  for (std::int64_t p = 2; p <= 113; ++p)
    if (is_prime(p)) fields.push_back(Field::prime(p));
  for (const char* d : {"Fq:2:x^2+x+1", "Fq:2:x^3+x+1", "Fq:3:x^2+1", "Fq:5:x^2+2", "Fq:3:x^3+2*x+1", "Fq:7:x^2+1",
                        "Fq:11:x^2+1", "Fq:2:x^4+x+1"})
    fields.push_back(Field::parse(d));
  for (const auto& F : fields) {
    const auto q = F->cardinality()->get_si();
    ASSERT_LE(q, 121);
    const auto present = orders_present(*F);
    for (std::int64_t n = 1; n <= q; ++n) {
      const bool oracle = present.count(n) > 0;
      EXPECT_EQ(oracle, (q - 1) % n == 0) << F->descriptor() << " n=" << n;
      bool ok = true;
      Scalar z;
      try {
        z = element_of_order(F, n).value();
      } catch (const Error&) {
        ok = false;
      }
      EXPECT_EQ(ok, oracle) << F->descriptor() << " n=" << n;
      if (ok) {
        EXPECT_EQ(multiplicative_order(*F, z, q), n);
      }
    }
  }
}

TEST(ElementOfOrder, FirstInCanonicalOrder) {
  auto F = Field::parse("Fq:3:x^2+1");
  for (std::int64_t n : {2, 4, 8}) {
    const Scalar z = element_of_order(F, n).value();
    for (std::uint64_t idx = 1; idx < F->index_of(z); ++idx)
      EXPECT_NE(multiplicative_order(*F, F->element_at(idx), 8), n);
  }
}

TEST(Cyclotomic, SmallCases) {
  auto expect_poly = [](int n, std::vector<long> coeffs) {
    const auto phi = cyclotomic_polynomial(n);
    ASSERT_EQ(phi.size(), coeffs.size()) << n;
    for (std::size_t i = 0; i < coeffs.size(); ++i) EXPECT_EQ(phi[i], mpq_class(coeffs[i])) << n;
  };
  expect_poly(1, {-1, 1});
  expect_poly(3, {1, 1, 1});
  expect_poly(12, {1, 0, -1, 0, 1});
}

TEST(Cyclotomic, DegreeIsTotient) {
  for (int n = 1; n <= 60; ++n) {
    int phi = 0;
    for (int k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) ++phi;
    EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(n).size()) - 1, phi) << n;
    EXPECT_EQ(euler_phi(n), phi) << n;
  }
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
  for (int n = 1; n <= 24; ++n) {
    std::vector<mpq_class> prod{1};
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const auto phi = cyclotomic_polynomial(d);
      std::vector<mpq_class> next(prod.size() + phi.size() - 1, 0);
      for (std::size_t i = 0; i < prod.size(); ++i)
        for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
      prod = next;
    }
    ASSERT_EQ(prod.size(), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(prod[0], -1);
    EXPECT_EQ(prod[static_cast<std::size_t>(n)], 1);
    for (int i = 1; i < n; ++i) EXPECT_EQ(prod[static_cast<std::size_t>(i)], 0);
  }
}

TEST(Irreducibility, MatchesTrialDivision) {
  for (std::int64_t p : {2, 3, 5}) {
    for (int deg = 1; deg <= (p == 5 ? 3 : 5); ++deg)
      for (const auto& f : monic_polys(p, deg))
        EXPECT_EQ(is_irreducible_mod_p(p, f), irreducible_by_trial_division(f, p)) << format_polynomial(f) << " mod " << p;
  }
}

TEST(Irreducibility, PolynomialText) {
  const auto c = parse_integer_polynomial("x^3 - 2*x + 5");
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0], 5);
  EXPECT_EQ(c[1], -2);
  EXPECT_EQ(c[2], 0);
  EXPECT_EQ(c[3], 1);
}
