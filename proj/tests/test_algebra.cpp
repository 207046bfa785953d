#include <gtest/gtest.h>

#include <map>
#include <random>
#include <string>

#include "galoisazu/algebra.hpp"
#include "test_util.hpp"

using namespace galoisazu;
using galoisazu::testing::ivec;
using galoisazu::testing::rat;

namespace {

// Brute-force rewriting in the free algebra on x, u modulo ux = zeta xu,
// x^n = a, u^n = b. A word is reduced by bubbling each u past each x.
struct SymbolRewriter {
  const Field& F;
  Scalar a, b, zeta;
  int n;

  // Coefficient and normal form (r, s) of the word.
  std::pair<Scalar, std::pair<int, int>> normal_form(std::string word) const {
    Scalar c = F.one();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] == 'u' && word[i + 1] == 'x') {
          std::swap(word[i], word[i + 1]);
          c = F.mul(c, zeta);
          changed = true;
        }
    }
    int xs = 0, us = 0;
    for (char ch : word) (ch == 'x' ? xs : us)++;
    while (xs >= n) {
      xs -= n;
      c = F.mul(c, a);
    }
    while (us >= n) {
      us -= n;
      c = F.mul(c, b);
    }
    return {c, {xs, us}};
  }

  static std::string word(int r, int s) { return std::string(static_cast<std::size_t>(r), 'x') + std::string(static_cast<std::size_t>(s), 'u'); }
};

// Characteristic-2 arithmetic on bit patterns modulo an irreducible polynomial.
int gf2_mul(int x, int y, int modulus, int degree) {
  int r = 0;
  while (y) {
    if (y & 1) r ^= x;
    y >>= 1;
    x <<= 1;
    if (x & (1 << degree)) x ^= modulus;
  }
  return r;
}

bool quartic_has_nontrivial_zero(int q, int degree, int modulus, int a, int b) {
  auto mul = [&](int x, int y) { return gf2_mul(x, y, modulus, degree); };
  for (int x0 = 0; x0 < q; ++x0)
    for (int x1 = 0; x1 < q; ++x1)
      for (int x2 = 0; x2 < q; ++x2)
        for (int x3 = 0; x3 < q; ++x3) {
          if (!x0 && !x1 && !x2 && !x3) continue;
          const int first = mul(x0, x0) ^ mul(x0, x1) ^ mul(a, mul(x1, x1));
          const int second = mul(x2, x2) ^ mul(x1, x2) ^ mul(a, mul(x3, x3));
          if ((first ^ mul(b, second)) == 0) return true;
        }
  return false;
}

}  // namespace

TEST(Quaternion, HamiltonTable) {
  auto Q = Field::rationals();
  auto H = quaternion_algebra(Q, Q->from_int(-1), Q->from_int(-1));
  EXPECT_EQ(H->dim(), 4u);
  EXPECT_EQ(H->product_dense(1, 2), ivec(*Q, {0, 0, 0, 1}));
  EXPECT_EQ(H->product_dense(2, 1), ivec(*Q, {0, 0, 0, -1}));
  EXPECT_EQ(H->product_dense(3, 3), ivec(*Q, {-1, 0, 0, 0}));
}

TEST(Quaternion, SquaresOverF5) {
  auto F = Field::prime(5);
  auto H = quaternion_algebra(F, F->one(), F->one());
  EXPECT_EQ(H->product_dense(1, 1), ivec(*F, {1, 0, 0, 0}));
  EXPECT_EQ(H->product_dense(2, 2), ivec(*F, {1, 0, 0, 0}));
}

TEST(Quaternion, KSquaredByRewriting) {
  auto Q = Field::rationals();
  auto H = quaternion_algebra(Q, Q->from_int(2), Q->from_int(3));
  SymbolRewriter rw{*Q, Q->from_int(2), Q->from_int(3), Q->from_int(-1), 2};
  auto [c, rs] = rw.normal_form("xuxu");
  EXPECT_EQ(rs, std::make_pair(0, 0));
  EXPECT_EQ(c, Q->from_int(-6));
  EXPECT_EQ(H->product_dense(3, 3), ivec(*Q, {-6, 0, 0, 0}));
}

TEST(Quaternion, Errors) {
  auto F2 = Field::prime(2);
  EXPECT_THROW(quaternion_algebra(F2, F2->one(), F2->one()), Error);
  auto Q = Field::rationals();
  try {
    quaternion_algebra(Q, Q->zero(), Q->one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroParameter);
  }
}

TEST(Quaternion, EqualsSymbolAlgebraAfterRelabeling) {
  for (const char* desc : {"Q", "Fp:5", "Fp:7", "Qzeta:3"}) {
    auto F = Field::parse(desc);
    for (auto [a, b] : std::vector<std::pair<long, long>>{{-1, -1}, {2, 3}, {3, -2}}) {
      auto H = quaternion_algebra(F, F->from_int(a), F->from_int(b));
      auto S = symbol_algebra(F, F->from_int(a), F->from_int(b), F->from_int(-1), 2);
      // (1, i, j, k) = (1, x, u, xu) sit at symbol indices (0, 2, 1, 3)
      const std::size_t perm[4] = {0, 2, 1, 3};
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          const Vec h = H->product_dense(i, j);
          const Vec s = S->product_dense(perm[i], perm[j]);
          for (std::size_t t = 0; t < 4; ++t) EXPECT_EQ(h[t], s[perm[t]]) << desc << " " << i << j << t;
        }
    }
  }
}

TEST(Symbol, RelationUxEqualsZetaXu) {
  auto F = Field::prime(7);
  auto S = symbol_algebra(F, F->from_int(3), F->from_int(5), F->from_int(2), 3);
  const Vec x = S->basis_vector(*S->label_index("x"));
  const Vec u = S->basis_vector(*S->label_index("u"));
  const Vec xu = S->basis_vector(*S->label_index("x u"));
  EXPECT_EQ(S->multiply(u, x), scale_vec(*F, xu, F->from_int(2)));
}

TEST(Symbol, SpecProductExample) {
  auto F = Field::prime(7);
  auto S = symbol_algebra(F, F->from_int(3), F->from_int(5), F->from_int(2), 3);
  const std::size_t x2u2 = 2 * 3 + 2, xu = 1 * 3 + 1;
  Vec expected = S->zero();
  expected[xu] = F->from_int(2);
  EXPECT_EQ(S->product_dense(x2u2, x2u2), expected);
}

TEST(Symbol, FullTableMatchesRewriting) {
  struct Case {
    const char* field;
    long a, b;
    int n;
  };
  for (const auto& c : {Case{"Fp:7", 3, 5, 3}, Case{"Fp:13", 2, 7, 4}, Case{"Fp:5", 2, 3, 4}, Case{"Qzeta:3", 2, 5, 3}}) {
    auto F = Field::parse(c.field);
    const Scalar zeta = element_of_order(F, c.n).value();
    auto S = symbol_algebra(F, F->from_int(c.a), F->from_int(c.b), zeta, c.n);
    SymbolRewriter rw{*F, F->from_int(c.a), F->from_int(c.b), zeta, c.n};
    const int n = c.n;
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            auto [coef, rs] = rw.normal_form(SymbolRewriter::word(r, s) + SymbolRewriter::word(k, l));
            Vec expected = S->zero();
            expected[static_cast<std::size_t>(rs.first * n + rs.second)] = coef;
            EXPECT_EQ(S->product_dense(static_cast<std::size_t>(r * n + s), static_cast<std::size_t>(k * n + l)), expected);
          }
  }
}

TEST(Symbol, BadRootOrder) {
  auto F = Field::prime(7);
  try {
    symbol_algebra(F, F->from_int(3), F->from_int(5), F->from_int(6), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadRootOrder);
  }
}

TEST(Char2, RelationsOverF2) {
  auto F = Field::prime(2);
  auto H = char2_quaternion(F, F->one(), F->one());
  EXPECT_EQ(H->product_dense(1, 1), ivec(*F, {1, 1, 0, 0}));  // e1^2 = e1 + 1
  EXPECT_EQ(H->product_dense(2, 2), ivec(*F, {1, 0, 0, 0}));
  EXPECT_EQ(H->product_dense(2, 1), ivec(*F, {0, 0, 1, 1}));  // e2 e1 = e1e2 + e2
  auto H0 = char2_quaternion(F, F->zero(), F->one());
  EXPECT_EQ(H0->product_dense(1, 1), ivec(*F, {0, 1, 0, 0}));
  auto F4 = Field::parse("Fq:2:x^2+x+1");
  EXPECT_NO_THROW(char2_quaternion(F4, F4->generator(), F4->one()));
  EXPECT_THROW(char2_quaternion(Field::prime(3), Field::prime(3)->one(), Field::prime(3)->one()), Error);
}

TEST(Char2, SkewFieldSweepMatchesEnumeration) {
  auto F2 = Field::prime(2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const auto report = char2_skewfield_test(F2, F2->from_int(a), F2->from_int(b));
      EXPECT_EQ(report.form_anisotropic, !quartic_has_nontrivial_zero(2, 1, 0b11, a, b)) << a << b;
      ASSERT_TRUE(report.all_nonzero_units.has_value());
    }
  auto F4 = Field::parse("Fq:2:x^2+x+1");
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      // bit i of the pattern is the coefficient of x^i, matching element_at
      const auto report = char2_skewfield_test(F4, F4->element_at(static_cast<std::uint64_t>(a)),
                                               F4->element_at(static_cast<std::uint64_t>(b)));
      EXPECT_EQ(report.form_anisotropic, !quartic_has_nontrivial_zero(4, 2, 0b111, a, b)) << a << b;
    }
}

TEST(Char2, ZeroParametersGiveAZero) {
  auto F2 = Field::prime(2);
  const auto report = char2_skewfield_test(F2, F2->zero(), F2->zero());
  EXPECT_FALSE(report.form_anisotropic);
  ASSERT_TRUE(report.form_zero.has_value());
}

TEST(Char2, Preconditions) {
  auto Q = Field::rationals();
  EXPECT_THROW(char2_skewfield_test(Q, Q->one(), Q->one()), Error);
  auto big = Field::parse("Fq:2:x^7+x+1");
  try {
    char2_skewfield_test(big, big->one(), big->one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldTooLarge);
  }
}

TEST(MatrixAlgebra, Basics) {
  auto Q = Field::rationals();
  EXPECT_EQ(matrix_algebra(Q, 1)->dim(), 1u);
  auto F5 = Field::prime(5);
  auto M = matrix_algebra(F5, 2);
  EXPECT_EQ(M->multiply(M->basis_vector(1), M->basis_vector(2)), M->basis_vector(0));  // E12 E21 = E11
  EXPECT_EQ(centre(matrix_algebra(Q, 2)).dim(), 1u);
  EXPECT_EQ(centre(M).vectors().front(), M->unit());
}

TEST(FunctionAlgebra, OrthogonalIdempotents) {
  auto F = Field::prime(5);
  const GroupSpec G({2, 3});
  auto S = function_algebra(field_algebra(F), G);
  EXPECT_EQ(S->dim(), 6u);
  Vec sum = S->zero();
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t h = 0; h < 6; ++h)
      EXPECT_EQ(S->product_dense(g, h), g == h ? S->basis_vector(g) : S->zero());
    sum = add_vec(*F, sum, S->basis_vector(g));
  }
  EXPECT_EQ(sum, S->unit());
  EXPECT_EQ(centre(S).dim(), 6u);
}

TEST(Tensor, UnitAxisAndCommutingFactors) {
  auto Q = Field::rationals();
  auto H = quaternion_algebra(Q, Q->from_int(-1), Q->from_int(-1));
  auto HF = tensor_algebra(H, field_algebra(Q));
  EXPECT_EQ(HF->dim(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(HF->product_dense(i, j), H->product_dense(i, j));
  auto HH = tensor_algebra(H, H);
  EXPECT_EQ(HH->dim(), 16u);
  const Vec i1 = HH->basis_vector(1 * 4 + 0), j2 = HH->basis_vector(0 * 4 + 2);
  EXPECT_EQ(HH->multiply(i1, j2), HH->basis_vector(1 * 4 + 2));
  EXPECT_EQ(HH->multiply(j2, i1), HH->basis_vector(1 * 4 + 2));
}

TEST(Tensor, CentreDimensionMultiplies) {
  auto F = Field::prime(7);
  auto H = quaternion_algebra(F, F->from_int(3), F->from_int(5));
  auto T = function_algebra(field_algebra(F), GroupSpec({2}));
  auto M = matrix_algebra(F, 2);
  auto Q = quotient_algebra(F, ivec(*F, {-3, 0, 0, 1}));
  const std::vector<AlgebraPtr> algs{H, T, M, Q};
  for (const auto& A : algs)
    for (const auto& B : algs) {
      if (A->dim() * B->dim() > 16) continue;
      EXPECT_EQ(centre(tensor_algebra(A, B)).dim(), centre(A).dim() * centre(B).dim());
    }
}

TEST(Opposite, InvolutionAndReversal) {
  auto F = Field::prime(7);
  auto S = symbol_algebra(F, F->from_int(3), F->from_int(5), F->from_int(2), 3);
  auto op = opposite(S);
  auto opop = opposite(op);
  EXPECT_TRUE(*opop == *S);
  EXPECT_EQ(opop->labels(), S->labels());
  for (std::size_t i = 0; i < S->dim(); ++i)
    for (std::size_t j = 0; j < S->dim(); ++j) EXPECT_EQ(op->product_dense(i, j), S->product_dense(j, i));
}

TEST(Azumaya, SpecExamples) {
  auto Q = Field::rationals();
  EXPECT_TRUE(is_azumaya_over_field(quaternion_algebra(Q, Q->from_int(-1), Q->from_int(-1))).azumaya);
  auto F5 = Field::prime(5);
  const auto split = is_azumaya_over_field(function_algebra(field_algebra(F5), GroupSpec({2})));
  EXPECT_FALSE(split.azumaya);
  EXPECT_EQ(split.centre_dim, 2u);
  auto F7 = Field::prime(7);
  const auto sym = is_azumaya_over_field(symbol_algebra(F7, F7->from_int(3), F7->from_int(5), F7->from_int(2), 3));
  EXPECT_TRUE(sym.azumaya);
  EXPECT_EQ(sym.sandwich_rank, 81u);
}

TEST(Azumaya, MatrixAlgebrasAndCommutativeAlgebras) {
  for (const char* desc : {"Q", "Fp:3"}) {
    auto F = Field::parse(desc);
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(is_azumaya_over_field(matrix_algebra(F, n)).azumaya) << desc << n;
    EXPECT_FALSE(is_azumaya_over_field(quotient_algebra(F, ivec(*F, {-2, 0, 1}))).azumaya);
    EXPECT_FALSE(is_azumaya_over_field(function_algebra(field_algebra(F), GroupSpec({3}))).azumaya);
  }
}

TEST(Elements, Inversion) {
  auto Q = Field::rationals();
  auto H = quaternion_algebra(Q, Q->from_int(-1), Q->from_int(-1));
  EXPECT_EQ(invert(*H, H->unit()), H->unit());
  EXPECT_EQ(invert(*H, H->basis_vector(1)), ivec(*Q, {0, -1, 0, 0}));
  const Vec z = ivec(*Q, {1, 2, -3, 5});
  const Vec zi = invert(*H, z);
  EXPECT_EQ(H->multiply(z, zi), H->unit());
  EXPECT_EQ(H->multiply(zi, z), H->unit());
  auto S = function_algebra(field_algebra(Q), GroupSpec({2}));
  try {
    invert(*S, S->basis_vector(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAUnit);
  }
}

TEST(Construction, RejectsNonAssociativeTable) {
  auto F = Field::rationals();
  // basis 1, p, q with p p = q, p q = p and everything else zero
  std::vector<Vec> products(9, ivec(*F, {0, 0, 0}));
  for (std::size_t i = 0; i < 3; ++i) {
    products[i] = ivec(*F, {i == 0, i == 1, i == 2});
    products[i * 3] = ivec(*F, {i == 0, i == 1, i == 2});
  }
  products[1 * 3 + 1] = ivec(*F, {0, 0, 1});
  products[1 * 3 + 2] = ivec(*F, {0, 1, 0});
  try {
    Algebra::create(F, {"1", "p", "q"}, products, ivec(*F, {1, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAssociative);
  }
  EXPECT_FALSE(find_associativity_failure(*quaternion_algebra(F, F->one(), F->one()), false).has_value());
}

TEST(Construction, ParallelAndSerialAssociativityScansAgree) {
  auto F = Field::prime(7);
  auto S = symbol_algebra(F, F->from_int(3), F->from_int(5), F->from_int(2), 3);
  EXPECT_EQ(find_associativity_failure(*S, true), find_associativity_failure(*S, false));
}

TEST(Subalgebra, CentralizerAndMembership) {
  auto F = Field::prime(7);
  auto S = symbol_algebra(F, F->from_int(3), F->from_int(5), F->from_int(2), 3);
  std::vector<Vec> xs{S->unit(), S->basis_vector(3), S->basis_vector(6)};
  const SubalgebraBasis U(S, xs);
  EXPECT_EQ(U.dim(), 3u);
  EXPECT_TRUE(U.is_commutative());
  EXPECT_TRUE(centralizer(S, xs).same_span(U));
  EXPECT_FALSE(U.contains(S->basis_vector(1)));
  EXPECT_THROW(SubalgebraBasis(S, {S->basis_vector(3)}), Error);
}
