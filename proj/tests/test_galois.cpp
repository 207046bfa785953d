#include <gtest/gtest.h>

#include "galoisazu/galois.hpp"
#include "test_util.hpp"

using namespace galoisazu;
using galoisazu::testing::ivec;
using galoisazu::testing::rat;

namespace {

GaloisCertificate quaternion_cert(const FieldPtr& F, long a, long b) {
  auto H = quaternion_algebra(F, F->from_int(a), F->from_int(b));
  return certify_galois(Extension::ground(H), quaternion_v_action(H));
}

GaloisCertificate symbol_cert(const FieldPtr& F, long a, long b, int n) {
  const Scalar zeta = element_of_order(F, n).value();
  auto S = symbol_algebra(F, F->from_int(a), F->from_int(b), zeta, n);
  return certify_galois(Extension::ground(S), symbol_action(S, zeta, n));
}

GaloisCertificate trivial_cert(const FieldPtr& F, const GroupSpec& G) {
  auto S = function_algebra(field_algebra(F), G);
  return certify_galois(Extension::ground(S), translation_action(S, G));
}

// F[X]/(X^n - c) with X -> root * X.
GaloisCertificate kummer_cert(const FieldPtr& F, int n, long c, long root) {
  Vec f = zero_vec(*F, static_cast<std::size_t>(n) + 1);
  f[0] = F->from_int(-c);
  f.back() = F->one();
  auto U = quotient_algebra(F, f);
  return certify_galois(Extension::ground(U),
                        substitution_action(U, scale_vec(*F, U->basis_vector(1), F->from_int(root)), n));
}

// sum_k c_k x_k (x) y_k in the ground tensor basis, index i * dim + j.
Vec ground_tensor(const Field& F, const std::vector<std::tuple<Scalar, Vec, Vec>>& terms) {
  const std::size_t d = std::get<1>(terms.front()).size();
  Vec out = zero_vec(F, d * d);
  for (const auto& [c, x, y] : terms)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] = F.add(out[i * d + j], F.mul(c, F.mul(x[i], y[j])));
  return out;
}

// Gamma applied by hand: component g is sum x g(y).
std::vector<Vec> apply_gamma(const GaloisCertificate& cert, const Vec& tensor) {
  const auto& A = *cert.extension.total();
  const auto& F = *A.field();
  const std::size_t d = A.dim();
  std::vector<Vec> out(cert.action.group().order(), A.zero());
  for (std::size_t t = 0; t < tensor.size(); ++t) {
    if (F.is_zero(tensor[t])) continue;
    for (std::size_t g = 0; g < out.size(); ++g) {
      const Vec p = A.multiply(A.basis_vector(t / d), cert.action.act(g, A.basis_vector(t % d)));
      out[g] = add_vec(F, out[g], scale_vec(F, p, tensor[t]));
    }
  }
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Certify, HamiltonAllChecks) {
  const auto cert = quaternion_cert(Field::rationals(), -1, -1);
  EXPECT_TRUE(cert.all_passed());
  EXPECT_TRUE(cert.strict);
  EXPECT_EQ(cert.gamma.rows(), 16u);
  EXPECT_EQ(cert.gamma.cols(), 16u);
}

TEST(Certify, QuaternionGaloisElementFormula) {
  for (const char* desc : {"Q", "Fp:7", "Qzeta:3"}) {
    auto F = Field::parse(desc);
    for (auto [a, b] : std::vector<std::pair<long, long>>{{-1, -1}, {2, 3}, {3, 5}}) {
      const auto cert = quaternion_cert(F, a, b);
      const auto& H = *cert.extension.total();
      const Scalar A = F->from_int(a), B = F->from_int(b), q4 = F->inv(F->from_int(4));
      const Vec one = H.basis_vector(0), i = H.basis_vector(1), j = H.basis_vector(2), k = H.basis_vector(3);
      const Vec expected = ground_tensor(*F, {{q4, one, one},
                                              {F->mul(q4, F->inv(A)), i, i},
                                              {F->mul(q4, F->inv(B)), j, j},
                                              {F->neg(F->mul(q4, F->inv(F->mul(A, B)))), k, k}});
      EXPECT_EQ(galois_element(cert), expected) << desc << " " << a << " " << b;
      // eta_alpha from the same formula with alpha^-1 applied to the right legs
      const Vec eta_alpha = ground_tensor(*F, {{q4, one, one},
                                               {F->mul(q4, F->inv(A)), i, i},
                                               {F->neg(F->mul(q4, F->inv(B))), j, j},
                                               {F->mul(q4, F->inv(F->mul(A, B))), k, k}});
      const std::size_t alpha = cert.action.group().index({1, 0});
      EXPECT_EQ(eta_of(cert, alpha), eta_alpha);
      const auto gamma = apply_gamma(cert, eta_alpha);
      for (std::size_t g = 0; g < gamma.size(); ++g) EXPECT_EQ(gamma[g], g == alpha ? H.unit() : H.zero());
    }
  }
}

TEST(Certify, HamiltonTrace) {
  auto Q = Field::rationals();
  const auto cert = quaternion_cert(Q, -1, -1);
  const Vec s = galoisazu::testing::rvec(*Q, {"3/2", "-7", "5", "1/3"});
  EXPECT_EQ(trace(cert, s), galoisazu::testing::rvec(*Q, {"6", "0", "0", "0"}));
  EXPECT_EQ(trace(cert, cert.extension.total()->unit()), ivec(*Q, {4, 0, 0, 0}));
  EXPECT_EQ(trace_map(cert).apply(s), trace(cert, s));
}

TEST(Certify, SymbolAlgebraClosedForm) {
  struct Case {
    const char* field;
    long a, b;
    int n;
  };
  for (const auto& c : {Case{"Fp:7", 3, 5, 3}, Case{"Fp:13", 2, 7, 4}, Case{"Qzeta:3", 2, 5, 3}, Case{"Q", 2, 3, 2}}) {
    auto F = Field::parse(c.field);
    const auto cert = symbol_cert(F, c.a, c.b, c.n);
    ASSERT_TRUE(cert.all_passed()) << c.field;
    const auto& S = *cert.extension.total();
    const std::size_t n = static_cast<std::size_t>(c.n);
    EXPECT_EQ(cert.gamma.rows(), n * n * n * n);
    const Scalar zeta = element_of_order(F, c.n).value();
    const Scalar A = F->from_int(c.a), B = F->from_int(c.b);
    const Scalar scale = F->inv(F->mul(F->mul(A, B), F->from_int(static_cast<long>(n * n))));
    const Vec x = S.basis_vector(n), u = S.basis_vector(1);
    std::vector<std::tuple<Scalar, Vec, Vec>> terms;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        const Scalar coef = F->mul(F->pow(zeta, mpz_class(static_cast<unsigned long>(r * s))), scale);
        const Vec y = S.multiply(S.power(x, n - r), S.power(u, n - s));
        terms.emplace_back(coef, S.basis_vector(r * n + s), y);
      }
    const Vec closed = ground_tensor(*F, terms);
    EXPECT_EQ(galois_element(cert), closed) << c.field;
    // Gamma of the closed form is delta_(0,0)
    const auto gamma = apply_gamma(cert, closed);
    for (std::size_t g = 0; g < gamma.size(); ++g) EXPECT_EQ(gamma[g], g == 0 ? S.unit() : S.zero());
  }
}

TEST(Certify, SymbolEquationTwo) {
  auto F = Field::prime(7);
  const auto cert = symbol_cert(F, 3, 5, 3);
  const auto& S = *cert.extension.total();
  const Scalar zeta = F->from_int(2), ab = F->from_int(15);
  const long n = 3;
  const Vec x = S.basis_vector(3), u = S.basis_vector(1);
  for (long r = 0; r < n; ++r)
    for (long s = 0; s < n; ++s)
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
          const Vec left = S.basis_vector(static_cast<std::size_t>(r * n + s));
          const Vec right = S.multiply(S.power(x, static_cast<std::uint64_t>(n - r)), S.power(u, static_cast<std::uint64_t>(n - s)));
          const std::size_t g = cert.action.group().index({static_cast<int>(i), static_cast<int>(j)});
          const long e = ((-(i * s + j * r + r * s)) % n + n) % n;
          const Scalar expected = F->mul(F->pow(zeta, mpz_class(e)), ab);
          EXPECT_EQ(S.multiply(left, cert.action.act(g, right)), S.scalar(expected)) << r << s << i << j;
        }
}

TEST(Certify, SymbolTraceVanishesOffIdentity) {
  auto F = Field::prime(7);
  const auto cert = symbol_cert(F, 3, 5, 3);
  const auto& S = *cert.extension.total();
  const Scalar zeta = F->from_int(2);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t s = 0; s < 3; ++s) {
      // cyclotomic sum over (i, j) of zeta^(j r + i s)
      Scalar sum = F->zero();
      for (unsigned long i = 0; i < 3; ++i)
        for (unsigned long j = 0; j < 3; ++j) sum = F->add(sum, F->pow(zeta, mpz_class(j * r + i * s)));
      EXPECT_EQ(F->is_zero(sum), r != 0 || s != 0);
      EXPECT_EQ(trace(cert, S.basis_vector(r * 3 + s)), scale_vec(*F, S.basis_vector(r * 3 + s), sum));
    }
}

TEST(Certify, TrivialExtension) {
  auto F = Field::prime(5);
  const GroupSpec G({2, 3});
  const auto cert = trivial_cert(F, G);
  EXPECT_TRUE(cert.all_passed());
  EXPECT_TRUE(cert.strict);
  const auto& S = *cert.extension.total();
  std::vector<std::tuple<Scalar, Vec, Vec>> terms;
  for (std::size_t g = 0; g < G.order(); ++g) terms.emplace_back(F->one(), S.basis_vector(g), S.basis_vector(g));
  const Vec expected = ground_tensor(*F, terms);
  EXPECT_EQ(galois_element(cert), expected);
  const auto gamma = apply_gamma(cert, expected);
  for (std::size_t g = 0; g < gamma.size(); ++g) EXPECT_EQ(gamma[g], g == 0 ? S.unit() : S.zero());
}

TEST(Certify, TrivialGammaFormula) {
  // Gamma(delta_g (x) delta_h) = delta_g at component k with g = h - k
  auto F = Field::prime(5);
  const GroupSpec G({2, 3});
  const auto cert = trivial_cert(F, G);
  const std::size_t n = G.order();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const Vec col = cert.gamma.column(g * n + h);
      const std::size_t k = G.index(G.add(G.element(h), G.neg(G.element(g))));
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i)
          EXPECT_EQ(col[c * n + i], (c == k && i == g) ? F->one() : F->zero());
    }
}

TEST(Certify, InvariantPropertiesOnAllCertificates) {
  std::vector<GaloisCertificate> certs{quaternion_cert(Field::rationals(), 2, 3), symbol_cert(Field::prime(7), 3, 5, 3),
                                       trivial_cert(Field::prime(5), GroupSpec({2, 3})), kummer_cert(Field::prime(7), 3, 3, 2)};
  for (const auto& cert : certs) {
    EXPECT_TRUE(cert.all_passed());
    const auto& A = *cert.extension.total();
    const auto& F = *A.field();
    for (std::size_t g = 0; g < cert.action.group().order(); ++g) {
      EXPECT_EQ(cert.gamma.apply(eta_of(cert, g)), delta(cert, g));
      for (std::size_t h = 0; h < cert.action.group().order(); ++h) {
        const auto& G = cert.action.group();
        const std::size_t ghinv = G.index(G.add(G.element(g), G.neg(G.element(h))));
        Vec s = A.zero();
        for (std::size_t i = 0; i < cert.basis.x.size(); ++i)
          s = add_vec(F, s, A.multiply(cert.basis.x[i], cert.action.act(ghinv, cert.basis.y[i])));
        EXPECT_EQ(s, g == h ? A.unit() : A.zero());
      }
    }
    EXPECT_EQ(trace(cert, A.unit()), A.scalar(F.from_int(static_cast<long>(cert.action.group().order()))));
  }
}

TEST(Certify, Errors) {
  auto Q = Field::rationals();
  auto H = quaternion_algebra(Q, Q->from_int(-1), Q->from_int(-1));
  const auto v = quaternion_v_action(H);
  EXPECT_EQ(code_of([&] { certify_galois(Extension::ground(H), restrict_action(v, {{1, 0}})); }),
            ErrorCode::InvariantsMismatch);
  auto F7 = Field::prime(7);
  auto S = symbol_algebra(F7, F7->from_int(3), F7->from_int(5), F7->from_int(2), 3);
  const SubalgebraBasis U(S, {S->unit(), S->basis_vector(3), S->basis_vector(6)});
  EXPECT_EQ(code_of([&] { gamma_matrix(Extension::over(S, U), symbol_action(S, F7->from_int(2), 3)); }),
            ErrorCode::ActionMovesBase);
  // F_3[e]/(e^2) with e -> -e has invariants F_3 but is not Galois
  auto F3 = Field::prime(3);
  auto D = quotient_algebra(F3, ivec(*F3, {0, 0, 1}));
  const auto act = substitution_action(D, ivec(*F3, {0, -1}), 2);
  EXPECT_EQ(invariants(act).dim(), 1u);
  EXPECT_EQ(code_of([&] { certify_galois(Extension::ground(D), act); }), ErrorCode::GammaSingular);
}

TEST(Tensor, HamiltonSquared) {
  auto Q = Field::rationals();
  const auto h = quaternion_cert(Q, -1, -1);
  const auto t = tensor_galois(h, h);
  EXPECT_TRUE(t.all_passed());
  EXPECT_EQ(t.gamma.rows(), 256u);
  EXPECT_EQ(t.action.group().order(), 16u);
  EXPECT_EQ(centre(t.extension.total()).dim(), 1u);
}

TEST(Tensor, TrivialFactorsAndUnit) {
  auto F = Field::prime(5);
  const auto t = tensor_galois(trivial_cert(F, GroupSpec({2})), trivial_cert(F, GroupSpec({3})));
  EXPECT_TRUE(t.all_passed());
  const auto fresh = trivial_cert(F, GroupSpec({2, 3}));
  EXPECT_EQ(t.gamma, fresh.gamma);
  EXPECT_EQ(t.eta, fresh.eta);

  auto Q = Field::rationals();
  const auto h = quaternion_cert(Q, 2, 3);
  const auto unit = trivial_cert(Q, GroupSpec());
  const auto hu = tensor_galois(h, unit);
  EXPECT_EQ(hu.eta, h.eta);
  EXPECT_EQ(hu.gamma, h.gamma);
}

TEST(Tensor, RejectsIntermediateBase) {
  auto F = Field::prime(7);
  const auto s = symbol_cert(F, 3, 5, 3);
  const auto fr = fixed_ring_extension(s, {{1, 0}});
  EXPECT_EQ(code_of([&] { tensor_galois(fr.upper, s); }), ErrorCode::BaseMismatch);
}

TEST(Opposite, RecertifiesFixtures) {
  const auto h = quaternion_cert(Field::rationals(), -1, -1);
  const auto ho = opposite_extension(h);
  EXPECT_TRUE(ho.all_passed());
  const auto so = opposite_extension(symbol_cert(Field::prime(7), 3, 5, 3));
  EXPECT_TRUE(so.all_passed());
  const auto t = trivial_cert(Field::prime(5), GroupSpec({2, 3}));
  const auto to = opposite_extension(t);
  EXPECT_TRUE(to.all_passed());
  EXPECT_EQ(to.gamma, t.gamma);
  EXPECT_EQ(to.eta, t.eta);
}

TEST(FixedRing, SymbolAlgebraSubgroups) {
  auto F = Field::prime(7);
  const auto cert = symbol_cert(F, 3, 5, 3);
  const auto& S = cert.extension.total();
  // <alpha> = Z/3 x {0} fixes x
  const auto fx = fixed_ring_extension(cert, {{1, 0}});
  const SubalgebraBasis Fx(S, {S->unit(), S->basis_vector(3), S->basis_vector(6)});
  EXPECT_TRUE(fx.fixed_ring.same_span(Fx));
  EXPECT_TRUE(fx.upper.all_passed());
  EXPECT_EQ(fx.upper.extension.rank(), 3u);
  EXPECT_EQ(fx.upper.gamma.rows(), 27u);
  ASSERT_TRUE(fx.lower.has_value());
  EXPECT_TRUE(fx.lower->all_passed());
  const auto& U = *fx.lower->extension.total();
  EXPECT_EQ(U.dim(), 3u);
  // x^3 = 3 inside U
  const Vec xu = *fx.fixed_ring.coordinates(S->basis_vector(3));
  EXPECT_EQ(U.power(xu, 3), U.scalar(F->from_int(3)));
  EXPECT_TRUE(centralizer(S, Fx.vectors()).same_span(Fx));

  // <beta> = {0} x Z/3 fixes u, with u^3 = 5
  const auto fu = fixed_ring_extension(cert, {{0, 1}});
  const SubalgebraBasis Fu(S, {S->unit(), S->basis_vector(1), S->basis_vector(2)});
  EXPECT_TRUE(fu.fixed_ring.same_span(Fu));
  EXPECT_TRUE(fu.upper.all_passed());
  ASSERT_TRUE(fu.lower.has_value());
  EXPECT_TRUE(fu.lower->all_passed());
}

TEST(FixedRing, WholeGroupAndTrivialSubgroup) {
  auto F = Field::prime(7);
  const auto cert = symbol_cert(F, 3, 5, 3);
  const auto all = fixed_ring_extension(cert, {{1, 0}, {0, 1}});
  EXPECT_EQ(all.fixed_ring.dim(), 1u);
  EXPECT_EQ(all.upper.gamma, cert.gamma);
  EXPECT_EQ(code_of([&] { fixed_ring_extension(quaternion_cert(Field::rationals(), -1, -1), {{0, 0}}); }),
            ErrorCode::Unsupported);
  const auto k = kummer_cert(F, 3, 3, 2);
  const auto id = fixed_ring_extension(k, {{0}});
  EXPECT_EQ(id.fixed_ring.dim(), 3u);
  EXPECT_EQ(id.upper.extension.rank(), 1u);
  EXPECT_TRUE(id.upper.all_passed());
}

TEST(FixedRing, Rejections) {
  auto F5 = Field::prime(5);
  const auto t = trivial_cert(F5, GroupSpec({2, 3}));
  EXPECT_EQ(code_of([&] { fixed_ring_extension(t, {{1, 0}}); }), ErrorCode::FixedRingNotField);
  auto F2 = Field::prime(2);
  const auto t2 = trivial_cert(F2, GroupSpec({2}));
  EXPECT_TRUE(t2.all_passed());
  EXPECT_FALSE(t2.strict);
  EXPECT_EQ(code_of([&] { fixed_ring_extension(t2, {{1}}); }), ErrorCode::NotStrict);
  const auto s = symbol_cert(Field::prime(7), 3, 5, 3);
  EXPECT_EQ(code_of([&] { quotient_extension(s, {{1, 1}}); }), ErrorCode::SubgroupNotFactor);
  const auto diag = fixed_ring_extension(s, {{1, 1}});
  EXPECT_FALSE(diag.lower.has_value());
  EXPECT_TRUE(diag.upper.all_passed());
}

TEST(BaseChange, HamiltonToGaussianRationals) {
  auto Q = Field::rationals();
  const auto h = quaternion_cert(Q, -1, -1);
  auto Qi = Field::cyclotomic(4);
  const FieldEmbedding emb(Q, Qi);
  const auto hc = base_change(h, emb);
  EXPECT_TRUE(hc.all_passed());
  // (1 + i x j... ) the algebra splits: i (x) zeta gives a zero divisor 1 + zeta i
  const auto& A = *hc.extension.total();
  Vec z = A.zero();
  z[0] = Qi->one();
  z[1] = Qi->generator();
  EXPECT_FALSE(try_invert(A, z).has_value());
  const auto report = check_base_change_morphism(h, hc, emb);
  EXPECT_TRUE(report.all_passed());
}

TEST(BaseChange, IdentityAndFiniteFields) {
  auto Q = Field::rationals();
  const auto h = quaternion_cert(Q, 2, 3);
  const FieldEmbedding id(Q, Q);
  EXPECT_TRUE(id.is_identity());
  const auto same = base_change(h, id);
  EXPECT_EQ(same.gamma, h.gamma);
  EXPECT_EQ(same.eta, h.eta);

  auto F5 = Field::prime(5);
  const auto s = symbol_cert(F5, 2, 3, 2);
  auto F25 = Field::parse("Fq:5:x^2+2");
  const auto sc = base_change(s, FieldEmbedding(F5, F25));
  EXPECT_TRUE(sc.all_passed());
  const auto fresh = certify_galois(Extension::ground(sc.extension.total()), sc.action);
  EXPECT_EQ(fresh.eta, sc.eta);
}

TEST(BaseChange, EmbeddingValidation) {
  auto Q = Field::rationals();
  EXPECT_EQ(code_of([&] { FieldEmbedding(Q, Field::prime(5)); }), ErrorCode::EmbeddingInvalid);
  auto Q4 = Field::cyclotomic(4), Q8 = Field::cyclotomic(8);
  // zeta_8^2 is a fourth root of unity
  const Scalar z8 = Q8->generator();
  const FieldEmbedding emb(Q4, Q8, Q8->mul(z8, z8));
  EXPECT_EQ(emb(Q4->generator()), Q8->mul(z8, z8));
  EXPECT_EQ(code_of([&] { FieldEmbedding(Q4, Q8, z8); }), ErrorCode::EmbeddingInvalid);
  EXPECT_EQ(code_of([&] { FieldEmbedding(Q4, Q8); }), ErrorCode::EmbeddingInvalid);
}

TEST(Morphism, IdentityAndSwap) {
  auto Q = Field::rationals();
  const auto h = quaternion_cert(Q, -1, -1);
  const auto report = check_morphism(h, h, Matrix::identity(Q, 4));
  EXPECT_TRUE(report.all_passed());
  // i <-> j, k -> -k is an automorphism of H(-1,-1) that does not commute with alpha
  Matrix swap(Q, 4, 4);
  swap.at(0, 0) = Q->one();
  swap.at(2, 1) = Q->one();
  swap.at(1, 2) = Q->one();
  swap.at(3, 3) = Q->from_int(-1);
  const auto& H = *h.extension.total();
  ASSERT_TRUE(is_multiplicative(H, H, swap));
  const Matrix& alpha = h.action.generators()[0];
  EXPECT_NE(matmul(alpha, swap).apply(H.basis_vector(1)), matmul(swap, alpha).apply(H.basis_vector(1)));
  EXPECT_EQ(code_of([&] { check_morphism(h, h, swap); }), ErrorCode::NotEquivariant);
  Matrix zero(Q, 4, 4);
  EXPECT_EQ(code_of([&] { check_morphism(h, h, zero); }), ErrorCode::NotAlgebraMorphism);
}

TEST(Morphism, ConjugationIsEquivariantOnCommutativeImage) {
  // The automorphism y -> -y of F_49 commutes with its own Galois action.
  auto F = Field::prime(7);
  const auto k = kummer_cert(F, 2, 3, -1);
  const Matrix& sigma = k.action.generators()[0];
  const auto report = check_morphism(k, k, sigma);
  EXPECT_TRUE(report.all_passed());
}

TEST(Prop32, CommutativeFields) {
  auto F = Field::prime(7);
  const auto f49 = kummer_cert(F, 2, 3, -1);
  const auto cubic = kummer_cert(F, 3, 3, 2);
  const auto r = prop32_check(f49, cubic);
  EXPECT_TRUE(r.first.all_passed());
  EXPECT_TRUE(r.second.all_passed());
  EXPECT_EQ(r.first.action.group().order(), 3u);
  EXPECT_EQ(r.second.action.group().order(), 2u);
  const auto sq = prop32_check(f49, f49);
  EXPECT_TRUE(sq.first.all_passed());
  const auto triv = prop32_check(f49, trivial_cert(F, GroupSpec()));
  EXPECT_EQ(triv.first.extension.rank(), 1u);
  EXPECT_TRUE(triv.first.all_passed());
}

TEST(Prop32, Rejections) {
  auto Q = Field::rationals();
  const auto h = quaternion_cert(Q, -1, -1);
  EXPECT_EQ(code_of([&] { prop32_check(h, h); }), ErrorCode::NotCommutative);
  auto F2 = Field::prime(2);
  // F_4 over F_2 with the Frobenius x -> x + 1
  auto F4 = quotient_algebra(F2, ivec(*F2, {1, 1, 1}));
  const auto frob = certify_galois(Extension::ground(F4), substitution_action(F4, ivec(*F2, {1, 1}), 2));
  EXPECT_EQ(code_of([&] { prop32_check(frob, frob); }), ErrorCode::NotStrict);
}
