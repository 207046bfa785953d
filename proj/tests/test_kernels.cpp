#include <gtest/gtest.h>

#include <random>

#include "galoisazu/matrix.hpp"
#include "test_util.hpp"

using namespace galoisazu;

namespace {

Matrix random_matrix(const FieldPtr& F, std::size_t rows, std::size_t cols, std::mt19937& rng, double density = 0.6) {
  std::uniform_int_distribution<long> val(-5, 5);
  std::uniform_real_distribution<double> coin(0, 1);
  Matrix m(F, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng) < density) {
        const long den = F->characteristic() == 0 ? 1 + (val(rng) + 5) % 3 : 1;
        m.at(i, j) = F->from_rational(mpq_class(val(rng), den));
      }
  return m;
}

// Leibniz expansion over all permutations.
Scalar leibniz(const Matrix& m) {
  const auto& F = *m.field();
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = F.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term = F.one();
    for (std::size_t i = 0; i < n; ++i) term = F.mul(term, m.at(i, perm[i]));
    total = inversions % 2 ? F.sub(total, term) : F.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(Kernels, SerialAndParallelAgreeBitwise) {
  std::mt19937 rng(7);
  for (const char* desc : {"Q", "Fp:101", "Fq:3:x^2+1"}) {
    auto F = Field::parse(desc);
    for (int trial = 0; trial < 6; ++trial) {
      const Matrix a = random_matrix(F, 9, 7, rng), b = random_matrix(F, 7, 8, rng);
      EXPECT_EQ(serial::matmul(a, b), omp::matmul(a, b));
      const auto ra = serial::rref(a), rb = omp::rref(a);
      EXPECT_EQ(ra.reduced, rb.reduced);
      EXPECT_EQ(ra.pivots, rb.pivots);
      EXPECT_EQ(serial::nullspace(a), omp::nullspace(a));
      EXPECT_EQ(serial::kron(a, b), omp::kron(a, b));
      const Matrix sq = random_matrix(F, 8, 8, rng, 0.9);
      EXPECT_EQ(serial::inverse(sq).has_value(), omp::inverse(sq).has_value());
      if (auto inv = serial::inverse(sq)) {
        EXPECT_EQ(*inv, *omp::inverse(sq));
      }
    }
  }
}

TEST(Kernels, InverseIsTwoSided) {
  std::mt19937 rng(11);
  auto F = Field::rationals();
  int found = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_matrix(F, 6, 6, rng, 0.8);
    auto inv = inverse(m);
    if (!inv) {
      EXPECT_LT(rank(m), 6u);
      continue;
    }
    ++found;
    EXPECT_TRUE(matmul(m, *inv).is_identity());
    EXPECT_TRUE(matmul(*inv, m).is_identity());
  }
  EXPECT_GT(found, 0);
}

TEST(Kernels, RankNullity) {
  std::mt19937 rng(3);
  for (const char* desc : {"Q", "Fp:2", "Fp:7"}) {
    auto F = Field::parse(desc);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix m = random_matrix(F, 5, 9, rng, 0.4);
      const Matrix k = nullspace(m);
      EXPECT_EQ(rank(m) + k.cols(), m.cols());
      EXPECT_TRUE(matmul(m, k).is_zero());
      if (k.cols() > 0) {
        EXPECT_EQ(rank(k), k.cols());
      }
    }
  }
}

TEST(Kernels, SolveReturnsParticularSolution) {
  std::mt19937 rng(5);
  auto F = Field::prime(13);
  const Matrix a = random_matrix(F, 6, 4, rng);
  const Matrix x = random_matrix(F, 4, 2, rng);
  const Matrix b = matmul(a, x);
  auto sol = solve(a, b);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(matmul(a, *sol), b);
  Matrix bad = b;
  // a rank-deficient system with an inconsistent right-hand side
  Matrix z(F, 2, 2);
  Matrix rhs(F, 2, 1);
  rhs.at(0, 0) = F->one();
  EXPECT_FALSE(solve(z, rhs).has_value());
  (void)bad;
}

TEST(Kernels, DeterminantMatchesLeibniz) {
  std::mt19937 rng(19);
  for (const char* desc : {"Q", "Fp:5", "Qzeta:3"}) {
    auto F = Field::parse(desc);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix m = random_matrix(F, 4, 4, rng, 0.7);
      EXPECT_EQ(determinant(m), leibniz(m)) << desc;
    }
  }
}

TEST(Kernels, KronMixedProduct) {
  std::mt19937 rng(23);
  auto F = Field::rationals();
  const Matrix a = random_matrix(F, 2, 3, rng), b = random_matrix(F, 3, 2, rng);
  const Matrix c = random_matrix(F, 3, 2, rng), d = random_matrix(F, 2, 3, rng);
  EXPECT_EQ(matmul(kron(a, b), kron(c, d)), kron(matmul(a, c), matmul(b, d)));
  const Matrix k = kron(a, b);
  EXPECT_EQ(k.rows(), 6u);
  EXPECT_EQ(k.at(1 * 3 + 2, 2 * 2 + 1), F->mul(a.at(1, 2), b.at(2, 1)));
}

TEST(Kernels, IdentityAndTranspose) {
  auto F = Field::prime(3);
  const Matrix i = Matrix::identity(F, 5);
  EXPECT_TRUE(i.is_identity());
  EXPECT_EQ(inverse(i), i);
  std::mt19937 rng(29);
  const Matrix a = random_matrix(F, 3, 4, rng), b = random_matrix(F, 4, 2, rng);
  EXPECT_EQ(matmul(a, b).transpose(), matmul(b.transpose(), a.transpose()));
  EXPECT_EQ(block_diagonal(i, 2).rows(), 10u);
}
