#include <gtest/gtest.h>

#include <random>

#include "springer/linalg.hpp"
#include "springer/poly.hpp"

using namespace springer;

namespace {

IntPolynomial x_power_minus_one(int e) { return IntPolynomial::monomial(static_cast<std::size_t>(e)) - IntPolynomial(1); }

IntPolynomial random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-5, 5);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPolynomial(c);
}

}  // namespace

TEST(IntPolynomial, CanonicalForm) {
  IntPolynomial p(std::vector<Integer>{1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(IntPolynomial().is_zero());
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).coefficients().size(), 0u);
}

TEST(IntPolynomial, ArithmeticAndTransforms) {
  const IntPolynomial a{1, 1};   // 1 + q
  const IntPolynomial b{1, -1};  // 1 - q
  EXPECT_EQ(a * b, (IntPolynomial{1, 0, -1}));
  EXPECT_EQ(a.substitute_power(3), (IntPolynomial{1, 0, 0, 1}));
  EXPECT_EQ((IntPolynomial{0, 1, 3}).reflect(2), (IntPolynomial{3, 1}));
  EXPECT_EQ((IntPolynomial{1, 3, 2}).sum_of_coefficients(), 6);
  EXPECT_EQ((IntPolynomial{1, -1, 2}).to_string(), "1 - q + 2q^2");
  auto [quot, rem] = (IntPolynomial{-1, 0, 0, 1}).divmod(IntPolynomial{-1, 1});
  EXPECT_EQ(quot, (IntPolynomial{1, 1, 1}));
  EXPECT_TRUE(rem.is_zero());
}

TEST(Cyclotomic, PolynomialExamples) {
  EXPECT_EQ(cyclotomic_poly(1), (IntPolynomial{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(2), (IntPolynomial{1, 1}));
  EXPECT_EQ(cyclotomic_poly(6), (IntPolynomial{1, -1, 1}));
  EXPECT_EQ(cyclotomic_poly(12), (IntPolynomial{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, PolynomialProductOverDivisors) {
  for (int e = 1; e <= 30; ++e) {
    const auto phi = cyclotomic_poly(e);
    EXPECT_EQ(phi.degree(), euler_phi(e)) << e;
    EXPECT_TRUE(x_power_minus_one(e).divmod(phi).second.is_zero()) << e;
    IntPolynomial prod(1);
    for (int d = 1; d <= e; ++d)
      if (e % d == 0) prod *= cyclotomic_poly(d);
    EXPECT_EQ(prod, x_power_minus_one(e)) << e;
  }
}

TEST(Cyclotomic, EvalAtRootExamples) {
  EXPECT_EQ(eval_at_root(IntPolynomial{1, -1}, 2, 1), Cyclotomic(2, 2));
  EXPECT_EQ(eval_at_root(IntPolynomial{1, -1, 2}, 2, 1), Cyclotomic(2, 4));
  const IntPolynomial p{3, -2, 7, 1};
  for (int e : {1, 3, 5, 8}) EXPECT_EQ(eval_at_root(p, e, 0), Cyclotomic(e, 9));
}

TEST(Cyclotomic, FieldOperations) {
  for (int e : {3, 4, 5, 6, 7, 12}) {
    const Cyclotomic z = Cyclotomic::zeta_power(e, 1);
    Cyclotomic p(e, 1);
    for (int i = 0; i < e; ++i) p *= z;
    EXPECT_EQ(p, Cyclotomic(e, 1));
    Cyclotomic sum(e);
    for (int i = 0; i < e; ++i) sum += Cyclotomic::zeta_power(e, i);
    EXPECT_TRUE(sum.is_zero()) << e;
    const Cyclotomic x = z * Rational(3) + Cyclotomic(e, Rational(1, 2));
    EXPECT_EQ(x * x.inverse(), Cyclotomic(e, 1));
    EXPECT_EQ(z.galois(e - 1), Cyclotomic::zeta_power(e, -1));
  }
  EXPECT_TRUE(Cyclotomic(5, 7).is_integer());
  EXPECT_FALSE(Cyclotomic::zeta_power(5, 2).is_rational());
}

TEST(Cyclotomic, EvaluationIsMultiplicative) {
  std::mt19937 rng(20240517);
  for (int trial = 0; trial < 60; ++trial) {
    const IntPolynomial p = random_poly(rng, 6), r = random_poly(rng, 6);
    const int e = 1 + trial % 12;
    const long long j = trial % 7;
    EXPECT_EQ(eval_at_root(p * r, e, j), eval_at_root(p, e, j) * eval_at_root(r, e, j));
  }
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(RationalMatrix::identity(3, 0, 1)).empty());
  EXPECT_EQ(kernel_basis(RationalMatrix(2, 2, 0)).size(), 2u);
  // (1 2) on two coordinates minus zeta = -1
  Matrix<Cyclotomic> m(2, 2, Cyclotomic(2));
  m(0, 0) = Cyclotomic(2, 1);
  m(0, 1) = Cyclotomic(2, 1);
  m(1, 0) = Cyclotomic(2, 1);
  m(1, 1) = Cyclotomic(2, 1);
  const auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
}

TEST(Kernel, RankNullityOverCyclotomics) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> small(-2, 2), dims(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const int e = 3 + trial % 5;
    const std::size_t rows = static_cast<std::size_t>(dims(rng)), cols = static_cast<std::size_t>(dims(rng));
    Matrix<Cyclotomic> m(rows, cols, Cyclotomic(e));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (small(rng) > 0) m(r, c) = Cyclotomic::zeta_power(e, small(rng)) * Rational(small(rng));
    // make dependent rows sometimes
    if (rows > 1 && trial % 2)
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Cyclotomic::zeta_power(e, 1);
    const auto basis = kernel_basis(m);
    EXPECT_EQ(rank(m) + basis.size(), cols);
    for (const auto& v : basis)
      for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
  }
}
