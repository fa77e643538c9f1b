#include <gtest/gtest.h>

#include <random>

#include "acdlab/cyclotomic.hpp"
#include "acdlab/errors.hpp"
#include "oracles.hpp"

using acdlab::CyclotomicValue;
using acdlab::Rational;

namespace {

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

CyclotomicValue random_value(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> dist(-5, 5);
  std::vector<std::int64_t> c(n);
  for (auto& x : c) x = dist(rng);
  return CyclotomicValue::from_exponent_sum(n, c, 1 + static_cast<std::int64_t>(rng() % 3));
}

}  // namespace

TEST(Cyclotomic, PolynomialsAndTotient) {
  EXPECT_EQ(acdlab::euler_phi(1), 1u);
  EXPECT_EQ(acdlab::euler_phi(12), 4u);
  EXPECT_EQ(acdlab::euler_phi(113), 112u);
  EXPECT_EQ(acdlab::cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  EXPECT_EQ(acdlab::cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p105 = acdlab::cyclotomic_polynomial(105);
  EXPECT_EQ(p105.size(), 49u);
  EXPECT_EQ(*std::min_element(p105.begin(), p105.end()), -2);
}

TEST(Cyclotomic, CanonicalFormIsUnique) {
  // 1 + z5 + z5^2 + z5^3 + z5^4 == 0
  const std::vector<std::int64_t> ones(5, 1);
  EXPECT_TRUE(CyclotomicValue::from_exponent_sum(5, ones).is_zero());
  // z3 + z3^2 == -1
  EXPECT_EQ(CyclotomicValue::root_of_unity(3, 1) + CyclotomicValue::root_of_unity(3, 2),
            CyclotomicValue::integer(-1, 3));
  // z4^2 == -1 written over a different conductor
  EXPECT_EQ(CyclotomicValue::root_of_unity(4, 2), CyclotomicValue::integer(-1));
  EXPECT_EQ(CyclotomicValue::root_of_unity(12, 3), CyclotomicValue::root_of_unity(4, 1));
}

TEST(Cyclotomic, ArithmeticAgreesWithComplexEvaluation) {
  std::mt19937 rng(5);
  for (std::size_t n : {1u, 3u, 4u, 8u, 9u, 12u, 15u, 21u, 30u}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = random_value(rng, n);
      const auto b = random_value(rng, n);
      EXPECT_TRUE(close(oracle::evaluate(a + b), oracle::evaluate(a) + oracle::evaluate(b)));
      EXPECT_TRUE(close(oracle::evaluate(a * b), oracle::evaluate(a) * oracle::evaluate(b)));
      EXPECT_TRUE(close(oracle::evaluate(a.conj()), std::conj(oracle::evaluate(a))));
      EXPECT_TRUE(close(oracle::evaluate(a.lift(2 * n)), oracle::evaluate(a)));
      EXPECT_EQ(a - a, CyclotomicValue(n));
      EXPECT_EQ(a.galois(1), a);
    }
  }
}

TEST(Cyclotomic, GaloisIsAFieldAutomorphism) {
  std::mt19937 rng(9);
  const std::size_t n = 20;
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_value(rng, n);
    const auto b = random_value(rng, n);
    for (std::int64_t k : {3, 7, 9, 11, 13, 17, 19}) {
      EXPECT_EQ((a * b).galois(k), a.galois(k) * b.galois(k));
      EXPECT_EQ((a + b).galois(k), a.galois(k) + b.galois(k));
    }
  }
  EXPECT_THROW(CyclotomicValue::root_of_unity(6, 1).galois(2), acdlab::InputError);
}

TEST(Cyclotomic, RationalDetection) {
  const auto r = CyclotomicValue::root_of_unity(7, 1);
  EXPECT_FALSE(r.is_rational());
  CyclotomicValue sum(7);
  for (int k = 1; k < 7; ++k) sum = sum + r.galois(k);
  ASSERT_TRUE(sum.is_rational());
  EXPECT_EQ(*sum.to_rational(), Rational(-1));
  EXPECT_EQ(*CyclotomicValue::fraction(6, 4, 5).to_rational(), Rational(3, 2));
}

TEST(Cyclotomic, VanishingTest) {
  // 1 + x^2 + x^4 vanishes at a primitive 6th root? (x^6 - 1)/(x^2 - 1) evaluated at zeta_6: yes.
  const std::vector<std::int64_t> a{1, 0, 1, 0, 1, 0};
  EXPECT_TRUE(acdlab::vanishes_at_primitive_root(a));
  const std::vector<std::int64_t> b{1, 1, 0, 0, 0, 0};
  EXPECT_FALSE(acdlab::vanishes_at_primitive_root(b));
}

TEST(Cyclotomic, ToString) {
  EXPECT_EQ(CyclotomicValue::integer(-1).to_string(), "-1");
  EXPECT_EQ((CyclotomicValue::root_of_unity(5, 1) + CyclotomicValue::root_of_unity(5, 4)).to_string(), "-1 - z5^2 - z5^3");
}
