#include <gtest/gtest.h>

#include <random>

#include "gincomplex/field.hpp"

using namespace gincomplex;

namespace {

// Inverse by exhaustive search.
std::uint32_t bruteInverse(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x) {
    if (static_cast<std::uint64_t>(a) * x % p == 1) return x;
  }
  return 0;
}

bool trialDivisionPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST(Field, AddWrapsAround) {
  const FieldConfig F;
  EXPECT_EQ(add(FieldElement(F, 32002), FieldElement(F, 1)).value(), 0u);
  EXPECT_EQ(add(FieldElement(F, 0), FieldElement(F, 17)).value(), 17u);
}

TEST(Field, SmallPrimeArithmetic) {
  const FieldConfig F7(7);
  EXPECT_EQ(add(FieldElement(F7, 5), FieldElement(F7, 4)).value(), 2u);
  EXPECT_EQ(inverse(FieldElement(F7, 3)).value(), 5u);
  EXPECT_EQ(inverse(FieldElement(F7, 6)).value(), 6u);
}

TEST(Field, InverseOfOneAndMinusOne) {
  const FieldConfig F;
  EXPECT_EQ(inverse(FieldElement(F, 1)).value(), 1u);
  EXPECT_EQ(inverse(FieldElement(F, 32002)).value(), 32002u);
}

TEST(Field, InverseOfZeroThrows) {
  const FieldConfig F;
  EXPECT_THROW(inverse(FieldElement(F, 0)), DivisionByZeroError);
}

TEST(Field, ModulusMismatchThrows) {
  EXPECT_THROW(add(FieldElement(FieldConfig(7), 1), FieldElement(FieldConfig(11), 1)), ConfigError);
  EXPECT_THROW(mul(FieldElement(FieldConfig(7), 1), FieldElement(FieldConfig(11), 1)), ConfigError);
}

TEST(Field, RejectsComposites) {
  EXPECT_THROW(FieldConfig(32004), ConfigError);
  EXPECT_THROW(FieldConfig(1), ConfigError);
  EXPECT_NO_THROW(FieldConfig(2));
  EXPECT_NO_THROW(FieldConfig(2147483647u));
}

TEST(Field, PrimalityAgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(isPrime(n), trialDivisionPrime(n)) << n;
}

TEST(Field, NegativeLiteralsReduce) {
  const FieldConfig F7(7);
  EXPECT_EQ(FieldElement(F7, -1).value(), 6u);
  EXPECT_EQ(FieldElement(F7, -15).value(), 6u);
  EXPECT_EQ(F7.toSigned(6), -1);
}

TEST(Field, InverseMatchesExhaustiveSearch) {
  const FieldConfig F(1009);
  for (std::uint32_t a = 1; a < 1009; ++a) EXPECT_EQ(F.inv(a), bruteInverse(a, 1009)) << a;
}

TEST(FieldProperty, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(2024);
  for (std::uint32_t p : {7u, 32003u, 2147483647u}) {
    const FieldConfig F(p);
    for (int k = 0; k < 10000; ++k) {
      const FieldElement a(F, static_cast<std::int64_t>(rng() % p));
      const FieldElement b(F, static_cast<std::int64_t>(rng() % p));
      const FieldElement c(F, static_cast<std::int64_t>(rng() % p));
      ASSERT_EQ(add(add(a, b), c), add(a, add(b, c)));
      ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
      ASSERT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
      ASSERT_EQ(add(a, b), add(b, a));
      ASSERT_EQ(mul(a, b), mul(b, a));
      ASSERT_EQ(sub(add(a, b), b), a);
      if (!a.isZero()) {
        ASSERT_EQ(mul(a, inverse(a)).value(), 1u);
      }
    }
  }
}
