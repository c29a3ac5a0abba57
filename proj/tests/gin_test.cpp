#include <gtest/gtest.h>

#include "gincomplex/corpus.hpp"
#include "gincomplex/gin.hpp"
#include "support.hpp"

using namespace gincomplex;
using testsupport::monos;
using testsupport::P;

namespace {

const Ring R5{5, FieldConfig()};

Ideal build(const std::string& name, std::uint64_t seed = 1) {
  return findEntry(name).build(seed, FieldConfig());
}

}  // namespace

TEST(RandomChange, DeterministicPerSeed) {
  const FieldConfig F;
  EXPECT_EQ(randomChange(7, 5, F), randomChange(7, 5, F));
  EXPECT_FALSE(randomChange(1, 5, F) == randomChange(2, 5, F));
}

TEST(RandomChange, ShapeAndInverse) {
  const FieldConfig F;
  const CoordinateChange g = randomChange(3, 5, F);
  ASSERT_EQ(g.size(), 5);
  ASSERT_EQ(g.matrix().size(), 25u);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      Coeff s = 0;
      for (int k = 0; k < 5; ++k) s = F.add(s, F.mul(g.at(i, k), g.inverseAt(k, j)));
      EXPECT_EQ(s, i == j ? 1u : 0u);
    }
  }
}

TEST(RandomChange, SmallPrimeStillInvertible) {
  const FieldConfig F(2);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const CoordinateChange g = randomChange(seed, 4, F);
    EXPECT_FALSE(invertMatrix(F, 4, g.matrix()).empty());
  }
}

TEST(Gin, Scroll) {
  const GinResult r = gin(scroll(), MonomialOrder::glex());
  EXPECT_EQ(r.gin, monos(5, {"x0^2", "x0*x1", "x0*x2", "x1^3"}));
  EXPECT_TRUE(r.borel);
  EXPECT_GE(r.trialsAgreed, 2);
  EXPECT_EQ(degreeComplexity(r), 3);
}

TEST(Gin, CompleteIntersectionOfTwoQuadrics) {
  const GinResult r = gin(build("ci22"), MonomialOrder::glex());
  EXPECT_EQ(r.gin, monos(5, {"x0^2", "x0*x1", "x1^4", "x0*x2^2"}));
  EXPECT_EQ(degreeComplexity(r), 4);
}

TEST(Gin, GenericQuadricIsPrincipal) {
  std::mt19937_64 rng(4);
  const Ideal I(R5, {testsupport::randomHomogeneous(rng, R5, 2, 15)});
  EXPECT_EQ(gin(I, MonomialOrder::glex()).gin, monos(5, {"x0^2"}));
  EXPECT_EQ(gin(I, MonomialOrder::grevlex()).gin, monos(5, {"x0^2"}));
}

TEST(Gin, ComplexityOfCompleteIntersections) {
  EXPECT_EQ(degreeComplexity(build("ci23"), MonomialOrder::glex()), 8);
  for (const char* name : {"ci22", "ci23"}) {
    EXPECT_EQ(degreeComplexity(build(name), MonomialOrder::grevlex()), findEntry(name).alpha + 1) << name;
  }
}

TEST(Gin, SeedsAreConsecutive) {
  GinOptions options;
  options.seedBase = 40;
  const GinResult r = gin(scroll(), MonomialOrder::grevlex(), options);
  ASSERT_FALSE(r.seeds.empty());
  for (std::size_t k = 0; k < r.seeds.size(); ++k) EXPECT_EQ(r.seeds[k], 40 + k);
}

TEST(Gin, HilbertDrivenMatchesPlain) {
  GinOptions plain;
  plain.hilbertDriven = false;
  for (const char* name : {"scroll", "ci22", "castelnuovo", "ci23"}) {
    const Ideal I = build(name);
    EXPECT_EQ(gin(I, MonomialOrder::glex()).gin, gin(I, MonomialOrder::glex(), plain).gin) << name;
  }
}

// A prime this small makes special coordinates likely, so trials disagree.
TEST(Gin, UnstableReportsEveryTrial) {
  const FieldConfig F(2);
  GinOptions options;
  options.minAgree = 6;
  options.trialBudget = 6;
  bool threw = false;
  for (std::uint64_t base = 1; base < 200 && !threw; base += 6) {
    options.seedBase = base;
    try {
      gin(completeIntersection(3, 5, F), MonomialOrder::glex(), options);
    } catch (const UnstableGinError& e) {
      threw = true;
      EXPECT_EQ(e.results().size(), 6u);
      EXPECT_EQ(e.seeds().size(), 6u);
      EXPECT_EQ(e.seeds().front(), base);
    }
  }
  EXPECT_TRUE(threw);
}

TEST(Gin, RejectsBadOptions) {
  GinOptions options;
  options.minAgree = 3;
  options.trialBudget = 2;
  EXPECT_THROW(gin(scroll(), MonomialOrder::glex(), options), ConfigError);
  options.minAgree = 0;
  EXPECT_THROW(gin(scroll(), MonomialOrder::glex(), options), ConfigError);
}

// This seed draws a matrix whose leading 2x2 minor vanishes mod p, so a
// single trial lands in special coordinates.
TEST(Gin, UnluckySingleTrialIsFlagged) {
  const Ring R3{3, FieldConfig()};
  const Ideal I(R3, {P(R3, "x0"), P(R3, "x1")});
  GinOptions options;
  options.minAgree = 1;
  options.seedBase = 10578843475638088452ull;
  const GinResult r = gin(I, MonomialOrder::grevlex(), options);
  EXPECT_EQ(r.gin, monos(3, {"x0", "x2"}));
  EXPECT_FALSE(r.borel);
  EXPECT_THROW(degreeComplexity(r), NonBorelGinError);
  options.minAgree = 2;
  EXPECT_EQ(gin(I, MonomialOrder::grevlex(), options).gin, monos(3, {"x0", "x1"}));
}

TEST(Gin, NonBorelResultIsFlagged) {
  GinResult fake{monos(2, {"x1"}), MonomialOrder::glex(), 2, {1, 2}, false};
  EXPECT_THROW(degreeComplexity(fake), NonBorelGinError);
}

TEST(Gin, PreservesHilbertFunction) {
  for (const char* name : {"scroll", "ci22", "castelnuovo", "ci23", "acm4"}) {
    const Ideal I = build(name);
    const MonomialIdeal g = gin(I, MonomialOrder::glex()).gin;
    for (int m = 0; m <= 8; ++m) {
      EXPECT_EQ(hilbertFunctionMacaulay(I, m), hilbertFunctionMonomial(g, m)) << name << " m=" << m;
    }
  }
}

TEST(Gin, GrevlexRegularityNeverExceedsGlex) {
  for (const char* name : {"scroll", "ci22", "castelnuovo", "ci23", "acm4"}) {
    const Ideal I = build(name);
    EXPECT_LE(degreeComplexity(I, MonomialOrder::grevlex()), degreeComplexity(I, MonomialOrder::glex())) << name;
  }
}

TEST(Witness, GoldenLists) {
  EXPECT_TRUE(witnessCheck(expectedGinOf(findEntry("ci23")), 6, 6, 6));
  EXPECT_TRUE(witnessCheck(expectedGinOf(findEntry("acm4")), 7, 9, 18));
  EXPECT_TRUE(witnessCheck(expectedGinOf(findEntry("ci24")), 8, 12, 36));
}

TEST(Witness, RejectsWrongInvariants) {
  const MonomialIdeal ci23 = expectedGinOf(findEntry("ci23"));
  EXPECT_FALSE(witnessCheck(ci23, 5, 6, 6));
  EXPECT_FALSE(witnessCheck(ci23, 6, 5, 6));
  EXPECT_FALSE(witnessCheck(ci23, 6, 6, 5));
}

// Every stabilized gin is Borel-fixed, over many small random ideals.
TEST(GinProperty, StabilizedGinsAreBorelFixed) {
  std::mt19937_64 rng(314);
  GinOptions options;
  int checked = 0;
  for (int k = 0; k < 1000; ++k) {
    const Ring R{2 + static_cast<int>(rng() % 3), FieldConfig()};
    std::vector<Polynomial> gens;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int g = 0; g < count; ++g) {
      gens.push_back(testsupport::randomHomogeneous(rng, R, 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3)));
    }
    options.seedBase = rng();
    const MonomialOrder order = k % 2 ? MonomialOrder::glex() : MonomialOrder::grevlex();
    const GinResult r = gin(Ideal(R, gens), order, options);
    ASSERT_TRUE(isBorelFixed(r.gin)) << k;
    ASSERT_TRUE(r.borel);
    ++checked;
  }
  EXPECT_EQ(checked, 1000);
}
