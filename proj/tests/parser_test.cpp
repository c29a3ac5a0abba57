#include <gtest/gtest.h>

#include "gincomplex/corpus.hpp"
#include "gincomplex/parser.hpp"
#include "support.hpp"

using namespace gincomplex;
using testsupport::P;

namespace {

ParseError parseFailure(const std::string& text) {
  try {
    parseIdealFile(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return ParseError("", 0, 0);
}

}  // namespace

TEST(Parser, ScrollFile) {
  const IdealFile f = parseIdealFile("ring 5\nx0*x3 - x1*x2\nx0*x1 - x3*x4\nx0^2 - x2*x4");
  EXPECT_FALSE(f.headerPrime.has_value());
  ASSERT_EQ(f.ideal.size(), 3u);
  const Ideal s = scroll();
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(f.ideal.generators()[k], s.generators()[k]);
}

TEST(Parser, SingleQuadric) {
  const IdealFile f = parseIdealFile("ring 3\nx0^2 + x1*x2");
  ASSERT_EQ(f.ideal.size(), 1u);
  EXPECT_EQ(f.ideal.nvars(), 3);
  EXPECT_EQ(f.ideal.generators()[0].size(), 2u);
}

TEST(Parser, ExpressionsAndComments) {
  const Ring R{3, FieldConfig()};
  const IdealFile f = parseIdealFile("# header comment\n\nring 3  # three variables\n(x0 + x1)^2 - 2*x0*x1  # square\n-(x2)*(-x2)\n");
  ASSERT_EQ(f.ideal.size(), 2u);
  EXPECT_EQ(f.ideal.generators()[0], P(R, "x0^2 + x1^2"));
  EXPECT_EQ(f.ideal.generators()[1], P(R, "x2^2"));
  EXPECT_EQ(parsePolynomial("3 * x0 ^ 2 - 32006*x1^2", R), P(R, "3*x0^2 - 3*x1^2"));
}

TEST(Parser, HeaderPrime) {
  const IdealFile f = parseIdealFile("ring 2 7\n8*x0 + x1");
  EXPECT_EQ(f.headerPrime, 7u);
  EXPECT_EQ(f.ideal.field().prime(), 7u);
  EXPECT_EQ(f.ideal.generators()[0].leadingCoeff(), 1u);
  const IdealFile ignored = parseIdealFile("ring 2 7\nx0 + x1", FieldConfig(11), false);
  EXPECT_EQ(ignored.ideal.field().prime(), 11u);
  EXPECT_EQ(ignored.headerPrime, 7u);
}

TEST(ParserErrors, Inhomogeneous) {
  const ParseError e = parseFailure("ring 3\nx0 + x1^2");
  EXPECT_EQ(e.line(), 2);
  EXPECT_NE(std::string(e.what()).find("not homogeneous"), std::string::npos);
}

TEST(ParserErrors, Locations) {
  EXPECT_EQ(parseFailure("ring 3\nx0*x1\nx0 x1").line(), 3);
  EXPECT_EQ(parseFailure("ring 3\nx0 x1").column(), 4);
  EXPECT_EQ(parseFailure("ring 3\nx0*x5").column(), 4);
  EXPECT_EQ(parseFailure("ring 3\nx0 $ x1").column(), 4);
  EXPECT_EQ(parseFailure("ring 3\nx0*(x1 + x2").line(), 2);
  EXPECT_EQ(parseFailure("ring 3\nx0^99999").line(), 2);
  EXPECT_EQ(parseFailure("ring 3\nx*x1").column(), 1);
}

TEST(ParserErrors, ImplicitMultiplicationIsRejected) {
  EXPECT_THROW(parseIdealFile("ring 3\n2x0"), ParseError);
  EXPECT_THROW(parseIdealFile("ring 3\n(x0)(x1)"), ParseError);
}

TEST(ParserErrors, Header) {
  EXPECT_EQ(parseFailure("x0^2").line(), 1);
  EXPECT_THROW(parseIdealFile("ring 0\n1"), ParseError);
  EXPECT_THROW(parseIdealFile("ring 9\nx0"), ParseError);
  EXPECT_THROW(parseIdealFile("ring 3 8\nx0"), ParseError);
  EXPECT_THROW(parseIdealFile("ring 3 7 1\nx0"), ParseError);
  EXPECT_THROW(parseIdealFile("ring 3\n"), ParseError);
  EXPECT_THROW(parseIdealFile(""), ParseError);
}

TEST(ParserErrors, ZeroPolynomial) {
  EXPECT_EQ(parseFailure("ring 3\nx0\nx1 - x1").line(), 3);
  EXPECT_THROW(parseIdealFile("ring 2 7\n7*x0"), ParseError);
}

TEST(Parser, Monomials) {
  EXPECT_EQ(parseMonomial("x0^2*x1", 3), Monomial({2, 1, 0}));
  EXPECT_EQ(parseMonomial("1", 3), Monomial({0, 0, 0}));
  EXPECT_EQ(parseMonomial("x1*x3", 4, 1), Monomial({1, 0, 1, 0}));
  EXPECT_THROW(parseMonomial("x3", 3), ParseError);
  EXPECT_THROW(parseMonomial("x0x1", 3), ParseError);
}

TEST(ParserProperty, FormatRoundTrips) {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 1000; ++k) {
    const Ring R{1 + static_cast<int>(rng() % 7), FieldConfig(k % 2 ? 32003 : 101)};
    std::vector<Polynomial> gens;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int g = 0; g < count; ++g) {
      Polynomial f = testsupport::randomHomogeneous(rng, R, static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 5));
      if (f.isZero()) f = Polynomial::variable(R, MonomialOrder::grevlex(), 0);
      gens.push_back(std::move(f));
    }
    const Ideal I(R, gens);
    const std::string text = formatIdealFile(I);
    const IdealFile back = parseIdealFile(text);
    ASSERT_EQ(back.ideal.size(), I.size()) << text;
    ASSERT_EQ(back.ideal.field(), R.field);
    for (std::size_t g = 0; g < I.size(); ++g) ASSERT_EQ(back.ideal.generators()[g], I.generators()[g]) << text;
  }
}
