#include "gincomplex/geometry.hpp"

#include <algorithm>
#include <limits>

#include "gincomplex/error.hpp"

namespace gincomplex {

std::string toString(Integer value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work with negative digits so the minimum value is safe.
  std::string digits;
  while (value != 0) {
    const int r = static_cast<int>(value % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -r : r)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool fitsInt64(Integer value) {
  return value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max();
}

long long toInt64(Integer value) {
  if (!fitsInt64(value)) throw DomainError(toString(value) + " does not fit in 64 bits");
  return static_cast<long long>(value);
}

Integer binomial(Integer n, int k) {
  if (k < 0) return 0;
  Integer result = 1;
  for (int j = 0; j < k; ++j) result = result * (n - j) / (j + 1);
  return result;
}

std::string toString(ExceptionalCase c) {
  switch (c) {
    case ExceptionalCase::Scroll:
      return "scroll";
    case ExceptionalCase::CompleteIntersection22:
      return "ci22";
    case ExceptionalCase::Castelnuovo:
      return "castelnuovo5";
  }
  return "?";
}

Integer doubleCurveDegree(Integer d, Integer gH) {
  const Integer deg = binomial(d - 1, 2) - gH;
  if (deg < 0) {
    throw InvalidInvariantsError("sectional genus " + toString(gH) + " exceeds C(d-1,2) for d = " + toString(d));
  }
  return deg;
}

Integer doubleCurveGenus(Integer d, Integer gH, Integer pa) {
  return binomial(d - 1, 3) - binomial(d - 1, 2) + gH - pa + 1;
}

Integer triplePoints(Integer d, Integer gH, Integer chi) { return binomial(d - 1, 3) - gH * (d - 3) + 2 * chi - 2; }

Integer curveComplexity(Integer d, Integer g) {
  if (d < 3) throw DomainError("curve complexity needs degree at least 3");
  return std::max(d, 1 + binomial(d - 1, 2) - g);
}

Prediction surfaceComplexityOnQuadric(const SurfaceInvariants& inv) {
  if (inv.d < 3) throw DomainError("surface degree must be at least 3");
  Prediction p;
  p.degY1 = doubleCurveDegree(inv.d, inv.gH);
  p.gY1 = doubleCurveGenus(inv.d, inv.gH, inv.pa);
  p.nodesY1 = binomial(p.degY1 - 1, 2) - p.gY1;
  if (p.nodesY1 < 0) {
    throw InvalidInvariantsError("double curve of degree " + toString(p.degY1) + " cannot have genus " +
                                 toString(p.gY1));
  }
  if (inv.chi) p.triplePoints = triplePoints(inv.d, inv.gH, *inv.chi);
  p.maxFormulaM = std::max({inv.d, 1 + p.degY1, 2 + p.nodesY1});
  if (inv.d == 3) {
    p.exceptional = ExceptionalCase::Scroll;
    p.M = 3;
  } else if (inv.d == 4) {
    p.exceptional = ExceptionalCase::CompleteIntersection22;
    p.M = 4;
  } else if (inv.d == 5) {
    p.exceptional = ExceptionalCase::Castelnuovo;
    p.M = 5;
  } else {
    p.M = 2 + p.nodesY1;
    const Integer c2 = binomial(inv.d - 1, 2);
    p.threeInvariantM = binomial(c2 - inv.gH - 1, 2) - binomial(inv.d - 1, 3) + c2 - inv.gH + inv.pa + 1;
    if (*p.threeInvariantM != p.M) throw Error("three-invariant expression disagrees with the case table");
  }
  return p;
}

Integer ciComplexity(Integer alpha) {
  if (alpha < 3) throw DomainError("alpha < 3 is an exceptional case; use surfaceComplexityOnQuadric");
  const Integer a2 = alpha * alpha;
  return (a2 * a2 - 4 * a2 * alpha + 5 * a2 - 2 * alpha + 4) / 2;
}

Integer acmComplexity(Integer alpha) {
  if (alpha < 4) throw DomainError("alpha < 4 is an exceptional case; use surfaceComplexityOnQuadric");
  const Integer a2 = alpha * alpha;
  return (a2 * a2 - 6 * a2 * alpha + 13 * a2 - 12 * alpha + 8) / 2;
}

SurfaceInvariants ciInvariants(Integer alpha) {
  if (alpha < 2) throw DomainError("complete intersections of type (2, alpha) need alpha >= 2");
  return SurfaceInvariants{2 * alpha, (alpha - 1) * (alpha - 1),
                           alpha * (2 * alpha * alpha - 9 * alpha + 13) / 6 - 1, std::nullopt};
}

SurfaceInvariants acmInvariants(Integer alpha) {
  if (alpha < 3) throw DomainError("the degree 2 alpha - 1 family needs alpha >= 3");
  return SurfaceInvariants{2 * alpha - 1, 2 * binomial(alpha - 1, 2), 2 * binomial(alpha - 1, 3), std::nullopt};
}

Prediction predictCompleteIntersection(Integer alpha) {
  Prediction p = surfaceComplexityOnQuadric(ciInvariants(alpha));
  if (alpha >= 3 && ciComplexity(alpha) != p.M) throw Error("closed form disagrees with the invariant path");
  p.m = alpha + 1;
  return p;
}

Prediction predictAcm(Integer alpha) {
  Prediction p = surfaceComplexityOnQuadric(acmInvariants(alpha));
  if (alpha >= 4 && acmComplexity(alpha) != p.M) throw Error("closed form disagrees with the invariant path");
  p.m = alpha;
  return p;
}

std::vector<ComplexityTable> regenerateTables() {
  static constexpr int kAlphas[] = {5, 6, 7, 8, 9, 10, 20, 50, 100};
  ComplexityTable ci{"complete intersection of type (2, alpha)", {}};
  ComplexityTable acm{"degree 2 alpha - 1 on a quadric", {}};
  for (int a : kAlphas) {
    ci.rows.push_back({a, ciComplexity(a), a + 1});
    acm.rows.push_back({a, acmComplexity(a), a});
  }
  return {ci, acm};
}

}  // namespace gincomplex
