#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gincomplex/error.hpp"

namespace gincomplex {

/// Wide enough for the quartic formulas at alpha around 10^6 and well beyond.
using Integer = __int128;

std::string toString(Integer value);
/// Throws DomainError if the value does not fit in 64 bits.
long long toInt64(Integer value);
bool fitsInt64(Integer value);

/// n(n-1)...(n-k+1)/k!, defined for every integer n.
Integer binomial(Integer n, int k);

struct SurfaceInvariants {
  Integer d = 0;
  Integer gH = 0;  // sectional genus
  Integer pa = 0;  // arithmetic genus
  std::optional<Integer> chi;
};

enum class ExceptionalCase { Scroll, CompleteIntersection22, Castelnuovo };
std::string toString(ExceptionalCase c);

struct Prediction {
  Integer degY1 = 0;
  Integer gY1 = 0;
  Integer nodesY1 = 0;
  std::optional<Integer> triplePoints;
  Integer M = 0;
  std::optional<Integer> m;
  std::optional<ExceptionalCase> exceptional;
  /// max{d, 1 + deg Y1, 2 + nodes}; agrees with M on every surface on a quadric.
  Integer maxFormulaM = 0;
  /// The d >= 6 expression written with d, gH and pa only.
  std::optional<Integer> threeInvariantM;
};

/// C(d-1, 2) - gH. Throws InvalidInvariantsError when negative.
Integer doubleCurveDegree(Integer d, Integer gH);
/// C(d-1, 3) - C(d-1, 2) + gH - pa + 1.
Integer doubleCurveGenus(Integer d, Integer gH, Integer pa);
/// C(d-1, 3) - gH(d - 3) + 2 chi - 2.
Integer triplePoints(Integer d, Integer gH, Integer chi);
/// max{d, 1 + C(d-1, 2) - g} for a smooth space curve; needs d >= 3.
Integer curveComplexity(Integer d, Integer g);

/// Case split on d: 3, 4, 5 give M = d; from 6 on M = 2 + nodes of Y1.
Prediction surfaceComplexityOnQuadric(const SurfaceInvariants& inv);

/// (alpha^4 - 4 alpha^3 + 5 alpha^2 - 2 alpha + 4) / 2 for alpha >= 3.
Integer ciComplexity(Integer alpha);
/// (alpha^4 - 6 alpha^3 + 13 alpha^2 - 12 alpha + 8) / 2 for alpha >= 4.
Integer acmComplexity(Integer alpha);

/// (2, alpha) complete intersection: d = 2 alpha, gH = (alpha-1)^2,
/// pa = alpha(2 alpha^2 - 9 alpha + 13)/6 - 1. Needs alpha >= 2.
SurfaceInvariants ciInvariants(Integer alpha);
/// Degree 2 alpha - 1 on a quadric: gH = 2 C(alpha-1, 2), pa = 2 C(alpha-1, 3). Needs alpha >= 3.
SurfaceInvariants acmInvariants(Integer alpha);

/// Invariant path plus m = alpha + 1; cross-checked against ciComplexity for alpha >= 3.
Prediction predictCompleteIntersection(Integer alpha);
/// Invariant path plus m = alpha; cross-checked against acmComplexity for alpha >= 4.
Prediction predictAcm(Integer alpha);

struct TableRow {
  Integer alpha;
  Integer M;
  Integer m;
};

struct ComplexityTable {
  std::string title;
  std::vector<TableRow> rows;
};

/// Both families at alpha in {5, 6, 7, 8, 9, 10, 20, 50, 100}.
std::vector<ComplexityTable> regenerateTables();

}  // namespace gincomplex
