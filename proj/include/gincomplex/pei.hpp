#pragma once

#include <optional>
#include <vector>

#include "gincomplex/gin.hpp"

namespace gincomplex {

enum class ExtractionMode {
  Equal,  // d0(f) == i; a Groebner basis of K_i only in generic coordinates
  UpTo,   // d0(f) <= i; valid in any coordinates
};

/// What the caller vouches for about the coordinates of the basis.
enum class CoordinateClaim {
  Unverified,
  Generic,
  NonGenericOverride,  // equal mode on purpose in special coordinates
};

ExtractionMode parseExtractionMode(const std::string& name);
std::string toString(ExtractionMode mode);

/// K_i(I) in the ring without x0. Variables are re-indexed from 0; print them
/// with firstIndex = 1 to keep the x1..xn labels.
struct PartialEliminationData {
  int index = 0;
  ExtractionMode mode = ExtractionMode::UpTo;
  Ideal ideal;

  bool isUnit() const;
  bool isZero() const;
};

/// For f = x0^t * fbar + (terms of lower x0-degree) in the glex basis, emits
/// fbar for d0(f) == i (Equal) or d0(f) <= i (UpTo). Throws DomainError on a
/// non-glex or non-reduced basis, and on Equal mode with an unverified claim.
/// Equal mode is a basis of K_i only for i up to the largest x0-power among
/// the leading monomials; past it no element qualifies and the result is zero.
PartialEliminationData partialElimination(const GroebnerBasis& basis, int index, ExtractionMode mode,
                                          CoordinateClaim claim = CoordinateClaim::Unverified);

/// K_i contained in K_{i+1} for every 0 <= i < maxIndex.
bool chainHolds(const GroebnerBasis& basis, int maxIndex, ExtractionMode mode, CoordinateClaim claim);

/// Every variable has a pure power among the leading monomials of K_i.
bool isArtinian(const PartialEliminationData& k);

/// The input after a seeded random change, with its reduced glex basis.
struct GenericBasis {
  Ideal ideal;
  GroebnerBasis basis;
  std::uint64_t seed;
};

GenericBasis genericGlexBasis(const Ideal& ideal, std::uint64_t seed);

struct PartSummary {
  int index;
  PartialEliminationData data;
  Ideal compact;  // reduced grevlex basis of K_i, a low-degree generating set
  std::optional<MonomialIdeal> gin;  // empty for the unit ideal
  int complexity;
};

struct Recombination {
  int M = 0;
  int beta = 0;
  std::uint64_t seed = 0;
  std::vector<PartSummary> parts;
};

/// M(I) = max over 0 <= i <= beta of M(K_i) + i, with the K_i taken in
/// generic coordinates. Seeds for the per-part gins are derived from
/// options.seedBase.
Recombination recombineM(const Ideal& ideal, const GinOptions& options = {});

struct HilbertIdentityResult {
  bool holds = true;
  std::optional<int> firstFailure;
  std::vector<std::uint64_t> lhs;
  std::vector<std::uint64_t> rhs;
};

/// H(R/I, m) = sum_i H(R'/K_i, m - i) for 0 <= m <= mMax, both sides by
/// Macaulay-matrix rank.
HilbertIdentityResult hilbertIdentityCheck(const Ideal& ideal, int mMax, std::uint64_t seed = 1);

/// K_1 in generic coordinates equals its saturation.
bool k1SaturationCheck(const Ideal& ideal, std::uint64_t seed = 1);

}  // namespace gincomplex
