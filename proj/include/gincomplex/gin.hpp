#pragma once

#include <cstdint>
#include <vector>

#include "gincomplex/groebner.hpp"

namespace gincomplex {

/// Seeded uniform matrix over F_p of size nvars x nvars, redrawn until invertible.
CoordinateChange randomChange(std::uint64_t seed, int nvars, const FieldConfig& field);

struct GinOptions {
  std::uint64_t seedBase = 1;
  int minAgree = 2;
  int trialBudget = 6;
  /// Use the grevlex initial ideal of the input as a Hilbert reference for the glex runs.
  bool hilbertDriven = true;
};

struct GinResult {
  MonomialIdeal gin;
  MonomialOrder order;
  int trialsAgreed = 0;
  std::vector<std::uint64_t> seeds;
  bool borel = false;
};

/// Trials disagreed until the budget ran out. Carries every trial's result.
class UnstableGinError : public Error {
 public:
  UnstableGinError(std::string message, std::vector<MonomialIdeal> results, std::vector<std::uint64_t> seeds)
      : Error(std::move(message)), results_(std::move(results)), seeds_(std::move(seeds)) {}
  const std::vector<MonomialIdeal>& results() const { return results_; }
  const std::vector<std::uint64_t>& seeds() const { return seeds_; }

 private:
  std::vector<MonomialIdeal> results_;
  std::vector<std::uint64_t> seeds_;
};

class NonBorelGinError : public Error {
 public:
  using Error::Error;
};

/// In(g_k(I)) for seeds seedBase, seedBase+1, ... until minAgree consecutive
/// trials agree. Throws UnstableGinError when the budget is exhausted.
GinResult gin(const Ideal& ideal, MonomialOrder order, const GinOptions& options = {});

/// Regularity of a stabilized gin: M(I) for glex, m(I) for grevlex.
/// Throws NonBorelGinError if the gin is not Borel-fixed.
int degreeComplexity(const GinResult& result);
int degreeComplexity(const Ideal& ideal, MonomialOrder order, const GinOptions& options = {});

/// x1^d, x0*x2^degY1 and x0*x1*x3^nodes all lie in the gin; when the gin's
/// regularity is 2 + nodes the last one must be a minimal generator.
bool witnessCheck(const MonomialIdeal& gin, int d, int degY1, int nodesY1);

}  // namespace gincomplex
