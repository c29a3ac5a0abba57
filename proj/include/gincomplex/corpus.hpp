#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gincomplex/geometry.hpp"
#include "gincomplex/gin.hpp"

namespace gincomplex {

/// (x0x3 - x1x2, x0x1 - x3x4, x0^2 - x2x4) in five variables.
Ideal scroll(const FieldConfig& field = FieldConfig());

/// (Q, F) with Q a dense random quadric and F a dense random form of degree
/// alpha; coefficients uniform in [1, p).
Ideal completeIntersection(int alpha, std::uint64_t seed, const FieldConfig& field = FieldConfig());

/// (L1L4 - L2L3, L1F5 - L2F6, L3F5 - L4F6): 2x2 minors of a matrix with random
/// linear forms L1..L4 and random forms F5, F6 of degree alpha - 1.
Ideal acmSurface(int alpha, std::uint64_t seed, const FieldConfig& field = FieldConfig());

/// (x0^2, x0x1, x0x2, x3): special coordinates, equal-mode extraction fails here.
Ideal remarkCounterexample(const FieldConfig& field = FieldConfig());

enum class Family { Scroll, CompleteIntersection, Acm };

struct CorpusEntry {
  std::string name;
  std::string description;
  Family family;
  int alpha;  // 0 for the scroll
  std::function<Ideal(std::uint64_t seed, const FieldConfig&)> build;
  std::vector<std::string> expectedGin;
  int expectedM;
  std::optional<int> expectedRegularity;  // unset when only computed
  SurfaceInvariants invariants;
  bool extended;
  int maxReseeds;
};

const std::vector<CorpusEntry>& corpusEntries();
/// Throws ConfigError for an unknown name.
const CorpusEntry& findEntry(const std::string& name);

MonomialIdeal expectedGinOf(const CorpusEntry& entry);

struct VerifyOptions {
  FieldConfig field{};
  std::uint64_t seed = 1;
  GinOptions gin{};
};

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

struct VerifyResult {
  std::string entry;
  bool ok = false;
  int attempts = 0;
  std::uint64_t seed = 0;
  std::optional<MonomialIdeal> gin;
  std::optional<int> M;
  std::optional<int> m;
  std::vector<Check> checks;
  double seconds = 0;
};

/// Golden gin, M against the prediction, m against the stated regularity.
/// A mismatch is retried with the next seed up to entry.maxReseeds times.
VerifyResult verifyEntry(const CorpusEntry& entry, const VerifyOptions& options = {});

}  // namespace gincomplex
