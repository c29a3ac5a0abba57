#include "gincomplex/gin.hpp"

#include <random>

namespace gincomplex {

CoordinateChange randomChange(std::uint64_t seed, int nvars, const FieldConfig& field) {
  std::mt19937_64 rng(seed);
  const std::size_t count = static_cast<std::size_t>(nvars) * nvars;
  while (true) {
    std::vector<Coeff> entries(count);
    for (Coeff& e : entries) e = static_cast<Coeff>(rng() % field.prime());
    if (!invertMatrix(field, nvars, entries).empty()) return CoordinateChange(field, nvars, std::move(entries), seed);
  }
}

GinResult gin(const Ideal& ideal, MonomialOrder order, const GinOptions& options) {
  if (options.minAgree < 1) throw ConfigError("minAgree must be at least 1");
  if (options.trialBudget < options.minAgree) throw ConfigError("trial budget is smaller than minAgree");
  if (!ideal.isHomogeneous()) throw DomainError("gin needs a homogeneous ideal");

  // The Hilbert function is invariant under coordinate changes, so one
  // grevlex run in the given coordinates serves every glex trial.
  std::optional<MonomialIdeal> reference;
  if (options.hilbertDriven && order.kind() == MonomialOrder::Kind::GLex) {
    reference = initialIdeal(buchberger(ideal, MonomialOrder::grevlex()));
  }

  std::vector<MonomialIdeal> results;
  std::vector<std::uint64_t> seeds;
  int run = 0;
  for (int k = 0; k < options.trialBudget; ++k) {
    const std::uint64_t seed = options.seedBase + static_cast<std::uint64_t>(k);
    const CoordinateChange g = randomChange(seed, ideal.nvars(), ideal.field());
    GroebnerOptions gbOptions;
    if (reference) gbOptions.hilbertReference = &*reference;
    MonomialIdeal in = initialIdeal(buchberger(applyLinearChange(ideal, g), order, gbOptions));
    run = (!results.empty() && results.back() == in) ? run + 1 : 1;
    results.push_back(std::move(in));
    seeds.push_back(seed);
    if (run >= options.minAgree) {
      GinResult out{results.back(), order, run, seeds, false};
      out.borel = isBorelFixed(out.gin);
      return out;
    }
  }
  throw UnstableGinError("no " + std::to_string(options.minAgree) + " consecutive trials agreed within " +
                             std::to_string(options.trialBudget) + " trials",
                         std::move(results), std::move(seeds));
}

int degreeComplexity(const GinResult& result) {
  if (!result.borel) {
    throw NonBorelGinError("the " + result.order.name() +
                           " gin is not Borel-fixed; rerun with another prime or seed");
  }
  return borelRegularity(result.gin);
}

int degreeComplexity(const Ideal& ideal, MonomialOrder order, const GinOptions& options) {
  return degreeComplexity(gin(ideal, order, options));
}

bool witnessCheck(const MonomialIdeal& gin, int d, int degY1, int nodesY1) {
  const int n = gin.nvars();
  if (n < 4) return false;
  auto mono = [n](std::initializer_list<std::pair<int, int>> factors) {
    std::vector<int> e(n, 0);
    for (auto [var, exp] : factors) e[var] += exp;
    return Monomial(n, e);
  };
  const Monomial first = mono({{1, d}});
  const Monomial second = mono({{0, 1}, {2, degY1}});
  const Monomial third = mono({{0, 1}, {1, 1}, {3, nodesY1}});
  if (!gin.contains(first) || !gin.contains(second) || !gin.contains(third)) return false;
  if (gin.maxGeneratorDegree() == 2 + nodesY1 && !gin.isMinimalGenerator(third)) return false;
  return true;
}

}  // namespace gincomplex
