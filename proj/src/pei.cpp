#include "gincomplex/pei.hpp"

#include <algorithm>

namespace gincomplex {

ExtractionMode parseExtractionMode(const std::string& name) {
  if (name == "equal") return ExtractionMode::Equal;
  if (name == "upto") return ExtractionMode::UpTo;
  throw ConfigError("unknown extraction mode '" + name + "' (expected equal or upto)");
}

std::string toString(ExtractionMode mode) { return mode == ExtractionMode::Equal ? "equal" : "upto"; }

bool PartialEliminationData::isUnit() const {
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Polynomial& g) { return !g.isZero() && g.degree() == 0; });
}

bool PartialEliminationData::isZero() const { return ideal.size() == 0; }

PartialEliminationData partialElimination(const GroebnerBasis& basis, int index, ExtractionMode mode,
                                          CoordinateClaim claim) {
  if (basis.order().kind() != MonomialOrder::Kind::GLex) {
    throw DomainError("partial elimination needs a glex basis, got " + basis.order().name());
  }
  if (!basis.reduced()) throw DomainError("partial elimination needs a reduced basis");
  if (mode == ExtractionMode::Equal && claim == CoordinateClaim::Unverified) {
    throw DomainError("equal mode is only a Groebner basis in generic coordinates; assert them or override");
  }
  if (index < 0) throw DomainError("partial elimination index must be non-negative");
  const int n = basis.ring().nvars;
  if (n < 2) throw DomainError("partial elimination needs at least two variables");
  const Ring quotient{n - 1, basis.ring().field};
  const MonomialOrder glex = MonomialOrder::glex();

  std::vector<Polynomial> generators;
  for (const Polynomial& f : basis.elements()) {
    const int t = f.leadingMonomial()[0];
    if (mode == ExtractionMode::Equal ? t != index : t > index) continue;
    std::vector<Term> terms;
    for (const Term& term : f.terms()) {
      if (term.monomial[0] != t) continue;
      std::vector<int> exps(n - 1);
      for (int v = 1; v < n; ++v) exps[v - 1] = term.monomial[v];
      terms.push_back({term.coeff, Monomial(n - 1, exps)});
    }
    generators.push_back(Polynomial::fromTerms(quotient, glex, std::move(terms)));
  }
  return PartialEliminationData{index, mode, Ideal::makeUnchecked(quotient, std::move(generators))};
}

bool chainHolds(const GroebnerBasis& basis, int maxIndex, ExtractionMode mode, CoordinateClaim claim) {
  for (int i = 0; i < maxIndex; ++i) {
    const PartialEliminationData lower = partialElimination(basis, i, mode, claim);
    const PartialEliminationData upper = partialElimination(basis, i + 1, mode, claim);
    if (!idealSubset(lower.ideal, upper.ideal)) return false;
  }
  return true;
}

bool isArtinian(const PartialEliminationData& k) {
  if (k.isUnit()) return true;
  if (k.isZero()) return k.ideal.nvars() == 0;
  const MonomialIdeal in = initialIdeal(buchberger(k.ideal, MonomialOrder::grevlex()));
  for (int v = 0; v < in.nvars(); ++v) {
    const bool hasPower = std::any_of(in.generators().begin(), in.generators().end(),
                                      [v](const Monomial& g) { return g.degree() == g[v]; });
    if (!hasPower) return false;
  }
  return true;
}

GenericBasis genericGlexBasis(const Ideal& ideal, std::uint64_t seed) {
  const MonomialIdeal reference = initialIdeal(buchberger(ideal, MonomialOrder::grevlex()));
  Ideal moved = applyLinearChange(ideal, randomChange(seed, ideal.nvars(), ideal.field()));
  GroebnerOptions options;
  options.hilbertReference = &reference;
  GroebnerBasis basis = buchberger(moved, MonomialOrder::glex(), options);
  return GenericBasis{std::move(moved), std::move(basis), seed};
}

Recombination recombineM(const Ideal& ideal, const GinOptions& options) {
  const GenericBasis generic = genericGlexBasis(ideal, options.seedBase);
  Recombination out;
  out.seed = generic.seed;
  out.beta = generic.basis.minDegree();
  for (int i = 0; i <= out.beta; ++i) {
    PartialEliminationData k = partialElimination(generic.basis, i, ExtractionMode::Equal, CoordinateClaim::Generic);
    if (k.isZero()) continue;
    // A grevlex basis is a low-degree generating set; the raw glex elements
    // can be of very high degree.
    Ideal compact = buchberger(k.ideal, MonomialOrder::grevlex()).toIdeal();
    std::optional<MonomialIdeal> partGin;
    int complexity = 0;
    if (!k.isUnit()) {
      GinOptions partOptions = options;
      partOptions.seedBase = options.seedBase + 100 * static_cast<std::uint64_t>(i + 1);
      GinResult r = gin(compact, MonomialOrder::glex(), partOptions);
      complexity = degreeComplexity(r);
      partGin = std::move(r.gin);
    }
    out.M = std::max(out.M, complexity + i);
    out.parts.push_back(PartSummary{i, std::move(k), std::move(compact), std::move(partGin), complexity});
  }
  return out;
}

HilbertIdentityResult hilbertIdentityCheck(const Ideal& ideal, int mMax, std::uint64_t seed) {
  const GenericBasis generic = genericGlexBasis(ideal, seed);
  const int beta = generic.basis.minDegree();
  std::vector<PartialEliminationData> parts;
  for (int i = 0; i <= beta; ++i) {
    parts.push_back(partialElimination(generic.basis, i, ExtractionMode::Equal, CoordinateClaim::Generic));
  }
  HilbertIdentityResult out;
  for (int m = 0; m <= mMax; ++m) {
    const std::uint64_t left = hilbertFunctionMacaulay(ideal, m);
    std::uint64_t right = 0;
    // Every K_i with i >= beta is the unit ideal and contributes nothing.
    for (const PartialEliminationData& k : parts) {
      if (k.isZero()) {
        right += monomialCount(k.ideal.nvars(), m - k.index);
      } else {
        right += hilbertFunctionMacaulay(k.ideal, m - k.index);
      }
    }
    out.lhs.push_back(left);
    out.rhs.push_back(right);
    if (left != right && out.holds) {
      out.holds = false;
      out.firstFailure = m;
    }
  }
  return out;
}

bool k1SaturationCheck(const Ideal& ideal, std::uint64_t seed) {
  const GenericBasis generic = genericGlexBasis(ideal, seed);
  const PartialEliminationData k1 =
      partialElimination(generic.basis, 1, ExtractionMode::Equal, CoordinateClaim::Generic);
  if (k1.isZero() || k1.isUnit()) return true;
  const Ideal compact = buchberger(k1.ideal, MonomialOrder::grevlex()).toIdeal();
  return idealsEqual(saturateByIrrelevant(compact), compact);
}

}  // namespace gincomplex
