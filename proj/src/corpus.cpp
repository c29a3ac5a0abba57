#include "gincomplex/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "gincomplex/parser.hpp"

namespace gincomplex {

namespace {

constexpr int kSurfaceVars = 5;

Polynomial randomForm(const Ring& ring, int degree, std::mt19937_64& rng) {
  std::vector<Term> terms;
  const std::uint64_t p = ring.field.prime();
  for (const Monomial& m : monomialsOfDegree(ring.nvars, degree)) {
    terms.push_back({static_cast<Coeff>(1 + rng() % (p - 1)), m});
  }
  return Polynomial::fromTerms(ring, MonomialOrder::grevlex(), std::move(terms));
}

Polynomial parseIn(const Ring& ring, const char* text) { return parsePolynomial(text, ring); }

}  // namespace

Ideal scroll(const FieldConfig& field) {
  const Ring ring{kSurfaceVars, field};
  return Ideal(ring, {parseIn(ring, "x0*x3 - x1*x2"), parseIn(ring, "x0*x1 - x3*x4"), parseIn(ring, "x0^2 - x2*x4")});
}

Ideal completeIntersection(int alpha, std::uint64_t seed, const FieldConfig& field) {
  if (alpha < 2) throw DomainError("complete intersections of type (2, alpha) need alpha >= 2");
  const Ring ring{kSurfaceVars, field};
  std::mt19937_64 rng(seed);
  Polynomial q = randomForm(ring, 2, rng);
  Polynomial f = randomForm(ring, alpha, rng);
  return Ideal(ring, {std::move(q), std::move(f)});
}

Ideal acmSurface(int alpha, std::uint64_t seed, const FieldConfig& field) {
  if (alpha < 3) throw DomainError("the degree 2 alpha - 1 family needs alpha >= 3");
  const Ring ring{kSurfaceVars, field};
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> l;
  for (int k = 0; k < 4; ++k) l.push_back(randomForm(ring, 1, rng));
  const Polynomial f5 = randomForm(ring, alpha - 1, rng);
  const Polynomial f6 = randomForm(ring, alpha - 1, rng);
  return Ideal(ring, {l[0] * l[3] - l[1] * l[2], l[0] * f5 - l[1] * f6, l[2] * f5 - l[3] * f6});
}

Ideal remarkCounterexample(const FieldConfig& field) {
  const Ring ring{4, field};
  return Ideal(ring, {parseIn(ring, "x0^2"), parseIn(ring, "x0*x1"), parseIn(ring, "x0*x2"), parseIn(ring, "x3")});
}

const std::vector<CorpusEntry>& corpusEntries() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    out.push_back({"scroll", "rational normal scroll of degree 3", Family::Scroll, 0,
                   [](std::uint64_t, const FieldConfig& f) { return scroll(f); },
                   {"x0^2", "x0*x1", "x0*x2", "x1^3"}, 3, std::nullopt, SurfaceInvariants{3, 0, 0, std::nullopt},
                   false, 3});
    out.push_back({"ci22", "complete intersection of two quadrics", Family::CompleteIntersection, 2,
                   [](std::uint64_t s, const FieldConfig& f) { return completeIntersection(2, s, f); },
                   {"x0^2", "x0*x1", "x1^4", "x0*x2^2"}, 4, 3, ciInvariants(2), false, 3});
    // Degree 5 surfaces on a quadric are the alpha = 3 member of the
    // determinantal family.
    out.push_back({"castelnuovo", "Castelnuovo surface of degree 5", Family::Acm, 3,
                   [](std::uint64_t s, const FieldConfig& f) { return acmSurface(3, s, f); },
                   {"x0^2", "x0*x1^2", "x1^5", "x0*x1*x2", "x0*x2^4", "x0*x1*x3^2"}, 5, 3, acmInvariants(3), false,
                   3});
    out.push_back({"ci23", "complete intersection of a quadric and a cubic", Family::CompleteIntersection, 3,
                   [](std::uint64_t s, const FieldConfig& f) { return completeIntersection(3, s, f); },
                   {"x0^2", "x0*x1^2", "x1^6", "x0*x1*x2^2", "x0*x2^6", "x0*x1*x2*x3^2", "x0*x1*x3^6",
                    "x0*x1*x2*x3*x4^2", "x0*x1*x2*x4^4"},
                   8, 4, ciInvariants(3), false, 3});
    out.push_back({"acm4", "degree 7 surface on a quadric", Family::Acm, 4,
                   [](std::uint64_t s, const FieldConfig& f) { return acmSurface(4, s, f); },
                   {"x0^2",
                    "x0*x1^3",
                    "x1^7",
                    "x0*x1^2*x2",
                    "x0*x1*x2^4",
                    "x0*x2^9",
                    "x0*x1^2*x3^2",
                    "x0*x1*x2^3*x3^2",
                    "x0*x1*x2^2*x3^5",
                    "x0*x1*x2*x3^8",
                    "x0*x1*x3^18",
                    "x0*x1*x2^2*x3^4*x4",
                    "x0*x1^2*x3*x4^2",
                    "x0*x1*x2^3*x3*x4^2",
                    "x0*x1*x2^2*x3^3*x4^2",
                    "x0*x1*x2*x3^7*x4^2",
                    "x0*x1*x2^3*x4^3",
                    "x0*x1^2*x4^4",
                    "x0*x1*x2^2*x3^2*x4^4",
                    "x0*x1*x2*x3^6*x4^4",
                    "x0*x1*x2^2*x3*x4^5",
                    "x0*x1*x2*x3^5*x4^6",
                    "x0*x1*x2^2*x4^7",
                    "x0*x1*x2*x3^4*x4^8",
                    "x0*x1*x2*x3^3*x4^10",
                    "x0*x1*x2*x3^2*x4^12",
                    "x0*x1*x2*x3*x4^14",
                    "x0*x1*x2*x4^16"},
                   20, 4, acmInvariants(4), false, 3});
    out.push_back({"ci24", "complete intersection of a quadric and a quartic", Family::CompleteIntersection, 4,
                   [](std::uint64_t s, const FieldConfig& f) { return completeIntersection(4, s, f); },
                   {"x0^2",
                    "x0*x1^3",
                    "x1^8",
                    "x0*x1^2*x2^2",
                    "x0*x1*x2^6",
                    "x0*x2^12",
                    "x0*x1^2*x2*x3^2",
                    "x0*x1*x2^5*x3^2",
                    "x0*x1^2*x3^5",
                    "x0*x1*x2^4*x3^5",
                    "x0*x1*x2^3*x3^7",
                    "x0*x1*x2^2*x3^11",
                    "x0*x1*x2*x3^17",
                    "x0*x1*x3^36",
                    "x0*x1^2*x3^4*x4",
                    "x0*x1*x2^4*x3^4*x4",
                    "x0*x1*x2^3*x3^6*x4",
                    "x0*x1*x2^2*x3^10*x4",
                    "x0*x1^2*x2*x3*x4^2",
                    "x0*x1*x2^5*x3*x4^2",
                    "x0*x1^2*x3^3*x4^2",
                    "x0*x1*x2^4*x3^3*x4^2",
                    "x0*x1*x2^2*x3^9*x4^2",
                    "x0*x1*x2*x3^16*x4^2",
                    "x0*x1^2*x2*x4^3",
                    "x0*x1*x2^5*x4^3",
                    "x0*x1*x2^4*x3^2*x4^3",
                    "x0*x1*x2^3*x3^5*x4^3",
                    "x0*x1^2*x3^2*x4^4",
                    "x0*x1*x2^3*x3^4*x4^4",
                    "x0*x1*x2^2*x3^8*x4^4",
                    "x0*x1*x2*x3^15*x4^4",
                    "x0*x1^2*x3*x4^5",
                    "x0*x1*x2^4*x3*x4^5",
                    "x0*x1*x2^3*x3^3*x4^5",
                    "x0*x1*x2^2*x3^7*x4^5",
                    "x0*x1*x2^4*x4^6",
                    "x0*x1*x2*x3^14*x4^6",
                    "x0*x1^2*x4^7",
                    "x0*x1*x2^3*x3^2*x4^7",
                    "x0*x1*x2^2*x3^6*x4^7",
                    "x0*x1*x2^3*x3*x4^8",
                    "x0*x1*x2^2*x3^5*x4^8",
                    "x0*x1*x2*x3^13*x4^8",
                    "x0*x1*x2^3*x4^9",
                    "x0*x1*x2^2*x3^4*x4^10",
                    "x0*x1*x2*x3^12*x4^10",
                    "x0*x1*x2^2*x3^3*x4^11",
                    "x0*x1*x2*x3^11*x4^12",
                    "x0*x1*x2^2*x3^2*x4^13",
                    "x0*x1*x2^2*x3*x4^14",
                    "x0*x1*x2*x3^10*x4^14",
                    "x0*x1*x2^2*x4^16",
                    "x0*x1*x2*x3^9*x4^16",
                    "x0*x1*x2*x3^8*x4^18",
                    "x0*x1*x2*x3^7*x4^20",
                    "x0*x1*x2*x3^6*x4^22",
                    "x0*x1*x2*x3^5*x4^24",
                    "x0*x1*x2*x3^4*x4^26",
                    "x0*x1*x2*x3^3*x4^28",
                    "x0*x1*x2*x3^2*x4^30",
                    "x0*x1*x2*x3*x4^32",
                    "x0*x1*x2*x4^34"},
                   38, 5, ciInvariants(4), true, 1});
    return out;
  }();
  return entries;
}

const CorpusEntry& findEntry(const std::string& name) {
  for (const CorpusEntry& e : corpusEntries()) {
    if (e.name == name) return e;
  }
  std::string known;
  for (const CorpusEntry& e : corpusEntries()) known += (known.empty() ? "" : ", ") + e.name;
  throw ConfigError("unknown corpus entry '" + name + "' (known: " + known + ")");
}

MonomialIdeal expectedGinOf(const CorpusEntry& entry) {
  std::vector<Monomial> gens;
  for (const std::string& s : entry.expectedGin) gens.push_back(parseMonomial(s, kSurfaceVars));
  return MonomialIdeal(kSurfaceVars, std::move(gens));
}

namespace {

std::string listMonomials(const MonomialIdeal& ideal) {
  std::string out;
  for (const Monomial& m : ideal.generators()) out += (out.empty() ? "" : ", ") + m.toString();
  return "(" + out + ")";
}

}  // namespace

VerifyResult verifyEntry(const CorpusEntry& entry, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const MonomialIdeal golden = expectedGinOf(entry);
  const Prediction prediction = surfaceComplexityOnQuadric(entry.invariants);
  VerifyResult result;
  result.entry = entry.name;
  for (int attempt = 0; attempt <= entry.maxReseeds; ++attempt) {
    result = VerifyResult{};
    result.entry = entry.name;
    result.attempts = attempt + 1;
    result.seed = options.seed + static_cast<std::uint64_t>(attempt);
    GinOptions ginOptions = options.gin;
    ginOptions.seedBase = options.gin.seedBase + static_cast<std::uint64_t>(attempt);
    const Ideal ideal = entry.build(result.seed, options.field);
    try {
      const GinResult glex = gin(ideal, MonomialOrder::glex(), ginOptions);
      const GinResult grevlex = gin(ideal, MonomialOrder::grevlex(), ginOptions);
      result.gin = glex.gin;
      result.checks.push_back({"gin", glex.gin == golden,
                               glex.gin == golden ? std::to_string(golden.size()) + " generators"
                                                  : "got " + listMonomials(glex.gin)});
      result.checks.push_back({"borel", glex.borel && grevlex.borel, ""});
      if (glex.borel) {
        result.M = borelRegularity(glex.gin);
        const bool okM = *result.M == entry.expectedM && Integer(*result.M) == prediction.M;
        result.checks.push_back({"M", okM, "computed " + std::to_string(*result.M) + ", predicted " +
                                               toString(prediction.M)});
      }
      if (grevlex.borel) {
        result.m = borelRegularity(grevlex.gin);
        if (entry.expectedRegularity) {
          const bool okm = *result.m == *entry.expectedRegularity;
          result.checks.push_back({"m", okm, "computed " + std::to_string(*result.m) + ", expected " +
                                                 std::to_string(*entry.expectedRegularity)});
        } else {
          result.checks.push_back({"m", true, "computed " + std::to_string(*result.m) + " (computed, not paper-verified)"});
        }
      }
    } catch (const UnstableGinError& e) {
      if (attempt == entry.maxReseeds) throw;
      result.checks.push_back({"stable", false, e.what()});
    }
    result.ok = std::all_of(result.checks.begin(), result.checks.end(), [](const Check& c) { return c.ok; });
    if (result.ok) break;
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace gincomplex
