// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (capped at 1).

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "gincomplex/corpus.hpp"
#include "gincomplex/gin.hpp"
#include "gincomplex/pei.hpp"
#include "support.hpp"

using namespace gincomplex;

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string fmt(double seconds) {
  std::ostringstream s;
  s.precision(seconds < 0.01 ? 2 : 3);
  s << (seconds < 0.01 ? seconds * 1000 : seconds) << (seconds < 0.01 ? "ms" : "s");
  return s.str();
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

Ideal build(const CorpusEntry& e) { return e.build(1, FieldConfig()); }

Outcome goldenGins() {
  const std::vector<std::pair<std::string, double>> budgets = {{"scroll", 1},  {"ci22", 1},   {"castelnuovo", 5},
                                                               {"ci23", 30},   {"acm4", 300}, {"ci24", 1800}};
  Outcome out;
  for (const auto& [name, budget] : budgets) {
    const CorpusEntry& e = findEntry(name);
    const auto start = Clock::now();
    VerifyResult r;
    try {
      r = verifyEntry(e);
    } catch (const Error& err) {
      out.fail(name + ": " + err.what());
      continue;
    }
    const double t = secondsSince(start);
    const bool ginOk = r.gin && *r.gin == expectedGinOf(e);
    if (!r.ok || !ginOk || r.M != e.expectedM) out.fail(name + " mismatch");
    if (t > budget) out.fail(name + " over budget " + fmt(t));
    out.note(name + " M=" + (r.M ? std::to_string(*r.M) : "?") + " " + fmt(t) +
             (r.attempts > 1 ? " after " + std::to_string(r.attempts - 1) + " reseed(s)" : ""));
  }
  return out;
}

Outcome tables() {
  const std::vector<long long> alphas = {5, 6, 7, 8, 9, 10, 20, 50, 100};
  const std::vector<long long> ciM = {122, 302, 632, 1178, 2018, 3242, 64982, 2881202, 48024902};
  const std::vector<long long> ciRegularity = {6, 7, 8, 9, 10, 11, 21, 51, 101};
  const std::vector<long long> acmM = {74, 202, 452, 884, 1570, 2594, 58484, 2765954, 47064404};
  const std::vector<long long> acmRegularity = {5, 6, 7, 8, 9, 10, 20, 50, 100};
  Outcome out;
  const auto start = Clock::now();
  const std::vector<ComplexityTable> t = regenerateTables();
  const double elapsed = secondsSince(start);
  int matched = 0;
  if (t.size() != 2 || t[0].rows.size() != 9 || t[1].rows.size() != 9) {
    out.fail("wrong table shape");
    return out;
  }
  for (std::size_t k = 0; k < 9; ++k) {
    matched += t[0].rows[k].alpha == alphas[k] && t[0].rows[k].M == ciM[k];
    matched += t[0].rows[k].m == ciRegularity[k];
    matched += t[1].rows[k].alpha == alphas[k] && t[1].rows[k].M == acmM[k];
    matched += t[1].rows[k].m == acmRegularity[k];
    const Prediction ci = predictCompleteIntersection(alphas[k]);
    const Prediction acm = predictAcm(alphas[k]);
    if (ci.M != ciM[k] || ci.m != ciRegularity[k] || acm.M != acmM[k] || acm.m != acmRegularity[k]) {
      out.fail("predict disagrees at alpha=" + std::to_string(alphas[k]));
    }
  }
  if (matched != 36) out.fail(std::to_string(36 - matched) + " table values differ");
  if (elapsed > 1e-3) out.fail("took " + fmt(elapsed));
  out.note(std::to_string(matched) + "/36 values in " + fmt(elapsed));
  return out;
}

Outcome crossValidation() {
  Outcome out;
  for (const CorpusEntry& e : corpusEntries()) {
    const Ideal I = build(e);
    const int M = degreeComplexity(I, MonomialOrder::glex());
    const int m = degreeComplexity(I, MonomialOrder::grevlex());
    const Prediction p = surfaceComplexityOnQuadric(e.invariants);
    if (Integer(M) != p.M) out.fail(e.name + " M=" + std::to_string(M) + " predicted " + toString(p.M));
    switch (e.family) {
      case Family::CompleteIntersection:
        if (m != e.alpha + 1) out.fail(e.name + " m=" + std::to_string(m));
        break;
      case Family::Acm:
        if (m != e.alpha) out.fail(e.name + " m=" + std::to_string(m));
        break;
      case Family::Scroll:
        out.note(e.name + " m=" + std::to_string(m) + " computed, not paper-verified");
        break;
    }
  }
  if (out.ok) out.note("M and m agree on all " + std::to_string(corpusEntries().size()) + " entries");
  return out;
}

Outcome recombination() {
  Outcome out;
  std::string values;
  for (const CorpusEntry& e : corpusEntries()) {
    const Ideal I = build(e);
    const Recombination r = recombineM(I);
    const int M = degreeComplexity(I, MonomialOrder::glex());
    if (r.M != M) out.fail(e.name + " recombined " + std::to_string(r.M) + " vs " + std::to_string(M));
    values += (values.empty() ? "" : " ") + e.name + "=" + std::to_string(r.M);
  }
  out.note(values);
  return out;
}

Outcome hilbertIdentity() {
  Outcome out;
  for (const char* name : {"scroll", "ci22", "ci23", "castelnuovo"}) {
    const HilbertIdentityResult r = hilbertIdentityCheck(build(findEntry(name)), 6);
    if (!r.holds) out.fail(std::string(name) + " fails at m=" + std::to_string(*r.firstFailure));
  }
  if (out.ok) out.note("scroll, ci22, ci23, castelnuovo for m <= 6");
  return out;
}

Outcome macaulayOracle() {
  Outcome out;
  int compared = 0;
  for (const CorpusEntry& e : corpusEntries()) {
    const Ideal I = build(e);
    const MonomialIdeal g = gin(I, MonomialOrder::glex()).gin;
    for (int m = 0; m <= 8; ++m) {
      ++compared;
      if (hilbertFunctionMacaulay(I, m) != hilbertFunctionMonomial(g, m)) {
        out.fail(e.name + " m=" + std::to_string(m));
      }
    }
  }
  out.note(std::to_string(compared) + " values compared");
  return out;
}

Outcome remark() {
  Outcome out;
  const GroebnerBasis gb = buchberger(remarkCounterexample(), MonomialOrder::glex());
  const auto equal = partialElimination(gb, 1, ExtractionMode::Equal, CoordinateClaim::NonGenericOverride);
  const auto upto = partialElimination(gb, 1, ExtractionMode::UpTo);
  const Ring R3{3, FieldConfig()};
  auto linear = [&](std::initializer_list<const char*> vars) {
    std::vector<Polynomial> gens;
    for (const char* v : vars) gens.push_back(testsupport::P(R3, v));
    return Ideal(R3, gens);
  };
  if (!idealsEqual(equal.ideal, linear({"x0", "x1"}))) out.fail("equal mode is not (x1, x2)");
  if (!idealsEqual(upto.ideal, linear({"x0", "x1", "x2"}))) out.fail("upto mode is not (x1, x2, x3)");
  if (idealsEqual(equal.ideal, upto.ideal)) out.fail("modes agree");
  if (out.ok) out.note("equal (x1, x2), upto (x1, x2, x3)");
  return out;
}

Outcome k1Saturation() {
  Outcome out;
  for (const char* name : {"scroll", "ci22", "ci23"}) {
    if (!k1SaturationCheck(build(findEntry(name)))) out.fail(name);
  }
  if (out.ok) out.note("scroll, ci22, ci23");
  return out;
}

Outcome witnesses() {
  Outcome out;
  const std::vector<std::tuple<std::string, int, int, int>> cases = {
      {"ci23", 6, 6, 6}, {"acm4", 7, 9, 18}, {"ci24", 8, 12, 36}};
  for (const auto& [name, d, degY1, nodes] : cases) {
    if (!witnessCheck(expectedGinOf(findEntry(name)), d, degY1, nodes)) out.fail(name);
  }
  if (out.ok) out.note("ci23, acm4, ci24");
  return out;
}

Outcome properties() {
  Outcome out;
  std::mt19937_64 rng(20240101);
  constexpr int kCases = 1000;

  int borel = 0;
  for (int k = 0; k < kCases; ++k) {
    const Ring R{2 + static_cast<int>(rng() % 3), FieldConfig()};
    std::vector<Polynomial> gens;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int g = 0; g < count; ++g) {
      gens.push_back(testsupport::randomHomogeneous(rng, R, 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3)));
    }
    GinOptions options;
    options.seedBase = rng();
    const MonomialOrder order = k % 2 ? MonomialOrder::glex() : MonomialOrder::grevlex();
    borel += isBorelFixed(gin(Ideal(R, gens), order, options).gin);
  }
  if (borel != kCases) out.fail(std::to_string(kCases - borel) + " non-Borel gins");

  int unique = 0;
  for (int k = 0; k < kCases; ++k) {
    const Ring R{3 + static_cast<int>(k % 4 == 0), FieldConfig()};
    std::vector<Polynomial> gens;
    const int count = 2 + static_cast<int>(rng() % 3);
    for (int g = 0; g < count; ++g) {
      gens.push_back(testsupport::randomHomogeneous(rng, R, 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 4)));
    }
    const MonomialOrder order = k % 2 ? MonomialOrder::glex() : MonomialOrder::grevlex();
    const GroebnerBasis a = buchberger(Ideal(R, gens), order);
    std::shuffle(gens.begin(), gens.end(), rng);
    for (Polynomial& g : gens) g = g.scaled(static_cast<Coeff>(1 + rng() % 1000));
    const GroebnerBasis b = buchberger(Ideal(R, gens), order);
    auto sorted = [](const GroebnerBasis& gb) {
      std::vector<Polynomial> v(gb.elements().begin(), gb.elements().end());
      std::sort(v.begin(), v.end(), [&](const Polynomial& x, const Polynomial& y) {
        return gb.order().greater(x.leadingMonomial(), y.leadingMonomial());
      });
      return v;
    };
    unique += sorted(a) == sorted(b);
  }
  if (unique != kCases) out.fail(std::to_string(kCases - unique) + " bases changed under permutation");

  constexpr int kFieldCases = 10000;
  int axioms = 0;
  for (std::uint32_t p : {7u, 32003u, 2147483647u}) {
    const FieldConfig F(p);
    for (int k = 0; k < kFieldCases; ++k) {
      const FieldElement a(F, static_cast<std::int64_t>(rng() % p));
      const FieldElement b(F, static_cast<std::int64_t>(rng() % p));
      const FieldElement c(F, static_cast<std::int64_t>(rng() % p));
      const bool ok = add(add(a, b), c) == add(a, add(b, c)) && mul(mul(a, b), c) == mul(a, mul(b, c)) &&
                      mul(a, add(b, c)) == add(mul(a, b), mul(a, c)) && add(a, b) == add(b, a) &&
                      mul(a, b) == mul(b, a) && sub(add(a, b), b) == a &&
                      (a.isZero() || mul(a, inverse(a)).value() == 1);
      axioms += ok;
    }
  }
  if (axioms != 3 * kFieldCases) out.fail(std::to_string(3 * kFieldCases - axioms) + " field axiom failures");

  int orders = 0;
  for (int k = 0; k < kCases; ++k) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Monomial a = testsupport::randomMonomial(rng, n, 4);
    const Monomial b = testsupport::randomMonomial(rng, n, 4);
    const Monomial c = testsupport::randomMonomial(rng, n, 4);
    bool ok = true;
    for (MonomialOrder o : {MonomialOrder::glex(), MonomialOrder::grevlex()}) {
      ok &= o.compare3(a, b) == -o.compare3(b, a);
      ok &= (o.compare3(a, b) == 0) == (a == b);
      ok &= o.compare3(a * c, b * c) == o.compare3(a, b);
      ok &= !(o.compare3(a, b) > 0 && o.compare3(b, c) > 0) || o.compare3(a, c) > 0;
      ok &= a.degree() <= b.degree() || o.compare3(a, b) > 0;
    }
    orders += ok;
  }
  if (orders != kCases) out.fail(std::to_string(kCases - orders) + " order axiom failures");

  out.note("gin Borel " + std::to_string(borel) + "/" + std::to_string(kCases) + ", GB uniqueness " +
           std::to_string(unique) + "/" + std::to_string(kCases) + ", field axioms " + std::to_string(axioms) + "/" +
           std::to_string(3 * kFieldCases) + ", order axioms " + std::to_string(orders) + "/" +
           std::to_string(kCases));
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden gins", goldenGins},
      {"complexity tables", tables},
      {"cross-validation of M and m", crossValidation},
      {"recombination identity", recombination},
      {"Hilbert identity", hilbertIdentity},
      {"Macaulay oracle", macaulayOracle},
      {"special-coordinate counterexample", remark},
      {"K1 saturation", k1Saturation},
      {"witness monomials", witnesses},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = Clock::now();
    Outcome r;
    try {
      r = criteria[k].second();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    failed += !r.ok;
    std::cout << (r.ok ? "PASS" : "FAIL") << "  " << (k + 1 < 10 ? " " : "") << k + 1 << "  " << criteria[k].first
              << "  [" << fmt(secondsSince(start)) << "]  " << r.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
