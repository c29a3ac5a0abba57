#include "gincomplex/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gincomplex/corpus.hpp"
#include "gincomplex/geometry.hpp"
#include "gincomplex/parser.hpp"
#include "gincomplex/pei.hpp"

namespace gincomplex {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kComputedOnly = "computed, not paper-verified";

struct RunConfig {
  std::uint32_t prime = FieldConfig::kDefaultPrime;
  std::uint64_t seed = 1;
  int agree = 2;
  int budget = 6;
  std::string format = "text";
  int mMax = 6;

  FieldConfig field() const { return FieldConfig(prime); }
  GinOptions ginOptions() const {
    GinOptions o;
    o.seedBase = seed;
    o.minAgree = agree;
    o.trialBudget = budget;
    return o;
  }
  bool json() const { return format == "json"; }
};

Json integerJson(Integer v) { return fitsInt64(v) ? Json(toInt64(v)) : Json(toString(v)); }

// Lowest degree first, descending in the order within a degree.
Json monomialList(const MonomialIdeal& ideal, MonomialOrder order) {
  std::vector<Monomial> gens = ideal.sortedBy(order);
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  Json out = Json::array();
  for (const Monomial& m : gens) out.push_back(m.toString());
  return out;
}

Json polynomialList(std::span<const Polynomial> polys, int firstIndex) {
  Json out = Json::array();
  for (const Polynomial& f : polys) out.push_back(f.toString(firstIndex));
  return out;
}

std::string joined(const Json& list) {
  std::string out;
  for (const auto& item : list) out += (out.empty() ? "" : ", ") + item.get<std::string>();
  return out;
}

std::string readInput(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

// A prime in the ring header overrides the configured one.
Ideal loadIdeal(const std::string& path, const RunConfig& config) {
  return parseIdealFile(readInput(path), config.field()).ideal;
}

long long parseBounded(const std::string& text, long long lo, long long hi, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ConfigError(what + " must be an integer, got '" + text + "'");
  }
  if (used != text.size()) throw ConfigError(what + " must be an integer, got '" + text + "'");
  if (v < lo || v > hi) {
    throw ConfigError(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

constexpr long long kMaxInvariant = 1'000'000'000;
constexpr long long kMaxAlpha = 100'000'000;

SurfaceInvariants parseSurface(const std::string& text, const std::optional<std::string>& chi) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 3) throw ConfigError("--surface expects d,gH,pa");
  SurfaceInvariants inv;
  inv.d = parseBounded(parts[0], 3, kMaxInvariant, "d");
  inv.gH = parseBounded(parts[1], -kMaxInvariant, kMaxInvariant, "gH");
  inv.pa = parseBounded(parts[2], -kMaxInvariant, kMaxInvariant, "pa");
  if (chi) inv.chi = parseBounded(*chi, -kMaxInvariant, kMaxInvariant, "chi");
  return inv;
}

Json predictionJson(const Prediction& p, const std::optional<SurfaceInvariants>& inv) {
  Json out;
  if (inv) {
    out["d"] = integerJson(inv->d);
    out["gH"] = integerJson(inv->gH);
    out["pa"] = integerJson(inv->pa);
    if (inv->chi) out["chi"] = integerJson(*inv->chi);
  }
  out["degY1"] = integerJson(p.degY1);
  out["gY1"] = integerJson(p.gY1);
  out["nodesY1"] = integerJson(p.nodesY1);
  if (p.triplePoints) out["triplePoints"] = integerJson(*p.triplePoints);
  out["M"] = integerJson(p.M);
  if (p.m) out["m"] = integerJson(*p.m);
  if (p.exceptional) out["exceptionalCase"] = toString(*p.exceptional);
  out["maxFormulaM"] = integerJson(p.maxFormulaM);
  if (p.threeInvariantM) out["threeInvariantM"] = integerJson(*p.threeInvariantM);
  return out;
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void printFlat(std::ostream& out, const Json& object, const std::string& indent = "") {
  for (const auto& [key, value] : object.items()) {
    out << indent << key << ": " << scalar(value) << "\n";
  }
}

// ---------------------------------------------------------------------------

int runGin(const std::string& path, const std::string& orderName, const RunConfig& config, std::ostream& out) {
  const MonomialOrder order = parseOrder(orderName);
  const Ideal ideal = loadIdeal(path, config);
  const GinResult r = gin(ideal, order, config.ginOptions());
  Json report;
  report["prime"] = ideal.field().prime();
  report["seeds"] = r.seeds;
  report["order"] = order.name();
  report["gin"] = monomialList(r.gin, order);
  report["borel"] = r.borel;
  if (r.borel) report["regularity"] = borelRegularity(r.gin);
  if (config.json()) {
    out << report.dump(2) << "\n";
  } else {
    out << "gin (" << order.name() << "): " << joined(report["gin"]) << "\n";
    out << "borel: " << (r.borel ? "yes" : "no") << "\n";
    if (r.borel) out << "regularity: " << report["regularity"].get<int>() << "\n";
    out << "trials agreed: " << r.trialsAgreed << " (seeds " << report["seeds"].dump() << ")\n";
    out << "prime: " << ideal.field().prime() << "\n";
  }
  return r.borel ? kExitOk : kExitUnstable;
}

int runComplexity(const std::string& path, const std::optional<std::string>& surface,
                  const std::optional<std::string>& chi, const RunConfig& config, std::ostream& out) {
  const Ideal ideal = loadIdeal(path, config);
  std::optional<SurfaceInvariants> inv;
  if (surface) inv = parseSurface(*surface, chi);

  const GinOptions options = config.ginOptions();
  const GinResult glex = gin(ideal, MonomialOrder::glex(), options);
  const GinResult grevlex = gin(ideal, MonomialOrder::grevlex(), options);
  const int M = degreeComplexity(glex);
  const int m = degreeComplexity(grevlex);
  const Recombination rec = recombineM(ideal, options);
  const HilbertIdentityResult hil = hilbertIdentityCheck(ideal, config.mMax, config.seed);

  bool mismatch = false;
  Json report;
  report["prime"] = ideal.field().prime();
  report["seeds"] = glex.seeds;
  report["order"] = "glex";
  report["gin"] = monomialList(glex.gin, MonomialOrder::glex());
  report["M"] = M;
  report["m"] = m;
  report["beta"] = rec.beta;
  Json parts = Json::array();
  for (const PartSummary& part : rec.parts) {
    Json k;
    k["i"] = part.index;
    k["generators"] = polynomialList(part.compact.generators(), 1);
    k["M_Ki"] = part.complexity;
    parts.push_back(k);
  }
  report["kI"] = parts;

  Json verdicts;
  verdicts["recombination"] = rec.M == M ? "ok" : "mismatch";
  mismatch |= rec.M != M;
  verdicts["hilbertIdentity"] =
      hil.holds ? "ok" : "fails at m=" + std::to_string(*hil.firstFailure);
  mismatch |= !hil.holds;
  verdicts["m"] = kComputedOnly;

  Json predictions = Json::object();
  if (inv) {
    const Prediction p = surfaceComplexityOnQuadric(*inv);
    predictions = predictionJson(p, inv);
    const bool okM = Integer(M) == p.M;
    verdicts["prediction"] = okM ? "ok" : "mismatch";
    mismatch |= !okM;
    if (inv->d <= kMaxExponent && p.degY1 <= kMaxExponent && p.nodesY1 <= kMaxExponent && ideal.nvars() == 5) {
      const bool okW = witnessCheck(glex.gin, static_cast<int>(inv->d), static_cast<int>(p.degY1),
                                    static_cast<int>(p.nodesY1));
      verdicts["witnesses"] = okW ? "ok" : "mismatch";
      mismatch |= !okW;
    }
  }
  report["predictions"] = predictions;
  report["verdicts"] = verdicts;

  if (config.json()) {
    out << report.dump(2) << "\n";
  } else {
    out << "prime: " << ideal.field().prime() << "\n";
    out << "gin (glex): " << joined(report["gin"]) << "\n";
    out << "M: " << M << "\n";
    out << "m: " << m << " (" << kComputedOnly << ")\n";
    out << "beta: " << rec.beta << "\n";
    for (const auto& k : report["kI"]) {
      out << "K_" << k["i"].get<int>() << ": M=" << k["M_Ki"].get<int>() << "  (" << joined(k["generators"])
          << ")\n";
    }
    if (!predictions.empty()) {
      out << "prediction:\n";
      printFlat(out, predictions, "  ");
    }
    out << "verdicts:\n";
    printFlat(out, verdicts, "  ");
  }
  return mismatch ? kExitMismatch : kExitOk;
}

int runPei(const std::string& path, int index, const std::string& modeName, bool generic, const RunConfig& config,
           std::ostream& out) {
  const ExtractionMode mode = parseExtractionMode(modeName);
  const Ideal ideal = loadIdeal(path, config);
  if (ideal.nvars() < 2) throw ConfigError("partial elimination needs at least two variables");
  std::optional<GroebnerBasis> basis;
  CoordinateClaim claim = CoordinateClaim::NonGenericOverride;
  if (generic) {
    basis = genericGlexBasis(ideal, config.seed).basis;
    claim = CoordinateClaim::Generic;
  } else {
    basis = buchberger(ideal, MonomialOrder::glex());
  }
  const PartialEliminationData k = partialElimination(*basis, index, mode, claim);
  Json report;
  report["prime"] = ideal.field().prime();
  report["index"] = index;
  report["mode"] = toString(mode);
  report["coordinates"] = generic ? "generic" : "given";
  if (generic) report["seed"] = config.seed;
  report["generators"] = polynomialList(k.ideal.generators(), 1);
  if (config.json()) {
    out << report.dump(2) << "\n";
  } else {
    out << "K_" << index << " (" << toString(mode) << ", " << report["coordinates"].get<std::string>()
        << " coordinates): " << joined(report["generators"]) << "\n";
  }
  return kExitOk;
}

int runPredict(const std::optional<std::string>& surface, const std::optional<std::string>& chi,
               const std::optional<std::string>& ci, const std::optional<std::string>& acm, const RunConfig& config,
               std::ostream& out) {
  const int given = (surface ? 1 : 0) + (ci ? 1 : 0) + (acm ? 1 : 0);
  if (given != 1) throw ConfigError("predict needs exactly one of --surface, --ci, --acm");
  Json report;
  if (surface) {
    const SurfaceInvariants inv = parseSurface(*surface, chi);
    report = predictionJson(surfaceComplexityOnQuadric(inv), inv);
  } else {
    if (chi) throw ConfigError("--chi only applies to --surface");
    const Integer alpha = parseBounded(ci ? *ci : *acm, ci ? 2 : 3, kMaxAlpha, "alpha");
    report["family"] = ci ? "ci" : "acm";
    report["alpha"] = integerJson(alpha);
    const Prediction p = ci ? predictCompleteIntersection(alpha) : predictAcm(alpha);
    const std::optional<SurfaceInvariants> inv = ci ? ciInvariants(alpha) : acmInvariants(alpha);
    const Json body = predictionJson(p, inv);
    for (const auto& [key, value] : body.items()) report[key] = value;
  }
  if (config.json()) {
    out << report.dump(2) << "\n";
  } else {
    printFlat(out, report);
  }
  return kExitOk;
}

int runTables(const RunConfig& config, std::ostream& out) {
  const std::vector<ComplexityTable> tables = regenerateTables();
  if (config.json()) {
    Json report = Json::array();
    for (const ComplexityTable& t : tables) {
      Json rows = Json::array();
      for (const TableRow& r : t.rows) {
        rows.push_back(Json{{"alpha", integerJson(r.alpha)}, {"M", integerJson(r.M)}, {"m", integerJson(r.m)}});
      }
      report.push_back(Json{{"title", t.title}, {"rows", rows}});
    }
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  for (const ComplexityTable& t : tables) {
    out << t.title << "\n";
    out << std::left << std::setw(6) << "alpha";
    for (const TableRow& r : t.rows) out << std::right << std::setw(10) << toString(r.alpha);
    out << "\n" << std::left << std::setw(6) << "M";
    for (const TableRow& r : t.rows) out << std::right << std::setw(10) << toString(r.M);
    out << "\n" << std::left << std::setw(6) << "m";
    for (const TableRow& r : t.rows) out << std::right << std::setw(10) << toString(r.m);
    out << "\n\n";
  }
  return kExitOk;
}

int runVerify(const std::optional<std::string>& entryName, bool extended, const RunConfig& config,
              std::ostream& out) {
  std::vector<const CorpusEntry*> selected;
  if (entryName) {
    selected.push_back(&findEntry(*entryName));
  } else {
    for (const CorpusEntry& e : corpusEntries()) {
      if (!e.extended || extended) selected.push_back(&e);
    }
  }
  VerifyOptions options;
  options.field = config.field();
  options.seed = config.seed;
  options.gin = config.ginOptions();
  bool allOk = true;
  Json report = Json::array();
  for (const CorpusEntry* entry : selected) {
    const VerifyResult r = verifyEntry(*entry, options);
    allOk &= r.ok;
    if (config.json()) {
      Json item;
      item["entry"] = r.entry;
      item["ok"] = r.ok;
      item["attempts"] = r.attempts;
      item["seed"] = r.seed;
      if (r.M) item["M"] = *r.M;
      if (r.m) item["m"] = *r.m;
      Json checks = Json::array();
      for (const Check& c : r.checks) checks.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
      item["checks"] = checks;
      report.push_back(item);
    } else {
      out << std::left << std::setw(12) << r.entry << (r.ok ? "ok      " : "MISMATCH") << "  attempts=" << r.attempts
          << "  " << std::fixed << std::setprecision(2) << r.seconds << "s\n";
      for (const Check& c : r.checks) {
        out << "    " << std::setw(6) << c.name << (c.ok ? "ok  " : "FAIL") << "  " << c.detail << "\n";
      }
    }
  }
  if (config.json()) out << report.dump(2) << "\n";
  return allOk ? kExitOk : kExitMismatch;
}

int runExport(const std::string& name, const RunConfig& config, std::ostream& out) {
  if (name == "remark") {
    out << formatIdealFile(remarkCounterexample(config.field()));
  } else {
    out << formatIdealFile(findEntry(name).build(config.seed, config.field()));
  }
  return kExitOk;
}

}  // namespace

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree complexity of homogeneous ideals via generic initial ideals", "gincomplex"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file with default flag values");

  RunConfig config;
  std::string primeText;
  auto* primeOpt = app.add_option("--prime", primeText, "coefficient field prime (env GINCOMPLEX_PRIME)");
  app.add_option("--seed", config.seed, "base seed for random coordinate changes and instances");
  app.add_option("--agree", config.agree, "consecutive agreeing gin trials required")->check(CLI::Range(1, 100));
  app.add_option("--budget", config.budget, "maximum gin trials")->check(CLI::Range(1, 1000));
  app.add_option("--format", config.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--mmax", config.mMax, "largest degree for Hilbert checks")->check(CLI::Range(0, 60));

  std::string path;
  std::string orderName = "glex";
  auto* ginCmd = app.add_subcommand("gin", "generic initial ideal of an ideal file");
  ginCmd->add_option("file", path, "ideal file, - for stdin")->required();
  ginCmd->add_option("--order", orderName, "glex or grevlex")->check(CLI::IsMember({"glex", "grevlex"}));

  std::optional<std::string> surface, chi, ci, acm;
  auto* complexityCmd = app.add_subcommand("complexity", "M, m, partial elimination ideals and checks");
  complexityCmd->add_option("file", path, "ideal file, - for stdin")->required();
  complexityCmd->add_option("--surface", surface, "d,gH,pa of a surface on a quadric");
  complexityCmd->add_option("--chi", chi, "Euler characteristic of the structure sheaf");

  int index = 0;
  std::string modeName = "upto";
  bool generic = false;
  auto* peiCmd = app.add_subcommand("pei", "partial elimination ideal K_i");
  peiCmd->add_option("file", path, "ideal file, - for stdin")->required();
  peiCmd->add_option("--index", index, "i")->required()->check(CLI::Range(0, kMaxExponent));
  peiCmd->add_option("--mode", modeName, "equal or upto")->check(CLI::IsMember({"equal", "upto"}));
  peiCmd->add_flag("--generic", generic, "apply a seeded random coordinate change first");

  auto* predictCmd = app.add_subcommand("predict", "closed-form predictions");
  predictCmd->add_option("--surface", surface, "d,gH,pa of a surface on a quadric");
  predictCmd->add_option("--chi", chi, "Euler characteristic of the structure sheaf");
  predictCmd->add_option("--ci", ci, "alpha of a (2, alpha) complete intersection");
  predictCmd->add_option("--acm", acm, "alpha of a degree 2 alpha - 1 surface on a quadric");

  auto* tablesCmd = app.add_subcommand("tables", "both complexity tables");

  std::optional<std::string> entryName;
  bool extended = false;
  auto* verifyCmd = app.add_subcommand("verify", "check the builtin corpus against its golden data");
  verifyCmd->add_option("--entry", entryName, "a single corpus entry");
  verifyCmd->add_flag("--extended", extended, "include the heaviest entry");

  std::string exportName;
  auto* exportCmd = app.add_subcommand("export", "print a corpus entry as an ideal file");
  exportCmd->add_option("entry", exportName, "corpus entry name or 'remark'")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> args;
    for (int k = argc - 1; k >= 1; --k) args.emplace_back(argv[k]);
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (primeOpt->count() == 0) {
      if (const char* env = std::getenv("GINCOMPLEX_PRIME"); env != nullptr && *env != '\0') primeText = env;
    }
    if (!primeText.empty()) {
      const long long p = parseBounded(primeText, 2, (1ll << 31) - 1, "prime");
      config.prime = static_cast<std::uint32_t>(p);
    }
    FieldConfig check(config.prime);
    if (config.budget < config.agree) throw ConfigError("--budget must be at least --agree");

    if (ginCmd->parsed()) return runGin(path, orderName, config, out);
    if (complexityCmd->parsed()) return runComplexity(path, surface, chi, config, out);
    if (peiCmd->parsed()) return runPei(path, index, modeName, generic, config, out);
    if (predictCmd->parsed()) return runPredict(surface, chi, ci, acm, config, out);
    if (tablesCmd->parsed()) return runTables(config, out);
    if (verifyCmd->parsed()) return runVerify(entryName, extended, config, out);
    if (exportCmd->parsed()) return runExport(exportName, config, out);
  } catch (const UnstableGinError& e) {
    err << "error: " << e.what() << "\n";
    for (std::size_t k = 0; k < e.results().size(); ++k) {
      err << "  seed " << e.seeds()[k] << ": " << e.results()[k].size() << " generators, regularity "
          << e.results()[k].maxGeneratorDegree() << "\n";
    }
    return kExitUnstable;
  } catch (const NonBorelGinError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnstable;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gincomplex
