#include "gincomplex/monomial.hpp"

#include <algorithm>

namespace gincomplex {

namespace {

void checkNvars(int nvars) {
  if (nvars < 0 || nvars > kMaxVars) {
    throw DomainError("variable count " + std::to_string(nvars) + " outside [0, " + std::to_string(kMaxVars) + "]");
  }
}

void checkExponent(long e) {
  if (e < 0 || e > kMaxExponent) throw DomainError("exponent " + std::to_string(e) + " out of range");
}

}  // namespace

Monomial::Monomial(int nvars) : nvars_(static_cast<std::uint8_t>(nvars)) { checkNvars(nvars); }

Monomial::Monomial(int nvars, std::span<const int> exponents) : Monomial(nvars) {
  if (static_cast<int>(exponents.size()) != nvars) {
    throw RingMismatchError("exponent vector of length " + std::to_string(exponents.size()) + " for " +
                            std::to_string(nvars) + " variables");
  }
  long degree = 0;
  for (int i = 0; i < nvars; ++i) {
    checkExponent(exponents[i]);
    exps_[i] = static_cast<std::uint16_t>(exponents[i]);
    degree += exponents[i];
  }
  checkExponent(degree);
  degree_ = static_cast<std::uint16_t>(degree);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(static_cast<int>(exponents.size()), std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial Monomial::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw DomainError("variable index " + std::to_string(var) + " out of range");
  Monomial m(nvars);
  m.exps_[var] = 1;
  m.degree_ = 1;
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (degree_ + other.degree_ > kMaxExponent) throw DomainError("monomial degree overflow");
  Monomial m;
  const auto a = words();
  const auto b = other.words();
  m.setWords({a[0] + b[0], a[1] + b[1]});
  m.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  m.nvars_ = nvars_;
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  const auto a = words();
  const auto b = other.words();
  m.setWords({a[0] - b[0], a[1] - b[1]});
  m.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
  m.nvars_ = nvars_;
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m(nvars_);
  int degree = 0;
  for (int i = 0; i < nvars_; ++i) {
    m.exps_[i] = std::max(exps_[i], other.exps_[i]);
    degree += m.exps_[i];
  }
  m.degree_ = static_cast<std::uint16_t>(degree);
  return m;
}

Monomial Monomial::shifted(int offset, int newNvars) const {
  if (offset < 0 || nvars_ + offset > newNvars) throw DomainError("cannot shift monomial into a smaller ring");
  Monomial m(newNvars);
  for (int i = 0; i < nvars_; ++i) m.exps_[i + offset] = exps_[i];
  m.degree_ = degree_;
  return m;
}

std::string Monomial::toString(int firstIndex) const {
  if (degree_ == 0) return "1";
  std::string out;
  for (int i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + firstIndex);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::GLex:
      return "glex";
    case Kind::GRevLex:
      return "grevlex";
    case Kind::Elimination:
      return "elimination";
  }
  return "?";
}

Ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw RingMismatchError("comparing monomials in " + std::to_string(a.nvars()) + " and " +
                            std::to_string(b.nvars()) + " variables");
  }
  return static_cast<Ordering>(order.compare3(a, b));
}

MonomialOrder parseOrder(const std::string& name) {
  if (name == "glex") return MonomialOrder::glex();
  if (name == "grevlex") return MonomialOrder::grevlex();
  throw ConfigError("unknown monomial order '" + name + "' (expected glex or grevlex)");
}

namespace {

void enumerate(std::vector<int>& exps, int var, int remaining, const std::function<void(const Monomial&)>& fn) {
  const int n = static_cast<int>(exps.size());
  if (var == n - 1) {
    exps[var] = remaining;
    fn(Monomial(n, exps));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    enumerate(exps, var + 1, remaining - e, fn);
  }
  exps[var] = 0;
}

}  // namespace

void forEachMonomial(int nvars, int degree, const std::function<void(const Monomial&)>& fn) {
  if (degree < 0) return;
  if (nvars == 0) {
    if (degree == 0) fn(Monomial(0));
    return;
  }
  std::vector<int> exps(nvars, 0);
  enumerate(exps, 0, degree, fn);
}

std::vector<Monomial> monomialsOfDegree(int nvars, int degree) {
  std::vector<Monomial> out;
  out.reserve(monomialCount(nvars, degree));
  forEachMonomial(nvars, degree, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

std::uint64_t monomialCount(int nvars, int degree) {
  if (degree < 0 || nvars < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // C(degree + nvars - 1, nvars - 1), built incrementally to stay exact.
  std::uint64_t result = 1;
  for (int k = 1; k < nvars; ++k) {
    result = result * static_cast<std::uint64_t>(degree + k) / static_cast<std::uint64_t>(k);
  }
  return result;
}

}  // namespace gincomplex
