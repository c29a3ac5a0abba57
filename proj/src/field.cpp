#include "gincomplex/field.hpp"

#include <string>

namespace gincomplex {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldConfig::FieldConfig(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !isPrime(p)) {
    throw ConfigError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Coeff FieldConfig::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff FieldConfig::inv(Coeff a) const {
  if (a % p_ == 0) throw DivisionByZeroError("inverse of zero in F_" + std::to_string(p_));
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a % p_;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return fromInteger(s0);
}

Coeff FieldConfig::fromInteger(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

namespace {

void requireSameModulus(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw ConfigError("field elements over F_" + std::to_string(a.modulus()) + " and F_" +
                      std::to_string(b.modulus()) + " cannot be combined");
  }
}

}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
  requireSameModulus(a, b);
  const std::uint64_t s = std::uint64_t{a.value_} + b.value_;
  return FieldElement(static_cast<Coeff>(s % a.modulus_), a.modulus_, 0);
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
  requireSameModulus(a, b);
  const std::uint64_t s = std::uint64_t{a.value_} + a.modulus_ - b.value_;
  return FieldElement(static_cast<Coeff>(s % a.modulus_), a.modulus_, 0);
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  requireSameModulus(a, b);
  const std::uint64_t s = std::uint64_t{a.value_} * b.value_;
  return FieldElement(static_cast<Coeff>(s % a.modulus_), a.modulus_, 0);
}

FieldElement inverse(const FieldElement& a) {
  return FieldElement(a.field().inv(a.value_), a.modulus_, 0);
}

}  // namespace gincomplex
