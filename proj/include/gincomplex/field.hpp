#pragma once

#include <cstdint>

#include "gincomplex/error.hpp"

namespace gincomplex {

// Canonical residue in [0, p).
using Coeff = std::uint32_t;

bool isPrime(std::uint64_t n);

/// Prime field F_p. Stands in for a characteristic-zero field; the default
/// prime is large enough that every gin in the builtin corpus is the
/// characteristic-zero one.
class FieldConfig {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Throws ConfigError unless p is a prime below 2^31.
  explicit FieldConfig(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    const Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const;
  /// Throws DivisionByZeroError on a == 0.
  Coeff inv(Coeff a) const;

  /// Reduces an arbitrary signed integer to its canonical residue.
  Coeff fromInteger(std::int64_t v) const;
  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t toSigned(Coeff a) const { return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a; }

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;

 private:
  std::uint32_t p_;
};

/// A field element that remembers its modulus, so mixing two fields is caught.
class FieldElement {
 public:
  FieldElement(const FieldConfig& field, std::int64_t value)
      : value_(field.fromInteger(value)), modulus_(field.prime()) {}

  Coeff value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  FieldConfig field() const { return FieldConfig(modulus_); }
  bool isZero() const { return value_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  friend FieldElement add(const FieldElement&, const FieldElement&);
  friend FieldElement sub(const FieldElement&, const FieldElement&);
  friend FieldElement mul(const FieldElement&, const FieldElement&);
  friend FieldElement inverse(const FieldElement&);

  FieldElement(Coeff value, std::uint32_t modulus, int) : value_(value), modulus_(modulus) {}

  Coeff value_;
  std::uint32_t modulus_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inverse(const FieldElement& a);

}  // namespace gincomplex
