#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gincomplex/error.hpp"

namespace gincomplex {

/// Largest number of variables a ring may have. One slot is kept free for the
/// auxiliary elimination variable used by ideal intersection.
inline constexpr int kMaxVars = 8;
inline constexpr int kMaxUserVars = kMaxVars - 1;
inline constexpr int kMaxExponent = 0x7fff;

/// Dense exponent vector with a cached total degree. Unused slots are zero so
/// that equality and hashing can look at the raw storage.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(int nvars, std::span<const int> exponents);
  Monomial(std::initializer_list<int> exponents);

  /// The monomial x_var of a ring with nvars variables.
  static Monomial variable(int nvars, int var);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](int var) const { return exps_[var]; }
  bool isOne() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    const auto a = words();
    const auto b = other.words();
    return (((b[0] | kHigh) - a[0]) & kHigh) == kHigh && (((b[1] | kHigh) - a[1]) & kHigh) == kHigh;
  }
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; precondition other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  /// Same exponents in a ring with extra variables inserted in front.
  Monomial shifted(int offset, int newNvars) const;

  std::size_t hash() const {
    const auto w = words();
    std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ull ^ (w[1] + 0x632BE59BD9B4E019ull) * 0xC2B2AE3D27D4EB4Full;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.words() == b.words() && a.nvars_ == b.nvars_;
  }

  /// "x0^2*x1" form; "1" for the unit monomial. firstIndex relabels x0.
  std::string toString(int firstIndex = 0) const;

 private:
  static constexpr std::uint64_t kHigh = 0x8000800080008000ull;

  std::array<std::uint64_t, 2> words() const { return std::bit_cast<std::array<std::uint64_t, 2>>(exps_); }
  void setWords(const std::array<std::uint64_t, 2>& w) { exps_ = std::bit_cast<std::array<std::uint16_t, kMaxVars>>(w); }

  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

/// Graded orders with x0 > x1 > ... > xn, plus the internal block order used
/// for elimination (variable 0 eliminated first, grevlex on the rest).
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { GLex, GRevLex, Elimination };

  constexpr MonomialOrder(Kind kind = Kind::GRevLex) : kind_(kind) {}

  static constexpr MonomialOrder glex() { return MonomialOrder(Kind::GLex); }
  static constexpr MonomialOrder grevlex() { return MonomialOrder(Kind::GRevLex); }
  static constexpr MonomialOrder elimination() { return MonomialOrder(Kind::Elimination); }

  Kind kind() const { return kind_; }
  std::string name() const;

  /// Three-way comparison. Caller guarantees equal variable counts.
  int compare3(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::GLex:
        return compareGLex(a, b);
      case Kind::GRevLex:
        return compareGRevLex(a, b, 0);
      case Kind::Elimination:
        if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
        return compareGRevLex(a, b, 1);
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare3(a, b) > 0; }

  /// Degree used by the normal selection strategy. The elimination variable
  /// has weight zero so that t*f and (1-t)*g stay homogeneous.
  int selectionDegree(const Monomial& m) const {
    return kind_ == Kind::Elimination ? m.degree() - m[0] : m.degree();
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static int compareGLex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (int i = 0; i < a.nvars(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }

  static int compareGRevLex(const Monomial& a, const Monomial& b, int first) {
    const int da = a.degree() - (first ? a[0] : 0);
    const int db = b.degree() - (first ? b[0] : 0);
    if (da != db) return da > db ? 1 : -1;
    for (int i = a.nvars() - 1; i >= first; --i) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
};

/// Checked comparison: throws RingMismatchError on differing variable counts.
Ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b);

/// Parses "glex" / "grevlex".
MonomialOrder parseOrder(const std::string& name);

/// Calls fn on every monomial of the given degree in nvars variables.
void forEachMonomial(int nvars, int degree, const std::function<void(const Monomial&)>& fn);
std::vector<Monomial> monomialsOfDegree(int nvars, int degree);
/// Number of monomials of the given degree, C(degree + nvars - 1, nvars - 1).
std::uint64_t monomialCount(int nvars, int degree);

}  // namespace gincomplex
