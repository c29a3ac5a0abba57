#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gincomplex/polynomial.hpp"

namespace gincomplex {

/// Result of reading an ideal file. `headerPrime` is set when the ring line
/// names a prime.
struct IdealFile {
  Ideal ideal;
  std::optional<std::uint32_t> headerPrime;
};

/// Grammar: a `ring n [p]` line, then one polynomial per line over x0..x(n-1)
/// built from integers, x<k>, + - * ^ and parentheses. `#` starts a comment.
/// Multiplication is always explicit. `field` is used unless the header names
/// a prime and `preferHeaderPrime` is set. Throws ParseError.
IdealFile parseIdealFile(std::string_view text, const FieldConfig& field = FieldConfig(),
                         bool preferHeaderPrime = true);

/// One polynomial in the given ring (grevlex). Throws ParseError with line 1.
Polynomial parsePolynomial(std::string_view text, const Ring& ring);

/// "x0^2*x1" or "1".
Monomial parseMonomial(std::string_view text, int nvars, int firstIndex = 0);

/// Inverse of parseIdealFile.
std::string formatIdealFile(const Ideal& ideal);

}  // namespace gincomplex
