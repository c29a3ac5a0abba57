#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gincomplex/field.hpp"
#include "gincomplex/monomial.hpp"

namespace gincomplex {

/// Polynomial ring F_p[x0, ..., x(nvars-1)].
struct Ring {
  int nvars = 0;
  FieldConfig field{};

  friend bool operator==(const Ring&, const Ring&) = default;
};

struct Term {
  Coeff coeff;
  Monomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

class CoordinateChange;

/// Sparse polynomial whose terms are kept strictly descending in the order it
/// is tagged with. Switching orders is explicit (see reordered()).
class Polynomial {
 public:
  Polynomial(const Ring& ring, MonomialOrder order = MonomialOrder::grevlex());

  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial fromTerms(const Ring& ring, MonomialOrder order, std::vector<Term> terms);
  /// Trusts the caller: terms already strictly descending with nonzero coefficients.
  static Polynomial fromSortedTerms(const Ring& ring, MonomialOrder order, std::vector<Term> terms);
  static Polynomial constant(const Ring& ring, MonomialOrder order, std::int64_t c);
  static Polynomial variable(const Ring& ring, MonomialOrder order, int var);
  static Polynomial monomial(const Ring& ring, MonomialOrder order, Coeff c, const Monomial& m);

  const Ring& ring() const { return ring_; }
  int nvars() const { return ring_.nvars; }
  const FieldConfig& field() const { return ring_.field; }
  MonomialOrder order() const { return order_; }

  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& operator[](std::size_t i) const { return terms_[i]; }

  /// Throws DomainError on the zero polynomial.
  const Term& leadingTerm() const;
  const Monomial& leadingMonomial() const { return leadingTerm().monomial; }
  Coeff leadingCoeff() const { return leadingTerm().coeff; }

  /// Largest total degree of a term; -1 for zero.
  int degree() const;
  bool isHomogeneous() const;
  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.isOne()); }

  Polynomial reordered(MonomialOrder order) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(Coeff c) const;
  Polynomial mulByTerm(Coeff c, const Monomial& m) const;

  /// Same polynomial in a ring with `offset` extra variables placed in front.
  Polynomial embedded(const Ring& target, int offset, MonomialOrder order) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Ideal-file syntax, e.g. "x0*x3 - x1*x2". firstIndex relabels x0.
  std::string toString(int firstIndex = 0) const;

 private:
  Polynomial(const Ring& ring, MonomialOrder order, std::vector<Term> terms)
      : ring_(ring), order_(order), terms_(std::move(terms)) {}

  Ring ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

Polynomial addPoly(const Polynomial& a, const Polynomial& b);
Polynomial scalePoly(const Polynomial& f, Coeff c);
Polynomial mulByTerm(const Polynomial& f, Coeff c, const Monomial& m);
Polynomial mulPoly(const Polynomial& f, const Polynomial& g);

/// Leading term under `order` (f is re-sorted if tagged differently).
std::pair<FieldElement, Monomial> leadingTerm(const Polynomial& f, MonomialOrder order);

/// Exponent of x0 in the glex leading monomial of f.
int d0(const Polynomial& f);

/// Exact quotient h / f. Throws DomainError if f does not divide h.
Polynomial divideExact(const Polynomial& h, const Polynomial& f);

/// Invertible linear substitution x_i <- sum_j m[i][j] x_j over F_p.
class CoordinateChange {
 public:
  /// Row-major (n x n) entries. Throws DomainError if singular.
  CoordinateChange(const FieldConfig& field, int n, std::vector<Coeff> matrix, std::uint64_t seed = 0);

  static CoordinateChange identity(const FieldConfig& field, int n);

  int size() const { return n_; }
  std::uint64_t seed() const { return seed_; }
  const FieldConfig& field() const { return field_; }
  Coeff at(int row, int col) const { return matrix_[row * n_ + col]; }
  Coeff inverseAt(int row, int col) const { return inverse_[row * n_ + col]; }
  std::span<const Coeff> matrix() const { return matrix_; }
  std::span<const Coeff> inverseMatrix() const { return inverse_; }

  CoordinateChange inverse() const;

  friend bool operator==(const CoordinateChange& a, const CoordinateChange& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.matrix_ == b.matrix_;
  }

 private:
  CoordinateChange(const FieldConfig& field, int n, std::vector<Coeff> matrix, std::vector<Coeff> inverse,
                   std::uint64_t seed)
      : field_(field), n_(n), matrix_(std::move(matrix)), inverse_(std::move(inverse)), seed_(seed) {}

  FieldConfig field_;
  int n_;
  std::vector<Coeff> matrix_;
  std::vector<Coeff> inverse_;
  std::uint64_t seed_;
};

/// Inverse of a square matrix over F_p, or nullopt-like empty vector if singular.
std::vector<Coeff> invertMatrix(const FieldConfig& field, int n, std::span<const Coeff> matrix);

/// Substitutes x_i <- sum_j g(i,j) x_j and expands.
Polynomial applyLinearChange(const Polynomial& f, const CoordinateChange& g);

/// Generators of a polynomial ideal. Public construction requires nonzero
/// homogeneous generators; internal elimination code uses makeUnchecked.
class Ideal {
 public:
  Ideal(const Ring& ring, std::vector<Polynomial> generators);
  static Ideal makeUnchecked(const Ring& ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  int nvars() const { return ring_.nvars; }
  const FieldConfig& field() const { return ring_.field; }
  std::span<const Polynomial> generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool isHomogeneous() const;

 private:
  struct Unchecked {};
  Ideal(const Ring& ring, std::vector<Polynomial> generators, Unchecked)
      : ring_(ring), generators_(std::move(generators)) {}

  Ring ring_;
  std::vector<Polynomial> generators_;
};

Ideal applyLinearChange(const Ideal& ideal, const CoordinateChange& g);

}  // namespace gincomplex
