#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gincomplex/polynomial.hpp"

namespace gincomplex {

/// Monomial ideal held by its minimal generators (an antichain under
/// divisibility), sorted descending in glex so equal ideals compare equal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
  /// Drops non-minimal generators.
  MonomialIdeal(int nvars, std::vector<Monomial> generators);

  int nvars() const { return nvars_; }
  std::span<const Monomial> generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool isZero() const { return generators_.empty(); }
  bool isUnit() const { return generators_.size() == 1 && generators_[0].isOne(); }

  bool contains(const Monomial& m) const;
  bool isMinimalGenerator(const Monomial& m) const;
  int maxGeneratorDegree() const;
  std::vector<Monomial> sortedBy(MonomialOrder order) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int nvars_;
  std::vector<Monomial> generators_;
};

/// x_j * u / x_i lies in M for every minimal generator u, every x_i | u and every j < i.
bool isBorelFixed(const MonomialIdeal& ideal);

/// Largest degree of a minimal generator; this is the regularity of a
/// Borel-fixed ideal. Throws DomainError on non-Borel input.
int borelRegularity(const MonomialIdeal& ideal);

/// dim_k (R/M)_m by enumerating degree-m monomials outside M.
std::uint64_t hilbertFunctionMonomial(const MonomialIdeal& ideal, int degree);

/// dim_k (R/I)_m as (#degree-m monomials) - rank of the degree-m Macaulay
/// matrix of I. Independent of any Groebner basis computation.
std::uint64_t hilbertFunctionMacaulay(const Ideal& ideal, int degree);

class GroebnerBasis {
 public:
  GroebnerBasis(const Ring& ring, MonomialOrder order, std::vector<Polynomial> elements, bool reduced)
      : ring_(ring), order_(order), elements_(std::move(elements)), reduced_(reduced) {}

  const Ring& ring() const { return ring_; }
  MonomialOrder order() const { return order_; }
  std::span<const Polynomial> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool reduced() const { return reduced_; }
  /// True when the ideal is the whole ring.
  bool isUnit() const;
  /// Smallest degree of a basis element (the initial degree of the ideal).
  int minDegree() const;

  Ideal toIdeal() const { return Ideal::makeUnchecked(ring_, elements_); }

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  bool reduced_;
};

struct GroebnerStats {
  std::uint64_t pairsConsidered = 0;
  std::uint64_t pairsSkippedByHilbert = 0;
  std::uint64_t zeroReductions = 0;
  std::uint64_t reductionSteps = 0;
};

struct GroebnerOptions {
  /// Stop after this (selection) degree; the result is a truncated basis.
  std::optional<int> maxDegree;
  /// A monomial ideal with the same Hilbert function as the input, e.g. its
  /// grevlex initial ideal. Lets homogeneous runs skip S-pairs that must
  /// reduce to zero. The output does not depend on it.
  const MonomialIdeal* hilbertReference = nullptr;
  GroebnerStats* stats = nullptr;
};

/// Reduced Groebner basis by Buchberger's algorithm: normal selection
/// strategy (lowest lcm degree, ties by the order on the lcm) with the
/// Gebauer-Moeller criteria. Throws DomainError on an empty generator list.
GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order, const GroebnerOptions& options = {});

/// Remainder of f on division by G. Every polynomial must be sorted by f's order.
Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> divisors);

/// Leading monomials of a reduced basis. Throws DomainError if not reduced.
MonomialIdeal initialIdeal(const GroebnerBasis& basis);

/// Buchberger's criterion: every S-polynomial reduces to zero.
bool satisfiesBuchbergerCriterion(std::span<const Polynomial> basis);

bool idealContains(const GroebnerBasis& basis, const Polynomial& f);
/// Mutual membership of generators against each other's grevlex basis.
bool idealsEqual(const Ideal& a, const Ideal& b);
/// Every generator of `sub` lies in `super`.
bool idealSubset(const Ideal& sub, const Ideal& super);

/// I ∩ J by eliminating t from t*I + (1-t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);
/// (I : f) = (I ∩ (f)) / f.
Ideal colon(const Ideal& ideal, const Polynomial& f);
/// (I : (x0, ..., xn)).
Ideal colonByIrrelevant(const Ideal& ideal);
/// Iterates colon by the irrelevant ideal until stable.
Ideal saturateByIrrelevant(const Ideal& ideal);

}  // namespace gincomplex
