#include "gincomplex/groebner.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace gincomplex {

// ---------------------------------------------------------------------------
// Monomial ideals
// ---------------------------------------------------------------------------

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> generators) : nvars_(nvars) {
  for (const Monomial& m : generators) {
    if (m.nvars() != nvars) throw RingMismatchError("monomial generator in the wrong number of variables");
  }
  // Sort by degree so that a divisor is always seen before its multiples.
  const MonomialOrder glex = MonomialOrder::glex();
  std::sort(generators.begin(), generators.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return glex.greater(a, b);
  });
  for (const Monomial& m : generators) {
    const bool redundant =
        std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) generators_.push_back(m);
  }
  std::sort(generators_.begin(), generators_.end(), [&](const Monomial& a, const Monomial& b) { return glex.greater(a, b); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::isMinimalGenerator(const Monomial& m) const {
  return std::find(generators_.begin(), generators_.end(), m) != generators_.end();
}

int MonomialIdeal::maxGeneratorDegree() const {
  int d = 0;
  for (const Monomial& g : generators_) d = std::max(d, g.degree());
  return d;
}

std::vector<Monomial> MonomialIdeal::sortedBy(MonomialOrder order) const {
  std::vector<Monomial> out = generators_;
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

bool isBorelFixed(const MonomialIdeal& ideal) {
  for (const Monomial& u : ideal.generators()) {
    for (int i = 1; i < ideal.nvars(); ++i) {
      if (u[i] == 0) continue;
      const Monomial xi = Monomial::variable(ideal.nvars(), i);
      for (int j = 0; j < i; ++j) {
        if (!ideal.contains((u / xi) * Monomial::variable(ideal.nvars(), j))) return false;
      }
    }
  }
  return true;
}

int borelRegularity(const MonomialIdeal& ideal) {
  if (!isBorelFixed(ideal)) {
    throw DomainError("regularity is only read off Borel-fixed ideals; this one is not");
  }
  return ideal.maxGeneratorDegree();
}

std::uint64_t hilbertFunctionMonomial(const MonomialIdeal& ideal, int degree) {
  if (degree < 0) return 0;
  std::uint64_t count = 0;
  forEachMonomial(ideal.nvars(), degree, [&](const Monomial& m) {
    if (!ideal.contains(m)) ++count;
  });
  return count;
}

std::uint64_t hilbertFunctionMacaulay(const Ideal& ideal, int degree) {
  if (degree < 0) return 0;
  const FieldConfig& F = ideal.field();
  const int n = ideal.nvars();
  const std::vector<Monomial> columns = monomialsOfDegree(n, degree);
  const std::size_t ncols = columns.size();
  std::unordered_map<Monomial, std::size_t, MonomialHash> columnOf;
  for (std::size_t c = 0; c < ncols; ++c) columnOf.emplace(columns[c], c);

  // Row echelon form built one row at a time; pivotRows[c] has a 1 in column c.
  std::vector<std::vector<Coeff>> pivotRows(ncols);
  std::size_t rank = 0;
  std::vector<Coeff> row(ncols);
  for (const Polynomial& g : ideal.generators()) {
    if (g.isZero()) continue;
    if (!g.isHomogeneous()) throw DomainError("Macaulay matrix needs homogeneous generators");
    const int shiftDegree = degree - g.degree();
    if (shiftDegree < 0) continue;
    for (const Monomial& u : monomialsOfDegree(n, shiftDegree)) {
      if (rank == ncols) return 0;
      std::fill(row.begin(), row.end(), 0);
      for (const Term& t : g.terms()) row[columnOf.at(t.monomial * u)] = t.coeff;
      for (std::size_t c = 0; c < ncols; ++c) {
        if (row[c] == 0) continue;
        if (pivotRows[c].empty()) {
          const Coeff inv = F.inv(row[c]);
          for (std::size_t k = c; k < ncols; ++k) row[k] = F.mul(row[k], inv);
          pivotRows[c] = row;
          ++rank;
          break;
        }
        const Coeff factor = row[c];
        const std::vector<Coeff>& pivot = pivotRows[c];
        for (std::size_t k = c; k < ncols; ++k) {
          if (pivot[k] != 0) row[k] = F.sub(row[k], F.mul(factor, pivot[k]));
        }
      }
    }
  }
  return ncols - rank;
}

// ---------------------------------------------------------------------------
// Reduction kernel
// ---------------------------------------------------------------------------

namespace {

struct Reducer {
  const Polynomial* poly;
  Monomial lm;
  Coeff lcInverse;
};

/// Accumulates a linear combination of shifted polynomials and fully reduces
/// it, visiting monomials in descending order through a max-heap. New
/// monomials produced by a reduction step are always smaller than the one
/// being reduced, so each monomial leaves the heap at most once.
class ReductionKernel {
 public:
  ReductionKernel(const FieldConfig& field, MonomialOrder order)
      : field_(field), p_(field.prime()), lazy_(field.prime() < (1u << 20)), heapLess_{order} {}

  void addMultiple(const Polynomial& f, std::size_t from, Coeff factor, const Monomial& shift) {
    for (std::size_t i = from; i < f.size(); ++i) {
      add(f[i].monomial * shift, static_cast<std::uint64_t>(factor) * f[i].coeff);
    }
  }

  std::vector<Term> reduce(std::span<const Reducer> reducers, std::uint64_t* steps) {
    std::vector<Term> out;
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), heapLess_);
      const Monomial m = heap_.back();
      heap_.pop_back();
      const auto it = acc_.find(m);
      const Coeff c = static_cast<Coeff>(it->second % p_);
      acc_.erase(it);
      if (c == 0) continue;
      const Reducer* chosen = nullptr;
      for (const Reducer& r : reducers) {
        if (r.lm.divides(m)) {
          chosen = &r;
          break;
        }
      }
      if (chosen == nullptr) {
        out.push_back({c, m});
        continue;
      }
      if (steps != nullptr) ++*steps;
      const Coeff factor = field_.neg(field_.mul(c, chosen->lcInverse));
      addMultiple(*chosen->poly, 1, factor, m / chosen->lm);
    }
    return out;
  }

 private:
  struct HeapLess {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.compare3(a, b) < 0; }
  };

  void add(const Monomial& m, std::uint64_t value) {
    auto [it, inserted] = acc_.try_emplace(m, 0);
    it->second = lazy_ ? it->second + value : (it->second + value) % p_;
    if (inserted) {
      heap_.push_back(m);
      std::push_heap(heap_.begin(), heap_.end(), heapLess_);
    }
  }

  FieldConfig field_;
  std::uint64_t p_;
  bool lazy_;
  HeapLess heapLess_;
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc_;
  std::vector<Monomial> heap_;
};

void requireOrder(const Polynomial& f, MonomialOrder order) {
  if (!(f.order() == order)) {
    throw RingMismatchError("polynomial sorted by " + f.order().name() + " used where " + order.name() +
                            " is expected");
  }
}

/// Tracks how many degree-d monomials the current leading monomials cover,
/// against the number a Hilbert reference says the ideal has.
class HilbertCoverage {
 public:
  HilbertCoverage(int nvars, const MonomialIdeal& reference) : nvars_(nvars), reference_(reference) {}

  void moveTo(int degree, std::span<const Monomial> leading) {
    if (degree == degree_) return;
    degree_ = degree;
    monomials_ = monomialsOfDegree(nvars_, degree);
    covered_.assign(monomials_.size(), 0);
    count_ = 0;
    target_ = 0;
    for (std::size_t k = 0; k < monomials_.size(); ++k) {
      if (reference_.contains(monomials_[k])) ++target_;
    }
    for (const Monomial& lm : leading) add(lm);
  }

  void add(const Monomial& lm) {
    if (lm.degree() > degree_) return;
    for (std::size_t k = 0; k < monomials_.size(); ++k) {
      if (!covered_[k] && lm.divides(monomials_[k])) {
        covered_[k] = 1;
        ++count_;
      }
    }
    if (count_ > target_) throw Error("Hilbert reference is inconsistent with the ideal");
  }

  bool complete() const { return count_ == target_; }

 private:
  int nvars_;
  const MonomialIdeal& reference_;
  int degree_ = -1;
  std::vector<Monomial> monomials_;
  std::vector<char> covered_;
  std::uint64_t count_ = 0;
  std::uint64_t target_ = 0;
};

// ---------------------------------------------------------------------------
// Buchberger engine
// ---------------------------------------------------------------------------

class BuchbergerEngine {
 public:
  BuchbergerEngine(const Ring& ring, MonomialOrder order, const GroebnerOptions& options, bool homogeneous)
      : ring_(ring),
        order_(order),
        options_(options),
        kernel_(ring.field, order),
        queue_(PairLess{order}),
        one_(ring.nvars) {
    if (options.hilbertReference != nullptr && homogeneous && order.kind() != MonomialOrder::Kind::Elimination) {
      coverage_.emplace(ring.nvars, *options.hilbertReference);
    }
  }

  GroebnerBasis run(std::span<const Polynomial> generators) {
    for (const Polynomial& g : generators) {
      if (g.isZero()) continue;
      inputs_.push_back(g.reordered(order_).monic());
      const Polynomial& in = inputs_.back();
      queue_.insert(Pair{order_.selectionDegree(in.leadingMonomial()), 0, in.leadingMonomial(), -1,
                         static_cast<int>(inputs_.size()) - 1});
    }

    while (!queue_.empty()) {
      const Pair pair = *queue_.begin();
      queue_.erase(queue_.begin());
      if (options_.maxDegree && pair.degree > *options_.maxDegree) break;
      if (options_.stats) ++options_.stats->pairsConsidered;
      if (coverage_) {
        coverage_->moveTo(pair.degree, leading_);
        if (coverage_->complete()) {
          if (options_.stats) ++options_.stats->pairsSkippedByHilbert;
          continue;
        }
      }
      std::vector<Term> remainder = pair.i < 0 ? reduceInput(inputs_[pair.j]) : reduceSPair(pair);
      if (remainder.empty()) {
        if (options_.stats) ++options_.stats->zeroReductions;
        continue;
      }
      Polynomial h = Polynomial::fromSortedTerms(ring_, order_, std::move(remainder)).monic();
      insert(std::move(h));
    }
    return GroebnerBasis(ring_, order_, interreduce(), true);
  }

 private:
  struct Pair {
    int degree;
    int kind;  // 0 = input generator, 1 = critical pair
    Monomial lcm;
    int i;
    int j;
  };

  struct PairLess {
    MonomialOrder order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (a.kind != b.kind) return a.kind < b.kind;
      const int c = order.compare3(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  std::uint64_t* steps() { return options_.stats ? &options_.stats->reductionSteps : nullptr; }

  std::vector<Term> reduceInput(const Polynomial& f) {
    kernel_.addMultiple(f, 0, 1, one_);
    return kernel_.reduce(reducers_, steps());
  }

  std::vector<Term> reduceSPair(const Pair& pair) {
    const Polynomial& f = basis_[pair.i];
    const Polynomial& g = basis_[pair.j];
    kernel_.addMultiple(f, 1, 1, pair.lcm / leading_[pair.i]);
    kernel_.addMultiple(g, 1, ring_.field.neg(1), pair.lcm / leading_[pair.j]);
    return kernel_.reduce(reducers_, steps());
  }

  // Gebauer-Moeller update for a new, fully reduced, monic element h.
  void insert(Polynomial h) {
    const int hi = static_cast<int>(basis_.size());
    const Monomial lmH = h.leadingMonomial();

    struct Candidate {
      int g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> candidates;
    for (int g = 0; g < hi; ++g) {
      if (active_[g]) candidates.push_back({g, lmH.lcm(leading_[g]), lmH.coprime(leading_[g])});
    }
    // Chain criterion among the new pairs: drop (h,g1) when another new pair's
    // lcm properly divides it; of equal lcms keep one, preferring a coprime pair.
    std::vector<Candidate> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Candidate& c = candidates[k];
      bool drop = false;
      if (!c.coprime) {
        for (std::size_t l = k + 1; l < candidates.size() && !drop; ++l) {
          if (candidates[l].lcm.divides(c.lcm)) drop = true;
        }
        for (const Candidate& d : kept) {
          if (drop) break;
          if (d.lcm.divides(c.lcm)) drop = true;
        }
      }
      if (!drop) kept.push_back(c);
    }
    // Old pairs made redundant by h.
    for (auto it = queue_.begin(); it != queue_.end();) {
      const Pair& p = *it;
      if (p.kind == 1 && lmH.divides(p.lcm) && !(lmH.lcm(leading_[p.i]) == p.lcm) &&
          !(lmH.lcm(leading_[p.j]) == p.lcm)) {
        it = queue_.erase(it);
      } else {
        ++it;
      }
    }
    // Product criterion.
    for (const Candidate& c : kept) {
      if (!c.coprime) queue_.insert(Pair{order_.selectionDegree(c.lcm), 1, c.lcm, c.g, hi});
    }
    for (int g = 0; g < hi; ++g) {
      if (active_[g] && lmH.divides(leading_[g])) active_[g] = false;
    }
    basis_.push_back(std::move(h));
    leading_.push_back(lmH);
    active_.push_back(true);
    if (coverage_) coverage_->add(lmH);
    rebuildReducers();
  }

  void rebuildReducers() {
    std::vector<int> idx;
    for (int g = 0; g < static_cast<int>(basis_.size()); ++g) {
      if (active_[g]) idx.push_back(g);
    }
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return basis_[a].size() < basis_[b].size(); });
    reducers_.clear();
    for (int g : idx) reducers_.push_back({&basis_[g], leading_[g], 1});
  }

  std::vector<Polynomial> interreduce() {
    std::vector<int> idx;
    for (int g = 0; g < static_cast<int>(basis_.size()); ++g) {
      if (active_[g]) idx.push_back(g);
    }
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return order_.greater(leading_[a], leading_[b]); });
    std::vector<Polynomial> out;
    out.reserve(idx.size());
    std::vector<Reducer> others;
    for (int g : idx) {
      others.clear();
      for (const Reducer& r : reducers_) {
        if (r.poly != &basis_[g]) others.push_back(r);
      }
      kernel_.addMultiple(basis_[g], 1, 1, one_);
      std::vector<Term> terms{basis_[g][0]};
      for (Term& t : kernel_.reduce(others, steps())) terms.push_back(t);
      out.push_back(Polynomial::fromSortedTerms(ring_, order_, std::move(terms)));
    }
    return out;
  }

  Ring ring_;
  MonomialOrder order_;
  GroebnerOptions options_;
  ReductionKernel kernel_;
  std::set<Pair, PairLess> queue_;
  Monomial one_;
  std::vector<Polynomial> inputs_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leading_;
  std::vector<bool> active_;
  std::vector<Reducer> reducers_;
  std::optional<HilbertCoverage> coverage_;
};

}  // namespace

bool GroebnerBasis::isUnit() const {
  return std::any_of(elements_.begin(), elements_.end(), [](const Polynomial& g) { return g.degree() == 0; });
}

int GroebnerBasis::minDegree() const {
  if (elements_.empty()) throw DomainError("the zero ideal has no initial degree");
  int d = elements_.front().degree();
  for (const Polynomial& g : elements_) d = std::min(d, g.degree());
  return d;
}

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order, const GroebnerOptions& options) {
  if (ideal.size() == 0) throw DomainError("buchberger needs at least one generator");
  const bool homogeneous = ideal.isHomogeneous();
  if (options.maxDegree && !homogeneous && order.kind() != MonomialOrder::Kind::Elimination) {
    throw DomainError("degree-truncated bases need homogeneous input");
  }
  BuchbergerEngine engine(ideal.ring(), order, options, homogeneous);
  return engine.run(ideal.generators());
}

Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> divisors) {
  std::vector<Reducer> reducers;
  for (const Polynomial& g : divisors) {
    if (!(g.ring() == f.ring())) throw RingMismatchError("normalForm: divisor in another ring");
    requireOrder(g, f.order());
    if (g.isZero()) continue;
    reducers.push_back({&g, g.leadingMonomial(), f.field().inv(g.leadingCoeff())});
  }
  ReductionKernel kernel(f.field(), f.order());
  kernel.addMultiple(f, 0, 1, Monomial(f.nvars()));
  return Polynomial::fromSortedTerms(f.ring(), f.order(), kernel.reduce(reducers, nullptr));
}

MonomialIdeal initialIdeal(const GroebnerBasis& basis) {
  if (!basis.reduced()) throw DomainError("initialIdeal expects a reduced Groebner basis");
  std::vector<Monomial> leading;
  for (const Polynomial& g : basis.elements()) leading.push_back(g.leadingMonomial());
  return MonomialIdeal(basis.ring().nvars, std::move(leading));
}

bool satisfiesBuchbergerCriterion(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Polynomial& f = basis[i];
      const Polynomial& g = basis[j];
      const Monomial l = f.leadingMonomial().lcm(g.leadingMonomial());
      const FieldConfig& F = f.field();
      const Polynomial s = f.mulByTerm(F.inv(f.leadingCoeff()), l / f.leadingMonomial()) -
                           g.mulByTerm(F.inv(g.leadingCoeff()), l / g.leadingMonomial());
      if (!normalForm(s, basis).isZero()) return false;
    }
  }
  return true;
}

bool idealContains(const GroebnerBasis& basis, const Polynomial& f) {
  return normalForm(f.reordered(basis.order()), basis.elements()).isZero();
}

namespace {

bool isZeroIdeal(const Ideal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Polynomial& g) { return g.isZero(); });
}

}  // namespace

bool idealSubset(const Ideal& sub, const Ideal& super) {
  if (isZeroIdeal(sub)) return true;
  if (isZeroIdeal(super)) return false;
  const GroebnerBasis gb = buchberger(super, MonomialOrder::grevlex());
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Polynomial& g) { return idealContains(gb, g); });
}

bool idealsEqual(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatchError("comparing ideals of different rings");
  return idealSubset(a, b) && idealSubset(b, a);
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatchError("intersecting ideals of different rings");
  const Ring& ring = a.ring();
  if (isZeroIdeal(a) || isZeroIdeal(b)) return Ideal::makeUnchecked(ring, {});
  if (ring.nvars + 1 > kMaxVars) throw DomainError("no room for the elimination variable");
  const Ring extended{ring.nvars + 1, ring.field};
  const MonomialOrder elim = MonomialOrder::elimination();
  const Polynomial t = Polynomial::variable(extended, elim, 0);
  const Polynomial oneMinusT = Polynomial::constant(extended, elim, 1) - t;

  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.generators()) {
    if (!g.isZero()) gens.push_back(t * g.embedded(extended, 1, elim));
  }
  for (const Polynomial& h : b.generators()) {
    if (!h.isZero()) gens.push_back(oneMinusT * h.embedded(extended, 1, elim));
  }
  const GroebnerBasis gb = buchberger(Ideal::makeUnchecked(extended, std::move(gens)), elim);

  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.elements()) {
    if (g.leadingMonomial()[0] != 0) continue;
    std::vector<Term> terms;
    for (const Term& term : g.terms()) {
      std::vector<int> exps(ring.nvars);
      for (int v = 0; v < ring.nvars; ++v) exps[v] = term.monomial[v + 1];
      terms.push_back({term.coeff, Monomial(ring.nvars, exps)});
    }
    out.push_back(Polynomial::fromTerms(ring, MonomialOrder::grevlex(), std::move(terms)));
  }
  return Ideal::makeUnchecked(ring, std::move(out));
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  if (f.isZero()) throw DomainError("colon by the zero polynomial");
  if (!(f.ring() == ideal.ring())) throw RingMismatchError("colon by a polynomial of another ring");
  if (f.isConstant()) return ideal;
  const Polynomial divisor = f.reordered(MonomialOrder::grevlex());
  const Ideal meet = intersect(ideal, Ideal::makeUnchecked(ideal.ring(), {divisor}));
  std::vector<Polynomial> gens;
  for (const Polynomial& g : meet.generators()) gens.push_back(divideExact(g.reordered(divisor.order()), divisor));
  return Ideal::makeUnchecked(ideal.ring(), std::move(gens));
}

Ideal colonByIrrelevant(const Ideal& ideal) {
  const Ring& ring = ideal.ring();
  std::vector<Ideal> colons;
  for (int v = 0; v < ring.nvars; ++v) {
    Ideal c = colon(ideal, Polynomial::variable(ring, MonomialOrder::grevlex(), v));
    // (I : m) sits between I and every (I : x_v).
    if (idealSubset(c, ideal)) return ideal;
    colons.push_back(std::move(c));
  }
  if (colons.empty()) return ideal;
  Ideal result = colons.front();
  for (std::size_t k = 1; k < colons.size(); ++k) result = intersect(result, colons[k]);
  return result;
}

Ideal saturateByIrrelevant(const Ideal& ideal) {
  Ideal current = ideal;
  while (true) {
    Ideal next = colonByIrrelevant(current);
    if (idealSubset(next, current)) return current;
    current = std::move(next);
  }
}

}  // namespace gincomplex
