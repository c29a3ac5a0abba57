#include "gincomplex/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace gincomplex {

namespace {

void requireSameRing(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring() == b.ring())) {
    throw RingMismatchError("polynomials live in different rings");
  }
  if (!(a.order() == b.order())) {
    throw RingMismatchError("polynomials are sorted by different orders (" + a.order().name() + " vs " +
                            b.order().name() + "); reorder explicitly");
  }
}

using Accumulator = std::unordered_map<Monomial, Coeff, MonomialHash>;

Polynomial fromAccumulator(const Ring& ring, MonomialOrder order, const Accumulator& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != 0) terms.push_back({c, m});
  }
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return Polynomial::fromSortedTerms(ring, order, std::move(terms));
}

}  // namespace

Polynomial::Polynomial(const Ring& ring, MonomialOrder order) : ring_(ring), order_(order) {}

Polynomial Polynomial::fromTerms(const Ring& ring, MonomialOrder order, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.monomial.nvars() != ring.nvars) {
      throw RingMismatchError("monomial with " + std::to_string(t.monomial.nvars()) + " variables in a ring with " +
                              std::to_string(ring.nvars));
    }
  }
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (const Term& t : terms) {
    const Coeff c = t.coeff % ring.field.prime();
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff = ring.field.add(merged.back().coeff, c);
    } else {
      merged.push_back({c, t.monomial});
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  return Polynomial(ring, order, std::move(merged));
}

Polynomial Polynomial::fromSortedTerms(const Ring& ring, MonomialOrder order, std::vector<Term> terms) {
  return Polynomial(ring, order, std::move(terms));
}

Polynomial Polynomial::constant(const Ring& ring, MonomialOrder order, std::int64_t c) {
  const Coeff v = ring.field.fromInteger(c);
  if (v == 0) return Polynomial(ring, order);
  return Polynomial(ring, order, std::vector<Term>{{v, Monomial(ring.nvars)}});
}

Polynomial Polynomial::variable(const Ring& ring, MonomialOrder order, int var) {
  return Polynomial(ring, order, std::vector<Term>{{1, Monomial::variable(ring.nvars, var)}});
}

Polynomial Polynomial::monomial(const Ring& ring, MonomialOrder order, Coeff c, const Monomial& m) {
  return fromTerms(ring, order, {{c, m}});
}

const Term& Polynomial::leadingTerm() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::isHomogeneous() const {
  for (const Term& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

Polynomial Polynomial::reordered(MonomialOrder order) const {
  std::vector<Term> terms = terms_;
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return Polynomial(ring_, order, std::move(terms));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field().inv(terms_.front().coeff));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> terms = terms_;
  for (Term& t : terms) t.coeff = field().neg(t.coeff);
  return Polynomial(ring_, order_, std::move(terms));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a, b);
  const FieldConfig& F = a.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = a.order().compare3(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      const Coeff s = F.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({s, a[i].monomial});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return Polynomial(a.ring(), a.order(), std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a, b);
  if (a.isZero() || b.isZero()) return Polynomial(a.ring(), a.order());
  const FieldConfig& F = a.field();
  Accumulator acc;
  acc.reserve(a.size() * b.size());
  for (const Term& s : a.terms()) {
    for (const Term& t : b.terms()) {
      Coeff& slot = acc[s.monomial * t.monomial];
      slot = F.add(slot, F.mul(s.coeff, t.coeff));
    }
  }
  return fromAccumulator(a.ring(), a.order(), acc);
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= field().prime();
  if (c == 0) return Polynomial(ring_, order_);
  std::vector<Term> terms = terms_;
  for (Term& t : terms) t.coeff = field().mul(t.coeff, c);
  return Polynomial(ring_, order_, std::move(terms));
}

Polynomial Polynomial::mulByTerm(Coeff c, const Monomial& m) const {
  if (m.nvars() != nvars()) throw RingMismatchError("term has the wrong number of variables");
  c %= field().prime();
  if (c == 0) return Polynomial(ring_, order_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) terms.push_back({field().mul(t.coeff, c), t.monomial * m});
  return Polynomial(ring_, order_, std::move(terms));
}

Polynomial Polynomial::embedded(const Ring& target, int offset, MonomialOrder order) const {
  if (!(target.field == field())) throw RingMismatchError("cannot embed into a ring over another field");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) terms.push_back({t.coeff, t.monomial.shifted(offset, target.nvars)});
  return fromTerms(target, order, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring() == b.ring())) return false;
  if (a.order() == b.order()) return a.terms_ == b.terms_;
  return a.terms_ == b.reordered(a.order()).terms_;
}

std::string Polynomial::toString(int firstIndex) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    std::int64_t c = field().toSigned(t.coeff);
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = c < 0 ? -c : c;
    if (t.monomial.isOne()) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += t.monomial.toString(firstIndex);
    }
  }
  return out;
}

Polynomial addPoly(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial scalePoly(const Polynomial& f, Coeff c) { return f.scaled(c); }
Polynomial mulByTerm(const Polynomial& f, Coeff c, const Monomial& m) { return f.mulByTerm(c, m); }
Polynomial mulPoly(const Polynomial& f, const Polynomial& g) { return f * g; }

std::pair<FieldElement, Monomial> leadingTerm(const Polynomial& f, MonomialOrder order) {
  if (f.isZero()) throw DomainError("leading term of the zero polynomial");
  if (f.order() == order) return {FieldElement(f.field(), f.leadingCoeff()), f.leadingMonomial()};
  const Term* best = &f[0];
  for (const Term& t : f.terms()) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return {FieldElement(f.field(), best->coeff), best->monomial};
}

int d0(const Polynomial& f) {
  if (f.nvars() == 0) throw DomainError("d0 needs at least one variable");
  return leadingTerm(f, MonomialOrder::glex()).second[0];
}

Polynomial divideExact(const Polynomial& h, const Polynomial& f) {
  requireSameRing(h, f);
  if (f.isZero()) throw DivisionByZeroError("division by the zero polynomial");
  const FieldConfig& F = h.field();
  const Coeff lcInv = F.inv(f.leadingCoeff());
  std::vector<Term> quotient;
  Polynomial r = h;
  while (!r.isZero()) {
    const Term& lt = r.leadingTerm();
    if (!f.leadingMonomial().divides(lt.monomial)) {
      throw DomainError("divideExact: divisor does not divide the dividend");
    }
    const Term q{F.mul(lt.coeff, lcInv), lt.monomial / f.leadingMonomial()};
    quotient.push_back(q);
    r = r - f.mulByTerm(q.coeff, q.monomial);
  }
  return Polynomial::fromSortedTerms(h.ring(), h.order(), std::move(quotient));
}

std::vector<Coeff> invertMatrix(const FieldConfig& F, int n, std::span<const Coeff> matrix) {
  // Gauss-Jordan on [A | I].
  const int w = 2 * n;
  std::vector<Coeff> a(static_cast<std::size_t>(n) * w, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * w + j] = matrix[i * n + j] % F.prime();
    a[i * w + n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a[r * w + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return {};
    if (pivot != col) {
      for (int j = 0; j < w; ++j) std::swap(a[pivot * w + j], a[col * w + j]);
    }
    const Coeff inv = F.inv(a[col * w + col]);
    for (int j = 0; j < w; ++j) a[col * w + j] = F.mul(a[col * w + j], inv);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r * w + col] == 0) continue;
      const Coeff factor = a[r * w + col];
      for (int j = 0; j < w; ++j) a[r * w + j] = F.sub(a[r * w + j], F.mul(factor, a[col * w + j]));
    }
  }
  std::vector<Coeff> inverse(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inverse[i * n + j] = a[i * w + n + j];
  }
  return inverse;
}

CoordinateChange::CoordinateChange(const FieldConfig& field, int n, std::vector<Coeff> matrix, std::uint64_t seed)
    : field_(field), n_(n), matrix_(std::move(matrix)), seed_(seed) {
  if (n < 0 || static_cast<std::size_t>(n) * n != matrix_.size()) {
    throw DomainError("coordinate change needs an n x n matrix");
  }
  for (Coeff& c : matrix_) c %= field.prime();
  inverse_ = invertMatrix(field, n, matrix_);
  if (n > 0 && inverse_.empty()) throw DomainError("coordinate change matrix is singular");
}

CoordinateChange CoordinateChange::identity(const FieldConfig& field, int n) {
  std::vector<Coeff> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return CoordinateChange(field, n, std::move(m));
}

CoordinateChange CoordinateChange::inverse() const { return CoordinateChange(field_, n_, inverse_, matrix_, seed_); }

Polynomial applyLinearChange(const Polynomial& f, const CoordinateChange& g) {
  if (g.size() != f.nvars()) {
    throw RingMismatchError("coordinate change of size " + std::to_string(g.size()) + " applied in " +
                            std::to_string(f.nvars()) + " variables");
  }
  if (!(g.field() == f.field())) throw RingMismatchError("coordinate change over a different field");
  const int n = f.nvars();
  const Ring& ring = f.ring();
  const MonomialOrder order = f.order();

  // powers[i][e] = (sum_j g(i,j) x_j)^e, built lazily.
  std::vector<std::vector<Polynomial>> powers(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (int j = 0; j < n; ++j) {
      if (g.at(i, j) != 0) terms.push_back({g.at(i, j), Monomial::variable(n, j)});
    }
    powers[i].push_back(Polynomial::constant(ring, order, 1));
    powers[i].push_back(Polynomial::fromTerms(ring, order, std::move(terms)));
  }
  auto power = [&](int i, int e) -> const Polynomial& {
    while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][e];
  };

  const FieldConfig& F = f.field();
  Accumulator acc;
  for (const Term& t : f.terms()) {
    Polynomial image = Polynomial::constant(ring, order, t.coeff);
    for (int i = 0; i < n; ++i) {
      if (t.monomial[i] > 0) image = image * power(i, t.monomial[i]);
    }
    for (const Term& s : image.terms()) {
      Coeff& slot = acc[s.monomial];
      slot = F.add(slot, s.coeff);
    }
  }
  return fromAccumulator(ring, order, acc);
}

Ideal::Ideal(const Ring& ring, std::vector<Polynomial> generators) : ring_(ring), generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const Polynomial& g = generators_[i];
    if (!(g.ring() == ring_)) throw RingMismatchError("generator " + std::to_string(i) + " lives in another ring");
    if (g.isZero()) throw DomainError("generator " + std::to_string(i) + " is zero");
    if (!g.isHomogeneous()) throw DomainError("generator " + std::to_string(i) + " is not homogeneous");
  }
}

Ideal Ideal::makeUnchecked(const Ring& ring, std::vector<Polynomial> generators) {
  return Ideal(ring, std::move(generators), Unchecked{});
}

bool Ideal::isHomogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.isHomogeneous(); });
}

Ideal applyLinearChange(const Ideal& ideal, const CoordinateChange& g) {
  std::vector<Polynomial> gens;
  gens.reserve(ideal.size());
  for (const Polynomial& f : ideal.generators()) gens.push_back(applyLinearChange(f, g));
  return Ideal::makeUnchecked(ideal.ring(), std::move(gens));
}

}  // namespace gincomplex
