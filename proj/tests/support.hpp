#pragma once

#include <random>
#include <string>
#include <vector>

#include "gincomplex/groebner.hpp"
#include "gincomplex/parser.hpp"

namespace testsupport {

using namespace gincomplex;

inline Polynomial P(const Ring& ring, const std::string& text, MonomialOrder order = MonomialOrder::grevlex()) {
  return parsePolynomial(text, ring).reordered(order);
}

inline Ideal idealOf(const Ring& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  for (const std::string& g : gens) polys.push_back(P(ring, g));
  return Ideal::makeUnchecked(ring, std::move(polys));
}

inline MonomialIdeal monos(int nvars, const std::vector<std::string>& gens, int firstIndex = 0) {
  std::vector<Monomial> out;
  for (const std::string& g : gens) out.push_back(parseMonomial(g, nvars, firstIndex));
  return MonomialIdeal(nvars, std::move(out));
}

inline Monomial randomMonomial(std::mt19937_64& rng, int nvars, int maxExp) {
  std::vector<int> e(nvars);
  for (int& x : e) x = static_cast<int>(rng() % (maxExp + 1));
  return Monomial(nvars, e);
}

inline Polynomial randomHomogeneous(std::mt19937_64& rng, const Ring& ring, int degree, int terms,
                                    MonomialOrder order = MonomialOrder::grevlex()) {
  const std::vector<Monomial> all = monomialsOfDegree(ring.nvars, degree);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    out.push_back({static_cast<Coeff>(1 + rng() % (ring.field.prime() - 1)), all[rng() % all.size()]});
  }
  return Polynomial::fromTerms(ring, order, std::move(out));
}

}  // namespace testsupport
