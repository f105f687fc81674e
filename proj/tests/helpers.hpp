#pragma once

#include <random>
#include <string>
#include <vector>

#include "cohann/ideal.hpp"
#include "cohann/parser.hpp"

namespace testing {

using namespace cohann;

inline RingPtr ring(std::vector<std::string> vars, std::uint32_t p = 0,
                    MonomialOrder order = {}, std::vector<std::int64_t> weights = {}) {
  return PolyRing::make(Field(p), std::move(vars), order, std::move(weights));
}

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse_poly(s, r); }

inline std::vector<Polynomial> Ps(const RingPtr& r, const std::vector<std::string>& ss) {
  std::vector<Polynomial> out;
  for (const auto& s : ss) out.push_back(parse_poly(s, r));
  return out;
}

inline Ideal I(const RingPtr& r, const std::vector<std::string>& ss) { return Ideal(r, Ps(r, ss)); }

/// Random nonzero polynomial with small integer coefficients and bounded degree.
inline Polynomial random_poly(const RingPtr& r, std::mt19937& rng, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> coef(-3, 3), nterms(1, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    std::vector<std::uint32_t> e(r->arity(), 0);
    int d = deg(rng);
    std::uniform_int_distribution<std::size_t> var(0, r->arity() - 1);
    for (int j = 0; j < d; ++j) ++e[var(rng)];
    int c = coef(rng);
    if (c == 0) c = 1;
    terms.push_back({r->monomial(e), Coefficient::from_int(r->field(), c)});
  }
  Polynomial out(r, std::move(terms));
  return out.is_zero() ? random_poly(r, rng, max_deg, max_terms) : out;
}

}  // namespace testing
