#include "cohann/ideal.hpp"

#include <algorithm>
#include <functional>

#include "cohann/error.hpp"

namespace cohann {

namespace {

ReducedGroebnerBasis basis_of(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  if (gens.empty()) return {ring, {}};
  return buchberger(gens);
}

void check_same(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch();
}

// Copies of `ps` in `target`, which has the same variables followed by
// `extra` more; exponents are carried over positionally.
std::vector<Polynomial> shifted(const std::vector<Polynomial>& ps, const RingPtr& target,
                                std::size_t offset) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ps.front().ring()->arity(); ++i)
    images.push_back(Polynomial::variable(target, i + offset));
  std::vector<Polynomial> out;
  for (const auto& p : ps) out.push_back(p.substitute(target, images));
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    check_same(g.ring(), ring_);
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
  gb_ = basis_of(ring_, gens_);
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

bool Ideal::contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

bool Ideal::contains(const Ideal& o) const {
  for (const auto& g : o.gb_.elements)
    if (!contains(g)) return false;
  return true;
}

Polynomial Ideal::normal_form(const Polynomial& p) const {
  check_same(p.ring(), ring_);
  return cohann::normal_form(p, gb_);
}

bool Ideal::is_unit() const {
  return gb_.elements.size() == 1 && gb_.elements.front().is_unit();
}

std::vector<Monomial> Ideal::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : gb_.elements) out.push_back(g.leading_monomial());
  return out;
}

QuotientRing::QuotientRing(RingPtr ambient, std::vector<Polynomial> relations)
    : ambient_(ambient), relations_(ambient, std::move(relations)) {}

Ideal QuotientRing::ideal(std::vector<Polynomial> gens) const {
  for (const auto& r : relations_.generators()) gens.push_back(r);
  return Ideal(ambient_, std::move(gens));
}

bool ideal_membership(const Polynomial& p, const Ideal& i) { return i.contains(p); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same(a.ring(), b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.gb().elements)
    for (const auto& g : b.gb().elements) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned n) {
  Ideal out = Ideal::unit(a.ring());
  for (unsigned k = 0; k < n; ++k) out = ideal_product(out, a);
  return out;
}

Ideal colon(const Ideal& i, const Polynomial& g) {
  check_same(i.ring(), g.ring());
  const RingPtr& ring = i.ring();
  if (i.contains(g)) return Ideal::unit(ring);
  // Syzygies of (g, b_1, .., b_m): their first coordinates are exactly (I : g).
  std::vector<Vector> cols{{g}};
  for (const auto& b : i.gb().elements) cols.push_back({b});
  std::vector<Polynomial> gens;
  for (const auto& s : syzygy_matrix(ring, 1, cols))
    if (!s[0].is_zero()) gens.push_back(s[0]);
  return Ideal(ring, std::move(gens));
}

Ideal colon(const Ideal& i, const Ideal& j) {
  check_same(i.ring(), j.ring());
  Ideal out = Ideal::unit(i.ring());
  for (const auto& g : j.gb().elements) out = intersect(out, colon(i, g));
  return out;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  // t*A + (1-t)*B, eliminating t (placed first, under a block order).
  std::vector<std::string> vars{fresh_variable(*ring, "t")};
  vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
  std::vector<std::int64_t> weights{1};
  weights.insert(weights.end(), ring->weights().begin(), ring->weights().end());
  RingPtr big = PolyRing::make(ring->field(), vars, MonomialOrder::elimination(1), weights);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : shifted(a.gb().elements, big, 1)) gens.push_back(t * f);
  for (const auto& g : shifted(b.gb().elements, big, 1)) gens.push_back(one_minus_t * g);
  auto gb = buchberger(gens);
  std::vector<Polynomial> images{Polynomial(ring)};
  for (std::size_t i = 0; i < ring->arity(); ++i) images.push_back(Polynomial::variable(ring, i));
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements)
    if (e.leading_monomial()[0] == 0) out.push_back(e.substitute(ring, images));
  return Ideal(ring, std::move(out));
}

Ideal eliminate(const Ideal& i, std::size_t first_k) {
  const RingPtr& ring = i.ring();
  if (first_k > ring->arity()) throw DomainError("cannot eliminate more variables than exist");
  if (first_k == 0 || i.is_zero()) return i;
  RingPtr block = ring->with_order(MonomialOrder::elimination(first_k));
  std::vector<Polynomial> gens;
  for (const auto& g : i.gb().elements) gens.push_back(g.in_ring(block));
  auto gb = buchberger(gens);
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements) {
    // Under the block order a lead free of the first block means e is free of it.
    bool free = true;
    for (std::size_t v = 0; v < first_k && free; ++v)
      if (e.leading_monomial()[v]) free = false;
    if (free) out.push_back(e.in_ring(ring));
  }
  return Ideal(ring, std::move(out));
}

bool radical_membership(const Polynomial& g, const Ideal& i) {
  check_same(g.ring(), i.ring());
  if (i.contains(g)) return true;
  if (i.is_zero()) return g.is_zero();
  const RingPtr& ring = i.ring();
  RingPtr big = ring->with_extra_vars({fresh_variable(*ring, "t")}, ring->order());
  std::vector<Polynomial> gens = shifted(i.gb().elements, big, 0);
  Polynomial gt = shifted({g}, big, 0).front();
  gens.push_back(Polynomial::constant(big, 1) - Polynomial::variable(big, ring->arity()) * gt);
  auto gb = buchberger(gens);
  return gb.elements.size() == 1 && gb.elements.front().is_unit();
}

bool is_nonzerodivisor(const Polynomial& g, const QuotientRing& r) {
  if (r.is_zero(g)) return false;
  return colon(r.relations(), g) == r.relations();
}

StandardMonomials standard_monomials(const Ideal& i) {
  return standard_monomials(*i.ring(), i.leading_monomials());
}

StandardMonomials standard_monomials(const PolyRing& ring, const std::vector<Monomial>& leads) {
  StandardMonomials out;
  for (const auto& m : leads)
    if (m.is_one()) {
      out.finite = true;
      return out;
    }
  std::size_t n = ring.arity();
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& m : leads) {
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v]) {
        ++support;
        var = v;
      }
    if (support == 1 && (bound[var] == 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  for (std::size_t v = 0; v < n; ++v)
    if (bound[v] == 0) return out;
  out.finite = true;
  std::vector<std::uint32_t> exps(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == n) {
      Monomial m = ring.monomial(exps);
      for (const auto& l : leads)
        if (l.divides(m)) return;
      out.monomials.push_back(m);
      return;
    }
    for (std::uint32_t e = 0; e < bound[v]; ++e) {
      exps[v] = e;
      walk(v + 1);
    }
    exps[v] = 0;
  };
  walk(0);
  std::sort(out.monomials.begin(), out.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) < 0; });
  return out;
}

int krull_dimension(const Ideal& i) {
  if (i.is_unit()) return -1;
  std::size_t n = i.ring()->arity();
  std::vector<std::uint64_t> masks;
  for (const auto& m : i.leading_monomials()) {
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v]) mask |= std::uint64_t{1} << v;
    masks.push_back(mask);
  }
  auto independent = [&](std::uint64_t s) {
    for (auto m : masks)
      if ((m & ~s) == 0) return false;
    return true;
  };
  int best = 0;
  // Independence is inherited by subsets, so branch-and-bound on size.
  std::function<void(std::size_t, std::uint64_t, int)> search = [&](std::size_t v,
                                                                   std::uint64_t s, int size) {
    if (size + static_cast<int>(n - v) <= best) return;
    if (v == n) {
      best = size;
      return;
    }
    std::uint64_t with = s | (std::uint64_t{1} << v);
    if (independent(with)) search(v + 1, with, size + 1);
    search(v + 1, s, size);
  };
  search(0, 0, 0);
  return best;
}

std::string fresh_variable(const PolyRing& ring, const std::string& stem) {
  if (ring.var_index(stem) < 0) return stem;
  for (int k = 0;; ++k) {
    std::string name = stem + "_" + std::to_string(k);
    if (ring.var_index(name) < 0) return name;
  }
}

std::vector<Polynomial> generators_modulo(const Ideal& j, const Ideal& base) {
  std::vector<Polynomial> kept = j.gb().elements;
  // Elements are sorted largest first.
  for (std::size_t k = 0; k < kept.size();) {
    std::vector<Polynomial> others = base.generators();
    for (std::size_t m = 0; m < kept.size(); ++m)
      if (m != k) others.push_back(kept[m]);
    if (Ideal(j.ring(), others).contains(kept[k])) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return kept;
}

std::vector<std::string> to_strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace cohann
