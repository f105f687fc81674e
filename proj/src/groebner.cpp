#include "cohann/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "cohann/error.hpp"

namespace cohann {

GbOptions& gb_options() {
  thread_local GbOptions opts;
  return opts;
}

GbStats& gb_stats() {
  thread_local GbStats stats;
  return stats;
}

ModVec to_modvec(const Vector& v, std::uint32_t offset) {
  ModVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : v[i].terms())
      out.push_back({offset + static_cast<std::uint32_t>(i), t.mono, t.coef});
  return out;
}

Vector from_modvec(const RingPtr& ring, const ModVec& v, std::uint32_t from, std::size_t len) {
  std::vector<std::vector<Term>> parts(len);
  for (const auto& t : v)
    if (t.comp >= from && t.comp < from + len) parts[t.comp - from].push_back({t.mono, t.coef});
  Vector out;
  out.reserve(len);
  for (auto& p : parts) out.emplace_back(ring, std::move(p));
  return out;
}

ModVec poly_to_modvec(const Polynomial& p, std::uint32_t comp) {
  ModVec out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({comp, t.mono, t.coef});
  return out;
}

Polynomial modvec_to_poly(const RingPtr& ring, const ModVec& v) {
  return from_modvec(ring, v, 0, 1)[0];
}

namespace {

class TermOrder {
public:
  TermOrder(const PolyRing& ring, const ModuleOrder& order) : ring_(ring), order_(order) {}

  int operator()(const ModTerm& a, const ModTerm& b) const {
    int ga = a.comp < order_.data_comps ? 0 : 1;
    int gb = b.comp < order_.data_comps ? 0 : 1;
    if (ga != gb) return ga < gb ? 1 : -1;
    auto scheme = ga == 0 ? order_.data : order_.tail;
    if (scheme == ModuleOrder::Scheme::PositionOverTerm) {
      if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
      return ring_.compare(a.mono, b.mono);
    }
    int c = ring_.compare_grevlex_range(a.mono, b.mono, 0, order_.elim_vars);
    if (c) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return ring_.compare_grevlex_range(a.mono, b.mono, order_.elim_vars, ring_.arity());
  }

private:
  const PolyRing& ring_;
  const ModuleOrder& order_;
};

void sort_combine(ModVec& v, const TermOrder& cmp) {
  std::sort(v.begin(), v.end(), [&](const ModTerm& a, const ModTerm& b) { return cmp(a, b) > 0; });
  ModVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef += t.coef;
      if (out.back().coef.is_zero()) out.pop_back();
    } else if (!t.coef.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  v = std::move(out);
}

// a[from..] - c * m * b[bfrom..]
ModVec sub_scaled(const ModVec& a, std::size_t from, const ModVec& b, std::size_t bfrom,
                  const Monomial& m, const Coefficient& c, const TermOrder& cmp) {
  ModVec out;
  out.reserve(a.size() - from + b.size() - bfrom);
  std::size_t i = from, j = bfrom;
  ModTerm scaled;
  bool have = false;
  auto load = [&] {
    if (j < b.size()) {
      scaled = {b[j].comp, b[j].mono * m, b[j].coef * c};
      have = true;
    } else {
      have = false;
    }
  };
  load();
  while (i < a.size() || have) {
    int r = i == a.size() ? -1 : !have ? 1 : cmp(a[i], scaled);
    if (r > 0) {
      out.push_back(a[i++]);
    } else if (r < 0) {
      scaled.coef = -scaled.coef;
      out.push_back(std::move(scaled));
      ++j;
      load();
    } else {
      Coefficient s = a[i].coef - scaled.coef;
      if (!s.is_zero()) out.push_back({a[i].comp, a[i].mono, std::move(s)});
      ++i;
      ++j;
      load();
    }
  }
  return out;
}

void make_monic(ModVec& v) {
  if (v.empty() || v.front().coef.is_one()) return;
  Coefficient inv = v.front().coef.inverse();
  for (auto& t : v) t.coef *= inv;
}

class Reducer {
public:
  explicit Reducer(const TermOrder& cmp) : cmp_(cmp) {}

  void add(const ModVec* g) { basis_.push_back(g); }
  void clear() { basis_.clear(); }

  const ModVec* divisor(const ModTerm& t, const ModVec* skip = nullptr) const {
    for (const ModVec* g : basis_) {
      if (g == skip) continue;
      const auto& lt = g->front();
      if (lt.comp == t.comp && lt.mono.divides(t.mono)) return g;
    }
    return nullptr;
  }

  // Full reduction (every term), or only the leading term when `top_only`.
  ModVec reduce(ModVec p, const ModVec* skip = nullptr, bool top_only = false) const {
    ModVec rem;
    std::size_t head = 0;
    while (head < p.size()) {
      const ModTerm& t = p[head];
      const ModVec* g = divisor(t, skip);
      if (!g) {
        if (top_only) {
          rem.insert(rem.end(), p.begin() + static_cast<std::ptrdiff_t>(head), p.end());
          return rem;
        }
        rem.push_back(t);
        ++head;
        continue;
      }
      ++gb_stats().reductions;
      Monomial m = t.mono / g->front().mono;
      Coefficient c = t.coef;  // g is monic
      p = sub_scaled(p, head + 1, *g, 1, m, c, cmp_);
      head = 0;
    }
    return rem;
  }

private:
  const TermOrder& cmp_;
  std::vector<const ModVec*> basis_;
};

struct PairKey {
  std::int64_t deg;
  std::size_t i, j;
  friend bool operator<(const PairKey& a, const PairKey& b) {
    return std::tie(a.deg, a.i, a.j) < std::tie(b.deg, b.i, b.j);
  }
};

std::vector<ModVec> run_buchberger(const PolyRing& ring, std::size_t rank,
                                   const ModuleOrder& order, std::vector<ModVec> gens) {
  TermOrder cmp(ring, order);
  ++gb_stats().bases;
  const std::size_t max_pairs = gb_options().max_pairs;
  std::vector<std::unique_ptr<ModVec>> basis;
  Reducer reducer(cmp);
  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_element = [&](ModVec h) {
    make_monic(h);
    std::size_t k = basis.size();
    basis.push_back(std::make_unique<ModVec>(std::move(h)));
    const ModVec& nk = *basis.back();
    for (std::size_t i = 0; i < k; ++i) {
      const ModVec& gi = *basis[i];
      if (gi.front().comp != nk.front().comp) continue;
      if (rank == 1 && gi.front().mono.coprime(nk.front().mono)) continue;
      auto l = ring.lcm(gi.front().mono, nk.front().mono);
      queue.insert({l.degree(), i, k});
      pending.insert({i, k});
    }
    reducer.add(basis.back().get());
  };

  for (auto& g : gens) {
    sort_combine(g, cmp);
    ModVec h = reducer.reduce(std::move(g));
    if (!h.empty()) add_element(std::move(h));
  }

  std::size_t processed = 0;
  while (!queue.empty()) {
    PairKey key = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({key.i, key.j});
    const ModVec& gi = *basis[key.i];
    const ModVec& gj = *basis[key.j];
    Monomial l = ring.lcm(gi.front().mono, gj.front().mono);
    auto comp = gi.front().comp;

    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == key.i || k == key.j) continue;
      const auto& lk = basis[k]->front();
      if (lk.comp != comp || !lk.mono.divides(l)) continue;
      auto p1 = std::minmax(key.i, k);
      auto p2 = std::minmax(key.j, k);
      if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
        skip = true;
    }
    if (skip) continue;

    if (++processed > max_pairs) throw BudgetExceeded(processed - 1);
    ++gb_stats().pairs;
    ModVec left;
    left.reserve(gi.size());
    Monomial mi = l / gi.front().mono;
    for (std::size_t t = 1; t < gi.size(); ++t)
      left.push_back({gi[t].comp, gi[t].mono * mi, gi[t].coef});
    ModVec s = sub_scaled(left, 0, gj, 1, l / gj.front().mono, Coefficient::one(ring.field()), cmp);
    ModVec h = reducer.reduce(std::move(s));
    if (!h.empty()) add_element(std::move(h));
  }

  // Minimalize.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& li = basis[i]->front();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& lj = basis[j]->front();
      if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
      // Equal leads: keep the earlier one.
      if (lj.mono == li.mono && j > i) continue;
      redundant = true;
    }
    keep[i] = !redundant;
  }
  std::vector<ModVec> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(*basis[i]));
  // Interreduce tails.
  Reducer tails(cmp);
  for (const auto& g : minimal) tails.add(&g);
  std::vector<ModVec> reduced;
  reduced.reserve(minimal.size());
  for (const auto& g : minimal) {
    ModVec tail(g.begin() + 1, g.end());
    ModVec r = tails.reduce(std::move(tail), &g);
    r.insert(r.begin(), g.front());
    make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const ModVec& a, const ModVec& b) {
    return cmp(a.front(), b.front()) > 0;
  });
  return reduced;
}

}  // namespace

ModuleGB::ModuleGB(RingPtr ring, std::size_t rank, ModuleOrder order, std::vector<ModVec> gens)
    : ring_(std::move(ring)), rank_(rank), order_(order) {
  for (const auto& g : gens)
    for (const auto& t : g)
      if (t.comp >= rank_) throw DomainError("module element has a component beyond the rank");
  basis_ = run_buchberger(*ring_, rank_, order_, std::move(gens));
}

ModVec ModuleGB::reduce(ModVec v) const {
  TermOrder cmp(*ring_, order_);
  sort_combine(v, cmp);
  Reducer r(cmp);
  for (const auto& g : basis_) r.add(&g);
  return r.reduce(std::move(v));
}

int ModuleGB::compare(const ModTerm& a, const ModTerm& b) const {
  return TermOrder(*ring_, order_)(a, b);
}

ReducedGroebnerBasis buchberger(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw DomainError("buchberger needs at least one generator to fix the ring");
  RingPtr ring = gens.front().ring();
  std::vector<ModVec> mv;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch();
    if (!g.is_zero()) mv.push_back(poly_to_modvec(g));
  }
  ModuleGB gb(ring, 1, ModuleOrder::pot(), std::move(mv));
  ReducedGroebnerBasis out{ring, {}};
  for (const auto& e : gb.elements()) out.elements.push_back(modvec_to_poly(ring, e));
  return out;
}

ModuleGB buchberger(const RingPtr& ring, std::size_t rank, const std::vector<Vector>& gens,
                    ModuleOrder order) {
  std::vector<ModVec> mv;
  for (const auto& g : gens) {
    if (g.size() != rank) throw DomainError("generator length does not match module rank");
    for (const auto& p : g)
      if (!same_ring(p.ring(), ring)) throw RingMismatch();
    mv.push_back(to_modvec(g));
  }
  return ModuleGB(ring, rank, order, std::move(mv));
}

Polynomial normal_form(const Polynomial& p, const ReducedGroebnerBasis& gb) {
  if (gb.elements.empty()) return p;
  if (!same_ring(p.ring(), gb.ring)) throw RingMismatch();
  ModuleOrder pot;
  TermOrder cmp(*gb.ring, pot);
  std::vector<ModVec> mv;
  for (const auto& e : gb.elements) mv.push_back(poly_to_modvec(e));
  Reducer r(cmp);
  for (const auto& g : mv) r.add(&g);
  return modvec_to_poly(gb.ring, r.reduce(poly_to_modvec(p)));
}

namespace {

// (g_i, e_i) in P^(rank + gens.size()).
std::vector<ModVec> augmented(const PolyRing& ring, const std::vector<Vector>& gens,
                              std::size_t rank) {
  std::vector<ModVec> mv;
  mv.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != rank) throw DomainError("generator length does not match module rank");
    ModVec v = to_modvec(gens[i]);
    v.push_back({static_cast<std::uint32_t>(rank + i), ring.one(), Coefficient::one(ring.field())});
    mv.push_back(std::move(v));
  }
  return mv;
}

}  // namespace

LiftingBasis::LiftingBasis(const RingPtr& ring, std::size_t rank, const std::vector<Vector>& gens)
    : ring_(ring),
      rank_(rank),
      count_(gens.size()),
      gb_(ring, rank + gens.size(), ModuleOrder::split(rank), augmented(*ring, gens, rank)) {}

std::optional<Vector> LiftingBasis::lift(const Vector& v) const {
  if (v.size() != rank_) throw DomainError("vector length does not match module rank");
  ModVec r = gb_.reduce(to_modvec(v));
  for (const auto& t : r)
    if (t.comp < rank_) return std::nullopt;
  Vector c = from_modvec(ring_, r, static_cast<std::uint32_t>(rank_), count_);
  for (auto& p : c) p = -p;
  return c;
}

bool LiftingBasis::contains(const Vector& v) const {
  ModVec r = gb_.reduce(to_modvec(v));
  return r.empty() || r.front().comp >= rank_;
}

std::vector<Vector> LiftingBasis::syzygies() const {
  std::vector<Vector> out;
  for (const auto& e : gb_.elements())
    if (e.front().comp >= rank_)
      out.push_back(from_modvec(ring_, e, static_cast<std::uint32_t>(rank_), count_));
  return out;
}

std::vector<Vector> syzygy_matrix(const RingPtr& ring, std::size_t rank,
                                  const std::vector<Vector>& cols) {
  return LiftingBasis(ring, rank, cols).syzygies();
}

}  // namespace cohann
