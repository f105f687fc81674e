#include "cohann/different.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "cohann/error.hpp"
#include "cohann/fault.hpp"

namespace cohann {

namespace {

std::atomic<Fault> g_fault{Fault::None};

std::string unique_name(std::set<std::string>& taken, const std::string& stem) {
  std::string name = stem;
  for (int k = 0; taken.count(name); ++k) name = stem + "_" + std::to_string(k);
  taken.insert(name);
  return name;
}

// k[x, t] with x eliminated first; x are R's variables, t are A's.
struct Combined {
  RingPtr ring;
  std::size_t nx = 0, nt = 0;
  std::vector<Polynomial> x_to_s, t_to_s;
  /// Basis of I(x) + (t_j - g_j(x)).
  std::vector<Polynomial> ideal_gb;
  RingPtr r_ring, a_ring;

  Polynomial from_r(const Polynomial& p) const { return p.substitute(ring, x_to_s); }

  std::vector<std::uint32_t> exps(const Monomial& m, std::size_t from, std::size_t len) const {
    std::vector<std::uint32_t> e(len);
    for (std::size_t i = 0; i < len; ++i) e[i] = m[from + i];
    return e;
  }
  Monomial x_part(const Monomial& m) const { return r_ring->monomial(exps(m, 0, nx)); }
  Monomial t_part(const Monomial& m) const { return a_ring->monomial(exps(m, nx, nt)); }
  bool t_free(const Monomial& m) const {
    for (std::size_t i = nx; i < nx + nt; ++i)
      if (m[i]) return false;
    return true;
  }
  bool x_free(const Monomial& m) const {
    for (std::size_t i = 0; i < nx; ++i)
      if (m[i]) return false;
    return true;
  }
};

Combined combine(const QuotientRing& r, const SubalgebraMap& a) {
  Combined c;
  c.r_ring = r.ambient();
  c.a_ring = a.base;
  c.nx = c.r_ring->arity();
  c.nt = c.a_ring->arity();
  std::set<std::string> taken(c.r_ring->vars().begin(), c.r_ring->vars().end());
  std::vector<std::string> vars = c.r_ring->vars();
  for (const auto& v : c.a_ring->vars()) vars.push_back(unique_name(taken, v));
  std::vector<std::int64_t> weights = c.r_ring->weights();
  weights.insert(weights.end(), c.a_ring->weights().begin(), c.a_ring->weights().end());
  c.ring = PolyRing::make(c.r_ring->field(), vars, MonomialOrder::elimination(c.nx), weights);
  for (std::size_t i = 0; i < c.nx; ++i) c.x_to_s.push_back(Polynomial::variable(c.ring, i));
  for (std::size_t j = 0; j < c.nt; ++j) c.t_to_s.push_back(Polynomial::variable(c.ring, c.nx + j));
  std::vector<Polynomial> gens;
  for (const auto& f : r.relations().gb().elements) gens.push_back(c.from_r(f));
  for (std::size_t j = 0; j < c.nt; ++j) gens.push_back(c.t_to_s[j] - c.from_r(a.images[j]));
  if (!gens.empty()) c.ideal_gb = buchberger(gens).elements;
  return c;
}

ModuleOrder elimination_order(std::size_t nx) {
  return {std::numeric_limits<std::size_t>::max(), ModuleOrder::Scheme::ElimThenPosition,
          ModuleOrder::Scheme::ElimThenPosition, nx};
}

}  // namespace

void inject_fault(Fault f) { g_fault = f; }
Fault active_fault() { return g_fault; }

Polynomial SubalgebraMap::apply(const Polynomial& f) const {
  if (!same_ring(f.ring(), base)) throw RingMismatch("element is not in the subalgebra's ring");
  return f.substitute(target, images);
}

SubalgebraMap make_subalgebra(const QuotientRing& r, std::vector<std::string> vars,
                              std::vector<Polynomial> images) {
  if (vars.size() != images.size())
    throw DomainError("subalgebra needs one image per variable");
  std::vector<std::int64_t> weights;
  for (auto& g : images) {
    if (!same_ring(g.ring(), r.ambient())) throw RingMismatch("image is not in the ring");
    g = r.reduce(g);
    bool graded = !g.is_zero() && g.is_homogeneous() && g.degree() > 0;
    weights.push_back(graded ? g.degree() : 1);
  }
  RingPtr base = PolyRing::make(r.ambient()->field(), std::move(vars), {}, std::move(weights));
  return {base, make_quotient(base, {}), std::move(images), r.ambient()};
}

SubalgebraMap identity_subalgebra(const QuotientRing& r) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < r.ambient()->arity(); ++i)
    images.push_back(Polynomial::variable(r.ambient(), i));
  return make_subalgebra(r, r.ambient()->vars(), std::move(images));
}

Polynomial EnvelopingAlgebra::left(const Polynomial& p) const {
  std::vector<Polynomial> im;
  for (std::size_t i = 0; i < arity; ++i) im.push_back(Polynomial::variable(ring->ambient(), i));
  return p.substitute(ring->ambient(), im);
}

Polynomial EnvelopingAlgebra::right(const Polynomial& p) const {
  std::vector<Polynomial> im;
  for (std::size_t i = 0; i < arity; ++i)
    im.push_back(Polynomial::variable(ring->ambient(), arity + i));
  return p.substitute(ring->ambient(), im);
}

Polynomial EnvelopingAlgebra::multiply(const Polynomial& p, const RingPtr& target) const {
  std::vector<Polynomial> im;
  for (int side = 0; side < 2; ++side)
    for (std::size_t i = 0; i < arity; ++i) im.push_back(Polynomial::variable(target, i));
  return p.substitute(target, im);
}

EnvelopingAlgebra enveloping(const QuotientRing& r, const SubalgebraMap& a) {
  const RingPtr& amb = r.ambient();
  std::size_t n = amb->arity();
  std::set<std::string> taken;
  std::vector<std::string> vars;
  for (const auto& v : amb->vars()) vars.push_back(unique_name(taken, v + "_L"));
  for (const auto& v : amb->vars()) vars.push_back(unique_name(taken, v + "_R"));
  std::vector<std::int64_t> weights = amb->weights();
  weights.insert(weights.end(), amb->weights().begin(), amb->weights().end());
  RingPtr e = PolyRing::make(amb->field(), vars, {}, weights);
  EnvelopingAlgebra out;
  out.arity = n;
  // A placeholder ring lets left/right run before the relations exist.
  out.ring = make_quotient(e, {});
  std::vector<Polynomial> rels;
  for (const auto& f : r.relations().gb().elements) {
    rels.push_back(out.left(f));
    rels.push_back(out.right(f));
  }
  for (const auto& g : a.images) rels.push_back(out.left(g) - out.right(g));
  out.ring = make_quotient(e, std::move(rels));
  for (std::size_t i = 0; i < n; ++i)
    out.kernel.push_back(Polynomial::variable(e, i) - Polynomial::variable(e, n + i));
  return out;
}

NoetherDifferent noether_different(const QuotientRing& r, const SubalgebraMap& a) {
  EnvelopingAlgebra env = enveloping(r, a);
  const Ideal& rels = env.ring->relations();
  Ideal ann = Ideal::unit(env.ring->ambient());
  for (const auto& k : env.kernel) ann = intersect(ann, colon(rels, k));
  NoetherDifferent out{r.relations(), generators_modulo(ann, rels), {}};
  for (const auto& z : out.certificates) {
    Polynomial m = r.reduce(env.multiply(z, r.ambient()));
    if (!m.is_zero()) out.images.push_back(m);
  }
  out.ideal = r.ideal(out.images);
  return out;
}

Finiteness finiteness_check(const QuotientRing& r, const SubalgebraMap& a) {
  Combined c = combine(r, a);
  std::vector<Monomial> leads;
  for (const auto& g : c.ideal_gb)
    if (c.t_free(g.leading_monomial())) leads.push_back(c.x_part(g.leading_monomial()));
  auto sm = standard_monomials(*c.r_ring, leads);
  Finiteness out;
  out.finite = sm.finite;
  if (sm.finite) {
    Coefficient one = Coefficient::from_int(c.r_ring->field(), 1);
    for (const auto& m : sm.monomials) out.generators.push_back(Polynomial::monomial(c.r_ring, m, one));
  }
  return out;
}

struct Pushforward::Data {
  Combined comb;
  std::size_t rank = 0;
  std::unique_ptr<ModuleGB> gb;
  std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, std::size_t> index;
};

Pushforward::Pushforward(const FPModule& m, const SubalgebraMap& a)
    : module_(FPModule::free(a.base_ring, 0)) {
  auto data = std::make_shared<Data>();
  data->comb = combine(*m.ring(), a);
  const Combined& c = data->comb;
  std::size_t g = m.rank();
  data->rank = g;
  ModuleOrder order = elimination_order(c.nx);

  std::vector<Vector> w;
  for (const auto& col : m.relations().columns()) {
    Vector v;
    for (const auto& p : col) v.push_back(c.from_r(p));
    w.push_back(std::move(v));
  }
  for (std::size_t k = 0; k < g; ++k)
    for (const auto& f : c.ideal_gb) {
      Vector v = zero_vector(c.ring, g);
      v[k] = f;
      w.push_back(std::move(v));
    }
  data->gb = std::make_unique<ModuleGB>(buchberger(c.ring, g, w, order));

  std::vector<std::vector<Monomial>> leads(g);
  for (const auto& e : data->gb->elements())
    if (c.t_free(e.front().mono)) leads[e.front().comp].push_back(c.x_part(e.front().mono));
  Coefficient one = Coefficient::from_int(c.r_ring->field(), 1);
  std::vector<Vector> cover;
  for (std::size_t k = 0; k < g; ++k) {
    auto sm = standard_monomials(*c.r_ring, leads[k]);
    if (!sm.finite) throw DomainError("module is not finite over the subalgebra");
    for (const auto& mono : sm.monomials) {
      data->index[{k, c.exps(mono, 0, c.nx)}] = basis_.size();
      Polynomial xm = Polynomial::monomial(c.r_ring, mono, one);
      basis_.push_back({k, xm});
      Vector v = zero_vector(c.ring, g);
      v[k] = c.from_r(xm);
      cover.push_back(std::move(v));
    }
  }

  std::size_t b = basis_.size();
  Matrix rel(a.base, b);
  if (b > 0) {
    // Relations over A: syzygies of the cover against W, cut down to A^b.
    std::vector<Vector> cols = cover;
    for (const auto& e : data->gb->elements()) cols.push_back(from_modvec(c.ring, e, 0, g));
    std::vector<Vector> syz;
    for (auto& s : syzygy_matrix(c.ring, g, cols)) {
      s.resize(b, Polynomial(c.ring));
      if (!is_zero_vector(s)) syz.push_back(std::move(s));
    }
    if (!syz.empty()) {
      ModuleGB elim = buchberger(c.ring, b, syz, order);
      for (const auto& e : elim.elements()) {
        if (!c.x_free(e.front().mono)) continue;
        Vector col = zero_vector(a.base, b);
        for (const auto& t : e) {
          Polynomial term = Polynomial::monomial(a.base, c.t_part(t.mono), t.coef);
          col[t.comp] += term;
        }
        rel.add_column(std::move(col));
      }
    }
  }
  module_ = FPModule(a.base_ring, rel);
  data_ = std::move(data);
}

Vector Pushforward::coordinates(const Vector& v) const {
  const Combined& c = data_->comb;
  if (v.size() != data_->rank) throw DomainError("vector length does not match module rank");
  Vector s;
  for (const auto& p : v) s.push_back(c.from_r(p));
  ModVec nf = data_->gb->reduce(to_modvec(s));
  Vector out = zero_vector(c.a_ring, basis_.size());
  for (const auto& t : nf) {
    auto it = data_->index.find({t.comp, c.exps(t.mono, 0, c.nx)});
    if (it == data_->index.end()) throw Error("normal form left the pushforward basis");
    out[it->second] += Polynomial::monomial(c.a_ring, c.t_part(t.mono), t.coef);
  }
  return out;
}

Matrix Pushforward::action(const Polynomial& r) const {
  const Combined& c = data_->comb;
  Matrix out(c.a_ring, basis_.size());
  for (const auto& [comp, mono] : basis_) {
    Vector v = zero_vector(c.r_ring, data_->rank);
    v[comp] = mono * r;
    out.add_column(coordinates(v));
  }
  return out;
}

Pushforward pushforward(const FPModule& m, const SubalgebraMap& a) { return Pushforward(m, a); }

Certificate34 cert_prop34(const QuotientRing& r, const SubalgebraMap& a) {
  if (!finiteness_check(r, a).finite) throw DomainError("ring is not finite over the subalgebra");
  auto rq = std::make_shared<const QuotientRing>(r);
  Pushforward ra = pushforward(FPModule::free(rq, 1), a);
  Certificate34 out{r.relations(), Ideal::unit(a.base), static_cast<unsigned>(a.base->arity()),
                    ra.module().relations().cols() == 0, noether_different(r, a)};
  if (!out.free_over_base) out.base_annihilator = ca_witness(ra.module(), 1).ideal;
  Ideal power = ideal_power(out.base_annihilator, out.d);
  std::vector<Polynomial> gens;
  for (const auto& p : power.gb().elements) {
    Polynomial image = r.reduce(a.apply(p));
    for (const auto& q : out.different.images) gens.push_back(image * q);
  }
  out.ideal = r.ideal(std::move(gens));
  return out;
}

Ideal jacobian_ideal(const QuotientRing& r, std::size_t codim) {
  const auto& rels = r.presentation();
  const RingPtr& amb = r.ambient();
  if (rels.size() != codim)
    throw DomainError("presentation has " + std::to_string(rels.size()) +
                      " relations but codimension " + std::to_string(codim) + " was declared");
  if (codim == 0) return Ideal::unit(amb);
  std::size_t n = amb->arity();
  std::vector<std::vector<Polynomial>> jac(codim);
  for (std::size_t i = 0; i < codim; ++i)
    for (std::size_t v = 0; v < n; ++v) {
      Polynomial d = rels[i].derivative(v);
      if (active_fault() == Fault::JacobianOffset) d += Polynomial::constant(amb, 1);
      jac[i].push_back(std::move(d));
    }
  std::vector<Polynomial> gens = rels;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> walk = [&](std::size_t from) {
    if (pick.size() == codim) {
      std::vector<std::vector<Polynomial>> sub(codim);
      for (std::size_t i = 0; i < codim; ++i)
        for (auto v : pick) sub[i].push_back(jac[i][v]);
      gens.push_back(determinant(sub));
      return;
    }
    for (std::size_t v = from; v < n; ++v) {
      pick.push_back(v);
      walk(v + 1);
      pick.pop_back();
    }
  };
  walk(0);
  return Ideal(amb, std::move(gens));
}

Ideal jacobian_ideal(const QuotientRing& r) { return jacobian_ideal(r, r.presentation().size()); }

NzdSearch contains_nonzerodivisor(const Ideal& j, const QuotientRing& r) {
  NzdSearch out;
  auto gens = generators_modulo(j, r.relations());
  for (const auto& g : gens) {
    ++out.trials;
    if (is_nonzerodivisor(g, r)) {
      out.witness = g;
      return out;
    }
  }
  if (gens.size() < 2) return out;
  std::mt19937 rng(kNzdSeed);
  std::uniform_int_distribution<int> coef(-4, 4);
  const Field& field = r.ambient()->field();
  for (std::size_t t = 0; t < kNzdTrials; ++t) {
    Polynomial combo(r.ambient());
    for (const auto& g : gens) combo += g.scaled(Coefficient::from_int(field, coef(rng)));
    if (combo.is_zero()) continue;
    ++out.trials;
    if (is_nonzerodivisor(combo, r)) {
      out.witness = combo;
      return out;
    }
  }
  return out;
}

VerificationReport descent_check(const QuotientRing& r, const SubalgebraMap& a,
                                 const Polynomial& elem, unsigned n,
                                 const std::vector<FPModule>& test_modules,
                                 const std::vector<FPModule>& test_targets) {
  VerificationReport rep;
  rep.subject = "descent of a = " + elem.to_string() + " at level " + std::to_string(n);
  if (n < 1) throw DomainError("descent level must be at least 1");
  auto fin = finiteness_check(r, a);
  if (!fin.finite) throw DomainError("ring is not finite over the subalgebra");
  rep.add("finite over base", true, std::to_string(fin.generators.size()) + " generators");

  for (std::size_t i = 0; i < test_modules.size(); ++i) {
    Ideal w = ca_witness(test_modules[i], n).ideal;
    rep.add("a in witness of M" + std::to_string(i), w.contains(elem));
  }

  auto rq = std::make_shared<const QuotientRing>(r);
  Pushforward ra = pushforward(FPModule::free(rq, 1), a);
  Ideal base_ann = ra.module().relations().cols() == 0 ? Ideal::unit(a.base)
                                                        : ca_witness(ra.module(), 1).ideal;
  Ideal power = ideal_power(base_ann, n);
  rep.add("base annihilator", true, "I has " + std::to_string(base_ann.gb().elements.size()) + " generators");
  if (a.base->arity() < n) rep.add("vacuous range", true, "global dimension of the base is below n");

  for (std::size_t i = 0; i < test_modules.size(); ++i) {
    Pushforward ma = pushforward(test_modules[i], a);
    FreeResolution res = resolve(ma.module(), n + 2, ResolutionKind::Pruned);
    Matrix act = ma.action(elem);
    Matrix act2 = act * act;
    for (std::size_t j = 0; j < test_targets.size(); ++j) {
      bool ok = true;
      std::string detail;
      for (unsigned m = n; m <= n + 1 && ok; ++m) {
        ExtPresentation ext = ext_module(res, test_targets[j], m);
        if (ext.is_zero()) continue;
        for (const auto& c : power.gb().elements) {
          ChainLift lift = lift_chain_map(res, act2.scaled(c));
          if (!induced_map(lift, ext).zero) {
            ok = false;
            detail = "nonzero on Ext^" + std::to_string(m) + " for generator " + c.to_string();
            break;
          }
        }
      }
      rep.add("a^2 I^n kills Ext(M" + std::to_string(i) + ", N" + std::to_string(j) + ")", ok,
              ok ? "degrees " + std::to_string(n) + ".." + std::to_string(n + 1) : detail);
    }
  }
  return rep;
}

}  // namespace cohann
