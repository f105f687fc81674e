#include "cohann/artinian.hpp"

#include <map>
#include <string>

#include "cohann/error.hpp"

namespace cohann {

namespace {

using ExpKey = std::vector<std::uint32_t>;

ExpKey key_of(const Monomial& m) {
  ExpKey k(m.arity());
  for (std::size_t i = 0; i < m.arity(); ++i) k[i] = m[i];
  return k;
}

DenseMatrix zero_columns(const Field& f, std::size_t rows) { return DenseMatrix(f, rows, 0); }

DenseVec unit(const Field& f, std::size_t n, std::size_t i) {
  DenseVec v(n, Coefficient::zero(f));
  v[i] = Coefficient::one(f);
  return v;
}

/// Product of action matrices along the exponent vector of m.
DenseMatrix evaluate_monomial(const Field& f, std::size_t dim,
                              const std::vector<DenseMatrix>& actions, const Monomial& m) {
  DenseMatrix out = DenseMatrix::identity(f, dim);
  for (std::size_t v = 0; v < actions.size(); ++v)
    for (std::uint32_t e = 0; e < m[v]; ++e) out = actions[v] * out;
  return out;
}

DenseMatrix evaluate(const Field& f, std::size_t dim, const std::vector<DenseMatrix>& actions,
                     const Polynomial& p) {
  DenseMatrix out(f, dim, dim);
  for (const auto& t : p.terms())
    out = out + evaluate_monomial(f, dim, actions, t.mono).scaled(t.coef);
  return out;
}

/// Stacks the columns A_v S over all v.
DenseMatrix radical_times(const std::vector<DenseMatrix>& actions, const DenseMatrix& s) {
  DenseMatrix out = zero_columns(s.field(), s.rows());
  for (const auto& a : actions) out = DenseMatrix::hstack(out, a * s);
  return out;
}

bool stable(const std::vector<DenseMatrix>& actions, const DenseMatrix& s) {
  for (const auto& a : actions)
    if (!spans(s, a * s)) return false;
  return true;
}

/// Indices of standard basis vectors completing the columns of `sub`.
std::vector<std::size_t> complement_indices(const DenseMatrix& sub) {
  DenseMatrix basis = column_basis(sub);
  auto rr = row_reduce(
      DenseMatrix::hstack(basis, DenseMatrix::identity(sub.field(), sub.rows())));
  std::vector<std::size_t> out;
  for (auto p : rr.pivots)
    if (p >= basis.cols()) out.push_back(p - basis.cols());
  return out;
}

}  // namespace

FinDimAlgebra::FinDimAlgebra(QRingPtr r)
    : ring_(std::move(r)), radical_(ring_->ambient()->field(), 0, 0) {
  const RingPtr& amb = ring_->ambient();
  const Field& f = amb->field();
  auto sm = standard_monomials(*ring_);
  if (!sm.finite) throw DomainError("ring is not artinian: infinitely many standard monomials");
  if (sm.monomials.empty()) throw DomainError("ring is zero");
  basis_ = sm.monomials;
  if (!basis_.front().is_one()) throw DomainError("constant is not the least standard monomial");
  std::size_t d = basis_.size();
  for (std::size_t v = 0; v < amb->arity(); ++v) {
    Polynomial x = Polynomial::variable(amb, v);
    if (!ring_->is_zero(x.pow(static_cast<std::uint32_t>(d))))
      throw DomainError("variable " + amb->vars()[v] + " is not nilpotent; ring is not local");
  }
  auto product_matrix = [&](const Monomial& m) {
    DenseMatrix out(f, d, d);
    for (std::size_t j = 0; j < d; ++j) {
      DenseVec c = coordinates(Polynomial::monomial(amb, m * basis_[j], Coefficient::one(f)));
      for (std::size_t i = 0; i < d; ++i) out.at(i, j) = c[i];
    }
    return out;
  };
  for (std::size_t v = 0; v < amb->arity(); ++v) mult_.push_back(product_matrix(amb->variable(v)));
  for (const auto& b : basis_) basis_mult_.push_back(product_matrix(b));

  std::vector<DenseVec> rad;
  for (std::size_t j = 1; j < d; ++j) rad.push_back(unit(f, d, j));
  radical_ = DenseMatrix::from_columns(f, d, rad);

  loewy_ = 1;
  DenseMatrix p = radical_;
  while (p.cols() > 0) {
    p = product(p, radical_);
    ++loewy_;
  }
}

DenseVec FinDimAlgebra::coordinates(const Polynomial& p) const {
  if (!same_ring(p.ring(), ring_->ambient())) throw RingMismatch();
  DenseVec out(basis_.size(), Coefficient::zero(field()));
  const Polynomial q = ring_->reduce(p);
  for (const auto& t : q.terms()) {
    std::size_t j = 0;
    while (j < basis_.size() && !(basis_[j] == t.mono)) ++j;
    if (j == basis_.size()) throw DomainError("normal form left the standard monomials");
    out[j] = t.coef;
  }
  return out;
}

Polynomial FinDimAlgebra::element(const DenseVec& v) const {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) terms.push_back({basis_[j], v[j]});
  return Polynomial(ring_->ambient(), std::move(terms));
}

DenseMatrix FinDimAlgebra::matrix_of(const DenseVec& v) const {
  DenseMatrix out(field(), dimension(), dimension());
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) out = out + basis_mult_[j].scaled(v[j]);
  return out;
}

DenseVec FinDimAlgebra::multiply(const DenseVec& a, const DenseVec& b) const {
  return matrix_of(a).apply(b);
}

DenseMatrix FinDimAlgebra::product(const DenseMatrix& a, const DenseMatrix& b) const {
  std::vector<DenseVec> cols;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    DenseMatrix ma = matrix_of(a.column(i));
    for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(ma.apply(b.column(j)));
  }
  return column_basis(DenseMatrix::from_columns(field(), dimension(), cols));
}

DenseMatrix FinDimAlgebra::power(const DenseMatrix& a, unsigned n) const {
  DenseMatrix out = DenseMatrix::from_columns(field(), dimension(), {unit(field(), dimension(), 0)});
  for (unsigned i = 0; i < n; ++i) out = product(out, a);
  return out;
}

FinDimAlgebra findim_from_quotient(const QRingPtr& r) { return FinDimAlgebra(r); }

LoewySocle loewy_socle(const FinDimAlgebra& r) {
  DenseMatrix stacked(r.field(), 0, r.dimension());
  for (std::size_t v = 0; v < r.arity(); ++v)
    stacked = DenseMatrix::vstack(stacked, r.multiplication(v));
  return {r.loewy_length(), nullspace(stacked)};
}

FinDimModule::FinDimModule(const FinDimAlgebra& r, std::vector<DenseMatrix> actions)
    : field_(r.field()), dim_(0), actions_(std::move(actions)) {
  if (actions_.size() != r.arity())
    throw DomainError("expected " + std::to_string(r.arity()) + " action matrices, got " +
                      std::to_string(actions_.size()));
  if (!actions_.empty()) dim_ = actions_[0].rows();
  for (const auto& a : actions_)
    if (a.rows() != dim_ || a.cols() != dim_) throw DomainError("action matrices must be square of one size");
  for (std::size_t i = 0; i < actions_.size(); ++i)
    for (std::size_t j = i + 1; j < actions_.size(); ++j)
      if (!(actions_[i] * actions_[j] == actions_[j] * actions_[i]))
        throw DomainError("action matrices do not commute");
  for (const auto& f : r.ring()->relations().gb().elements)
    if (!evaluate(field_, dim_, actions_, f).is_zero())
      throw DomainError("action matrices violate the relation " + f.to_string());
  for (const auto& b : r.basis()) basis_action_.push_back(evaluate_monomial(field_, dim_, actions_, b));
}

FinDimModule FinDimModule::regular(const FinDimAlgebra& r) {
  std::vector<DenseMatrix> a;
  for (std::size_t v = 0; v < r.arity(); ++v) a.push_back(r.multiplication(v));
  return FinDimModule(r, std::move(a));
}

FinDimModule FinDimModule::residue_field(const FinDimAlgebra& r) {
  return FinDimModule(r, std::vector<DenseMatrix>(r.arity(), DenseMatrix(r.field(), 1, 1)));
}

FinDimModule FinDimModule::zero(const FinDimAlgebra& r) {
  return FinDimModule(r, std::vector<DenseMatrix>(r.arity(), DenseMatrix(r.field(), 0, 0)));
}

FinDimModule FinDimModule::from_fpmodule(const FinDimAlgebra& r, const FPModule& m) {
  if (!same_ring(m.ambient(), r.ring()->ambient())) throw RingMismatch();
  const RingPtr& amb = m.ambient();
  const Field& f = r.field();
  std::size_t g = m.rank();
  const std::vector<Vector> gens = m.submodule_generators();
  ModuleGB gb = buchberger(amb, g, gens, ModuleOrder::pot());

  std::vector<std::pair<std::uint32_t, Monomial>> basis;
  std::map<std::pair<std::uint32_t, ExpKey>, std::size_t> index;
  for (std::uint32_t c = 0; c < g; ++c) {
    std::vector<Monomial> leads;
    for (const auto& e : gb.elements())
      if (e.front().comp == c) leads.push_back(e.front().mono);
    auto sm = standard_monomials(*amb, leads);
    if (!sm.finite) throw DomainError("module is not finite-dimensional");
    for (const auto& u : sm.monomials) {
      index[{c, key_of(u)}] = basis.size();
      basis.emplace_back(c, u);
    }
  }
  std::size_t d = basis.size();
  std::vector<DenseMatrix> actions;
  for (std::size_t v = 0; v < amb->arity(); ++v) {
    DenseMatrix a(f, d, d);
    for (std::size_t j = 0; j < d; ++j) {
      ModVec w{{basis[j].first, amb->variable(v) * basis[j].second, Coefficient::one(f)}};
      for (const auto& t : gb.reduce(std::move(w))) {
        auto it = index.find({t.comp, key_of(t.mono)});
        if (it == index.end()) throw DomainError("normal form left the standard basis");
        a.at(it->second, j) = t.coef;
      }
    }
    actions.push_back(std::move(a));
  }
  return FinDimModule(r, std::move(actions));
}

DenseMatrix FinDimModule::act(const DenseVec& r) const {
  DenseMatrix out(field_, dim_, dim_);
  for (std::size_t j = 0; j < r.size(); ++j)
    if (!r[j].is_zero()) out = out + basis_action_[j].scaled(r[j]);
  return out;
}

DenseMatrix FinDimModule::radical_image() const {
  return column_basis(radical_times(actions_, DenseMatrix::identity(field_, dim_)));
}

std::vector<std::size_t> FinDimModule::minimal_generators() const {
  return complement_indices(radical_image());
}

FinDimModule FinDimModule::restrict(const FinDimAlgebra& r, const DenseMatrix& sub) const {
  std::vector<DenseMatrix> a;
  for (const auto& x : actions_) {
    auto s = solve(sub, x * sub);
    if (!s) throw DomainError("subspace is not stable under the action");
    a.push_back(std::move(*s));
  }
  return FinDimModule(r, std::move(a));
}

OracleResolution oracle_resolution(const FinDimAlgebra& r, const FinDimModule& m,
                                   unsigned length) {
  const Field& f = r.field();
  std::size_t dr = r.dimension();
  OracleResolution out;
  out.syzygies.push_back(m);
  for (unsigned k = 0;; ++k) {
    const FinDimModule& cur = out.syzygies[k];
    auto gens = cur.minimal_generators();
    std::size_t g = gens.size();
    out.ranks.push_back(g);
    if (k == length) break;
    DenseMatrix cover(f, cur.dimension(), g * dr);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < dr; ++j)
        for (std::size_t row = 0; row < cur.dimension(); ++row)
          cover.at(row, i * dr + j) = cur.basis_action(j).at(row, gens[i]);
    DenseMatrix kernel = nullspace(cover);
    std::vector<DenseMatrix> acts;
    for (std::size_t v = 0; v < r.arity(); ++v) {
      DenseMatrix lv = r.multiplication(v).repeat_diagonal(g);
      auto s = solve(kernel, lv * kernel);
      if (!s) throw DomainError("kernel of a cover is not a submodule");
      acts.push_back(std::move(*s));
    }
    FinDimModule next(r, std::move(acts));
    std::vector<std::vector<DenseVec>> d;
    for (auto c : next.minimal_generators()) {
      std::vector<DenseVec> col(g);
      for (std::size_t i = 0; i < g; ++i) {
        col[i].reserve(dr);
        for (std::size_t j = 0; j < dr; ++j) col[i].push_back(kernel.at(i * dr + j, c));
      }
      d.push_back(std::move(col));
    }
    out.differentials.push_back(std::move(d));
    out.syzygies.push_back(std::move(next));
  }
  return out;
}

namespace {

/// delta_k : N^{rank F_k} -> N^{rank F_{k+1}}, precomposition with d_{k+1}.
DenseMatrix hom_differential(const OracleResolution& res, const FinDimModule& n, std::size_t k) {
  std::size_t dn = n.dimension(), gk = res.ranks[k], gk1 = res.ranks[k + 1];
  DenseMatrix out(n.field(), gk1 * dn, gk * dn);
  const auto& d = res.differentials[k];
  for (std::size_t j = 0; j < gk1; ++j)
    for (std::size_t i = 0; i < gk; ++i) {
      DenseMatrix block = n.act(d[j][i]);
      for (std::size_t a = 0; a < dn; ++a)
        for (std::size_t b = 0; b < dn; ++b) out.at(j * dn + a, i * dn + b) = block.at(a, b);
    }
  return out;
}

}  // namespace

OracleExt ext_linear_algebra(const FinDimAlgebra& r, const OracleResolution& res,
                             const FinDimModule& n, unsigned degree) {
  (void)r;
  if (res.ranks.size() < degree + 2u)
    throw DomainError("resolution too short for Ext^" + std::to_string(degree));
  OracleExt out{0, DenseMatrix(n.field(), 0, 0), DenseMatrix(n.field(), 0, 0), res.ranks[degree]};
  out.cycles = nullspace(hom_differential(res, n, degree));
  std::size_t h = res.ranks[degree] * n.dimension();
  out.boundaries = degree == 0 ? zero_columns(n.field(), h)
                               : column_basis(hom_differential(res, n, degree - 1));
  out.dimension = out.cycles.cols() - out.boundaries.cols();
  return out;
}

OracleExt ext_linear_algebra(const FinDimAlgebra& r, const FinDimModule& m,
                             const FinDimModule& n, unsigned degree) {
  return ext_linear_algebra(r, oracle_resolution(r, m, degree + 1), n, degree);
}

bool ext_killed_by(const FinDimModule& n, const OracleExt& e, const DenseVec& r) {
  if (e.dimension == 0) return true;
  DenseMatrix act = n.act(r).repeat_diagonal(e.hom_rank);
  return spans(e.boundaries, act * e.cycles);
}

DenseMatrix ext_annihilator(const FinDimAlgebra& r, const FinDimModule& n, const OracleExt& e) {
  std::size_t dr = r.dimension();
  if (e.dimension == 0) return DenseMatrix::identity(r.field(), dr);
  DenseMatrix q = nullspace(e.boundaries.transpose()).transpose();
  DenseMatrix c(r.field(), q.rows() * e.cycles.cols(), dr);
  for (std::size_t b = 0; b < dr; ++b) {
    DenseMatrix img = q * (n.basis_action(b).repeat_diagonal(e.hom_rank) * e.cycles);
    for (std::size_t i = 0; i < img.rows(); ++i)
      for (std::size_t j = 0; j < img.cols(); ++j) c.at(j * img.rows() + i, b) = img.at(i, j);
  }
  return nullspace(c);
}

BuildingWitness radical_filtration(const FinDimAlgebra& r, const FinDimModule& m) {
  const Field& f = m.field();
  std::vector<DenseMatrix> powers{DenseMatrix::identity(f, m.dimension())};
  while (powers.back().cols() > 0)
    powers.push_back(column_basis(radical_times(m.actions(), powers.back())));
  BuildingWitness w{m, m, {}, DenseMatrix::identity(f, m.dimension()),
                    DenseMatrix::identity(f, m.dimension()), {}};
  for (auto it = powers.rbegin(); it != powers.rend(); ++it) w.filtration.push_back(*it);
  for (std::size_t i = 1; i < w.filtration.size(); ++i) {
    LayerCertificate c;
    c.kind = LayerCertificate::Kind::Semisimple;
    c.copies = w.filtration[i].cols() - w.filtration[i - 1].cols();
    w.layers.push_back(std::move(c));
  }
  (void)r;
  return w;
}

Layer filtration_layer(const FinDimAlgebra& r, const FinDimModule& z, const DenseMatrix& lower,
                       const DenseMatrix& upper) {
  DenseMatrix low = column_basis(lower);
  auto rr = row_reduce(DenseMatrix::hstack(low, upper));
  std::vector<std::size_t> idx;
  for (auto p : rr.pivots)
    if (p >= low.cols()) idx.push_back(p - low.cols());
  DenseMatrix comp = upper.select_columns(idx);
  DenseMatrix both = DenseMatrix::hstack(low, comp);
  std::vector<DenseMatrix> acts;
  for (const auto& a : z.actions()) {
    auto s = solve(both, a * comp);
    if (!s) throw DomainError("filtration step is not stable");
    DenseMatrix layer(r.field(), comp.cols(), comp.cols());
    for (std::size_t i = 0; i < comp.cols(); ++i)
      for (std::size_t j = 0; j < comp.cols(); ++j) layer.at(i, j) = s->at(low.cols() + i, j);
    acts.push_back(std::move(layer));
  }
  return {std::move(comp), FinDimModule(r, std::move(acts))};
}

namespace {

bool is_module_map(const FinDimModule& src, const FinDimModule& dst, const DenseMatrix& f) {
  for (std::size_t v = 0; v < src.actions().size(); ++v)
    if (!(dst.action(v) * f == f * src.action(v))) return false;
  return true;
}

FinDimModule copies_of(const FinDimAlgebra& r, const FinDimModule& x, std::size_t m) {
  std::vector<DenseMatrix> a;
  for (const auto& y : x.actions()) a.push_back(y.repeat_diagonal(m));
  return FinDimModule(r, std::move(a));
}

std::string layer_check(const FinDimAlgebra& r, const Layer& layer, const LayerCertificate& c,
                        const FinDimModule& g) {
  const FinDimModule& l = layer.module;
  const FinDimModule x =
      c.level == 0 ? g : oracle_resolution(r, g, c.level).syzygies[c.level];
  if (c.kind == LayerCertificate::Kind::Semisimple) {
    if (x.dimension() != 1) return "semisimple certificate needs X to be the residue field";
    for (const auto& a : l.actions())
      if (!a.is_zero()) return "J does not kill the layer";
    if (c.copies != l.dimension()) return "copy count differs from the layer dimension";
    return {};
  }
  if (!c.section || !c.retraction) return "split certificate without maps";
  std::size_t big = c.copies * x.dimension();
  if (c.section->rows() != big || c.section->cols() != l.dimension() ||
      c.retraction->rows() != l.dimension() || c.retraction->cols() != big)
    throw DomainError("split certificate has the wrong shape");
  FinDimModule xs = copies_of(r, x, c.copies);
  if (!is_module_map(l, xs, *c.section)) return "section is not a module map";
  if (!is_module_map(xs, l, *c.retraction)) return "retraction is not a module map";
  if (!(*c.retraction * *c.section == DenseMatrix::identity(r.field(), l.dimension())))
    return "retraction does not split the section";
  return {};
}

}  // namespace

VerificationReport building_report(const FinDimAlgebra& r, const BuildingWitness& w,
                                   const FinDimModule& g) {
  const std::size_t dz = w.ambient.dimension(), dt = w.target.dimension();
  if (w.iota.rows() != dz || w.iota.cols() != dt || w.pi.rows() != dt || w.pi.cols() != dz)
    throw DomainError("split embedding has the wrong shape");
  if (w.filtration.size() != w.layers.size() + 1)
    throw DomainError("filtration and layer certificates disagree in length");
  for (const auto& z : w.filtration)
    if (z.rows() != dz) throw DomainError("filtration subspace has the wrong ambient dimension");

  VerificationReport rep;
  rep.subject = "building witness of length " + std::to_string(w.length());
  rep.add("bottom is zero", rank(w.filtration.front()) == 0);
  rep.add("top is everything", rank(w.filtration.back()) == dz);
  bool nested = true, stab = true;
  for (std::size_t i = 0; i + 1 < w.filtration.size(); ++i)
    nested = nested && spans(w.filtration[i + 1], w.filtration[i]);
  for (const auto& z : w.filtration) stab = stab && stable(w.ambient.actions(), z);
  rep.add("nested", nested);
  rep.add("stable", stab);
  rep.add("retraction", w.pi * w.iota == DenseMatrix::identity(r.field(), dt));
  rep.add("embedding is a module map", is_module_map(w.target, w.ambient, w.iota));
  rep.add("projection is a module map", is_module_map(w.ambient, w.target, w.pi));
  for (std::size_t i = 0; i < w.layers.size(); ++i) {
    std::string name = "layer " + std::to_string(i + 1);
    if (!nested || !stab) {
      rep.add(name, false, "filtration is not a chain of submodules");
      continue;
    }
    Layer layer = filtration_layer(r, w.ambient, w.filtration[i], w.filtration[i + 1]);
    std::string why = layer_check(r, layer, w.layers[i], g);
    rep.add(name, why.empty(), why.empty() ? "dim " + std::to_string(layer.module.dimension()) : why);
  }
  return rep;
}

bool verify_building_membership(const FinDimAlgebra& r, const BuildingWitness& w,
                                const FinDimModule& g) {
  return building_report(r, w, g).passed();
}

VerificationReport lemma42_check(const FinDimAlgebra& r, const FinDimModule& g,
                                 const FinDimModule& m, unsigned n, const BuildingWitness& w,
                                 const std::vector<FinDimModule>& samples) {
  VerificationReport rep;
  rep.subject = "annihilation of Ext by powers of ann Ext^1(G, Omega G)";
  rep.add("witness target is M", w.target == m);
  rep.add("witness length", w.length() <= n,
          std::to_string(w.length()) + " layers, n = " + std::to_string(n));
  rep.append(building_report(r, w, g), "witness: ");
  if (m.dimension() == 0) {
    rep.add("vacuous", true, "M = 0");
    return rep;
  }
  OracleResolution rg = oracle_resolution(r, g, 2);
  OracleExt e1 = ext_linear_algebra(r, rg, rg.syzygies[1], 1);
  DenseMatrix ann = ext_annihilator(r, rg.syzygies[1], e1);
  DenseMatrix in = r.power(ann, n);
  rep.add("annihilator", true,
          "dim I = " + std::to_string(ann.cols()) + ", dim I^n = " + std::to_string(in.cols()));
  OracleResolution rm = oracle_resolution(r, m, 4);
  for (std::size_t s = 0; s < samples.size(); ++s)
    for (unsigned i = 1; i <= 3; ++i) {
      OracleExt e = ext_linear_algebra(r, rm, samples[s], i);
      bool ok = true;
      for (std::size_t c = 0; c < in.cols() && ok; ++c) ok = ext_killed_by(samples[s], e, in.column(c));
      rep.add("I^n kills Ext^" + std::to_string(i) + "(M, N" + std::to_string(s) + ")", ok,
              "dim " + std::to_string(e.dimension));
    }
  return rep;
}

FinDimModule random_module(const FinDimAlgebra& r, std::mt19937_64& rng) {
  const RingPtr& amb = r.ring()->ambient();
  std::uniform_int_distribution<int> gens(1, 2), rels(1, 3), coef(-3, 3), coin(0, 2);
  std::size_t g = static_cast<std::size_t>(gens(rng));
  int k = rels(rng);
  Matrix rel(amb, g);
  for (int c = 0; c < k; ++c) {
    Vector col = zero_vector(amb, g);
    for (std::size_t i = 0; i < g; ++i) {
      std::vector<Term> terms;
      for (std::size_t j = 1; j < r.dimension(); ++j) {
        int a = coef(rng);
        if (coin(rng) == 0 && a != 0)
          terms.push_back({r.basis()[j], Coefficient::from_int(r.field(), a)});
      }
      col[i] = Polynomial(amb, std::move(terms));
    }
    rel.add_column(std::move(col));
  }
  return FinDimModule::from_fpmodule(r, FPModule(r.ring(), std::move(rel)));
}

}  // namespace cohann
