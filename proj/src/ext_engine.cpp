#include "cohann/ext_engine.hpp"

#include <string>

#include "cohann/error.hpp"

namespace cohann {

namespace {

void check_same(const FPModule& a, const FPModule& b) {
  if (!same_ring(a.ambient(), b.ambient())) throw RingMismatch("modules over different rings");
}

// Generators for a submodule of P^rank together with I*P^rank.
std::shared_ptr<const ModuleGB> span_gb(const QuotientRing& r, std::size_t rank,
                                        std::vector<Vector> gens) {
  for (auto& v : ideal_padding(r, rank)) gens.push_back(std::move(v));
  if (rank == 0 || gens.empty()) return nullptr;
  return std::make_shared<const ModuleGB>(buchberger(r.ambient(), rank, gens));
}

}  // namespace

bool ExtPresentation::is_boundary(const Vector& v) const {
  if (v.size() != ambient_rank()) throw DomainError("vector does not live in the Hom model");
  if (ambient_rank() == 0) return true;
  if (!boundary_gb) return is_zero_vector(v);
  return boundary_gb->contains(to_modvec(v));
}

bool ExtPresentation::killed_by(const Polynomial& a) const {
  for (const auto& c : cycles.columns())
    if (!is_boundary(scale_vector(c, a))) return false;
  return true;
}

ExtPresentation ext_module(const FreeResolution& res, const FPModule& n_module, unsigned n) {
  check_same(res.module, n_module);
  if (res.length() < n + 1 && !res.complete)
    throw DomainError("Ext^" + std::to_string(n) + " needs a resolution of length " +
                      std::to_string(n + 1));
  const QRingPtr& rp = res.ring;
  const QuotientRing& r = *rp;
  const RingPtr& amb = r.ambient();
  std::size_t h = n_module.rank();
  std::size_t bn = res.rank(n), bn1 = res.rank(n + 1);
  std::size_t total = bn * h;

  Matrix cycles(amb, total);
  if (total > 0) {
    if (bn1 * h == 0) {
      cycles = Matrix::identity(amb, total);
    } else {
      Matrix dn1 = res.d(n + 1).transpose().kron_identity(h);
      cycles = preimage(r, dn1, n_module.relations().repeat_diagonal(bn1).columns());
    }
  }
  std::vector<Vector> boundaries;
  if (n >= 1 && total > 0 && res.rank(n - 1) > 0)
    boundaries = res.d(n).transpose().kron_identity(h).columns();
  Matrix own = n_module.relations().repeat_diagonal(bn);
  boundaries.insert(boundaries.end(), own.columns().begin(), own.columns().end());

  FPModule raw = cycles.cols() == 0 ? FPModule::free(rp, 0) : subquotient(rp, cycles, boundaries);
  Simplified model = simplify(raw);
  Ideal ann = annihilator(model.module);
  auto bgb = span_gb(r, total, boundaries);
  return {res.module, n_module,  n,      res,           std::move(cycles), std::move(boundaries),
          std::move(raw), std::move(model), std::move(ann), std::move(bgb)};
}

ExtPresentation ext_module(const FPModule& m, const FPModule& n_module, unsigned n) {
  return ext_module(resolve_default(m, n + 1), n_module, n);
}

CAWitness ca_witness(const FPModule& m, unsigned n) {
  if (n < 1) throw DomainError("witness level must be at least 1");
  FreeResolution res = resolve_default(m, n + 1);
  FPModule omega(res.ring, res.d(n + 1));
  ExtPresentation ext = ext_module(res, omega, n);
  Ideal w = ext.annihilator;
  return {m, n, std::move(w), std::move(ext)};
}

CABound ca_upper_bound(const std::vector<FPModule>& family, unsigned n) {
  if (family.empty()) throw DomainError("witness family is empty");
  CABound out{family, n, {}, Ideal::unit(family.front().ambient())};
  for (const auto& m : family) {
    check_same(m, family.front());
    Ideal w = ca_witness(m, n).ideal;
    out.bound = intersect(out.bound, w);
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

ChainLift lift_chain_map(const FreeResolution& res, const Matrix& alpha0) {
  const QuotientRing& r = *res.ring;
  const RingPtr& amb = r.ambient();
  if (alpha0.rows() != res.rank(0) || alpha0.cols() != res.rank(0))
    throw DomainError("chain map must start with an endomorphism of F_0");
  ChainLift out;
  out.alpha.push_back(reduce_entries(r, alpha0));
  for (std::size_t k = 1; k <= res.length(); ++k) {
    std::size_t bk = res.rank(k);
    const Matrix dk = res.d(k);
    if (bk == 0) {
      out.alpha.push_back(Matrix(amb, 0));
      continue;
    }
    Matrix target = out.alpha.back() * dk;
    auto coeffs = express(r, dk.columns(), res.rank(k - 1), target);
    if (!coeffs)
      throw DomainError(k == 1 ? "map does not induce an endomorphism of the module"
                               : "complex is not exact where the lift was needed");
    out.alpha.push_back(std::move(*coeffs));
  }
  return out;
}

ChainLift lift_endomorphism(const Polynomial& a, const FreeResolution& res) {
  return lift_chain_map(res, Matrix::identity(res.ring->ambient(), res.rank(0)).scaled(a));
}

InducedMap induced_map(const ChainLift& lift, const ExtPresentation& ext) {
  const QuotientRing& r = *ext.resolution.ring;
  const RingPtr& amb = r.ambient();
  unsigned n = ext.degree;
  std::size_t h = ext.target.rank(), total = ext.ambient_rank();
  InducedMap out{Matrix(amb, total), true, std::nullopt};
  if (total == 0) {
    out.on_model = Matrix(amb, ext.model.module.rank());
    return out;
  }
  if (n >= lift.alpha.size()) throw DomainError("chain map does not reach the Ext degree");
  const Matrix& an = lift.alpha[n];
  if (an.rows() * h != total) throw DomainError("chain map is for a different resolution");
  Matrix t = an.transpose().kron_identity(h);
  out.images = t * ext.cycles;
  for (const auto& c : out.images.columns())
    if (!ext.is_boundary(c)) out.zero = false;
  std::vector<Vector> gens = ext.cycles.columns();
  gens.insert(gens.end(), ext.boundaries.begin(), ext.boundaries.end());
  if (auto coeffs = express(r, gens, total, out.images)) {
    std::size_t k = ext.cycles.cols();
    Matrix raw(amb, k);
    for (const auto& c : coeffs->columns()) raw.add_column(Vector(c.begin(), c.begin() + k));
    Matrix proj = ext.model.projection * raw;
    Matrix on_model(amb, proj.rows());
    for (std::size_t i : ext.model.kept) on_model.add_column(proj.column(i));
    out.on_model = reduce_entries(r, on_model);
  }
  return out;
}

VerificationReport verify_splitting_sequence(const FPModule& m, const Polynomial& a) {
  VerificationReport rep;
  rep.subject = "splitting sequence for a = " + a.to_string();
  const QRingPtr& rp = m.ring();
  const QuotientRing& r = *rp;
  const RingPtr& amb = r.ambient();
  const Matrix& phi = m.relations();
  std::size_t g = m.rank(), s = phi.cols();
  Matrix d2 = r_syzygies(r, phi);
  FreeResolution res{rp, m, {phi, d2}, false, false};
  FPModule omega(rp, d2);

  ExtPresentation ext = ext_module(res, omega, 1);
  if (!ext.killed_by(a)) {
    rep.add("hypothesis", false, "hypothesis fails: a does not annihilate Ext^1(M, Omega M)");
    return rep;
  }
  rep.add("hypothesis", true, "a annihilates Ext^1(M, Omega M)");

  // Psi with Psi*phi = a*Id modulo im d_2 + I: a lift of a times the class
  // of the projection F_1 -> Omega M.
  Matrix psi(amb, s);
  if (s > 0) {
    Vector pi = zero_vector(amb, s * s);
    for (std::size_t j = 0; j < s; ++j) pi[j * s + j] = a;
    std::vector<Vector> gens = phi.transpose().kron_identity(s).columns();
    Matrix own = omega.relations().repeat_diagonal(s);
    gens.insert(gens.end(), own.columns().begin(), own.columns().end());
    auto coeffs = express(r, gens, s * s, Matrix(amb, s * s, {pi}));
    if (!coeffs) {
      rep.add("retraction", false, "no Psi with Psi*phi = a modulo Omega M relations");
      return rep;
    }
    const Vector& f = coeffs->column(0);
    for (std::size_t i = 0; i < g; ++i)
      psi.add_column(Vector(f.begin() + i * s, f.begin() + (i + 1) * s));
    Matrix check = psi * phi;
    bool ok = true;
    for (std::size_t j = 0; j < s && ok; ++j) {
      Vector col = check.column(j);
      col[j] = col[j] - a;
      ok = omega.contains(col);
    }
    rep.add("retraction", ok, "Psi*phi = a*Id on Omega M");
    if (!ok) return rep;
  } else {
    for (std::size_t i = 0; i < g; ++i) psi.add_column({});
  }

  Matrix h = Matrix::identity(amb, g).scaled(a);
  if (s > 0) {
    Matrix fp = phi * psi;
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t i = 0; i < g; ++i) h.at(i, j) = h.at(i, j) - fp.at(i, j);
  }

  ElemQuotient eq = elem_quotient(m, a);
  FPModule middle = direct_sum(m, omega);
  Matrix left(amb, g + s);
  for (const auto& k : eq.embedding.columns()) {
    Vector col = k;
    Vector hk = h.apply(k);
    for (auto& p : hk) p = -p;
    auto lift = m.lift_to_relations(hk);
    if (!lift) {
      rep.add("left map", false, "a*k - phi*Psi*k is not a relation of M");
      return rep;
    }
    col.insert(col.end(), lift->begin(), lift->end());
    left.add_column(std::move(col));
  }

  Matrix cover = Matrix::hstack(phi, Matrix::identity(amb, g).scaled(a));
  FPModule omega_q(rp, r_syzygies(r, cover));
  Matrix right(amb, s + g);
  for (std::size_t i = 0; i < g; ++i) {
    Vector col;
    for (std::size_t t = 0; t < s; ++t) col.push_back(-psi.at(t, i));
    for (std::size_t t = 0; t < g; ++t) col.push_back(Polynomial::constant(amb, t == i ? 1 : 0));
    right.add_column(std::move(col));
  }
  for (std::size_t j = 0; j < s; ++j) right.add_column(unit_vector(amb, s + g, j));

  try {
    ModuleMap f(eq.kernel, middle, left);
    ModuleMap gmap(middle, omega_q, right);
    rep.add("maps well defined", true);
    ExactnessReport ex = verify_short_exact(f, gmap);
    rep.add("composition zero", ex.composition_zero);
    rep.add("injective", ex.injective);
    rep.add("surjective", ex.surjective);
    rep.add("exact in the middle", ex.middle_exact);
  } catch (const DomainError& e) {
    rep.add("maps well defined", false, e.what());
    return rep;
  }

  auto dk = vector_dimension(eq.kernel), dm = vector_dimension(m), dw = vector_dimension(omega),
       dq = vector_dimension(omega_q);
  if (dk && dm && dw && dq)
    rep.add("dimension count", *dk + *dq == *dm + *dw,
            std::to_string(*dk) + " + " + std::to_string(*dq) + " = " + std::to_string(*dm) +
                " + " + std::to_string(*dw));
  return rep;
}

}  // namespace cohann
