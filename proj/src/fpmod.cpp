#include "cohann/fpmod.hpp"

#include <deque>
#include <mutex>

#include "cohann/error.hpp"

namespace cohann {

std::vector<Vector> ideal_padding(const QuotientRing& r, std::size_t rank) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < rank; ++k)
    for (const auto& f : r.relations().gb().elements) {
      Vector v = zero_vector(r.ambient(), rank);
      v[k] = f;
      out.push_back(std::move(v));
    }
  return out;
}

Matrix normalize(const QuotientRing& r, const Matrix& m) {
  if (!same_ring(m.ring(), r.ambient())) throw RingMismatch("matrix is not over the ambient ring");
  Matrix out(r.ambient(), m.rows());
  for (const auto& c : m.columns()) {
    Vector v;
    v.reserve(c.size());
    for (const auto& p : c) v.push_back(r.reduce(p));
    if (!is_zero_vector(v)) out.add_column(std::move(v));
  }
  return out;
}

Matrix reduce_entries(const QuotientRing& r, const Matrix& m) {
  Matrix out(r.ambient(), m.rows());
  for (const auto& c : m.columns()) {
    Vector v;
    v.reserve(c.size());
    for (const auto& p : c) v.push_back(r.reduce(p));
    out.add_column(std::move(v));
  }
  return out;
}

struct FPModule::Cache {
  std::once_flag gb_once, lift_once;
  std::unique_ptr<ModuleGB> gb;
  std::unique_ptr<LiftingBasis> lift;
};

FPModule::FPModule(QRingPtr ring, Matrix relations)
    : ring_(std::move(ring)),
      relations_(normalize(*ring_, relations)),
      cache_(std::make_shared<Cache>()) {}

FPModule FPModule::free(QRingPtr ring, std::size_t rank) {
  RingPtr amb = ring->ambient();
  return FPModule(std::move(ring), Matrix(amb, rank));
}

FPModule FPModule::cyclic(QRingPtr ring, const std::vector<Polynomial>& gens) {
  Matrix m(ring->ambient(), 1);
  for (const auto& g : gens) m.add_column({g});
  return FPModule(std::move(ring), std::move(m));
}

std::vector<Vector> FPModule::submodule_generators() const {
  std::vector<Vector> out = relations_.columns();
  for (auto& v : ideal_padding(*ring_, rank())) out.push_back(std::move(v));
  return out;
}

const ModuleGB& FPModule::gb() const {
  std::call_once(cache_->gb_once, [&] {
    cache_->gb = std::make_unique<ModuleGB>(
        buchberger(ambient(), rank(), submodule_generators(), ModuleOrder::pot()));
  });
  return *cache_->gb;
}

const LiftingBasis& FPModule::lifter() const {
  std::call_once(cache_->lift_once, [&] {
    cache_->lift = std::make_unique<LiftingBasis>(ambient(), rank(), submodule_generators());
  });
  return *cache_->lift;
}

bool FPModule::contains(const Vector& v) const {
  if (v.size() != rank()) throw DomainError("vector length does not match module rank");
  if (is_zero_vector(v)) return true;
  return gb().contains(to_modvec(v));
}

bool FPModule::is_zero() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (!contains(unit_vector(ambient(), rank(), i))) return false;
  return true;
}

std::optional<Vector> FPModule::lift_to_relations(const Vector& v) const {
  auto c = lifter().lift(v);
  if (!c) return std::nullopt;
  c->resize(relations_.cols(), Polynomial(ambient()));
  for (auto& p : *c) p = ring_->reduce(p);
  return c;
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
  if (a.ring() != b.ring() && !same_ring(a.ambient(), b.ambient()))
    throw RingMismatch("direct sum of modules over different rings");
  return FPModule(a.ring(), Matrix::block_diagonal(a.relations(), b.relations()));
}

namespace {

// Syzygies of `cols` (in P^rows) restricted to their first `keep` coordinates.
Matrix projected_syzygies(const QuotientRing& r, std::size_t rows, std::vector<Vector> cols,
                          std::size_t keep) {
  for (auto& v : ideal_padding(r, rows)) cols.push_back(std::move(v));
  Matrix out(r.ambient(), keep);
  for (auto& s : syzygy_matrix(r.ambient(), rows, cols)) {
    s.resize(keep, Polynomial(r.ambient()));
    out.add_column(std::move(s));
  }
  return normalize(r, out);
}

}  // namespace

Matrix r_syzygies(const QuotientRing& r, const Matrix& f) {
  return projected_syzygies(r, f.rows(), f.columns(), f.cols());
}

Matrix preimage(const QuotientRing& r, const Matrix& f, const std::vector<Vector>& target) {
  std::vector<Vector> cols = f.columns();
  cols.insert(cols.end(), target.begin(), target.end());
  return projected_syzygies(r, f.rows(), std::move(cols), f.cols());
}

FPModule subquotient(const QRingPtr& r, const Matrix& k, const std::vector<Vector>& l) {
  std::vector<Vector> cols = k.columns();
  cols.insert(cols.end(), l.begin(), l.end());
  return FPModule(r, projected_syzygies(*r, k.rows(), std::move(cols), k.cols()));
}

std::optional<Matrix> express(const QuotientRing& r, const std::vector<Vector>& gens,
                              std::size_t rank, const Matrix& vectors) {
  std::vector<Vector> all = gens;
  for (auto& v : ideal_padding(r, rank)) all.push_back(std::move(v));
  LiftingBasis lb(r.ambient(), rank, all);
  Matrix out(r.ambient(), gens.size());
  for (const auto& c : vectors.columns()) {
    auto coeffs = lb.lift(c);
    if (!coeffs) return std::nullopt;
    coeffs->resize(gens.size(), Polynomial(r.ambient()));
    for (auto& p : *coeffs) p = r.reduce(p);
    out.add_column(std::move(*coeffs));
  }
  return out;
}

namespace {

// Columns that are not in the span of the other columns plus I*P^rows.
Matrix prune_columns(const QuotientRing& r, const Matrix& m) {
  std::vector<Vector> cols = m.columns();
  for (std::size_t j = cols.size(); j-- > 0;) {
    std::vector<Vector> others;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) others.push_back(cols[k]);
    for (auto& v : ideal_padding(r, m.rows())) others.push_back(std::move(v));
    if (others.empty()) continue;
    auto gb = buchberger(r.ambient(), m.rows(), others);
    if (gb.contains(to_modvec(cols[j]))) cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return Matrix(r.ambient(), m.rows(), std::move(cols));
}

}  // namespace

Simplified simplify(const FPModule& m) {
  const QuotientRing& r = *m.ring();
  const RingPtr& amb = m.ambient();
  std::size_t g0 = m.rank();
  Matrix rel = m.relations();
  Matrix proj = Matrix::identity(amb, g0);
  std::vector<std::size_t> kept(g0);
  for (std::size_t i = 0; i < g0; ++i) kept[i] = i;

  auto drop_row = [&](const Vector& v, std::size_t i) {
    Vector out;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (k != i) out.push_back(v[k]);
    return out;
  };

  auto eliminate_units = [&] {
    for (;;) {
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t j = 0; j < rel.cols() && !found; ++j)
        for (std::size_t i = 0; i < rel.rows() && !found; ++i)
          if (rel.at(i, j).is_unit()) {
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) return;
      Coefficient inv = rel.at(pi, pj).leading_coefficient().inverse();
      Vector pivot = rel.column(pj);
      // In M, e_pi = -inv * sum_{k != pi} pivot_k e_k.
      Vector subst = drop_row(scale_vector(pivot, Polynomial::constant(amb, -inv)), pi);
      Matrix next(amb, rel.rows() - 1);
      for (std::size_t j = 0; j < rel.cols(); ++j) {
        if (j == pj) continue;
        Vector c = rel.column(j);
        Polynomial f = c[pi];
        Vector reduced = drop_row(c, pi);
        if (!f.is_zero()) reduced = add_vectors(reduced, scale_vector(subst, f));
        next.add_column(std::move(reduced));
      }
      Matrix nproj(amb, rel.rows() - 1);
      for (const auto& c : proj.columns()) {
        Vector reduced = drop_row(c, pi);
        if (!c[pi].is_zero()) reduced = add_vectors(reduced, scale_vector(subst, c[pi]));
        nproj.add_column(std::move(reduced));
      }
      rel = normalize(r, next);
      proj = nproj;
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pi));
    }
  };

  for (;;) {
    eliminate_units();
    // Generators that vanish in M without a unit relation.
    FPModule cur(m.ring(), rel);
    bool added = false;
    for (std::size_t i = 0; i < cur.rank(); ++i) {
      Vector e = unit_vector(amb, cur.rank(), i);
      if (cur.contains(e)) {
        rel.add_column(std::move(e));
        added = true;
      }
    }
    if (!added) break;
  }

  Matrix pruned = prune_columns(r, rel);
  Matrix nproj(amb, proj.rows());
  for (const auto& c : proj.columns()) {
    Vector v;
    for (const auto& p : c) v.push_back(r.reduce(p));
    nproj.add_column(std::move(v));
  }
  return {FPModule(m.ring(), std::move(pruned)), std::move(nproj), std::move(kept)};
}

FPModule syzygy(const FPModule& m) {
  const Matrix& phi = m.relations();
  return FPModule(m.ring(), r_syzygies(*m.ring(), phi));
}

FPModule syzygy(const FPModule& m, unsigned n) {
  FPModule cur = m;
  for (unsigned k = 0; k < n; ++k) cur = syzygy(cur);
  return cur;
}

std::optional<std::vector<std::int64_t>> generator_degrees(const QuotientRing& r,
                                                           const Matrix& relations) {
  for (const auto& f : r.relations().gb().elements)
    if (!f.is_homogeneous()) return std::nullopt;
  std::size_t g = relations.rows(), s = relations.cols();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (!relations.at(i, j).is_homogeneous()) return std::nullopt;
  std::vector<std::optional<std::int64_t>> row(g), col(s);
  for (std::size_t start = 0; start < g; ++start) {
    if (row[start]) continue;
    row[start] = 0;
    // Alternate between rows (index < g) and columns (index >= g).
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t node = queue.front();
      queue.pop_front();
      if (node < g) {
        for (std::size_t j = 0; j < s; ++j) {
          const auto& p = relations.at(node, j);
          if (p.is_zero()) continue;
          std::int64_t d = *row[node] + p.degree();
          if (!col[j]) {
            col[j] = d;
            queue.push_back(g + j);
          } else if (*col[j] != d) {
            return std::nullopt;
          }
        }
      } else {
        std::size_t j = node - g;
        for (std::size_t i = 0; i < g; ++i) {
          const auto& p = relations.at(i, j);
          if (p.is_zero()) continue;
          std::int64_t d = *col[j] - p.degree();
          if (!row[i]) {
            row[i] = d;
            queue.push_back(i);
          } else if (*row[i] != d) {
            return std::nullopt;
          }
        }
      }
    }
  }
  std::vector<std::int64_t> out;
  for (const auto& d : row) out.push_back(*d);
  return out;
}

bool is_graded(const FPModule& m) { return generator_degrees(*m.ring(), m.relations()).has_value(); }

std::size_t FreeResolution::rank(std::size_t k) const {
  if (k == 0) return module.rank();
  if (k <= maps.size()) return maps[k - 1].cols();
  if (!complete) throw DomainError("resolution was not computed far enough");
  return 0;
}

Matrix FreeResolution::d(std::size_t k) const {
  if (k == 0) throw DomainError("d_0 is not part of a resolution");
  if (k <= maps.size()) return maps[k - 1];
  return Matrix::zero(ring->ambient(), rank(k - 1), rank(k));
}

std::vector<std::size_t> FreeResolution::betti() const {
  std::vector<std::size_t> out{module.rank()};
  for (const auto& m : maps) out.push_back(m.cols());
  return out;
}


FreeResolution resolve(const FPModule& m, unsigned length, ResolutionKind kind) {
  const QuotientRing& r = *m.ring();
  FPModule start = m;
  if (kind == ResolutionKind::Minimal) {
    if (!is_graded(m)) throw DomainError("minimal resolution needs weighted-homogeneous input");
    start = simplify(m).module;
  } else if (kind == ResolutionKind::Pruned) {
    start = FPModule(m.ring(), prune_columns(r, m.relations()));
  }
  FreeResolution res{m.ring(), start, {}, kind == ResolutionKind::Minimal};
  Matrix cur = start.relations();
  for (unsigned k = 0; k < length; ++k) {
    if (k > 0) {
      cur = r_syzygies(r, cur);
      if (kind != ResolutionKind::Raw) cur = prune_columns(r, cur);
    }
    res.maps.push_back(cur);
    if (cur.cols() == 0) {
      res.complete = true;
      break;
    }
  }
  if (start.rank() == 0) res.complete = true;
  // Trailing zero maps carry no information.
  while (!res.maps.empty() && res.maps.back().cols() == 0) res.maps.pop_back();
  return res;
}

FreeResolution resolve(const FPModule& m, unsigned length, bool minimal) {
  return resolve(m, length, minimal ? ResolutionKind::Minimal : ResolutionKind::Raw);
}

FreeResolution resolve_default(const FPModule& m, unsigned length) {
  return resolve(m, length, is_graded(m) ? ResolutionKind::Minimal : ResolutionKind::Pruned);
}

Ideal annihilator(const FPModule& m) {
  const QuotientRing& r = *m.ring();
  const RingPtr& amb = m.ambient();
  Ideal out = Ideal::unit(amb);
  if (m.rank() == 0) return out;
  if (m.rank() == 1) {
    std::vector<Polynomial> gens;
    for (const auto& c : m.relations().columns()) gens.push_back(c[0]);
    return r.ideal(std::move(gens));
  }
  std::vector<Vector> u = m.submodule_generators();
  for (std::size_t i = 0; i < m.rank(); ++i) {
    std::vector<Vector> cols{unit_vector(amb, m.rank(), i)};
    cols.insert(cols.end(), u.begin(), u.end());
    std::vector<Polynomial> gens;
    for (const auto& s : syzygy_matrix(amb, m.rank(), cols)) gens.push_back(s[0]);
    out = intersect(out, Ideal(amb, std::move(gens)));
    if (out == r.relations()) break;
  }
  return out;
}

FPModule hom_module(const FPModule& m, const FPModule& n) {
  const QuotientRing& r = *m.ring();
  std::size_t h = n.rank();
  Matrix d = m.relations().transpose().kron_identity(h);
  Matrix target_rel = n.relations().repeat_diagonal(m.relations().cols());
  Matrix source_rel = n.relations().repeat_diagonal(m.rank());
  Matrix k = preimage(r, d, target_rel.columns());
  return simplify(subquotient(m.ring(), k, source_rel.columns())).module;
}

ElemQuotient elem_quotient(const FPModule& m, const Polynomial& a) {
  const QuotientRing& r = *m.ring();
  const RingPtr& amb = m.ambient();
  std::size_t g = m.rank();
  Matrix scalar = Matrix::identity(amb, g).scaled(a);
  Matrix k = preimage(r, scalar, m.relations().columns());
  FPModule kernel = subquotient(m.ring(), k, m.relations().columns());
  FPModule quotient(m.ring(), Matrix::hstack(m.relations(), scalar));
  return {std::move(kernel), std::move(k), std::move(quotient)};
}

ModuleMap::ModuleMap(FPModule source, FPModule target, Matrix matrix)
    : source_(std::move(source)),
      target_(std::move(target)),
      matrix_(matrix.ring(), matrix.rows()),
      lifting_(target_.ambient(), target_.relations().cols()) {
  if (matrix.rows() != target_.rank() || matrix.cols() != source_.rank())
    throw DomainError("map matrix has the wrong shape");
  // Reduced entrywise; zero columns are kept since they index generators.
  for (const auto& c : matrix.columns()) {
    Vector v;
    for (const auto& p : c) v.push_back(source_.ring()->reduce(p));
    matrix_.add_column(std::move(v));
  }
  Matrix image = matrix_ * source_.relations();
  for (const auto& c : image.columns()) {
    auto l = target_.lift_to_relations(c);
    if (!l) throw DomainError("map does not carry relations into relations");
    lifting_.add_column(std::move(*l));
  }
}

ExactnessReport verify_short_exact(const ModuleMap& f, const ModuleMap& g) {
  const QuotientRing& r = *f.source().ring();
  ExactnessReport rep;
  const FPModule& a = f.source();
  const FPModule& b = f.target();
  const FPModule& c = g.target();
  if (b.rank() != g.source().rank()) throw DomainError("maps do not compose");
  Matrix comp = g.matrix() * f.matrix();
  rep.composition_zero = true;
  for (const auto& col : comp.columns())
    if (!c.contains(col)) rep.composition_zero = false;
  // ker f: vectors sent into U_B, all of which must vanish in A.
  Matrix kf = preimage(r, f.matrix(), b.relations().columns());
  rep.injective = true;
  for (const auto& col : kf.columns())
    if (!a.contains(col)) rep.injective = false;
  // Surjectivity: each generator of C in span(G) + U_C.
  std::vector<Vector> span = g.matrix().columns();
  for (const auto& col : c.relations().columns()) span.push_back(col);
  for (auto& v : ideal_padding(r, c.rank())) span.push_back(std::move(v));
  rep.surjective = true;
  if (c.rank() > 0) {
    if (span.empty()) {
      rep.surjective = c.is_zero();
    } else {
      auto gb = buchberger(c.ambient(), c.rank(), span);
      for (std::size_t i = 0; i < c.rank(); ++i)
        if (!gb.contains(to_modvec(unit_vector(c.ambient(), c.rank(), i)))) rep.surjective = false;
    }
  }
  // ker g inside im f + U_B.
  Matrix kg = preimage(r, g.matrix(), c.relations().columns());
  std::vector<Vector> img = f.matrix().columns();
  for (const auto& col : b.submodule_generators()) img.push_back(col);
  rep.middle_exact = true;
  if (kg.cols() > 0) {
    if (img.empty()) {
      rep.middle_exact = false;
    } else {
      auto gb = buchberger(b.ambient(), b.rank(), img);
      for (const auto& col : kg.columns())
        if (!gb.contains(to_modvec(col))) rep.middle_exact = false;
    }
  }
  return rep;
}

HorseshoeResult horseshoe_syzygies(const ModuleMap& f, const ModuleMap& g) {
  if (!verify_short_exact(f, g).exact()) throw DomainError("input sequence is not exact");
  const QRingPtr& rp = f.source().ring();
  const QuotientRing& r = *rp;
  const RingPtr& amb = r.ambient();
  const FPModule& lm = f.source();
  const FPModule& mm = f.target();
  const FPModule& nm = g.target();
  std::size_t l = lm.rank(), m = mm.rank(), n = nm.rank();

  // Lifts h_k of the generators of N through g.
  std::vector<Vector> span = g.matrix().columns();
  for (const auto& col : nm.submodule_generators()) span.push_back(col);
  Matrix lifts(amb, m);
  if (n > 0) {
    LiftingBasis lb(amb, n, span);
    for (std::size_t k = 0; k < n; ++k) {
      auto c = lb.lift(unit_vector(amb, n, k));
      if (!c) throw DomainError("map onto the right-hand module is not surjective");
      c->resize(m, Polynomial(amb));
      lifts.add_column(std::move(*c));
    }
  }
  Matrix cover = Matrix::hstack(f.matrix(), lifts);
  // Omega of the middle with respect to the combined cover.
  Matrix kmid = preimage(r, cover, mm.relations().columns());
  FPModule omega_mid = subquotient(rp, kmid, {});
  FPModule omega_left = syzygy(lm);
  FPModule omega_right = syzygy(nm);

  Matrix incl_vectors(amb, l + n);
  for (const auto& col : lm.relations().columns()) {
    Vector v = col;
    v.resize(l + n, Polynomial(amb));
    incl_vectors.add_column(std::move(v));
  }
  auto incl = express(r, kmid.columns(), l + n, incl_vectors);
  Matrix proj_vectors(amb, n);
  for (const auto& col : kmid.columns())
    proj_vectors.add_column(Vector(col.begin() + static_cast<std::ptrdiff_t>(l), col.end()));
  auto proj = express(r, nm.relations().columns(), n, proj_vectors);
  if (!incl || !proj) throw DomainError("syzygy maps could not be formed");
  ModuleMap inclusion(omega_left, omega_mid, *incl);
  ModuleMap projection(omega_mid, omega_right, *proj);
  ExactnessReport rep = verify_short_exact(inclusion, projection);
  return {std::move(omega_left), std::move(omega_mid), std::move(omega_right),
          std::move(inclusion), std::move(projection), rep};
}

std::optional<std::size_t> vector_dimension(const FPModule& m) {
  if (m.rank() == 0) return 0;
  auto gens = m.submodule_generators();
  std::vector<std::vector<Monomial>> leads(m.rank());
  if (!gens.empty()) {
    auto gb = buchberger(m.ambient(), m.rank(), gens, ModuleOrder::pot());
    for (const auto& e : gb.elements()) leads[e.front().comp].push_back(e.front().mono);
  }
  std::size_t total = 0;
  for (const auto& ls : leads) {
    auto sm = standard_monomials(*m.ambient(), ls);
    if (!sm.finite) return std::nullopt;
    total += sm.monomials.size();
  }
  return total;
}

}  // namespace cohann
