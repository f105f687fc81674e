#include "cohann/suite.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cohann/artinian.hpp"
#include "cohann/different.hpp"
#include "cohann/error.hpp"
#include "cohann/ext_engine.hpp"
#include "cohann/loci.hpp"
#include "cohann/parser.hpp"

namespace cohann {

namespace {

RingPtr make_ring(std::vector<std::string> vars, std::uint32_t p = 0,
                  MonomialOrder order = MonomialOrder::grevlex()) {
  return PolyRing::make(Field(p), std::move(vars), order);
}

std::vector<Polynomial> polys(const RingPtr& r, const std::vector<std::string>& ss) {
  std::vector<Polynomial> out;
  for (const auto& s : ss) out.push_back(parse_poly(s, r));
  return out;
}

QRingPtr quotient(const RingPtr& r, const std::vector<std::string>& rels) {
  return make_quotient(r, polys(r, rels));
}

FPModule cyclic(const QRingPtr& q, const std::vector<std::string>& gens) {
  return FPModule::cyclic(q, polys(q->ambient(), gens));
}

Ideal ideal(const RingPtr& r, const std::vector<std::string>& gens) { return Ideal(r, polys(r, gens)); }

std::string show(const Ideal& i) {
  std::string out = "(";
  for (std::size_t k = 0; k < i.gb().elements.size(); ++k)
    out += (k ? ", " : "") + i.gb().elements[k].to_string();
  return out + ")";
}

std::string show_mod(const Ideal& i, const QuotientRing& r) {
  auto g = generators_modulo(i, r.relations());
  std::string out = "(";
  for (std::size_t k = 0; k < g.size(); ++k) out += (k ? ", " : "") + g[k].to_string();
  return out + ")";
}

Polynomial random_poly(const RingPtr& r, std::mt19937& rng, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> coef(-3, 3), nterms(1, max_terms), deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, r->arity() - 1);
  while (true) {
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
      std::vector<std::uint32_t> e(r->arity(), 0);
      int d = deg(rng);
      for (int j = 0; j < d; ++j) ++e[var(rng)];
      int c = coef(rng);
      terms.push_back({r->monomial(e), Coefficient::from_int(r->field(), c == 0 ? 1 : c)});
    }
    Polynomial out(r, std::move(terms));
    if (!out.is_zero()) return out;
  }
}

FPModule random_fp_module(const QRingPtr& q, std::mt19937& rng) {
  const RingPtr& r = q->ambient();
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0:
      return FPModule::cyclic(q, {random_poly(r, rng, 2, 2)});
    case 1:
      return FPModule::cyclic(q, {random_poly(r, rng, 2, 1), random_poly(r, rng, 2, 1)});
    default: {
      Polynomial zero(r);
      return FPModule(q, Matrix::from_rows(r, {{random_poly(r, rng, 1, 1), zero},
                                               {random_poly(r, rng, 1, 2), random_poly(r, rng, 1, 1)}}));
    }
  }
}

void expect_ideal(VerificationReport& rep, const std::string& name, const Ideal& got,
                  const Ideal& want) {
  rep.add(name, got == want, "got " + show(got) + ", expected " + show(want));
}

// Dual numbers in one direction: ca = (x) at every level, Sing = V(x).
VerificationReport dual_numbers() {
  VerificationReport rep;
  for (std::uint32_t p : {0u, 101u}) {
    std::string tag = p == 0 ? "Q: " : "F101: ";
    auto r = make_ring({"x", "y"}, p);
    auto q = quotient(r, {"x^2"});
    auto m = cyclic(q, {"x"});
    Ideal x = ideal(r, {"x"});
    for (unsigned n = 1; n <= 3; ++n)
      expect_ideal(rep, tag + "witness of R/(x) at level " + std::to_string(n), ca_witness(m, n).ideal, x);
    Ideal jac = jacobian_ideal(*q, 1);
    expect_ideal(rep, tag + "jacobian", jac, x);
    auto s = sandwich_check(*q, jac, {m, FPModule::free(q, 1)}, 3, 1);
    rep.append(s, tag + "sandwich: ");
    rep.add(tag + "common radical (x)", radical_compare(jac, x).verdict == Radical::Equal);
  }
  return rep;
}

VerificationReport regular_plane() {
  VerificationReport rep;
  auto r = make_ring({"x", "y"});
  auto q = quotient(r, {});
  Polynomial zero(r);
  std::vector<std::pair<std::string, FPModule>> ms{
      {"k", cyclic(q, {"x", "y"})},
      {"R/(x)", cyclic(q, {"x"})},
      {"coker[[x^2],[xy]]", FPModule(q, Matrix::from_rows(r, {{parse_poly("x^2", r)}, {parse_poly("x*y", r)}}))}};
  for (const auto& [name, m] : ms)
    rep.add("witness of " + name + " at level 3 is the unit ideal", ca_witness(m, 3).ideal.is_unit(),
            show(ca_witness(m, 3).ideal));
  return rep;
}

VerificationReport node_and_cusp() {
  VerificationReport rep;
  auto r = make_ring({"x", "y"});
  Ideal xy = ideal(r, {"x", "y"});

  auto node = quotient(r, {"x*y"});
  expect_ideal(rep, "node: witness of R/(x) at level 2", ca_witness(cyclic(node, {"x"}), 2).ideal, xy);
  Ideal njac = jacobian_ideal(*node, 1);
  expect_ideal(rep, "node: jacobian", njac, xy);
  rep.append(sandwich_check(*node, njac, {cyclic(node, {"x"}), cyclic(node, {"y"})}, 3, 1), "node sandwich: ");

  auto cusp = quotient(r, {"y^2-x^3"});
  auto a = make_subalgebra(*cusp, {"t"}, polys(r, {"x"}));
  auto cert = cert_prop34(*cusp, a);
  auto gens = generators_modulo(cert.ideal, cusp->relations());
  rep.add("cusp: certificate over t -> x is (y)", gens == polys(r, {"y"}), show_mod(cert.ideal, *cusp));
  Ideal cjac = jacobian_ideal(*cusp, 1);
  expect_ideal(rep, "cusp: jacobian", cjac, ideal(r, {"x^2", "y"}));
  Ideal combined = ideal_sum(cert.ideal, cjac);
  rep.append(sandwich_check(*cusp, combined, {cyclic(cusp, {"x", "y"}), cyclic(cusp, {"y"})}, 3, 1),
             "cusp sandwich: ");
  rep.add("cusp: common radical (x, y)", radical_compare(combined, xy).verdict == Radical::Equal);
  return rep;
}

VerificationReport differents() {
  VerificationReport rep;
  auto r = make_ring({"x", "y"});
  auto cusp = quotient(r, {"y^2-x^3"});
  auto nd = noether_different(*cusp, make_subalgebra(*cusp, {"t"}, polys(r, {"x"})));
  rep.add("cusp over t -> x", generators_modulo(nd.ideal, cusp->relations()) == polys(r, {"y"}),
          show_mod(nd.ideal, *cusp));

  auto line = make_ring({"x"});
  auto split = quotient(line, {"x^2-1"});
  auto nd1 = noether_different(*split, make_subalgebra(*split, {}, {}));
  rep.add("x^2 - 1 over the field", nd1.ideal.is_unit(), show(nd1.ideal));

  auto f2 = make_ring({"x"}, 2);
  auto insep = quotient(f2, {"x^2+1"});
  auto nd2 = noether_different(*insep, make_subalgebra(*insep, {}, {}));
  rep.add("x^2 + 1 over F2", nd2.ideal == insep->relations(), show_mod(nd2.ideal, *insep));
  return rep;
}

VerificationReport certificate_kills_ext() {
  VerificationReport rep;
  auto r = make_ring({"x", "y"});
  auto cusp = quotient(r, {"y^2-x^3"});
  auto cert = cert_prop34(*cusp, make_subalgebra(*cusp, {"t"}, polys(r, {"x"})));
  rep.add("base is regular of dimension 1", cert.d == 1);
  for (const auto& [name, gens] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"k", {"x", "y"}}, {"R/(y)", {"y"}}, {"R/(x)", {"x"}}}) {
    auto w = ca_witness(cyclic(cusp, gens), cert.d + 1);
    bool ok = true;
    for (const auto& g : cert.ideal.gb().elements) ok = ok && w.ext.killed_by(g);
    rep.add("certificate kills Ext^2(M, Omega^2 M) for M = " + name, ok);
  }
  return rep;
}

VerificationReport artinian_oracle() {
  VerificationReport rep;
  auto r = make_ring({"x", "y"}, 101);
  auto q = quotient(r, {"x^2", "y^3"});
  FinDimAlgebra alg(q);
  auto k = cyclic(q, {"x", "y"});
  auto res = resolve_default(k, 5);
  auto kf = FinDimModule::residue_field(alg);
  auto ores = oracle_resolution(alg, kf, 5);
  for (unsigned n = 0; n <= 4; ++n) {
    auto g = ext_module(res, k, n).dimension();
    auto o = ext_linear_algebra(alg, ores, kf, n).dimension;
    rep.add("dim Ext^" + std::to_string(n) + "(k, k) = " + std::to_string(n + 1),
            g && *g == n + 1 && o == n + 1,
            "groebner " + (g ? std::to_string(*g) : std::string("infinite")) + ", oracle " + std::to_string(o));
  }
  auto ls = loewy_socle(alg);
  rep.add("loewy length 4", ls.loewy_length == 4, std::to_string(ls.loewy_length));
  bool socle_ok = ls.socle.cols() == 1 && alg.element(ls.socle.column(0)).monic() == parse_poly("x*y^2", r);
  rep.add("socle (xy^2)", socle_ok);
  if (socle_ok) {
    std::mt19937_64 rng(20140215);
    std::size_t killed = 0, nonzero = 0;
    for (int i = 0; i < 20; ++i) {
      auto m = random_module(alg, rng);
      auto n = random_module(alg, rng);
      auto e = ext_linear_algebra(alg, m, n, 1);
      nonzero += e.dimension > 0;
      killed += ext_killed_by(n, e, ls.socle.column(0));
    }
    rep.add("socle kills Ext^1 on 20 random pairs", killed == 20,
            std::to_string(killed) + " killed, " + std::to_string(nonzero) + " nonzero");
  }
  return rep;
}

VerificationReport splitting_sequences() {
  VerificationReport rep;
  auto r = make_ring({"x", "y"});
  auto dual = quotient(r, {"x^2"});
  rep.append(verify_splitting_sequence(cyclic(dual, {"x"}), parse_poly("x", r)), "R/(x), a = x: ");
  rep.append(verify_splitting_sequence(FPModule::free(dual, 1), parse_poly("1", r)), "R, a = 1: ");
  auto rp = make_ring({"x", "y"}, 101);
  auto art = quotient(rp, {"x^2", "y^3"});
  Polynomial soc = parse_poly("x*y^2", rp);
  rep.append(verify_splitting_sequence(cyclic(art, {"x", "y"}), soc), "artinian k, a = xy^2: ");
  rep.append(verify_splitting_sequence(cyclic(art, {"x", "y^2"}), soc), "artinian R/(x, y^2), a = xy^2: ");
  return rep;
}

VerificationReport radical_filtrations() {
  VerificationReport rep;
  auto r = make_ring({"x", "y"}, 101);
  auto q = quotient(r, {"x^2", "y^3"});
  FinDimAlgebra alg(q);
  auto k = FinDimModule::residue_field(alg);
  std::mt19937_64 rng(1729);
  std::size_t ok = 0;
  std::string dims;
  for (int i = 0; i < 10; ++i) {
    auto m = random_module(alg, rng);
    auto w = radical_filtration(alg, m);
    ok += w.length() <= 4 && verify_building_membership(alg, w, k);
    dims += (i ? "," : "") + std::to_string(m.dimension()) + "/" + std::to_string(w.length());
  }
  rep.add("10 random modules are |k|_4 witnesses", ok == 10, "dim/layers " + dims);
  auto m = FinDimModule::from_fpmodule(alg, cyclic(q, {"x^2", "x*y", "y^2"}));
  std::vector<FinDimModule> samples{k, FinDimModule::regular(alg)};
  std::mt19937_64 srng(4);
  for (int i = 0; i < 3; ++i) samples.push_back(random_module(alg, srng));
  rep.append(lemma42_check(alg, k, m, 2, radical_filtration(alg, m), samples), "R/J^2: ");
  return rep;
}

VerificationReport descent() {
  auto r = make_ring({"x", "y"});
  auto node = quotient(r, {"x*y"});
  auto a = make_subalgebra(*node, {"u", "v"}, polys(r, {"x", "y"}));
  auto k = FPModule::cyclic(a.base_ring, polys(a.base, {"u", "v"}));
  return descent_check(*node, a, parse_poly("x", r), 2, {cyclic(node, {"x"})}, {k});
}

VerificationReport shrinking_bounds() {
  VerificationReport rep;
  auto r = make_ring({"x"});
  auto q = quotient(r, {});
  std::vector<FPModule> family;
  std::optional<Ideal> prev;
  for (int i = 1; i <= 6; ++i) {
    family.push_back(cyclic(q, {"x^" + std::to_string(i)}));
    Ideal b = ca_upper_bound(family, 1).bound;
    if (prev)
      rep.add("bound shrinks at i = " + std::to_string(i), prev->contains(b) && !(b == *prev), show(b));
    prev = b;
  }
  expect_ideal(rep, "bound over i <= 6", *prev, ideal(r, {"x^6"}));
  return rep;
}

// Property suites with fixed seeds.

bool s_pairs_close(const ReducedGroebnerBasis& gb) {
  const auto& e = gb.elements;
  const RingPtr& r = gb.ring;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i].leading_coefficient().is_one()) return false;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : e[j].terms())
        if (e[i].leading_monomial().divides(t.mono)) return false;
      if (j < i) continue;
      auto l = r->lcm(e[i].leading_monomial(), e[j].leading_monomial());
      auto s = e[i].times(l / e[i].leading_monomial(), Coefficient::one(r->field())) -
               e[j].times(l / e[j].leading_monomial(), Coefficient::one(r->field()));
      if (!normal_form(s, gb).is_zero()) return false;
    }
  }
  return true;
}

VerificationReport property_suites() {
  VerificationReport rep;
  {
    std::mt19937 rng(7);
    std::size_t n = 0, ok = 0;
    for (std::uint32_t p : {0u, 32003u})
      for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(1)}) {
        auto r = make_ring({"x", "y", "z"}, p, order);
        for (int k = 0; k < 8; ++k) {
          std::vector<Polynomial> gens;
          for (int g = 0; g < 3; ++g) gens.push_back(random_poly(r, rng, 3, 3));
          auto gb = buchberger(gens);
          bool good = s_pairs_close(gb);
          for (const auto& g : gens) good = good && normal_form(g, gb).is_zero();
          ++n;
          ok += good;
        }
      }
    rep.add("S-pair closure and reducedness", ok == n, std::to_string(ok) + "/" + std::to_string(n));
  }
  {
    std::mt19937 rng(11);
    auto r = make_ring({"x", "y"});
    std::size_t ok = 0;
    for (int k = 0; k < 200; ++k) {
      Ideal a(r, {random_poly(r, rng, 3, 3), random_poly(r, rng, 3, 2)});
      Ideal b(r, {random_poly(r, rng, 3, 2)});
      auto g = random_poly(r, rng, 2, 2);
      auto c = colon(a, g);
      auto in = intersect(a, b);
      bool good = c.contains(a) && in.contains(ideal_product(a, b));
      for (const auto& f : c.gb().elements) good = good && a.contains(f * g);
      for (const auto& f : in.gb().elements) good = good && a.contains(f) && b.contains(f);
      auto f = random_poly(r, rng, 3, 3);
      good = good && a.contains(f * g) == c.contains(f);
      ok += good;
    }
    rep.add("colon and intersection agree with membership", ok == 200, std::to_string(ok) + "/200");
  }
  auto r = make_ring({"x", "y"});
  auto node = quotient(r, {"x*y"});
  auto dual = quotient(r, {"x^2"});
  auto cusp = quotient(r, {"y^2-x^3"});
  {
    std::mt19937 rng(3);
    std::size_t n = 0, ok = 0;
    for (const auto& q : {node, dual, cusp})
      for (int t = 0; t < 4; ++t) {
        auto res = resolve(random_fp_module(q, rng), 4, ResolutionKind::Pruned);
        for (std::size_t k = 1; k < res.length(); ++k) {
          ++n;
          ok += reduce_entries(*q, res.d(k) * res.d(k + 1)).is_zero();
        }
      }
    rep.add("d^2 = 0", ok == n, std::to_string(ok) + "/" + std::to_string(n));
  }
  {
    auto rp = make_ring({"x", "y"}, 101);
    auto art = quotient(rp, {"x^2", "y^3"});
    std::mt19937 rng(11);
    std::size_t n = 0, ok = 0;
    for (int t = 0; t < 5; ++t) {
      auto m = random_fp_module(art, rng);
      auto tgt = random_fp_module(art, rng);
      for (unsigned deg = 0; deg <= 2; ++deg) {
        auto raw = ext_module(resolve(m, deg + 1, ResolutionKind::Raw), tgt, deg);
        auto pruned = ext_module(resolve(m, deg + 1, ResolutionKind::Pruned), tgt, deg);
        bool good = raw.annihilator == pruned.annihilator && raw.dimension() == pruned.dimension();
        if (is_graded(m)) {
          auto mini = ext_module(resolve(m, deg + 1, ResolutionKind::Minimal), tgt, deg);
          good = good && mini.annihilator == pruned.annihilator && mini.dimension() == pruned.dimension();
        }
        ++n;
        ok += good;
      }
    }
    rep.add("Ext annihilators independent of the resolution", ok == n, std::to_string(ok) + "/" + std::to_string(n));
  }
  {
    std::mt19937 rng(5);
    std::size_t n = 0, ok = 0;
    for (const auto& [q, gens] : std::vector<std::pair<QRingPtr, std::vector<std::string>>>{
             {dual, {"x"}}, {node, {"x"}}, {cusp, {"y"}}}) {
      auto m = cyclic(q, gens);
      auto w = ca_witness(m, 1).ideal;
      auto res = resolve(m, 4, ResolutionKind::Pruned);
      for (int t = 0; t < 6; ++t) {
        auto target = random_fp_module(q, rng);
        for (unsigned k = 1; k <= 3; ++k) {
          auto e = ext_module(res, target, k);
          bool good = true;
          for (const auto& g : w.gb().elements) good = good && e.killed_by(g);
          ++n;
          ok += good;
        }
      }
    }
    rep.add("witness ideal kills higher Ext", ok == n, std::to_string(ok) + "/" + std::to_string(n));
  }
  {
    std::mt19937 rng(21);
    std::size_t ok = 0, n = 0;
    for (int t = 0; t < 5; ++t) {
      auto m = random_fp_module(node, rng);
      auto b = random_poly(r, rng, 1, 2);
      auto quo = elem_quotient(m, b).quotient;
      Ideal j = colon(annihilator(m), b);
      auto x = random_fp_module(node, rng);
      for (unsigned d = 1; d <= 2; ++d) {
        auto j2 = ideal_product(ideal_product(j, j), ext_module(quo, x, d).annihilator);
        ++n;
        ok += ext_module(m, x, d).annihilator.contains(j2);
      }
    }
    rep.add("four-term inclusion along bM -> M -> M/bM", ok == n, std::to_string(ok) + "/" + std::to_string(n));
  }
  std::vector<std::vector<std::string>> gens{{"x"}, {"y"}, {"x", "y"}, {"x^2", "y"}};
  {
    std::size_t ok = 0, n = 0;
    std::vector<std::pair<QRingPtr, SubalgebraMap>> inst{
        {cusp, make_subalgebra(*cusp, {"t"}, polys(r, {"x"}))},
        {node, make_subalgebra(*node, {"u", "v"}, polys(r, {"x", "y"}))}};
    for (const auto& [q, a] : inst) {
      auto nd = noether_different(*q, a);
      for (const auto& mg : gens)
        for (const auto& ng : gens) {
          auto m = cyclic(q, mg);
          auto nm = cyclic(q, ng);
          auto base = ext_module(pushforward(m, a).module(), pushforward(nm, a).module(), 1);
          std::vector<Polynomial> prod;
          for (const auto& b : base.annihilator.gb().elements)
            for (const auto& d : nd.images) prod.push_back(a.apply(b) * d);
          ++n;
          ok += ext_module(m, nm, 1).annihilator.contains(q->ideal(prod));
        }
    }
    rep.add("different times base annihilator kills Ext^1", ok == n, std::to_string(ok) + "/" + std::to_string(n));
  }
  {
    auto uv = make_subalgebra(*node, {"u", "v"}, polys(r, {"x", "y"}));
    Ideal base = ca_witness(pushforward(FPModule::free(node, 1), uv).module(), 1).ideal;
    std::vector<std::vector<std::string>> sgens{{"x"}, {"y"}, {"x", "y"}, {"x^2"}};
    std::size_t ok = 0, n = 0;
    for (const auto& mg : sgens)
      for (const auto& ng : sgens) {
        auto m = cyclic(node, mg);
        auto na = pushforward(cyclic(node, ng), uv).module();
        auto top = ext_module(pushforward(m, uv).module(), na, 2).annihilator;
        auto lower = ext_module(pushforward(syzygy(m, 1), uv).module(), na, 1).annihilator;
        ++n;
        ok += lower.contains(ideal_product(base, top));
      }
    rep.add("base annihilator shifts along syzygies", ok == n, std::to_string(ok) + "/" + std::to_string(n));
  }
  return rep;
}

}  // namespace

const std::vector<Scenario>& bundled_scenarios() {
  static const std::vector<Scenario> all{
      {"01", "dual-numbers", {"witness", "jacobian", "sandwich"}, dual_numbers},
      {"02", "regular-plane", {"witness"}, regular_plane},
      {"03", "node-and-cusp", {"witness", "jacobian", "sandwich", "ndiff"}, node_and_cusp},
      {"04", "noether-differents", {"ndiff"}, differents},
      {"05", "certificate-kills-ext", {"ndiff", "witness"}, certificate_kills_ext},
      {"06", "artinian-oracle", {"artinian"}, artinian_oracle},
      {"07", "splitting-sequences", {"splitting"}, splitting_sequences},
      {"08", "radical-filtrations", {"artinian", "building"}, radical_filtrations},
      {"09", "descent", {"descent", "ndiff"}, descent},
      {"10", "shrinking-bounds", {"bound"}, shrinking_bounds},
      {"11", "property-suites", {"properties"}, property_suites},
  };
  return all;
}

std::vector<ScenarioResult> run_suite(const std::optional<std::string>& tag) {
  std::vector<ScenarioResult> out;
  for (const auto& s : bundled_scenarios()) {
    if (tag && !tag->empty() && std::find(s.tags.begin(), s.tags.end(), *tag) == s.tags.end()) continue;
    ScenarioResult res{&s, {}};
    try {
      res.report = s.run();
    } catch (const std::exception& e) {
      res.report.add("error", false, e.what());
    }
    res.report.subject = s.name;
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<std::string> suite_tags() {
  std::set<std::string> tags;
  for (const auto& s : bundled_scenarios()) tags.insert(s.tags.begin(), s.tags.end());
  return {tags.begin(), tags.end()};
}

}  // namespace cohann
