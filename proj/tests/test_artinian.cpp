#include "doctest.h"
#include "helpers.hpp"

#include "cohann/artinian.hpp"
#include "cohann/error.hpp"
#include "cohann/ext_engine.hpp"

using namespace testing;

namespace {

QRingPtr qring(const RingPtr& r, const std::vector<std::string>& rels) {
  return make_quotient(r, Ps(r, rels));
}

struct Truncated {
  RingPtr p = ring({"x", "y"}, 101);
  QRingPtr r = qring(p, {"x^2", "y^3"});
  FinDimAlgebra alg{r};
};

FPModule cyc(const QRingPtr& r, const std::vector<std::string>& gens) {
  return FPModule::cyclic(r, Ps(r->ambient(), gens));
}

std::vector<long> layer_dims(const BuildingWitness& w) {
  std::vector<long> out;
  for (std::size_t i = 1; i < w.filtration.size(); ++i)
    out.push_back(static_cast<long>(w.filtration[i].cols() - w.filtration[i - 1].cols()));
  return out;
}

}  // namespace

TEST_CASE("finite-dimensional algebras") {
  Truncated t;
  CHECK(t.alg.dimension() == 6);
  CHECK(t.alg.arity() == 2);

  auto q = ring({"x"});
  FinDimAlgebra dual(qring(q, {"x^2"}));
  CHECK(dual.dimension() == 2);
  REQUIRE(dual.radical().cols() == 1);
  CHECK(dual.element(dual.radical().column(0)) == P(q, "x"));

  CHECK_THROWS_AS(FinDimAlgebra(qring(ring({"x", "y"}), {"x^2"})), DomainError);
  CHECK_THROWS_AS(FinDimAlgebra(qring(q, {"x^2-x"})), DomainError);
  CHECK_THROWS_AS(FinDimAlgebra(qring(q, {"1"})), DomainError);

  // Multiplication tables agree with normal forms.
  std::mt19937 rng(7);
  for (int k = 0; k < 20; ++k) {
    Polynomial a = random_poly(t.p, rng, 4, 4), b = random_poly(t.p, rng, 4, 4);
    CHECK(t.alg.element(t.alg.multiply(t.alg.coordinates(a), t.alg.coordinates(b))) ==
          t.r->reduce(a * b));
  }
}

TEST_CASE("loewy length and socle") {
  Truncated t;
  auto ls = loewy_socle(t.alg);
  CHECK(ls.loewy_length == 4);
  REQUIRE(ls.socle.cols() == 1);
  CHECK(t.alg.element(ls.socle.column(0)).monic() == P(t.p, "x*y^2"));

  auto q = ring({"x"});
  FinDimAlgebra dual(qring(q, {"x^2"}));
  auto ld = loewy_socle(dual);
  CHECK(ld.loewy_length == 2);
  REQUIRE(ld.socle.cols() == 1);
  CHECK(dual.element(ld.socle.column(0)) == P(q, "x"));

  FinDimAlgebra field(qring(q, {"x"}));
  auto lf = loewy_socle(field);
  CHECK(lf.loewy_length == 1);
  REQUIRE(lf.socle.cols() == 1);
  CHECK(field.element(lf.socle.column(0)) == P(q, "1"));

  // J^(l-1) != 0 = J^l.
  CHECK(t.alg.power(t.alg.radical(), 3).cols() == 1);
  CHECK(t.alg.power(t.alg.radical(), 4).cols() == 0);
}

TEST_CASE("modules from presentations") {
  Truncated t;
  auto k = FinDimModule::from_fpmodule(t.alg, cyc(t.r, {"x", "y"}));
  CHECK(k == FinDimModule::residue_field(t.alg));
  CHECK(FinDimModule::from_fpmodule(t.alg, FPModule::free(t.r, 1)).dimension() == 6);
  CHECK(FinDimModule::from_fpmodule(t.alg, FPModule::free(t.r, 2)).dimension() == 12);
  CHECK(FinDimModule::from_fpmodule(t.alg, cyc(t.r, {"x*y"})).dimension() == 4);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    auto m = random_module(t.alg, rng);
    CHECK(m.dimension() > 0);
    CHECK(m.minimal_generators().size() <= 2);
  }

  // Non-commuting or relation-violating actions are refused.
  DenseMatrix n = DenseMatrix::from_ints(t.p->field(), {{0, 1}, {0, 0}});
  DenseMatrix z(t.p->field(), 2, 2);
  CHECK_NOTHROW(FinDimModule(t.alg, {n, z}));
  CHECK_THROWS_AS(FinDimModule(t.alg, {n, n.transpose()}), DomainError);
  DenseMatrix shift = DenseMatrix::from_ints(t.p->field(), {{0, 0, 0, 0}, {1, 0, 0, 0},
                                                            {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK_THROWS_AS(FinDimModule(t.alg, {DenseMatrix(t.p->field(), 4, 4), shift}), DomainError);
}

TEST_CASE("rank-nullity against elem_quotient") {
  Truncated t;
  std::mt19937 prng(5);
  for (int i = 0; i < 12; ++i) {
    auto gens = std::vector<Polynomial>{random_poly(t.p, prng, 3, 2)};
    FPModule m = FPModule::cyclic(t.r, gens);
    Polynomial a = random_poly(t.p, prng, 2, 2);
    auto fm = FinDimModule::from_fpmodule(t.alg, m);
    DenseMatrix act = fm.act(t.alg.coordinates(a));
    auto eq = elem_quotient(m, a);
    CHECK(vector_dimension(eq.kernel) == nullspace(act).cols());
    CHECK(*vector_dimension(eq.quotient) == fm.dimension() - rank(act));
    CHECK(nullspace(act).cols() + rank(act) == fm.dimension());
  }
}

TEST_CASE("Ext by linear algebra") {
  auto q = ring({"x"});
  FinDimAlgebra dual(qring(q, {"x^2"}));
  auto kd = FinDimModule::residue_field(dual);
  for (unsigned n = 0; n <= 4; ++n) CHECK(ext_linear_algebra(dual, kd, kd, n).dimension == 1);

  Truncated t;
  auto k = FinDimModule::residue_field(t.alg);
  auto res = oracle_resolution(t.alg, k, 5);
  CHECK(res.ranks == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
  for (unsigned n = 0; n <= 4; ++n) CHECK(ext_linear_algebra(t.alg, res, k, n).dimension == n + 1);

  auto free2 = FinDimModule::from_fpmodule(t.alg, FPModule::free(t.r, 2));
  std::mt19937_64 rng(3);
  auto nmod = random_module(t.alg, rng);
  for (unsigned n = 1; n <= 3; ++n) {
    CHECK(ext_linear_algebra(t.alg, free2, nmod, n).dimension == 0);
    CHECK(ext_linear_algebra(t.alg, free2, k, n).dimension == 0);
  }
  CHECK(ext_linear_algebra(t.alg, free2, k, 0).dimension == 2);
  CHECK_THROWS_AS(ext_linear_algebra(t.alg, res, k, 5), DomainError);
}

TEST_CASE("oracle agrees with the Groebner pipeline") {
  Truncated t;
  std::vector<FPModule> ms{cyc(t.r, {"x", "y"}), cyc(t.r, {"x"}), cyc(t.r, {"y"}),
                           cyc(t.r, {"x*y"}), cyc(t.r, {"x", "y^2"})};
  std::vector<FPModule> ns{cyc(t.r, {"x", "y"}), cyc(t.r, {"y"}), FPModule::free(t.r, 1)};
  for (std::size_t i = 0; i < ms.size(); ++i) {
    auto fm = FinDimModule::from_fpmodule(t.alg, ms[i]);
    auto ores = oracle_resolution(t.alg, fm, 5);
    auto gres = resolve_default(ms[i], 5);
    for (std::size_t j = 0; j < ns.size(); ++j) {
      auto fn = FinDimModule::from_fpmodule(t.alg, ns[j]);
      for (unsigned n = 0; n <= 4; ++n) {
        CAPTURE(i);
        CAPTURE(j);
        CAPTURE(n);
        auto g = ext_module(gres, ns[j], n).dimension();
        REQUIRE(g.has_value());
        CHECK(*g == ext_linear_algebra(t.alg, ores, fn, n).dimension);
      }
    }
  }
}

TEST_CASE("socle annihilates Ext^1") {
  Truncated t;
  auto ls = loewy_socle(t.alg);
  std::mt19937_64 rng(20140215);
  std::size_t nonzero = 0;
  for (int i = 0; i < 20; ++i) {
    auto m = random_module(t.alg, rng);
    auto n = random_module(t.alg, rng);
    auto e = ext_linear_algebra(t.alg, m, n, 1);
    if (e.dimension > 0) ++nonzero;
    CHECK(ext_killed_by(n, e, ls.socle.column(0)));
  }
  CHECK(nonzero > 0);
  // J acts by zero on Ext(k, k); the unit does not.
  auto k = FinDimModule::residue_field(t.alg);
  auto ek = ext_linear_algebra(t.alg, k, k, 1);
  CHECK_FALSE(ext_killed_by(k, ek, t.alg.coordinates(P(t.p, "1"))));
  CHECK(ext_killed_by(k, ek, t.alg.coordinates(P(t.p, "x"))));
}

TEST_CASE("Ext annihilators") {
  auto q = ring({"x"});
  FinDimAlgebra dual(qring(q, {"x^2"}));
  auto k = FinDimModule::residue_field(dual);
  auto res = oracle_resolution(dual, k, 2);
  auto e = ext_linear_algebra(dual, res, res.syzygies[1], 1);
  auto ann = ext_annihilator(dual, res.syzygies[1], e);
  REQUIRE(ann.cols() == 1);
  CHECK(dual.element(ann.column(0)).monic() == P(q, "x"));

  Truncated t;
  auto kt = FinDimModule::residue_field(t.alg);
  auto et = ext_linear_algebra(t.alg, kt, kt, 2);
  CHECK(ext_annihilator(t.alg, kt, et).cols() == 5);
  auto free1 = FinDimModule::regular(t.alg);
  CHECK(ext_annihilator(t.alg, kt, ext_linear_algebra(t.alg, free1, kt, 1)).cols() == 6);
}

TEST_CASE("radical filtrations") {
  Truncated t;
  auto reg = FinDimModule::regular(t.alg);
  auto w = radical_filtration(t.alg, reg);
  CHECK(w.length() == t.alg.loewy_length());
  CHECK(layer_dims(w) == std::vector<long>{1, 2, 2, 1});
  auto k = FinDimModule::residue_field(t.alg);
  CHECK(verify_building_membership(t.alg, w, k));

  auto kk = FinDimModule::from_fpmodule(
      t.alg, FPModule(t.r, Matrix::from_rows(t.p, {{P(t.p, "x"), P(t.p, "y"), P(t.p, "0"), P(t.p, "0")},
                                                   {P(t.p, "0"), P(t.p, "0"), P(t.p, "x"), P(t.p, "y")}})));
  auto ws = radical_filtration(t.alg, kk);
  CHECK(ws.length() == 1);
  CHECK(verify_building_membership(t.alg, ws, k));

  auto w0 = radical_filtration(t.alg, FinDimModule::zero(t.alg));
  CHECK(w0.length() == 0);
  CHECK(verify_building_membership(t.alg, w0, k));

  std::mt19937_64 rng(42);
  for (int i = 0; i < 10; ++i) {
    auto m = random_module(t.alg, rng);
    auto wm = radical_filtration(t.alg, m);
    CHECK(wm.length() <= 4);
    CHECK(verify_building_membership(t.alg, wm, k));
  }
  // Semisimple certificates need G to be the residue field.
  CHECK_FALSE(verify_building_membership(t.alg, w, reg));
}

TEST_CASE("building witnesses") {
  Truncated t;
  const Field& f = t.p->field();
  auto g = FinDimModule::from_fpmodule(t.alg, cyc(t.r, {"x"}));
  std::size_t d = g.dimension();
  LayerCertificate split{LayerCertificate::Kind::Split, 0, 1, DenseMatrix::identity(f, d),
                         DenseMatrix::identity(f, d)};
  BuildingWitness w{g, g, {DenseMatrix(f, d, 0), DenseMatrix::identity(f, d)},
                    DenseMatrix::identity(f, d), DenseMatrix::identity(f, d), {split}};
  CHECK(verify_building_membership(t.alg, w, g));

  // G as a summand of G + k, one split layer against G + k.
  auto k = FinDimModule::residue_field(t.alg);
  auto gk = FinDimModule::from_fpmodule(
      t.alg, FPModule(t.r, Matrix::from_rows(t.p, {{P(t.p, "x"), P(t.p, "0"), P(t.p, "0")},
                                                   {P(t.p, "0"), P(t.p, "x"), P(t.p, "y")}})));
  REQUIRE(gk.dimension() == d + 1);
  DenseMatrix iota(f, d + 1, d), pi(f, d, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    iota.at(i, i) = Coefficient::one(f);
    pi.at(i, i) = Coefficient::one(f);
  }
  LayerCertificate whole{LayerCertificate::Kind::Split, 0, 1, DenseMatrix::identity(f, d + 1),
                         DenseMatrix::identity(f, d + 1)};
  BuildingWitness ws{g, gk, {DenseMatrix(f, d + 1, 0), DenseMatrix::identity(f, d + 1)}, iota, pi,
                     {whole}};
  CHECK(verify_building_membership(t.alg, ws, gk));
  CHECK_THROWS_AS(verify_building_membership(t.alg, ws, g), DomainError);

  // A subspace that is not stable.
  auto reg = FinDimModule::regular(t.alg);
  auto bad = radical_filtration(t.alg, reg);
  bad.filtration[1] = DenseMatrix::from_columns(f, 6, {t.alg.coordinates(P(t.p, "x"))});
  CHECK_FALSE(verify_building_membership(t.alg, bad, k));

  // A retraction that does not split.
  auto bent = radical_filtration(t.alg, reg);
  bent.pi = bent.pi.scaled(Coefficient::from_int(f, 2));
  CHECK_FALSE(verify_building_membership(t.alg, bent, k));

  // Shapes that do not fit.
  auto malformed = radical_filtration(t.alg, reg);
  malformed.layers.pop_back();
  CHECK_THROWS_AS(verify_building_membership(t.alg, malformed, k), DomainError);
}

TEST_CASE("syzygy-level certificates") {
  Truncated t;
  const Field& f = t.p->field();
  auto k = FinDimModule::residue_field(t.alg);
  auto omega = oracle_resolution(t.alg, k, 1).syzygies[1];
  std::size_t d = omega.dimension();
  LayerCertificate c{LayerCertificate::Kind::Split, 1, 1, DenseMatrix::identity(f, d),
                     DenseMatrix::identity(f, d)};
  BuildingWitness w{omega, omega, {DenseMatrix(f, d, 0), DenseMatrix::identity(f, d)},
                    DenseMatrix::identity(f, d), DenseMatrix::identity(f, d), {c}};
  CHECK(verify_building_membership(t.alg, w, k));
  w.layers[0].level = 0;
  CHECK_THROWS_AS(verify_building_membership(t.alg, w, k), DomainError);
}

TEST_CASE("annihilation by powers along a building") {
  Truncated t;
  auto k = FinDimModule::residue_field(t.alg);
  auto m = FinDimModule::from_fpmodule(t.alg, cyc(t.r, {"x^2", "x*y", "y^2"}));
  CHECK(m.dimension() == 3);
  auto w = radical_filtration(t.alg, m);
  CHECK(w.length() == 2);
  std::mt19937_64 rng(9);
  std::vector<FinDimModule> samples{k, FinDimModule::regular(t.alg)};
  for (int i = 0; i < 3; ++i) samples.push_back(random_module(t.alg, rng));
  auto rep = lemma42_check(t.alg, k, m, 2, w, samples);
  CHECK(rep.passed());
  CHECK(rep.checks.size() > 10);

  // M in add G, n = 1.
  auto kk = FinDimModule::from_fpmodule(
      t.alg, FPModule(t.r, Matrix::from_rows(t.p, {{P(t.p, "x"), P(t.p, "y"), P(t.p, "0"), P(t.p, "0")},
                                                   {P(t.p, "0"), P(t.p, "0"), P(t.p, "x"), P(t.p, "y")}})));
  CHECK(lemma42_check(t.alg, k, kk, 1, radical_filtration(t.alg, kk), samples).passed());

  auto zero = FinDimModule::zero(t.alg);
  auto rz = lemma42_check(t.alg, k, zero, 0, radical_filtration(t.alg, zero), samples);
  CHECK(rz.passed());

  // Too few layers for n.
  CHECK_FALSE(lemma42_check(t.alg, k, m, 1, w, samples).passed());
}
