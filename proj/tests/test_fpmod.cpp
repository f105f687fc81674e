#include "doctest.h"
#include "helpers.hpp"

#include "cohann/error.hpp"
#include "cohann/fpmod.hpp"

using namespace testing;

namespace {

QRingPtr qring(const RingPtr& r, const std::vector<std::string>& rels) {
  return make_quotient(r, Ps(r, rels));
}

Matrix rows(const RingPtr& r, const std::vector<std::vector<std::string>>& entries) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& row : entries) out.push_back(Ps(r, row));
  return Matrix::from_rows(r, out);
}

bool d_squared_zero(const FreeResolution& res) {
  const QuotientRing& q = *res.ring;
  for (std::size_t k = 1; k + 1 <= res.length(); ++k) {
    Matrix c = res.d(k) * res.d(k + 1);
    for (const auto& col : c.columns())
      for (const auto& p : col)
        if (!q.is_zero(p)) return false;
  }
  return true;
}

bool has_unit_entry(const Matrix& m) {
  for (const auto& c : m.columns())
    for (const auto& p : c)
      if (p.is_unit()) return true;
  return false;
}

}  // namespace

TEST_CASE("syzygy examples") {
  auto r = ring({"x", "y"});
  auto a = qring(r, {"x^2"});
  auto m = FPModule::cyclic(a, Ps(r, {"x"}));
  auto om = simplify(syzygy(m)).module;
  CHECK(om.rank() == 1);
  REQUIRE(om.relations().cols() == 1);
  CHECK(om.relations().at(0, 0) == P(r, "x"));

  auto poly = qring(r, {});
  auto k = FPModule::cyclic(poly, Ps(r, {"x", "y"}));
  auto ok = syzygy(k);
  CHECK(ok.rank() == 2);
  REQUIRE(ok.relations().cols() == 1);
  auto col = ok.relations().column(0);
  CHECK(((col[0] == P(r, "y") && col[1] == P(r, "-x")) || (col[0] == P(r, "-y") && col[1] == P(r, "x"))));

  auto f = FPModule::free(a, 2);
  CHECK(syzygy(f).rank() == 0);
}

TEST_CASE("resolution examples") {
  auto r = ring({"x", "y"});
  auto a = qring(r, {"x^2"});
  auto m = FPModule::cyclic(a, Ps(r, {"x"}));
  auto res = resolve(m, 3, true);
  CHECK(res.betti() == std::vector<std::size_t>{1, 1, 1, 1});
  for (std::size_t k = 1; k <= 3; ++k) CHECK(res.d(k).at(0, 0) == P(r, "x"));
  CHECK(d_squared_zero(res));

  auto poly = qring(r, {});
  auto k = FPModule::cyclic(poly, Ps(r, {"x", "y"}));
  CHECK(resolve(k, 2, true).betti() == std::vector<std::size_t>{1, 2, 1});
  CHECK(resolve(k, 6, true).betti() == std::vector<std::size_t>{1, 2, 1});
  CHECK(d_squared_zero(resolve(k, 4, false)));

  auto f = FPModule::free(poly, 2);
  auto rf = resolve(f, 3, true);
  CHECK(rf.length() == 0);
  CHECK(rf.betti() == std::vector<std::size_t>{2});

  auto cusp = qring(r, {"y^2-x^3"});
  auto ck = FPModule::cyclic(cusp, Ps(r, {"x", "y"}));
  CHECK_THROWS_AS(resolve(ck, 3, true), DomainError);
  auto wr = ring({"x", "y"}, 0, {}, {2, 3});
  auto wcusp = qring(wr, {"y^2-x^3"});
  auto wres = resolve(FPModule::cyclic(wcusp, Ps(wr, {"x", "y"})), 4, true);
  CHECK(wres.betti() == std::vector<std::size_t>{1, 2, 2, 2, 2});
  for (std::size_t i = 1; i <= wres.length(); ++i) CHECK_FALSE(has_unit_entry(wres.d(i)));
  CHECK(d_squared_zero(wres));
  auto praw = resolve(FPModule::cyclic(cusp, Ps(r, {"x", "y"})), 3, ResolutionKind::Pruned);
  CHECK(d_squared_zero(praw));
}

TEST_CASE("minimal presentation strips units") {
  auto r = ring({"x", "y"});
  auto poly = qring(r, {});
  FPModule m(poly, rows(r, {{"1", "x"}, {"y", "y^2"}}));
  auto res = resolve(m, 2, true);
  CHECK(res.module.rank() == 1);
  CHECK_FALSE(has_unit_entry(res.d(1)));
  CHECK(annihilator(res.module) == annihilator(m));
}

TEST_CASE("annihilators") {
  auto r = ring({"x", "y"});
  auto a = qring(r, {"x^2"});
  CHECK(annihilator(FPModule::cyclic(a, Ps(r, {"x"}))) == I(r, {"x"}));
  CHECK(annihilator(FPModule::free(a, 0)).is_unit());
  CHECK(annihilator(FPModule::cyclic(a, Ps(r, {"1"}))).is_unit());
  CHECK(annihilator(FPModule::free(a, 2)) == I(r, {"x^2"}));
  FPModule two(a, rows(r, {{"x", "0"}, {"0", "y"}}));
  CHECK(annihilator(two) == I(r, {"x*y", "x^2"}));
}

TEST_CASE("hom modules") {
  auto r = ring({"x", "y"});
  auto a = qring(r, {"x^2"});
  auto m = FPModule::cyclic(a, Ps(r, {"x", "y^2"}));
  auto h = hom_module(FPModule::free(a, 1), m);
  CHECK(annihilator(h) == annihilator(m));
  auto h2 = hom_module(FPModule::cyclic(a, Ps(r, {"x"})), FPModule::free(a, 1));
  CHECK(annihilator(h2) == I(r, {"x"}));
  auto node = qring(r, {"x*y"});
  auto rx = FPModule::cyclic(node, Ps(r, {"x"}));
  CHECK(annihilator(hom_module(rx, rx)) == I(r, {"x"}));
}

TEST_CASE("element quotients") {
  auto r = ring({"x", "y"});
  auto a = qring(r, {"x^2"});
  auto m = FPModule::cyclic(a, Ps(r, {"x"}));
  auto eq = elem_quotient(m, P(r, "x"));
  CHECK(annihilator(eq.kernel) == I(r, {"x"}));
  CHECK(annihilator(eq.quotient) == I(r, {"x"}));
  auto one = elem_quotient(m, P(r, "1"));
  CHECK(one.kernel.is_zero());
  CHECK(one.quotient.is_zero());
  auto node = qring(r, {"x*y"});
  auto eqn = elem_quotient(FPModule::free(node, 1), P(r, "x"));
  // (0 : x) = (y), isomorphic to R/(x).
  CHECK(annihilator(eqn.kernel) == I(r, {"x"}));
  REQUIRE(eqn.embedding.cols() >= 1);
  CHECK(Ideal(r, {eqn.embedding.at(0, 0), P(r, "x*y")}) == I(r, {"y"}));
  CHECK(annihilator(eqn.quotient) == I(r, {"x"}));
}

TEST_CASE("vector dimension and rank-nullity") {
  auto r = ring({"x", "y"}, 101);
  auto a = qring(r, {"x^2", "y^3"});
  CHECK(vector_dimension(FPModule::free(a, 1)) == std::optional<std::size_t>(6));
  CHECK(vector_dimension(FPModule::cyclic(a, Ps(r, {"x", "y"}))) == std::optional<std::size_t>(1));
  auto q = ring({"x", "y"});
  CHECK_FALSE(vector_dimension(FPModule::free(qring(q, {"x^2"}), 1)).has_value());
  std::mt19937 rng(3);
  for (int k = 0; k < 15; ++k) {
    FPModule m(a, Matrix::from_rows(r, {{random_poly(r, rng, 2, 2), random_poly(r, rng, 2, 2)},
                                        {random_poly(r, rng, 2, 2), P(r, "0")}}));
    auto el = random_poly(r, rng, 2, 2);
    auto eq = elem_quotient(m, el);
    auto dm = vector_dimension(m), dk = vector_dimension(eq.kernel), dq = vector_dimension(eq.quotient);
    REQUIRE(dm);
    REQUIRE(dk);
    REQUIRE(dq);
    // dim aM = dim M - dim M/aM.
    CHECK(*dk + (*dm - *dq) == *dm);
  }
}

TEST_CASE("short exact sequences and horseshoe") {
  auto r = ring({"x", "y"});
  auto a = qring(r, {"x^2"});
  auto l = FPModule::cyclic(a, Ps(r, {"x"}));
  auto m = FPModule::free(a, 1);
  auto n = FPModule::cyclic(a, Ps(r, {"x"}));
  ModuleMap f(l, m, rows(r, {{"x"}}));
  ModuleMap g(m, n, rows(r, {{"1"}}));
  CHECK(verify_short_exact(f, g).exact());
  auto hs = horseshoe_syzygies(f, g);
  CHECK(hs.exactness.exact());
  CHECK(annihilator(hs.omega_left) == I(r, {"x"}));

  // Not exact: the zero map on the left.
  ModuleMap zero(l, m, rows(r, {{"0"}}));
  CHECK_FALSE(verify_short_exact(zero, g).exact());
  CHECK_THROWS_AS(horseshoe_syzygies(zero, g), DomainError);
  // R/(x) -> R sending 1 to 1 is not well defined.
  CHECK_THROWS_AS(ModuleMap(l, m, rows(r, {{"1"}})), DomainError);
}

TEST_CASE("trivial and split horseshoes") {
  auto r = ring({"x", "y"});
  auto a = qring(r, {"x*y"});
  auto m = FPModule::cyclic(a, Ps(r, {"x"}));
  auto n = FPModule::cyclic(a, Ps(r, {"y"}));
  auto zero = FPModule::free(a, 0);
  ModuleMap f0(zero, m, Matrix(r, 1));
  ModuleMap id(m, m, Matrix::identity(r, 1));
  auto hs0 = horseshoe_syzygies(f0, id);
  CHECK(hs0.exactness.exact());
  CHECK(hs0.omega_left.rank() == 0);

  auto sum = direct_sum(m, n);
  ModuleMap inc(m, sum, rows(r, {{"1"}, {"0"}}));
  ModuleMap pr(sum, n, rows(r, {{"0", "1"}}));
  CHECK(verify_short_exact(inc, pr).exact());
  auto hs = horseshoe_syzygies(inc, pr);
  CHECK(hs.exactness.exact());
  CHECK(annihilator(hs.omega_middle) == intersect(annihilator(hs.omega_left), annihilator(hs.omega_right)));
}
