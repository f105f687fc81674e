#include "doctest.h"
#include "helpers.hpp"

#include "cohann/different.hpp"
#include "cohann/error.hpp"
#include "cohann/fault.hpp"
#include "cohann/loci.hpp"

using namespace testing;

namespace {

QRingPtr qring(const RingPtr& r, const std::vector<std::string>& rels) {
  return make_quotient(r, Ps(r, rels));
}

Radical swap(Radical v) {
  if (v == Radical::LeftInsideRight) return Radical::RightInsideLeft;
  if (v == Radical::RightInsideLeft) return Radical::LeftInsideRight;
  return v;
}

}  // namespace

TEST_CASE("singular loci") {
  auto r = ring({"x", "y"});
  CHECK(singular_locus_ideal(*qring(r, {"y^2-x^3"}), 1).ideal == I(r, {"x^2", "y"}));
  CHECK(singular_locus_ideal(*qring(r, {}), 0).ideal.is_unit());
  CHECK(singular_locus_ideal(*qring(r, {"x*y"}), 1).ideal == I(r, {"x", "y"}));
  CHECK(singular_locus_ideal(*qring(r, {"x*y"}), 1).provenance == "jacobian-criterion");
  CHECK_THROWS_AS(singular_locus_ideal(*qring(r, {"x*y"}), 0), DomainError);
}

TEST_CASE("radical comparison") {
  auto r = ring({"x", "y"});
  CHECK(radical_compare(I(r, {"x^2", "y"}), I(r, {"x", "y"})).verdict == Radical::Equal);
  auto v = radical_compare(I(r, {"x"}), I(r, {"x", "y"}));
  CHECK(v.verdict == Radical::LeftInsideRight);
  REQUIRE(v.right_in_left.size() == 2);
  CHECK(radical_compare(I(r, {"x"}), I(r, {"y"})).verdict == Radical::Incomparable);
  CHECK(radical_compare(I(r, {"x*y"}), I(r, {"x*y"})).verdict == Radical::Equal);
  CHECK(to_string(Radical::RightInsideLeft) == "RIGHT_INSIDE_LEFT");

  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    Ideal a(r, {random_poly(r, rng, 2, 2), random_poly(r, rng, 2, 2)});
    Ideal b(r, {random_poly(r, rng, 2, 2)});
    auto ab = radical_compare(a, b), ba = radical_compare(b, a);
    CHECK(ab.verdict == swap(ba.verdict));
    // The verdict matches the recorded memberships.
    bool lr = true, rl = true;
    for (const auto& [g, ok] : ab.left_in_right) lr = lr && ok;
    for (const auto& [g, ok] : ab.right_in_left) rl = rl && ok;
    CHECK((ab.verdict == Radical::Equal) == (lr && rl));
  }
}

TEST_CASE("sandwich examples") {
  for (std::uint32_t p : {0u, 101u}) {
    auto r = ring({"x", "y"}, p);
    auto dual = qring(r, {"x^2"});
    auto rep = sandwich_check(*dual, I(r, {"x"}),
                              {FPModule::cyclic(dual, Ps(r, {"x"})), FPModule::free(dual, 1)}, 3, 1);
    CHECK(rep.passed());
  }
  auto r = ring({"x", "y"});
  auto cusp = qring(r, {"y^2-x^3"});
  Ideal cert = ideal_sum(cert_prop34(*cusp, make_subalgebra(*cusp, {"t"}, Ps(r, {"x"}))).ideal,
                         jacobian_ideal(*cusp, 1));
  CHECK(cert == I(r, {"x^2", "y"}));
  std::vector<FPModule> wit{FPModule::cyclic(cusp, Ps(r, {"x", "y"})), FPModule::cyclic(cusp, Ps(r, {"y"}))};
  CHECK(sandwich_check(*cusp, cert, wit, 3, 1).passed());

  auto node = qring(r, {"x*y"});
  CHECK(sandwich_check(*node, jacobian_ideal(*node, 1), {FPModule::cyclic(node, Ps(r, {"x"}))}, 2, 1).passed());

  auto plane = qring(r, {});
  CHECK(sandwich_check(*plane, Ideal::unit(r), {FPModule::cyclic(plane, Ps(r, {"x", "y"}))}, 3, 0).passed());

  // A certificate that misses the singular point is caught.
  CHECK_FALSE(sandwich_check(*cusp, I(r, {"x-1"}), wit, 3, 1).passed());

  inject_fault(Fault::JacobianOffset);
  auto sabotaged = sandwich_check(*cusp, cert, wit, 3, 1);
  inject_fault(Fault::None);
  CHECK_FALSE(sabotaged.passed());
}

TEST_CASE("certificates lie in the singular locus radical") {
  auto r = ring({"x", "y"});
  std::vector<std::pair<std::string, std::string>> cases{
      {"x^2", "y"}, {"x*y", "x+y"}, {"y^2-x^3", "x"}, {"y^2-x^3-x^2", "x"}};
  for (const auto& [rel, image] : cases) {
    auto q = qring(r, {rel});
    auto s = singular_locus_ideal(*q, 1).ideal;
    auto cert = cert_prop34(*q, make_subalgebra(*q, {"t"}, Ps(r, {image})));
    for (const auto& g : cert.ideal.gb().elements) CHECK(radical_membership(g, s));
    // Jacobian generators against the witness bound at level dim R + 1.
    auto bound = ca_upper_bound({FPModule::cyclic(q, Ps(r, {"x", "y"})), FPModule::cyclic(q, Ps(r, {"x"}))}, 2).bound;
    for (const auto& g : s.gb().elements) CHECK(radical_membership(g, bound));
  }
}
