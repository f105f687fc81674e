#include "cohann/loci.hpp"

#include "cohann/different.hpp"
#include "cohann/error.hpp"

namespace cohann {

LocusIdeal singular_locus_ideal(const QuotientRing& r, std::size_t codim) {
  if (codim == 0 && !r.presentation().empty())
    throw DomainError("codimension 0 needs a ring without relations");
  return {jacobian_ideal(r, codim), "jacobian-criterion"};
}

std::string to_string(Radical v) {
  switch (v) {
    case Radical::Equal:
      return "EQUAL";
    case Radical::LeftInsideRight:
      return "LEFT_INSIDE_RIGHT";
    case Radical::RightInsideLeft:
      return "RIGHT_INSIDE_LEFT";
    case Radical::Incomparable:
      break;
  }
  return "INCOMPARABLE";
}

namespace {

std::vector<std::pair<Polynomial, bool>> memberships(const Ideal& from, const Ideal& into) {
  std::vector<std::pair<Polynomial, bool>> out;
  for (const auto& g : from.gb().elements) out.push_back({g, radical_membership(g, into)});
  return out;
}

bool all_true(const std::vector<std::pair<Polynomial, bool>>& v) {
  for (const auto& [g, ok] : v)
    if (!ok) return false;
  return true;
}

std::string describe(const Ideal& i) {
  std::string s = "(";
  bool first = true;
  for (const auto& g : i.gb().elements) {
    if (!first) s += ", ";
    s += g.to_string();
    first = false;
  }
  return s + ")";
}

}  // namespace

RadicalVerdict radical_compare(const Ideal& left, const Ideal& right) {
  if (!same_ring(left.ring(), right.ring())) throw RingMismatch();
  RadicalVerdict out;
  out.left_in_right = memberships(left, right);
  out.right_in_left = memberships(right, left);
  bool lr = all_true(out.left_in_right), rl = all_true(out.right_in_left);
  out.verdict = lr && rl ? Radical::Equal
                : lr     ? Radical::LeftInsideRight
                : rl     ? Radical::RightInsideLeft
                         : Radical::Incomparable;
  return out;
}

VerificationReport sandwich_check(const QuotientRing& r, const Ideal& cert,
                                  const std::vector<FPModule>& witnesses, unsigned n,
                                  std::size_t codim) {
  VerificationReport rep;
  rep.subject = "sandwich at level " + std::to_string(n);
  Ideal c = ideal_sum(cert, r.relations());
  Ideal b = ca_upper_bound(witnesses, n).bound;
  Ideal s = singular_locus_ideal(r, codim).ideal;
  auto add = [&](const std::string& name, const Ideal& x, const Ideal& y) {
    auto v = radical_compare(x, y);
    rep.add(name, v.verdict == Radical::Equal,
            to_string(v.verdict) + ": " + describe(x) + " vs " + describe(y));
  };
  add("cert vs bound", c, b);
  add("cert vs singular locus", c, s);
  add("bound vs singular locus", b, s);
  return rep;
}

}  // namespace cohann
