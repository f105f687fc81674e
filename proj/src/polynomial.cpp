#include "cohann/polynomial.hpp"

#include <algorithm>

#include "cohann/error.hpp"

namespace cohann {

namespace {

// Descending in the ring order.
void normalize(const PolyRing& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
      if (out.back().coef.is_zero()) out.pop_back();
    } else if (!t.coef.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms = std::move(out);
}

// a + sign*b, both sorted.
std::vector<Term> merge(const PolyRing& ring, const std::vector<Term>& a,
                        const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (negate_b) out.back().coef = -out.back().coef;
    } else {
      Coefficient s = negate_b ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize(*ring_, terms_);
}

Polynomial Polynomial::constant(RingPtr ring, const Coefficient& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({ring->one(), c});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  auto f = ring->field();
  return constant(std::move(ring), Coefficient::from_int(f, c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  Polynomial p(ring);
  p.terms_.push_back({ring->variable(i), Coefficient::one(ring->field())});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Coefficient& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

std::int64_t Polynomial::degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatch();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  terms_ = merge(*ring_, terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(o);
  terms_ = merge(*ring_, terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.size() == 1) return a.times(b.terms_[0].mono, b.terms_[0].coef);
  if (a.size() == 1) return b.times(a.terms_[0].mono, a.terms_[0].coef);
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coef * t.coef});
  return Polynomial(a.ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::times(const Monomial& m, const Coefficient& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coef *= c;
  }
  return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->arity()) throw DomainError("derivative variable index out of range");
  std::vector<Term> out;
  const auto& f = ring_->field();
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono[var];
    if (e == 0) continue;
    Coefficient c = t.coef * Coefficient::from_int(f, e);
    if (c.is_zero()) continue;
    out.push_back({t.mono / ring_->variable(var), std::move(c)});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->arity() != ring_->arity() || !(target->field() == ring_->field()))
    throw RingMismatch("cannot transport polynomial between incompatible rings");
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<std::uint32_t> exps(target->arity());
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = t.mono[i];
    out.push_back({target->monomial(exps), t.coef});
  }
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->arity())
    throw DomainError("substitution needs one image per variable");
  for (const auto& img : images)
    if (!same_ring(img.ring(), target)) throw RingMismatch("substitution image in wrong ring");
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coef);
    for (std::size_t v = 0; v < images.size(); ++v)
      if (t.mono[v]) term = term * power_of(v, t.mono[v]);
    result += term;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coef.is_negative();
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    Coefficient mag = t.coef.magnitude();
    if (t.mono.is_one()) {
      s += mag.to_string();
    } else {
      if (!mag.is_one()) s += mag.to_string() + "*";
      s += ring_->monomial_to_string(t.mono);
    }
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial partial_derivative(const Polynomial& p, std::size_t var_index) {
  return p.derivative(var_index);
}

}  // namespace cohann
