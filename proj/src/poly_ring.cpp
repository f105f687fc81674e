#include "cohann/poly_ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "cohann/error.hpp"

namespace cohann {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint32_t s = std::uint32_t(e_[i]) + o.e_[i];
    if (s > kMaxExponent) throw DomainError("exponent overflow");
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  r.deg_ = deg_ - o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

bool Monomial::all_zero() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i]) return false;
  return true;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "block(" + std::to_string(block) + ")";
  }
  return "?";
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

PolyRing::PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order,
                   std::vector<std::int64_t> weights)
    : field_(field), vars_(std::move(vars)), order_(order), weights_(std::move(weights)) {
  if (vars_.size() > kMaxVars)
    throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!valid_identifier(v)) throw DomainError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
  if (weights_.empty()) weights_.assign(vars_.size(), 1);
  if (weights_.size() != vars_.size())
    throw DomainError("weight list length does not match the number of variables");
  for (auto w : weights_)
    if (w <= 0) throw DomainError("weights must be positive");
  if (order_.kind == MonomialOrder::Kind::Block && order_.block > vars_.size())
    throw DomainError("elimination block larger than the variable list");
}

int PolyRing::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

Monomial PolyRing::one() const {
  Monomial m;
  m.n_ = static_cast<std::uint8_t>(arity());
  return m;
}

Monomial PolyRing::monomial(std::span<const std::uint32_t> exps) const {
  if (exps.size() != arity()) throw DomainError("exponent vector has wrong length");
  Monomial m = one();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > kMaxExponent) throw DomainError("exponent overflow");
    m.e_[i] = static_cast<std::uint16_t>(exps[i]);
    m.deg_ += weights_[i] * exps[i];
  }
  return m;
}

Monomial PolyRing::variable(std::size_t i, std::uint32_t power) const {
  if (i >= arity()) throw DomainError("variable index out of range");
  if (power > kMaxExponent) throw DomainError("exponent overflow");
  Monomial m = one();
  m.e_[i] = static_cast<std::uint16_t>(power);
  m.deg_ = weights_[i] * power;
  return m;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m = one();
  for (std::size_t i = 0; i < arity(); ++i) {
    m.e_[i] = std::max(a.e_[i], b.e_[i]);
    m.deg_ += weights_[i] * m.e_[i];
  }
  return m;
}

std::int64_t PolyRing::partial_degree(const Monomial& m, std::size_t from,
                                      std::size_t to) const {
  std::int64_t d = 0;
  for (std::size_t i = from; i < to; ++i) d += weights_[i] * m.e_[i];
  return d;
}

int PolyRing::compare_grevlex_range(const Monomial& a, const Monomial& b, std::size_t from,
                                    std::size_t to) const {
  std::int64_t da = partial_degree(a, from, to), db = partial_degree(b, from, to);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = to; i-- > from;) {
    if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? 1 : -1;
  }
  return 0;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  switch (order_.kind) {
    case MonomialOrder::Kind::Grevlex:
      if (a.deg_ != b.deg_) return a.deg_ > b.deg_ ? 1 : -1;
      for (std::size_t i = arity(); i-- > 0;)
        if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? 1 : -1;
      return 0;
    case MonomialOrder::Kind::Lex:
      for (std::size_t i = 0; i < arity(); ++i)
        if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i] ? 1 : -1;
      return 0;
    case MonomialOrder::Kind::Block: {
      int c = compare_grevlex_range(a, b, 0, order_.block);
      if (c) return c;
      return compare_grevlex_range(a, b, order_.block, arity());
    }
  }
  return 0;
}

std::string PolyRing::monomial_to_string(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (!m.e_[i]) continue;
    if (!s.empty()) s += '*';
    s += vars_[i];
    if (m.e_[i] > 1) s += "^" + std::to_string(m.e_[i]);
  }
  return s.empty() ? "1" : s;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return make(field_, vars_, order, weights_);
}

RingPtr PolyRing::with_extra_vars(const std::vector<std::string>& extra,
                                  MonomialOrder order) const {
  auto vars = vars_;
  auto weights = weights_;
  for (const auto& v : extra) {
    vars.push_back(v);
    weights.push_back(1);
  }
  return make(field_, std::move(vars), order, std::move(weights));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace cohann
