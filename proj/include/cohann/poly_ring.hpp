#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cohann/coefficient.hpp"

namespace cohann {

inline constexpr std::size_t kMaxVars = 32;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

/// Exponent vector with its (weighted) degree cached. Monomials are only
/// meaningful together with the PolyRing that built them.
class Monomial {
public:
  Monomial() = default;

  std::size_t arity() const { return n_; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::int64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0 && all_zero(); }

  /// Product; throws DomainError on exponent overflow.
  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; caller guarantees `o.divides(*this)`.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

private:
  friend class PolyRing;
  bool all_zero() const;

  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::int64_t deg_ = 0;
};

/// Term order. Block(k) compares the first k variables by weighted grevlex
/// and breaks ties by weighted grevlex on the remaining ones, so any
/// monomial involving the first block dominates the monomials of the rest.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Block };
  Kind kind = Kind::Grevlex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {Kind::Block, k}; }

  std::string name() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Polynomial ring k[x_1..x_n] with a fixed term order and positive weights.
class PolyRing {
public:
  PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order = {},
           std::vector<std::int64_t> weights = {});

  static RingPtr make(Field field, std::vector<std::string> vars, MonomialOrder order = {},
                      std::vector<std::int64_t> weights = {}) {
    return std::make_shared<const PolyRing>(std::move(field), std::move(vars), order,
                                            std::move(weights));
  }

  const Field& field() const { return field_; }
  std::size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  /// Index of `name`, or -1.
  int var_index(const std::string& name) const;

  Monomial one() const;
  Monomial monomial(std::span<const std::uint32_t> exps) const;
  Monomial variable(std::size_t i, std::uint32_t power = 1) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  /// Weighted degree of the variables in [from, to).
  std::int64_t partial_degree(const Monomial& m, std::size_t from, std::size_t to) const;

  /// Three-way comparison in the ring's order: <0, 0, >0.
  int compare(const Monomial& a, const Monomial& b) const;
  /// Weighted grevlex restricted to the variables [from, to).
  int compare_grevlex_range(const Monomial& a, const Monomial& b, std::size_t from,
                            std::size_t to) const;

  std::string monomial_to_string(const Monomial& m) const;

  /// Same field, variables and weights but a different term order.
  RingPtr with_order(MonomialOrder order) const;
  /// Same field and order kind with extra variables appended (weights 1).
  RingPtr with_extra_vars(const std::vector<std::string>& extra, MonomialOrder order) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_ &&
           a.weights_ == b.weights_;
  }

private:
  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::vector<std::int64_t> weights_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace cohann
