#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohann/poly_ring.hpp"

namespace cohann {

struct Term {
  Monomial mono;
  Coefficient coef;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: strictly decreasing monomials, no zero coefficients.
class Polynomial {
public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts and combines arbitrary terms.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Coefficient& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Coefficient& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (size() == 1 && terms_[0].mono.is_one()); }
  /// Nonzero constant.
  bool is_unit() const { return size() == 1 && terms_[0].mono.is_one(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Coefficient& leading_coefficient() const { return terms_.front().coef; }
  /// Largest weighted degree of a term; -1 for zero.
  std::int64_t degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Coefficient& c) const;
  Polynomial times(const Monomial& m, const Coefficient& c) const;
  Polynomial pow(std::uint32_t e) const;
  Polynomial monic() const;

  Polynomial derivative(std::size_t var) const;

  /// Same variables, different term order (re-sorted).
  Polynomial in_ring(const RingPtr& target) const;
  /// Ring homomorphism sending variable i to images[i].
  Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
  void check_ring(const Polynomial& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial partial_derivative(const Polynomial& p, std::size_t var_index);

}  // namespace cohann
