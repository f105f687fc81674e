#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohann/groebner.hpp"

namespace cohann {

/// Ideal of a polynomial ring, with its reduced basis computed on
/// construction (so the value is immutable afterwards).
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  /// Nonzero input generators, in input order.
  const std::vector<Polynomial>& generators() const { return gens_; }
  const ReducedGroebnerBasis& gb() const { return gb_; }

  bool contains(const Polynomial& p) const;
  bool contains(const Ideal& o) const;
  Polynomial normal_form(const Polynomial& p) const;
  bool is_unit() const;
  bool is_zero() const { return gb_.elements.empty(); }

  /// Leading monomials of the basis.
  std::vector<Monomial> leading_monomials() const;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.gb_ == b.gb_; }

private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  ReducedGroebnerBasis gb_;
};

/// R = P / I.
class QuotientRing {
public:
  QuotientRing(RingPtr ambient, std::vector<Polynomial> relations);

  const RingPtr& ambient() const { return ambient_; }
  const Ideal& relations() const { return relations_; }
  /// Relations as written (nonzero ones), used by the Jacobian criterion.
  const std::vector<Polynomial>& presentation() const { return relations_.generators(); }
  bool is_polynomial_ring() const { return relations_.is_zero(); }

  Polynomial reduce(const Polynomial& p) const { return relations_.normal_form(p); }
  bool is_zero(const Polynomial& p) const { return relations_.contains(p); }
  /// The ideal (gens) + I of the ambient ring.
  Ideal ideal(std::vector<Polynomial> gens) const;

private:
  RingPtr ambient_;
  Ideal relations_;
};

using QRingPtr = std::shared_ptr<const QuotientRing>;

inline QRingPtr make_quotient(RingPtr ambient, std::vector<Polynomial> relations) {
  return std::make_shared<const QuotientRing>(std::move(ambient), std::move(relations));
}

bool ideal_membership(const Polynomial& p, const Ideal& i);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned n);

/// (I : g) = {f : f g in I}.
Ideal colon(const Ideal& i, const Polynomial& g);
/// (I : J), the intersection of (I : g) over generators g of J.
Ideal colon(const Ideal& i, const Ideal& j);
Ideal intersect(const Ideal& a, const Ideal& b);
/// I intersected with k[x_{k+1}..x_n], returned as an ideal of the same ring.
Ideal eliminate(const Ideal& i, std::size_t first_k);

/// g in sqrt(I), by the Rabinowitsch trick.
bool radical_membership(const Polynomial& g, const Ideal& i);

bool is_nonzerodivisor(const Polynomial& g, const QuotientRing& r);

struct StandardMonomials {
  bool finite = false;
  /// Increasing in the ring order; empty when infinite.
  std::vector<Monomial> monomials;
};

StandardMonomials standard_monomials(const Ideal& i);
/// Monomials divisible by none of `leads`.
StandardMonomials standard_monomials(const PolyRing& ring, const std::vector<Monomial>& leads);
inline StandardMonomials standard_monomials(const QuotientRing& r) {
  return standard_monomials(r.relations());
}

/// Krull dimension of P/I; -1 for the unit ideal.
int krull_dimension(const Ideal& i);
inline int krull_dimension(const QuotientRing& r) { return krull_dimension(r.relations()); }

/// A name not among the ring's variables, built from `stem`.
std::string fresh_variable(const PolyRing& ring, const std::string& stem);

/// Short generating set of J modulo `base` (base inside J): basis elements
/// of J, dropping from the largest down any that lie in base + the others.
std::vector<Polynomial> generators_modulo(const Ideal& j, const Ideal& base);

std::vector<std::string> to_strings(const std::vector<Polynomial>& ps);

}  // namespace cohann
