#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohann/ext_engine.hpp"
#include "cohann/fpmod.hpp"
#include "cohann/report.hpp"

namespace cohann {

/// A = k[t_1..t_k] -> R, t_j -> images[j].
struct SubalgebraMap {
  RingPtr base;
  QRingPtr base_ring;
  /// In the ambient ring of R, reduced modulo its relations.
  std::vector<Polynomial> images;
  RingPtr target;

  /// Image of an element of A in the ambient ring of R.
  Polynomial apply(const Polynomial& f) const;
};

/// Weights of the new variables follow the images when those are
/// weighted-homogeneous of positive degree, so graded inputs stay graded.
SubalgebraMap make_subalgebra(const QuotientRing& r, std::vector<std::string> vars,
                              std::vector<Polynomial> images);
/// The identity of R's polynomial ring, on variables named like R's.
SubalgebraMap identity_subalgebra(const QuotientRing& r);

struct EnvelopingAlgebra {
  /// Variables x_L (left copies) then x_R.
  QRingPtr ring;
  std::size_t arity = 0;
  /// x_L,i - x_R,i.
  std::vector<Polynomial> kernel;

  Polynomial left(const Polynomial& p) const;
  Polynomial right(const Polynomial& p) const;
  /// x_L, x_R -> x, into `target` (R's ambient ring).
  Polynomial multiply(const Polynomial& p, const RingPtr& target) const;
};
EnvelopingAlgebra enveloping(const QuotientRing& r, const SubalgebraMap& a);

struct NoetherDifferent {
  /// N(R/A) + I, in the ambient ring of R.
  Ideal ideal;
  /// Generators of ann(ker mu) in the enveloping ring, modulo its relations.
  std::vector<Polynomial> certificates;
  /// Their images under mu, reduced in R.
  std::vector<Polynomial> images;
};
NoetherDifferent noether_different(const QuotientRing& r, const SubalgebraMap& a);

struct Finiteness {
  bool finite = false;
  /// Monomials of R spanning it over A, increasing.
  std::vector<Polynomial> generators;
};
Finiteness finiteness_check(const QuotientRing& r, const SubalgebraMap& a);

/// M viewed over A, with generators x^alpha e_c.
class Pushforward {
public:
  Pushforward(const FPModule& m, const SubalgebraMap& a);

  const FPModule& module() const { return module_; }
  /// (component, monomial of R's ambient ring), one per A-generator.
  const std::vector<std::pair<std::size_t, Polynomial>>& basis() const { return basis_; }
  /// A-coordinates of an element of M given over R.
  Vector coordinates(const Vector& v) const;
  /// Matrix over A of multiplication by r on M.
  Matrix action(const Polynomial& r) const;

private:
  struct Data;
  std::shared_ptr<const Data> data_;
  FPModule module_;
  std::vector<std::pair<std::size_t, Polynomial>> basis_;
};

/// Throws DomainError when M is not finite over A.
Pushforward pushforward(const FPModule& m, const SubalgebraMap& a);

struct Certificate34 {
  /// I^d N(R/A) + I_R, in the ambient ring of R.
  Ideal ideal;
  /// I = ann_A Ext^1_A(R_A, Omega R_A).
  Ideal base_annihilator;
  unsigned d = 0;
  bool free_over_base = false;
  NoetherDifferent different;
};
Certificate34 cert_prop34(const QuotientRing& r, const SubalgebraMap& a);

/// Relations plus the c x c minors of their Jacobian; c must equal the
/// number of relations.
Ideal jacobian_ideal(const QuotientRing& r, std::size_t codim);
Ideal jacobian_ideal(const QuotientRing& r);

struct NzdSearch {
  std::optional<Polynomial> witness;
  std::size_t trials = 0;
};
inline constexpr unsigned kNzdSeed = 20140215;
inline constexpr std::size_t kNzdTrials = 32;
/// Generators of J first, then random combinations with a fixed seed.
NzdSearch contains_nonzerodivisor(const Ideal& j, const QuotientRing& r);

/// Action of a^2 * I^n on Ext^m_A(M_A, N) for m = n, n+1, given a in the
/// witness ideals of the test modules at level n.
VerificationReport descent_check(const QuotientRing& r, const SubalgebraMap& a,
                                 const Polynomial& elem, unsigned n,
                                 const std::vector<FPModule>& test_modules,
                                 const std::vector<FPModule>& test_targets);

}  // namespace cohann
