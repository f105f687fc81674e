#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cohann/fpmod.hpp"
#include "cohann/report.hpp"

namespace cohann {

/// Ext^n(M, N) as the homology of Hom(F, N) at F_n, with Hom(F_n, N) = N^{b_n}
/// modelled in P^{b_n h} (h = rank N).
struct ExtPresentation {
  FPModule source;
  FPModule target;
  unsigned degree = 0;
  FreeResolution resolution;
  /// Generators of the cycles, as columns in P^{b_n h}.
  Matrix cycles;
  /// Boundaries plus the relations of N^{b_n}; I-padding is implicit.
  std::vector<Vector> boundaries;
  /// Generator i is cycles column i.
  FPModule raw;
  Simplified model;
  Ideal annihilator;

  std::size_t ambient_rank() const { return cycles.rows(); }
  bool is_zero() const { return model.module.is_zero(); }
  /// v (in P^{b_n h}) is zero in Ext.
  bool is_boundary(const Vector& v) const;
  /// a * Ext = 0, by membership of a * cycle in the boundaries.
  bool killed_by(const Polynomial& a) const;
  std::optional<std::size_t> dimension() const { return vector_dimension(model.module); }

  std::shared_ptr<const ModuleGB> boundary_gb;
};

/// Uses `res` (which must resolve M far enough: length >= n+1, or complete).
ExtPresentation ext_module(const FreeResolution& res, const FPModule& n_module, unsigned n);
ExtPresentation ext_module(const FPModule& m, const FPModule& n_module, unsigned n);

/// W = ann Ext^n(M, Omega^n M), Omega^n M = coker d_{n+1} of the resolution used.
struct CAWitness {
  FPModule module;
  unsigned level = 0;
  Ideal ideal;
  ExtPresentation ext;
};
CAWitness ca_witness(const FPModule& m, unsigned n);

struct CABound {
  std::vector<FPModule> family;
  unsigned level = 0;
  std::vector<Ideal> witnesses;
  Ideal bound;
};
/// Intersection of the witnesses, folded left to right.
CABound ca_upper_bound(const std::vector<FPModule>& family, unsigned n);

/// A chain map alpha_k : F_k -> F_k over a given alpha_0.
struct ChainLift {
  /// alpha[k] for k = 0 .. resolution length.
  std::vector<Matrix> alpha;
};
/// Throws DomainError if alpha_0 does not induce an endomorphism of M.
ChainLift lift_chain_map(const FreeResolution& res, const Matrix& alpha0);
/// Lift of multiplication by a.
ChainLift lift_endomorphism(const Polynomial& a, const FreeResolution& res);

struct InducedMap {
  /// Images of the cycle generators.
  Matrix images;
  bool zero = false;
  /// The map on the simplified model, when the images could be expressed.
  std::optional<Matrix> on_model;
};
/// Map induced on Ext^n(M, N) by the chain map (composition on the source).
InducedMap induced_map(const ChainLift& lift, const ExtPresentation& ext);

/// The sequence 0 -> (0 :_M a) -> M + Omega M -> Omega(M/aM) -> 0, built from
/// the hypothesis a * Ext^1(M, Omega M) = 0 and checked for exactness.
VerificationReport verify_splitting_sequence(const FPModule& m, const Polynomial& a);

}  // namespace cohann
