#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cohann/ideal.hpp"
#include "cohann/matrix.hpp"

namespace cohann {

/// Generators f * e_k of I * P^rank, f running over the basis of I.
std::vector<Vector> ideal_padding(const QuotientRing& r, std::size_t rank);

/// Entries reduced modulo I, zero columns dropped.
Matrix normalize(const QuotientRing& r, const Matrix& m);
/// Entries reduced modulo I, shape unchanged.
Matrix reduce_entries(const QuotientRing& r, const Matrix& m);

/// M = R^g / (column span of the relation matrix). Entries live in the
/// ambient polynomial ring; I * R^g is added implicitly.
class FPModule {
public:
  FPModule(QRingPtr ring, Matrix relations);

  static FPModule free(QRingPtr ring, std::size_t rank);
  /// R / (gens).
  static FPModule cyclic(QRingPtr ring, const std::vector<Polynomial>& gens);

  const QRingPtr& ring() const { return ring_; }
  const RingPtr& ambient() const { return ring_->ambient(); }
  std::size_t rank() const { return relations_.rows(); }
  const Matrix& relations() const { return relations_; }

  /// Relation columns followed by the I-padding: generators of U with M = P^g/U.
  std::vector<Vector> submodule_generators() const;
  /// v is zero in M.
  bool contains(const Vector& v) const;
  bool is_zero() const;
  /// Coefficients c on the relation columns with v - relations*c in I*P^g,
  /// or nullopt when v is not zero in M.
  std::optional<Vector> lift_to_relations(const Vector& v) const;

private:
  struct Cache;
  const ModuleGB& gb() const;
  const LiftingBasis& lifter() const;

  QRingPtr ring_;
  Matrix relations_;
  std::shared_ptr<Cache> cache_;
};

FPModule direct_sum(const FPModule& a, const FPModule& b);

/// Generators of ker(R^cols -> R^rows), as columns of a cols x k matrix.
Matrix r_syzygies(const QuotientRing& r, const Matrix& f);
/// Generators of {v in P^cols : f v in span(target) + I P^rows}.
Matrix preimage(const QuotientRing& r, const Matrix& f, const std::vector<Vector>& target);
/// The module generated by the columns of k inside P^m modulo span(l) + I P^m.
/// Generator i of the result is column i of k.
FPModule subquotient(const QRingPtr& r, const Matrix& k, const std::vector<Vector>& l);
/// Coefficients expressing each column of `vectors` in terms of `gens`
/// modulo I; nullopt if some column is outside their span.
std::optional<Matrix> express(const QuotientRing& r, const std::vector<Vector>& gens,
                              std::size_t rank, const Matrix& vectors);

/// An isomorphic presentation with fewer generators and relations.
/// `projection` sends old generator coordinates to new ones; `kept[i]` is
/// the old index of new generator i.
struct Simplified {
  FPModule module;
  Matrix projection;
  std::vector<std::size_t> kept;
};
Simplified simplify(const FPModule& m);

/// Omega M with respect to the cover R^g -> M: generated by the relation
/// columns, presented by their syzygies.
FPModule syzygy(const FPModule& m);
FPModule syzygy(const FPModule& m, unsigned n);

/// Degrees of generators making every relation column homogeneous, given
/// homogeneous ring relations; nullopt otherwise.
std::optional<std::vector<std::int64_t>> generator_degrees(const QuotientRing& r,
                                                           const Matrix& relations);
bool is_graded(const FPModule& m);

enum class ResolutionKind { Raw, Pruned, Minimal };

struct FreeResolution {
  QRingPtr ring;
  /// The module actually resolved (a minimal presentation when minimal).
  FPModule module;
  /// maps[k] = d_{k+1} : F_{k+1} -> F_k.
  std::vector<Matrix> maps;
  bool minimal = false;
  /// Ended because some F_k vanished, so ranks past the end are known to be 0.
  bool complete = false;

  std::size_t rank(std::size_t k) const;
  /// d_k for k >= 1; the zero map past the end of a complete resolution.
  Matrix d(std::size_t k) const;
  std::vector<std::size_t> betti() const;
  std::size_t length() const { return maps.size(); }
};

/// Resolution with d_1 .. d_length. Stops early once some F_k is zero.
FreeResolution resolve(const FPModule& m, unsigned length, ResolutionKind kind);
FreeResolution resolve(const FPModule& m, unsigned length, bool minimal);
/// Minimal when graded, pruned otherwise.
FreeResolution resolve_default(const FPModule& m, unsigned length);

Ideal annihilator(const FPModule& m);
FPModule hom_module(const FPModule& m, const FPModule& n);

struct ElemQuotient {
  FPModule kernel;
  /// Columns: the kernel generators as vectors of P^g.
  Matrix embedding;
  FPModule quotient;
};
/// (0 :_M a) and M / aM.
ElemQuotient elem_quotient(const FPModule& m, const Polynomial& a);

/// Map given on generators; construction checks that relations go to
/// relations and records a lifting L with matrix*relations = relations'*L mod I.
class ModuleMap {
public:
  ModuleMap(FPModule source, FPModule target, Matrix matrix);

  const FPModule& source() const { return source_; }
  const FPModule& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  const Matrix& lifting() const { return lifting_; }

private:
  FPModule source_;
  FPModule target_;
  Matrix matrix_;
  Matrix lifting_;
};

struct ExactnessReport {
  bool composition_zero = false;
  bool injective = false;
  bool surjective = false;
  bool middle_exact = false;
  bool exact() const { return composition_zero && injective && surjective && middle_exact; }
};

/// 0 -> A -f-> B -g-> C -> 0.
ExactnessReport verify_short_exact(const ModuleMap& f, const ModuleMap& g);

struct HorseshoeResult {
  FPModule omega_left;
  FPModule omega_middle;
  FPModule omega_right;
  ModuleMap inclusion;
  ModuleMap projection;
  ExactnessReport exactness;
};

/// Syzygy sequence of a short exact sequence, Omega of the middle taken
/// with respect to the combined cover. Throws DomainError on inexact input.
HorseshoeResult horseshoe_syzygies(const ModuleMap& f, const ModuleMap& g);

/// dim_k M, or nullopt when infinite.
std::optional<std::size_t> vector_dimension(const FPModule& m);

}  // namespace cohann
