#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "cohann/dense.hpp"
#include "cohann/fpmod.hpp"
#include "cohann/report.hpp"

namespace cohann {

/// Coordinates over a k-basis.
using DenseVec = std::vector<Coefficient>;

/// A local artinian quotient R = P/I as a finite-dimensional algebra.
class FinDimAlgebra {
public:
  /// Throws DomainError when R is infinite-dimensional or some variable is
  /// not nilpotent.
  explicit FinDimAlgebra(QRingPtr r);

  const QRingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->ambient()->field(); }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t arity() const { return mult_.size(); }
  /// Standard monomials, increasing; basis_[0] is 1.
  const std::vector<Monomial>& basis() const { return basis_; }
  /// Multiplication by variable v.
  const DenseMatrix& multiplication(std::size_t v) const { return mult_[v]; }
  /// Multiplication by the basis monomial j.
  const DenseMatrix& basis_multiplication(std::size_t j) const { return basis_mult_[j]; }
  /// Columns: the non-constant standard monomials.
  const DenseMatrix& radical() const { return radical_; }
  std::size_t loewy_length() const { return loewy_; }

  DenseVec coordinates(const Polynomial& p) const;
  Polynomial element(const DenseVec& v) const;
  DenseMatrix matrix_of(const DenseVec& v) const;
  DenseVec multiply(const DenseVec& a, const DenseVec& b) const;
  /// Spanning columns of the ideal generated by the columns of `a` times
  /// the one generated by `b`.
  DenseMatrix product(const DenseMatrix& a, const DenseMatrix& b) const;
  DenseMatrix power(const DenseMatrix& a, unsigned n) const;

private:
  QRingPtr ring_;
  std::vector<Monomial> basis_;
  std::vector<DenseMatrix> mult_;
  std::vector<DenseMatrix> basis_mult_;
  DenseMatrix radical_;
  std::size_t loewy_ = 0;
};

FinDimAlgebra findim_from_quotient(const QRingPtr& r);

struct LoewySocle {
  std::size_t loewy_length = 0;
  /// Columns: a basis of (0 : J).
  DenseMatrix socle;
};
LoewySocle loewy_socle(const FinDimAlgebra& r);

/// Finite-dimensional module given by commuting action matrices.
class FinDimModule {
public:
  /// Checks that the actions commute and satisfy the relations of R.
  FinDimModule(const FinDimAlgebra& r, std::vector<DenseMatrix> actions);

  static FinDimModule regular(const FinDimAlgebra& r);
  static FinDimModule residue_field(const FinDimAlgebra& r);
  static FinDimModule zero(const FinDimAlgebra& r);
  /// Basis: standard (component, monomial) pairs of a position-over-term
  /// basis of the relation module.
  static FinDimModule from_fpmodule(const FinDimAlgebra& r, const FPModule& m);

  const Field& field() const { return field_; }
  std::size_t dimension() const { return dim_; }
  const std::vector<DenseMatrix>& actions() const { return actions_; }
  const DenseMatrix& action(std::size_t v) const { return actions_[v]; }
  /// Action of the basis monomial j of R.
  const DenseMatrix& basis_action(std::size_t j) const { return basis_action_[j]; }
  /// Action of an element of R given in coordinates.
  DenseMatrix act(const DenseVec& r) const;
  /// Columns: a basis of J M.
  DenseMatrix radical_image() const;
  /// Standard basis vectors completing J M to M, in index order.
  std::vector<std::size_t> minimal_generators() const;
  /// Restriction to a stable subspace with basis columns `sub`.
  FinDimModule restrict(const FinDimAlgebra& r, const DenseMatrix& sub) const;

  friend bool operator==(const FinDimModule& a, const FinDimModule& b) {
    return a.dim_ == b.dim_ && a.actions_ == b.actions_;
  }

private:
  FinDimModule(Field f, std::size_t dim, std::vector<DenseMatrix> actions,
               std::vector<DenseMatrix> basis_action)
      : field_(f), dim_(dim), actions_(std::move(actions)),
        basis_action_(std::move(basis_action)) {}

  Field field_;
  std::size_t dim_;
  std::vector<DenseMatrix> actions_;
  std::vector<DenseMatrix> basis_action_;
};

/// Minimal free resolution by iterated radical-complement covers.
struct OracleResolution {
  /// syzygies[k] = Omega^k M, with syzygies[0] = M.
  std::vector<FinDimModule> syzygies;
  /// ranks[k] = rank of F_k.
  std::vector<std::size_t> ranks;
  /// differentials[k] is d_{k+1}: entry [j][i] is the coefficient, in R, of
  /// generator i of F_k in the image of generator j of F_{k+1}.
  std::vector<std::vector<std::vector<DenseVec>>> differentials;
};
/// F_0 .. F_length, with d_1 .. d_length.
OracleResolution oracle_resolution(const FinDimAlgebra& r, const FinDimModule& m,
                                   unsigned length);

struct OracleExt {
  std::size_t dimension = 0;
  /// Columns in Hom(F_n, N) = N^{rank F_n}.
  DenseMatrix cycles;
  DenseMatrix boundaries;
  std::size_t hom_rank = 0;
};
/// Ext^n(M, N) as cycles over boundaries of Hom(F, N).
OracleExt ext_linear_algebra(const FinDimAlgebra& r, const FinDimModule& m,
                             const FinDimModule& n, unsigned degree);
OracleExt ext_linear_algebra(const FinDimAlgebra& r, const OracleResolution& res,
                             const FinDimModule& n, unsigned degree);
/// r Ext = 0.
bool ext_killed_by(const FinDimModule& n, const OracleExt& e, const DenseVec& r);
/// Columns: a basis of ann_R Ext.
DenseMatrix ext_annihilator(const FinDimAlgebra& r, const FinDimModule& n, const OracleExt& e);

/// Certificate that a layer of a filtration lies in add X.
struct LayerCertificate {
  enum class Kind {
    /// J kills the layer; X must be the residue field.
    Semisimple,
    /// section: layer -> X^copies and retraction back, retraction*section = id.
    Split
  };
  Kind kind = Kind::Semisimple;
  /// X = Omega^level G.
  unsigned level = 0;
  std::size_t copies = 0;
  std::optional<DenseMatrix> section;
  std::optional<DenseMatrix> retraction;
};

/// T is a direct summand of Z, and Z carries a filtration whose layers are
/// certified.
struct BuildingWitness {
  FinDimModule target;
  FinDimModule ambient;
  /// Columns of filtration[i] span Z_i; filtration[0] spans 0, the last spans Z.
  std::vector<DenseMatrix> filtration;
  DenseMatrix iota;
  DenseMatrix pi;
  std::vector<LayerCertificate> layers;

  std::size_t length() const { return layers.size(); }
};

/// Z_i = J^{l-i} M, identity split embedding, semisimple layers.
BuildingWitness radical_filtration(const FinDimAlgebra& r, const FinDimModule& m);

/// Basis of Z_i / Z_{i-1}: columns of Z_i independent of Z_{i-1}, and the
/// action on it.
struct Layer {
  DenseMatrix complement;
  FinDimModule module;
};
Layer filtration_layer(const FinDimAlgebra& r, const FinDimModule& z, const DenseMatrix& lower,
                       const DenseMatrix& upper);

/// Every check on the witness, layers certified against Omega^level G.
/// Throws DomainError on a malformed witness (shapes that do not fit).
VerificationReport building_report(const FinDimAlgebra& r, const BuildingWitness& w,
                                   const FinDimModule& g);
bool verify_building_membership(const FinDimAlgebra& r, const BuildingWitness& w,
                                const FinDimModule& g);

/// I = ann Ext^1(G, Omega G); checks that the products of n elements of I
/// kill Ext^1..3(M, N) for each sample N.
VerificationReport lemma42_check(const FinDimAlgebra& r, const FinDimModule& g,
                                 const FinDimModule& m, unsigned n, const BuildingWitness& w,
                                 const std::vector<FinDimModule>& samples);

/// Cokernel of a random 1- or 2-generator presentation with entries in J.
FinDimModule random_module(const FinDimAlgebra& r, std::mt19937_64& rng);

}  // namespace cohann
