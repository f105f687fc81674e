#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "cohann/polynomial.hpp"

namespace cohann {

/// Element of a free module P^r. `comp` indexes the basis vector.
struct ModTerm {
  std::uint32_t comp;
  Monomial mono;
  Coefficient coef;
};
using ModVec = std::vector<ModTerm>;

/// Dense column of polynomials, the user-facing form of a module element.
using Vector = std::vector<Polynomial>;

/// Term order on P^r.
///
/// Components below `data_comps` dominate every term in the remaining
/// components, so a basis computed with this order eliminates the data part.
/// Inside each group terms are compared either position-over-term (lower
/// component index wins, then the ring order) or, for `ElimThenPosition`,
/// first by weighted grevlex on the first `elim_vars` variables, then by
/// position, then by weighted grevlex on the remaining variables.
struct ModuleOrder {
  enum class Scheme { PositionOverTerm, ElimThenPosition };
  std::size_t data_comps = std::numeric_limits<std::size_t>::max();
  Scheme data = Scheme::PositionOverTerm;
  Scheme tail = Scheme::PositionOverTerm;
  std::size_t elim_vars = 0;

  static ModuleOrder pot() { return {}; }
  static ModuleOrder split(std::size_t data_comps) {
    return {data_comps, Scheme::PositionOverTerm, Scheme::PositionOverTerm, 0};
  }
};

struct GbOptions {
  /// Maximum number of S-pairs a single basis computation may process.
  std::size_t max_pairs = 2'000'000;
};

/// Per-thread counters, read by reports.
struct GbStats {
  std::size_t bases = 0;
  std::size_t pairs = 0;
  std::size_t reductions = 0;
};

GbOptions& gb_options();
GbStats& gb_stats();

/// Installs options for the current thread until destroyed.
class ScopedGbOptions {
public:
  explicit ScopedGbOptions(GbOptions opts) : saved_(gb_options()) { gb_options() = opts; }
  ~ScopedGbOptions() { gb_options() = saved_; }
  ScopedGbOptions(const ScopedGbOptions&) = delete;
  ScopedGbOptions& operator=(const ScopedGbOptions&) = delete;

private:
  GbOptions saved_;
};

ModVec to_modvec(const Vector& v, std::uint32_t offset = 0);
/// Components outside [from, from+len) are dropped.
Vector from_modvec(const RingPtr& ring, const ModVec& v, std::uint32_t from, std::size_t len);
ModVec poly_to_modvec(const Polynomial& p, std::uint32_t comp = 0);
Polynomial modvec_to_poly(const RingPtr& ring, const ModVec& v);

/// Reduced Groebner basis of a submodule of P^rank.
class ModuleGB {
public:
  ModuleGB(RingPtr ring, std::size_t rank, ModuleOrder order, std::vector<ModVec> gens);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const ModuleOrder& order() const { return order_; }
  /// Monic, interreduced, sorted by decreasing leading term.
  const std::vector<ModVec>& elements() const { return basis_; }

  /// Full normal form.
  ModVec reduce(ModVec v) const;
  bool contains(const ModVec& v) const { return reduce(v).empty(); }
  /// Three-way comparison of terms in this module order.
  int compare(const ModTerm& a, const ModTerm& b) const;

private:
  RingPtr ring_;
  std::size_t rank_;
  ModuleOrder order_;
  std::vector<ModVec> basis_;
};

/// Submodule of P^r given by generators (position-over-term, lower index
/// dominant).
struct Submodule {
  RingPtr ring;
  std::size_t rank = 0;
  std::vector<Vector> generators;
};

/// Canonical reduced Groebner basis of an ideal.
struct ReducedGroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;
  friend bool operator==(const ReducedGroebnerBasis& a, const ReducedGroebnerBasis& b) {
    return same_ring(a.ring, b.ring) && a.elements == b.elements;
  }
};

ReducedGroebnerBasis buchberger(const std::vector<Polynomial>& gens);
/// Basis of the submodule generated by `gens`, each a Vector of length `rank`.
ModuleGB buchberger(const RingPtr& ring, std::size_t rank, const std::vector<Vector>& gens,
                    ModuleOrder order = {});
Polynomial normal_form(const Polynomial& p, const ReducedGroebnerBasis& gb);

/// Lifting data for a list of generators g_1..g_s of a submodule of P^r:
/// a basis of the module generated by (g_i, e_i) in P^(r+s) under an order in
/// which the first r components dominate.
class LiftingBasis {
public:
  LiftingBasis(const RingPtr& ring, std::size_t rank, const std::vector<Vector>& gens);

  std::size_t rank() const { return rank_; }
  std::size_t count() const { return count_; }
  /// Coefficients c with sum c_i g_i = v, or nullopt when v is not in the span.
  std::optional<Vector> lift(const Vector& v) const;
  bool contains(const Vector& v) const;
  /// Generators of the syzygy module of (g_1..g_s).
  std::vector<Vector> syzygies() const;

private:
  RingPtr ring_;
  std::size_t rank_;
  std::size_t count_;
  ModuleGB gb_;
};

/// Generators of ker(P^s -> P^r) where the columns of the map are `cols`.
std::vector<Vector> syzygy_matrix(const RingPtr& ring, std::size_t rank,
                                  const std::vector<Vector>& cols);

}  // namespace cohann
