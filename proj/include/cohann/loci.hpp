#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cohann/ext_engine.hpp"
#include "cohann/report.hpp"

namespace cohann {

struct LocusIdeal {
  Ideal ideal;
  std::string provenance;
};

/// Jacobian criterion on a complete intersection with `codim` relations;
/// codim 0 needs a polynomial ring and gives the unit ideal.
LocusIdeal singular_locus_ideal(const QuotientRing& r, std::size_t codim);

enum class Radical { Equal, LeftInsideRight, RightInsideLeft, Incomparable };
std::string to_string(Radical v);

struct RadicalVerdict {
  Radical verdict = Radical::Incomparable;
  /// Basis elements of the left ideal and whether each lies in sqrt(right).
  std::vector<std::pair<Polynomial, bool>> left_in_right;
  std::vector<std::pair<Polynomial, bool>> right_in_left;
};
RadicalVerdict radical_compare(const Ideal& left, const Ideal& right);

/// Radical comparisons of cert, the witness bound and the Jacobian locus;
/// passes when all three radicals agree.
VerificationReport sandwich_check(const QuotientRing& r, const Ideal& cert,
                                  const std::vector<FPModule>& witnesses, unsigned n,
                                  std::size_t codim);

}  // namespace cohann
