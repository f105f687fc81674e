#pragma once

#include <string_view>

#include "cohann/polynomial.hpp"

namespace cohann {

/// Parses expressions built from integers, variable names, `+ - * / ^` and
/// parentheses. Juxtaposition is not multiplication; `/` only divides by a
/// nonzero constant (needed to read back printed rationals). Errors are
/// ParseError carrying the byte offset of the offending character.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace cohann
