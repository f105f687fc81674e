#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cohann/different.hpp"
#include "cohann/fpmod.hpp"

namespace cohann {

/// A parsed and validated session file.
///
///   [ring]
///   char = 0
///   vars = ["x", "y"]
///   weights = [1, 1]        # optional
///   order = "grevlex"       # or "lex"
///   relations = ["x^2"]
///
///   [module.M]
///   cokernel = [["x"]]      # g rows of s entries; M = R^g / column span
///   over = "A"              # optional: a module over subalgebra A instead
///
///   [subalgebra.A]
///   vars = ["t"]
///   images = ["x"]
///
///   [ideal.J]
///   generators = ["x", "y"]
///
/// Errors are ParseError whose offset is the 1-based line number.
struct Session {
  RingPtr ambient;
  QRingPtr ring;
  std::map<std::string, FPModule> modules;
  /// Subalgebra a module lives over; empty for R-modules.
  std::map<std::string, std::string> module_base;
  std::map<std::string, SubalgebraMap> subalgebras;
  std::map<std::string, Ideal> ideals;
  /// Compact JSON of the parsed content, polynomials reprinted.
  std::string canonical;
  /// SHA-256 of `canonical`, hex.
  std::string digest;

  const FPModule& module(const std::string& name) const;
  const SubalgebraMap& subalgebra(const std::string& name) const;
  const Ideal& ideal(const std::string& name) const;
};

Session parse_session(std::string_view text);
Session load_session(const std::string& path);

std::string sha256_hex(std::string_view data);

}  // namespace cohann
