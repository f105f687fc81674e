#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cohann {

struct CommandOptions {
  std::string command;
  /// artinian {loewy|socle|ext-oracle|filtration|lemma42}
  std::string subcommand;
  std::optional<std::string> session;
  std::vector<std::string> modules;
  /// Second arguments: Ext targets, descent targets, lemma42 samples.
  std::vector<std::string> targets;
  std::vector<std::string> ideals;
  std::optional<unsigned> degree;
  std::optional<unsigned> length;
  std::optional<std::string> subalgebra;
  /// A polynomial of the session ring.
  std::optional<std::string> element;
  std::optional<std::size_t> codim;
  std::optional<std::size_t> max_pairs;
  std::string output = "json";
  std::optional<std::string> filter;
  std::optional<std::string> fault;
};

struct CommandResult {
  /// The canonical report; free of timings.
  nlohmann::json report;
  /// 0 success, 1 operational error, 2 a check failed.
  int exit_code = 0;
};

const std::vector<std::string>& command_names();

CommandResult run_command(const CommandOptions& opts);

/// Compact-free, key-sorted JSON followed by a newline.
std::string render_json(const nlohmann::json& report);
std::string render_text(const nlohmann::json& report);

/// Splits "a,b , c" into {"a", "b", "c"}.
std::vector<std::string> split_list(const std::string& s);

}  // namespace cohann
