#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "multinv/matrix.hpp"

namespace multinv::cli {

/// Parsed input document:
///
///   {"rank": n, "generators": [[[...], ...], ...],
///    "base_override": [[...], ...], "labels": ["a", "b", ...]}
///
/// Matrices act on the right on integer row vectors. Entries may be JSON
/// integers or decimal strings (for values beyond 64 bits).
struct ActionDescription {
  std::size_t rank = 0;
  std::vector<IntegerMatrix> generators;
  std::optional<std::vector<IntegerVector>> base_override;
  std::vector<std::string> labels;
};

/// Throws Error(InvalidInput) naming the offending field, e.g.
/// `generators[1][0][2]: expected an integer`.
ActionDescription parse_action(const nlohmann::json &doc);
/// Also reports JSON syntax errors with their line and column.
ActionDescription parse_action_text(std::string_view text);

std::vector<IntegerVector> parse_base(const nlohmann::json &doc,
                                      std::size_t rank,
                                      const std::string &field = "base_override");

nlohmann::json parse_json_text(std::string_view text, const std::string &what);

} // namespace multinv::cli
