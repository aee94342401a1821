#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "input.hpp"
#include "multinv/group_action.hpp"

namespace multinv::cli {

struct Options {
  std::size_t group_cap = kDefaultGroupCap;
  unsigned threads = 1;
  bool require_verdict = false;
};

/// `json` and `text` describe the same result; `error` is set on failure.
struct Report {
  nlohmann::json json;
  std::string text;
  std::string error;
  int exit_code = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNoVerdict = 3;

Report cmd_analyze(const ActionDescription &in, const Options &opt);
Report cmd_invariants(const ActionDescription &in, const Options &opt);
Report cmd_classgroup(const ActionDescription &in, const Options &opt);
Report cmd_hilbert_basis(const ActionDescription &in, const Options &opt);
Report cmd_verdict(const ActionDescription &in, const Options &opt);
Report cmd_singular_locus(const ActionDescription &in, const Options &opt);

/// Dispatches by command name and turns library errors into exit codes.
Report run_command(std::string_view command, const ActionDescription &in,
                   const Options &opt);

/// Canonical rendering of a JSON report (sorted keys, two-space indent).
std::string render_json(const nlohmann::json &j);

} // namespace multinv::cli
