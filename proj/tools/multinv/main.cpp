#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "input.hpp"
#include "report.hpp"
#include "multinv/error.hpp"

namespace {

std::string read_source(const std::string &path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw multinv::Error(multinv::ErrorCode::InvalidInput,
                         "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

unsigned threads_from_env() {
  const char *s = std::getenv("MULTINV_THREADS");
  if (!s || !*s)
    return 1;
  char *end = nullptr;
  const unsigned long n = std::strtoul(s, &end, 10);
  return (*end || n == 0) ? 1u : static_cast<unsigned>(std::min(n, 256ul));
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Multiplicative invariants of finite integral matrix groups"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string base_override;
  bool as_json = false;
  multinv::cli::Options opt;
  opt.threads = threads_from_env();

  for (const char *name : {"analyze", "invariants", "classgroup",
                           "hilbert-basis", "verdict", "singular-locus"}) {
    auto *sub = app.add_subcommand(name);
    sub->add_option("input", input, "action description (JSON file, '-' for stdin)");
    sub->add_flag("--json", as_json, "machine-readable output");
    sub->add_option("--base-override", base_override,
                    "simple roots as a JSON file or inline array");
    sub->add_option("--group-cap", opt.group_cap, "maximal group order")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--require-verdict", opt.require_verdict,
                  "exit with status 3 if no definite verdict is reached");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : multinv::cli::kExitInvalidInput;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  multinv::cli::Report report;
  try {
    auto action = multinv::cli::parse_action_text(read_source(input));
    if (!base_override.empty()) {
      const bool inline_value = base_override.front() == '[';
      const auto doc = multinv::cli::parse_json_text(
          inline_value ? base_override : read_source(base_override),
          "--base-override");
      action.base_override =
          multinv::cli::parse_base(doc, action.rank, "--base-override");
    }
    report = multinv::cli::run_command(command, action, opt);
  } catch (const multinv::Error &e) {
    report.error = e.what();
    report.exit_code = multinv::cli::kExitInvalidInput;
    report.json = {{"error", {{"code", std::string(to_string(e.code()))},
                              {"message", report.error}}}};
  }

  if (as_json)
    std::cout << multinv::cli::render_json(report.json);
  else
    std::cout << report.text;
  if (!report.error.empty())
    std::cerr << "multinv: " << report.error << '\n';
  return report.exit_code;
}
