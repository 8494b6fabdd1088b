#ifndef PLAN_STRINGS_CLI_H_
#define PLAN_STRINGS_CLI_H_

#include <iosfwd>
#include <optional>
#include <string>

namespace plan_strings::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // analysis found a problem
inline constexpr int kExitInput = 2;     // parse or semantic rejection
inline constexpr int kExitIo = 3;

enum class OutputFormat { kDot, kJson, kLinear, kTraceMd, kTraceTsv, kDeps, kReport };

/// Accepts dot, json, linear, trace-md, trace-tsv, deps, report.
std::optional<OutputFormat> parse_format(std::string_view name);

struct InputPaths {
  std::string domain;
  std::string problem;
  std::string plan;
};

struct CliConfig {
  InputPaths inputs;
  OutputFormat format = OutputFormat::kDot;
  std::optional<std::string> output_path;
  bool strict_compose = false;
};

int cmd_diagram(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_report(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_deps(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_compose_check(const InputPaths& first, const InputPaths& second,
                      bool strict, std::ostream& out, std::ostream& err);
/// Parse-only check. The plan path may be empty.
int cmd_validate(const InputPaths& inputs, std::ostream& out, std::ostream& err);

/// Entry point: `plan-strings <subcommand> ...`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plan_strings::cli

#endif  // PLAN_STRINGS_CLI_H_
