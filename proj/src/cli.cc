#include "plan_strings/cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "plan_strings/analysis.h"
#include "plan_strings/emit.h"
#include "plan_strings/grounding.h"
#include "plan_strings/pddl.h"
#include "plan_strings/weaver.h"

namespace plan_strings::cli {
namespace {

class IoError : public Error {
 public:
  explicit IoError(const std::string& path)
      : Error("cannot read '" + path + "'"), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class OutputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(path);
  return ss.str();
}

// Rethrows input errors with the file path prefixed, compiler style.
class PathedError : public Error {
 public:
  using Error::Error;
};

template <typename Fn>
auto with_path(const std::string& path, Fn fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    std::string where = path;
    if (e.location().line > 0) {
      where += ":" + std::to_string(e.location().line);
      if (e.location().column > 0) where += ":" + std::to_string(e.location().column);
    }
    throw PathedError(where + ": " + e.what());
  } catch (const ArityMismatch& e) {
    throw PathedError(path + ": " + e.what());
  }
}

struct Loaded {
  DomainModel domain;
  ProblemModel problem;
  Plan plan;
};

Loaded load(const InputPaths& paths, bool need_plan = true) {
  std::string domain_text = read_file(paths.domain);
  std::string problem_text = read_file(paths.problem);
  std::string plan_text = need_plan ? read_file(paths.plan) : std::string();
  Loaded l;
  l.domain = with_path(paths.domain, [&] { return parse_domain(domain_text); });
  l.problem = with_path(paths.problem,
                        [&] { return parse_problem(problem_text, l.domain); });
  if (need_plan) {
    l.plan = with_path(paths.plan,
                       [&] { return parse_plan(plan_text, l.domain, l.problem); });
  }
  return l;
}

WovenPlan load_woven(const InputPaths& paths) {
  Loaded l = load(paths);
  auto actions = with_path(paths.plan, [&] { return ground_plan(l.domain, l.plan); });
  return weave(l.problem, actions);
}

void write_output(const std::optional<std::string>& path, const std::string& text,
                  std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw OutputError("cannot write '" + *path + "'");
  f << text;
  if (!f) throw OutputError("cannot write '" + *path + "'");
}

// Maps library exceptions onto the exit-code contract.
template <typename Fn>
int guarded(std::ostream& err, Fn fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const PathedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

std::string render(const WovenPlan& w, OutputFormat format) {
  switch (format) {
    case OutputFormat::kDot:
      return to_dot(w);
    case OutputFormat::kJson:
      return to_json(w);
    case OutputFormat::kLinear:
      return to_linear(w.diagram);
    case OutputFormat::kTraceMd:
      return trace_table(trace(w), TableFormat::kMarkdown);
    case OutputFormat::kTraceTsv:
      return trace_table(trace(w), TableFormat::kTsv);
    case OutputFormat::kDeps:
      return format_dependencies(dependencies(w));
    case OutputFormat::kReport:
      return format_report(w);
  }
  return {};
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "dot") return OutputFormat::kDot;
  if (name == "json") return OutputFormat::kJson;
  if (name == "linear") return OutputFormat::kLinear;
  if (name == "trace-md") return OutputFormat::kTraceMd;
  if (name == "trace-tsv") return OutputFormat::kTraceTsv;
  if (name == "deps") return OutputFormat::kDeps;
  if (name == "report") return OutputFormat::kReport;
  return std::nullopt;
}

int cmd_diagram(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    WovenPlan w = load_woven(config.inputs);
    write_output(config.output_path, render(w, config.format), out);
    return kExitOk;
  });
}

int cmd_report(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    WovenPlan w = load_woven(config.inputs);
    write_output(config.output_path, format_report(w), out);
    return w.report.implicit_assumptions.empty() ? kExitOk : kExitNegative;
  });
}

int cmd_deps(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    WovenPlan w = load_woven(config.inputs);
    write_output(config.output_path, format_dependencies(dependencies(w)), out);
    return kExitOk;
  });
}

int cmd_compose_check(const InputPaths& first, const InputPaths& second,
                      bool strict, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    WovenPlan a = load_woven(first);
    WovenPlan b = load_woven(second);
    CompatReport r = check_sequential_composable(a, b, strict);
    out << format_compat(r);
    return r.composable ? kExitOk : kExitNegative;
  });
}

int cmd_validate(const InputPaths& inputs, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Loaded l = load(inputs, !inputs.plan.empty());
    out << "domain " << l.domain.name << ": " << l.domain.predicates.size()
        << " predicates, " << l.domain.actions.size() << " actions\n";
    out << "problem " << l.problem.name << ": " << l.problem.objects.size()
        << " objects, " << l.problem.init.size() << " init, "
        << l.problem.goal.size() << " goal literals\n";
    if (!inputs.plan.empty()) out << "plan: " << l.plan.steps.size() << " steps\n";
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Translate STRIPS plans into string diagrams and explain them",
               "plan-strings"};
  app.require_subcommand(1);

  CliConfig config;
  std::string format_name = "dot";
  auto add_inputs = [](CLI::App* cmd, InputPaths& p, bool plan_required) {
    cmd->add_option("domain", p.domain, "PDDL domain file")->required();
    cmd->add_option("problem", p.problem, "PDDL problem file")->required();
    auto* plan = cmd->add_option("plan", p.plan, "plan file, one step per line");
    if (plan_required) plan->required();
  };

  auto* diagram = app.add_subcommand("diagram", "emit the woven plan diagram");
  add_inputs(diagram, config.inputs, true);
  diagram->add_option("-f,--format", format_name,
                      "dot | json | linear | trace-md | trace-tsv | deps | report");
  diagram->add_option("-o,--output", config.output_path, "write to file");

  auto* report = app.add_subcommand(
      "report", "list implicit assumptions and surplus outputs");
  add_inputs(report, config.inputs, true);
  report->add_option("-o,--output", config.output_path, "write to file");

  auto* deps = app.add_subcommand("deps", "list producer -> consumer wires");
  add_inputs(deps, config.inputs, true);
  deps->add_option("-o,--output", config.output_path, "write to file");

  InputPaths first, second;
  auto* compose = app.add_subcommand(
      "compose-check", "can the second plan run after the first?");
  compose->add_option("domain1", first.domain)->required();
  compose->add_option("problem1", first.problem)->required();
  compose->add_option("plan1", first.plan)->required();
  compose->add_option("domain2", second.domain)->required();
  compose->add_option("problem2", second.problem)->required();
  compose->add_option("plan2", second.plan)->required();
  compose->add_flag("--strict", config.strict_compose,
                    "require exact multiset equality, no surplus");

  InputPaths validate_inputs;
  auto* validate = app.add_subcommand("validate", "parse inputs only");
  add_inputs(validate, validate_inputs, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*diagram) {
    auto format = parse_format(format_name);
    if (!format) {
      err << "error: unknown format '" << format_name << "'\n";
      return kExitInput;
    }
    config.format = *format;
    return cmd_diagram(config, out, err);
  }
  if (*report) return cmd_report(config, out, err);
  if (*deps) return cmd_deps(config, out, err);
  if (*compose) return cmd_compose_check(first, second, config.strict_compose, out, err);
  return cmd_validate(validate_inputs, out, err);
}

}  // namespace plan_strings::cli
