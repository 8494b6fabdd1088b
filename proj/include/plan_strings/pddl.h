#ifndef PLAN_STRINGS_PDDL_H_
#define PLAN_STRINGS_PDDL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plan_strings/error.h"
#include "plan_strings/literal.h"

namespace plan_strings {

struct PredicateSchema {
  std::string name;
  std::vector<std::string> param_names;  // without the `?` sigil

  std::size_t arity() const { return param_names.size(); }
  bool operator==(const PredicateSchema&) const = default;
};

/// A predicate applied to action parameters, e.g. `(on ?x ?y)`.
struct LiteralTemplate {
  bool negated = false;
  std::string predicate;
  std::vector<std::string> args;  // parameter names, without `?`

  std::string str() const;
  bool operator==(const LiteralTemplate&) const = default;
};

struct ActionSchema {
  std::string name;
  std::vector<std::string> params;
  std::vector<LiteralTemplate> preconditions;
  std::vector<LiteralTemplate> effects;

  bool operator==(const ActionSchema&) const = default;
};

struct DomainModel {
  std::string name;
  std::vector<PredicateSchema> predicates;
  std::vector<ActionSchema> actions;

  const PredicateSchema* find_predicate(std::string_view name) const;
  const ActionSchema* find_action(std::string_view name) const;

  bool operator==(const DomainModel&) const = default;
};

struct ProblemModel {
  std::string name;
  std::string domain_name;
  std::vector<std::string> objects;
  Labels init;
  Labels goal;

  bool operator==(const ProblemModel&) const = default;
};

struct PlanStep {
  std::string action;
  std::vector<std::string> args;
  int line = 0;  // source line of the step, 0 when built in memory

  std::string str() const;
  bool operator==(const PlanStep& o) const {
    return action == o.action && args == o.args;
  }
};

struct Plan {
  std::vector<PlanStep> steps;

  bool operator==(const Plan&) const = default;
};

/// Parses a STRIPS domain. Throws SyntaxError, UnsupportedFeature or
/// SemanticError.
DomainModel parse_domain(std::string_view text);

/// Parses a problem against an already parsed domain.
ProblemModel parse_problem(std::string_view text, const DomainModel& domain);

/// Parses a plan: one step per non-blank line, either `name a b` or
/// `(name a b)`. Lines starting with `;` are comments.
Plan parse_plan(std::string_view text, const DomainModel& domain,
                const ProblemModel& problem);

/// PDDL text that parse_domain/parse_problem read back to an equal model.
std::string to_pddl(const DomainModel& domain);
std::string to_pddl(const ProblemModel& problem);

}  // namespace plan_strings

#endif  // PLAN_STRINGS_PDDL_H_
