#include "plan_strings/grounding.h"

#include <algorithm>
#include <map>

namespace plan_strings {
namespace {

Labels substitute(const std::vector<LiteralTemplate>& templates,
                  const std::map<std::string, std::string>& binding) {
  Labels out;
  out.reserve(templates.size());
  for (const auto& t : templates) {
    GroundLiteral lit{t.negated, t.predicate, {}};
    for (const auto& param : t.args) lit.args.push_back(binding.at(param));
    out.push_back(std::move(lit));
  }
  return out;
}

}  // namespace

GroundAction ground_action(const ActionSchema& schema,
                           const std::vector<std::string>& args,
                           int step_index) {
  if (args.size() != schema.params.size()) {
    throw ArityMismatch(schema.name + " expects " +
                        std::to_string(schema.params.size()) + " args, got " +
                        std::to_string(args.size()));
  }
  std::map<std::string, std::string> binding;
  for (std::size_t i = 0; i < args.size(); ++i) binding[schema.params[i]] = args[i];

  GroundAction g;
  g.schema_name = schema.name;
  g.args = args;
  g.step_index = step_index;
  g.box.name = schema.name;
  g.box.args = args;
  g.box.dom = substitute(schema.preconditions, binding);
  g.box.cod = substitute(schema.effects, binding);
  g.box.step_index = step_index;
  return g;
}

std::vector<GroundAction> ground_plan(const DomainModel& domain,
                                      const Plan& plan) {
  std::vector<GroundAction> out;
  int index = 0;
  for (const auto& step : plan.steps) {
    ++index;
    const ActionSchema* schema = domain.find_action(step.action);
    if (schema == nullptr) {
      throw SemanticError("unknown action '" + step.action + "'",
                          {step.line, 1});
    }
    out.push_back(ground_action(*schema, step.args, index));
  }
  return out;
}

BoxCell init_morphism(const Labels& augmented_init) {
  return BoxCell{std::string(kInitBoxName), {}, {}, augmented_init, std::nullopt};
}

BoxCell goal_morphism(const Labels& final_frontier) {
  return BoxCell{std::string(kGoalBoxName), {}, final_frontier, {}, std::nullopt};
}

}  // namespace plan_strings
