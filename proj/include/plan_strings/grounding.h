#ifndef PLAN_STRINGS_GROUNDING_H_
#define PLAN_STRINGS_GROUNDING_H_

#include <string>
#include <vector>

#include "plan_strings/pddl.h"
#include "plan_strings/smc.h"

namespace plan_strings {

/// An action schema instantiated with plan arguments, as a box whose input
/// wires are the preconditions and output wires the effects, both in schema
/// declaration order.
struct GroundAction {
  BoxCell box;
  std::string schema_name;
  std::vector<std::string> args;
  int step_index = 0;  // 1-based position in the plan

  bool operator==(const GroundAction&) const = default;
};

inline constexpr std::string_view kInitBoxName = "init";
inline constexpr std::string_view kGoalBoxName = "goal";

/// Throws ArityMismatch when `args` does not match the schema parameters.
GroundAction ground_action(const ActionSchema& schema,
                           const std::vector<std::string>& args,
                           int step_index);

/// Grounds every step of `plan`. Throws SemanticError for unknown actions.
std::vector<GroundAction> ground_plan(const DomainModel& domain,
                                      const Plan& plan);

/// I → init wires.
BoxCell init_morphism(const Labels& augmented_init);

/// final frontier → I.
BoxCell goal_morphism(const Labels& final_frontier);

}  // namespace plan_strings

#endif  // PLAN_STRINGS_GROUNDING_H_
