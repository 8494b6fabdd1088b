#ifndef PLAN_STRINGS_WEAVER_H_
#define PLAN_STRINGS_WEAVER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plan_strings/grounding.h"
#include "plan_strings/pddl.h"
#include "plan_strings/smc.h"

namespace plan_strings {

/// A literal the plan consumes that the declared initial state does not
/// provide. It is tensored onto the init box.
struct ImplicitAssumption {
  GroundLiteral literal;
  /// Step whose consumption first exceeds what the declared initial state
  /// and earlier effects supply; nullopt means the goal demanded it.
  std::optional<int> first_demanded_at;

  bool operator==(const ImplicitAssumption&) const = default;
};

struct WeaveReport {
  std::vector<ImplicitAssumption> implicit_assumptions;
  /// Wires reaching the goal box beyond the goal literals, in frontier order.
  Labels surplus_outputs;
  /// For step k (index k-1), the frontier positions its preconditions bind,
  /// in precondition order, measured before the step's braids.
  std::vector<std::vector<std::size_t>> per_step_matches;

  bool operator==(const WeaveReport&) const = default;
};

/// A plan composed into a single string diagram I → I. Slice 0 holds the
/// init box and the last slice the goal box.
struct WovenPlan {
  std::string domain_name;
  std::string problem_name;
  Diagram diagram;
  WeaveReport report;
  /// step index (1-based) -> index of the slice holding its box.
  std::map<int, std::size_t> step_slices;

  std::size_t step_count() const { return step_slices.size(); }
  /// Output wires of the init box: declared init, then assumptions.
  const Labels& augmented_init() const;
  /// Input wires of the goal box: goal literals first, then surplus.
  const Labels& final_frontier() const;
  std::size_t declared_init_count() const;
  std::size_t goal_literal_count() const;
  const BoxCell& step_box(int step) const;

  bool operator==(const WovenPlan&) const = default;
};

/// Threads every literal from its producer to its consumer under linear
/// consumption: a wire entering a box is used up. Total: missing literals
/// become implicit assumptions rather than errors.
WovenPlan weave(const ProblemModel& problem,
                const std::vector<GroundAction>& actions);

/// Slices from the first braid of `from_step` through the box slice of
/// `to_step`. Throws RangeError unless 1 <= from_step <= to_step <= n.
Diagram extract_subdiagram(const WovenPlan& w, int from_step, int to_step);

/// The woven diagram without its init and goal slices and without the
/// goal-side braids: augmented init → frontier after the last step. For an
/// empty plan this is the identity on the augmented init.
Diagram plan_core(const WovenPlan& w);

}  // namespace plan_strings

#endif  // PLAN_STRINGS_WEAVER_H_
