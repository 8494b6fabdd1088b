#ifndef PLAN_STRINGS_ANALYSIS_H_
#define PLAN_STRINGS_ANALYSIS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plan_strings/weaver.h"

namespace plan_strings {

/// Live wires at one composition boundary of a woven plan.
struct TraceRow {
  std::string boundary_name;  // "Initial", "Step k" or "Goal"
  Labels literals;
  /// Positions in `literals` that are explicitly required: the declared
  /// init on the Initial row, the wires step k consumes on the Step k row,
  /// the goal literals on the Goal row.
  std::vector<std::size_t> highlighted;
  std::string action;  // title of the step about to run, empty otherwise

  Labels highlighted_literals() const;
  bool operator==(const TraceRow&) const = default;
};

/// Initial, one row per step (the frontier right before the step's box,
/// after its braids), and Goal.
std::vector<TraceRow> trace(const WovenPlan& w);

/// A wire from the box that produced a literal to the box that consumed it.
/// nullopt producer is the init box; nullopt consumer the goal box.
struct DependencyEdge {
  std::optional<int> producer;
  std::optional<int> consumer;
  GroundLiteral literal;

  std::string str() const;
  bool operator==(const DependencyEdge&) const = default;
};

/// One edge per consumed wire: every step input and every goal literal.
/// Surplus wires reaching the goal box are not dependencies. Sorted by
/// producer (init first), consumer (goal last), then literal.
std::vector<DependencyEdge> dependencies(const WovenPlan& w);

struct CompatReport {
  bool composable = false;
  bool strict = false;
  Labels missing;  // demanded by the second plan, absent from the first
  Labels surplus;  // produced by the first plan, unused by the second

  bool operator==(const CompatReport&) const = default;
};

/// Multiset containment of `demand` in `output`. In strict mode the two
/// must be equal as multisets.
CompatReport check_sequential_composable(const Labels& output,
                                         const Labels& demand,
                                         bool strict = false);

/// Compares the goal-side frontier of `first` with the augmented init of
/// `second`.
CompatReport check_sequential_composable(const WovenPlan& first,
                                         const WovenPlan& second,
                                         bool strict = false);

/// Core of `first`, braids bringing the wires `second` needs to the left,
/// then the core of `second` with identities carried on the right. Throws
/// CompositionMismatch when the plans do not compose.
Diagram compose_sequential(const WovenPlan& first, const WovenPlan& second);

}  // namespace plan_strings

#endif  // PLAN_STRINGS_ANALYSIS_H_
