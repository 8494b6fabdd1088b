#ifndef PLAN_STRINGS_EMIT_H_
#define PLAN_STRINGS_EMIT_H_

#include <string>
#include <string_view>
#include <vector>

#include "plan_strings/analysis.h"
#include "plan_strings/smc.h"
#include "plan_strings/weaver.h"

namespace plan_strings {

inline constexpr int kJsonVersion = 1;

/// Header line that opens every linear-notation document.
inline constexpr std::string_view kLinearHeader =
    "# diagrammatic order: slices run top to bottom, (f) ∘ (g) applies f "
    "first";

/// One parenthesized slice per line, joined by ∘, top slice first. Identity
/// strings print as id_{(x)}, braids as B_{(x),(y)}, boxes as
/// ⟦title #step : dom → cod⟧ with I for an empty side.
std::string to_linear(const Diagram& d);

/// Graphviz text of the port graph. Box and edge order follow a canonical
/// traversal of the port graph, so equivalent diagrams print identically.
/// With a report, assumption wires are drawn red and surplus wires dashed.
std::string to_dot(const Diagram& d, const WeaveReport* report = nullptr);
std::string to_dot(const WovenPlan& w);

/// Canonical JSON (sorted keys, two-space indent, trailing newline).
std::string to_json(const WovenPlan& w);

/// Throws SchemaError naming the JSON pointer of the first bad value.
WovenPlan from_json(std::string_view text);

enum class TableFormat { kTsv, kMarkdown };

/// State | Satisfied Literals | Action. Highlighted literals are bold in
/// markdown and carry a `*` suffix in TSV.
std::string trace_table(const std::vector<TraceRow>& rows, TableFormat format);

/// Human readable audit: implicit assumptions then surplus outputs.
std::string format_report(const WovenPlan& w);

/// One `producer -> consumer literal` line per dependency.
std::string format_dependencies(const std::vector<DependencyEdge>& edges);

std::string format_compat(const CompatReport& r);

}  // namespace plan_strings

#endif  // PLAN_STRINGS_EMIT_H_
