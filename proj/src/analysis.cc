#include "plan_strings/analysis.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <tuple>

namespace plan_strings {
namespace {

std::vector<std::size_t> iota_positions(std::size_t begin, std::size_t count) {
  std::vector<std::size_t> out(count);
  std::iota(out.begin(), out.end(), begin);
  return out;
}

// Step endpoints sort by index; init sorts first, goal last.
int producer_rank(const std::optional<int>& p) { return p ? *p : 0; }
int consumer_rank(const std::optional<int>& c) {
  return c ? *c : std::numeric_limits<int>::max();
}

}  // namespace

Labels TraceRow::highlighted_literals() const {
  Labels out;
  for (auto i : highlighted) out.push_back(literals[i]);
  return out;
}

std::vector<TraceRow> trace(const WovenPlan& w) {
  std::vector<TraceRow> rows;
  rows.push_back({"Initial", w.augmented_init(),
                  iota_positions(0, w.declared_init_count()), ""});
  for (const auto& [step, slice_index] : w.step_slices) {
    const Slice& slice = w.diagram.slices()[slice_index];
    std::size_t offset = 0;
    const BoxCell* box = nullptr;
    for (const auto& cell : slice.cells) {
      if ((box = std::get_if<BoxCell>(&cell))) break;
      ++offset;  // identity cells carry one wire each
    }
    rows.push_back({"Step " + std::to_string(step), slice.dom(),
                    iota_positions(offset, box->dom.size()), box->title()});
  }
  rows.push_back({"Goal", w.final_frontier(),
                  iota_positions(0, w.goal_literal_count()), ""});
  return rows;
}

std::string DependencyEdge::str() const {
  std::string from = producer ? "step " + std::to_string(*producer) : "init";
  std::string to = consumer ? "step " + std::to_string(*consumer) : "goal";
  return from + " -> " + to + " " + literal.str();
}

std::vector<DependencyEdge> dependencies(const WovenPlan& w) {
  PortGraph g = port_graph(w.diagram);
  const std::size_t goal_literals = w.goal_literal_count();
  std::vector<DependencyEdge> out;
  for (const auto& e : g.edges) {
    const auto& src = g.nodes[e.source].box;
    const auto& dst = g.nodes[e.target].box;
    if (!src || !dst) continue;
    if (dst->name == kGoalBoxName && !dst->step_index &&
        e.target_port >= goal_literals) {
      continue;
    }
    out.push_back({src->step_index, dst->step_index, e.label});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(producer_rank(a.producer), consumer_rank(a.consumer),
                           std::cref(a.literal)) <
           std::make_tuple(producer_rank(b.producer), consumer_rank(b.consumer),
                           std::cref(b.literal));
  });
  return out;
}

CompatReport check_sequential_composable(const Labels& output,
                                         const Labels& demand, bool strict) {
  CompatReport r;
  r.strict = strict;
  r.missing = subtract_leftmost(demand, output);
  r.surplus = subtract_leftmost(output, demand);
  r.composable = r.missing.empty() && (!strict || r.surplus.empty());
  return r;
}

CompatReport check_sequential_composable(const WovenPlan& first,
                                         const WovenPlan& second, bool strict) {
  return check_sequential_composable(first.final_frontier(),
                                     second.augmented_init(), strict);
}

Diagram compose_sequential(const WovenPlan& first, const WovenPlan& second) {
  Diagram upper = plan_core(first);
  const Labels& demand = second.augmented_init();
  Labels carried = subtract_leftmost(upper.cod(), demand);
  Labels arranged = demand;
  arranged.insert(arranged.end(), carried.begin(), carried.end());

  Labels from = upper.cod();
  if (!multiset_equal(from, arranged)) {
    CompatReport r = check_sequential_composable(from, demand);
    throw CompositionMismatch(from, arranged,
                              demand.size() - r.missing.size());
  }
  Diagram out = upper;
  for (auto& s : permutation_to_swaps(from, arranged)) out.append(std::move(s));
  return compose(out, whisker(plan_core(second), {}, carried));
}

}  // namespace plan_strings
