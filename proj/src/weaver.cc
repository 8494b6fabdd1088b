#include "plan_strings/weaver.h"

#include <algorithm>
#include <variant>

namespace plan_strings {
namespace {

std::size_t count_of(const Labels& labels, const GroundLiteral& lit) {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), lit));
}

// Minimal multiset the initial state must supply so that every step and the
// goal can consume their literals: walk the plan backwards, cancelling what
// each step produces and adding what it consumes.
Labels backward_demand(const ProblemModel& problem,
                       const std::vector<GroundAction>& actions) {
  Labels demand = problem.goal;
  for (auto it = actions.rbegin(); it != actions.rend(); ++it) {
    demand = subtract_leftmost(std::move(demand), it->box.cod);
    demand.insert(demand.end(), it->box.dom.begin(), it->box.dom.end());
  }
  return demand;
}

// Attributes each assumption copy to the point where a running count of its
// label, started from the declared init, first drops below zero.
std::vector<ImplicitAssumption> attribute(
    const Labels& declared_init, const std::vector<GroundAction>& actions,
    const Labels& goal, const Labels& assumptions) {
  std::vector<ImplicitAssumption> out;
  std::vector<bool> done(assumptions.size(), false);
  for (std::size_t i = 0; i < assumptions.size(); ++i) {
    if (done[i]) continue;
    const GroundLiteral& lit = assumptions[i];
    std::vector<std::optional<int>> points;
    long long have = static_cast<long long>(count_of(declared_init, lit));
    long long deficit = 0;
    auto consume = [&](std::size_t n, std::optional<int> where) {
      have -= static_cast<long long>(n);
      while (have + deficit < 0) {
        ++deficit;
        points.push_back(where);
      }
    };
    for (const auto& a : actions) {
      consume(count_of(a.box.dom, lit), a.step_index);
      have += static_cast<long long>(count_of(a.box.cod, lit));
    }
    consume(count_of(goal, lit), std::nullopt);

    std::size_t next = 0;
    for (std::size_t j = i; j < assumptions.size(); ++j) {
      if (done[j] || assumptions[j] != lit) continue;
      done[j] = true;
      std::optional<int> where =
          next < points.size() ? points[next] : std::optional<int>{};
      ++next;
      out.push_back({lit, where});
    }
  }
  // Report in init-wire order.
  std::vector<ImplicitAssumption> ordered;
  std::vector<bool> taken(out.size(), false);
  for (const auto& lit : assumptions) {
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (!taken[k] && out[k].literal == lit) {
        taken[k] = true;
        ordered.push_back(out[k]);
        break;
      }
    }
  }
  return ordered;
}

struct Missing {
  GroundLiteral literal;
};

struct Forward {
  std::vector<Slice> slices;
  std::map<int, std::size_t> step_slices;
  std::vector<std::vector<std::size_t>> matches;
  Labels surplus;
};

// Binds, for each literal of `wanted`, the leftmost unbound equal wire.
// Returns the offending literal when one cannot be bound.
std::optional<GroundLiteral> bind_leftmost(const Labels& frontier,
                                           const Labels& wanted,
                                           std::vector<std::size_t>& bound) {
  std::vector<bool> used(frontier.size(), false);
  bound.clear();
  for (const auto& w : wanted) {
    std::size_t i = 0;
    while (i < frontier.size() && (used[i] || frontier[i] != w)) ++i;
    if (i == frontier.size()) return w;
    used[i] = true;
    bound.push_back(i);
  }
  return std::nullopt;
}

// Moves the wires at `bound` (in that order) to a contiguous block starting
// at `at`; all other wires keep their relative order.
Labels gather(const Labels& frontier, const std::vector<std::size_t>& bound,
              std::size_t at) {
  std::vector<bool> is_bound(frontier.size(), false);
  for (auto i : bound) is_bound[i] = true;
  Labels rest;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    if (!is_bound[i]) rest.push_back(frontier[i]);
  }
  Labels block;
  for (auto i : bound) block.push_back(frontier[i]);
  rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(at), block.begin(),
              block.end());
  return rest;
}

void add_braids(std::vector<Slice>& slices, const Labels& from,
                const Labels& to) {
  for (auto& s : permutation_to_swaps(from, to)) slices.push_back(std::move(s));
}

std::variant<Forward, std::pair<Missing, std::optional<int>>> forward_pass(
    const ProblemModel& problem, const std::vector<GroundAction>& actions,
    const Labels& augmented_init) {
  Forward f;
  f.slices.push_back(Slice{{init_morphism(augmented_init)}});
  Labels frontier = augmented_init;
  std::vector<std::size_t> bound;

  for (const auto& action : actions) {
    const Labels& pre = action.box.dom;
    if (auto miss = bind_leftmost(frontier, pre, bound)) {
      return std::make_pair(Missing{*miss}, std::optional<int>(action.step_index));
    }
    f.matches.push_back(bound);
    std::size_t at = bound.empty()
                         ? frontier.size()
                         : *std::min_element(bound.begin(), bound.end());
    Labels arranged = gather(frontier, bound, at);
    add_braids(f.slices, frontier, arranged);

    Slice step;
    for (std::size_t i = 0; i < at; ++i) step.cells.emplace_back(IdCell{arranged[i]});
    step.cells.emplace_back(action.box);
    for (std::size_t i = at + pre.size(); i < arranged.size(); ++i) {
      step.cells.emplace_back(IdCell{arranged[i]});
    }
    f.step_slices[action.step_index] = f.slices.size();
    f.slices.push_back(std::move(step));

    Labels next(arranged.begin(), arranged.begin() + static_cast<std::ptrdiff_t>(at));
    next.insert(next.end(), action.box.cod.begin(), action.box.cod.end());
    next.insert(next.end(),
                arranged.begin() + static_cast<std::ptrdiff_t>(at + pre.size()),
                arranged.end());
    frontier = std::move(next);
  }

  if (auto miss = bind_leftmost(frontier, problem.goal, bound)) {
    return std::make_pair(Missing{*miss}, std::optional<int>{});
  }
  Labels arranged = gather(frontier, bound, 0);
  add_braids(f.slices, frontier, arranged);
  f.surplus.assign(arranged.begin() + static_cast<std::ptrdiff_t>(problem.goal.size()),
                   arranged.end());
  f.slices.push_back(Slice{{goal_morphism(arranged)}});
  return f;
}

}  // namespace

const Labels& WovenPlan::augmented_init() const {
  return std::get<BoxCell>(diagram.slices().front().cells.front()).cod;
}

const Labels& WovenPlan::final_frontier() const {
  return std::get<BoxCell>(diagram.slices().back().cells.front()).dom;
}

std::size_t WovenPlan::declared_init_count() const {
  return augmented_init().size() - report.implicit_assumptions.size();
}

std::size_t WovenPlan::goal_literal_count() const {
  return final_frontier().size() - report.surplus_outputs.size();
}

const BoxCell& WovenPlan::step_box(int step) const {
  auto it = step_slices.find(step);
  if (it == step_slices.end()) {
    throw RangeError("no step " + std::to_string(step) + " in plan");
  }
  for (const auto& cell : diagram.slices()[it->second].cells) {
    if (auto* box = std::get_if<BoxCell>(&cell)) return *box;
  }
  throw RangeError("step slice without a box");
}

WovenPlan weave(const ProblemModel& problem,
                const std::vector<GroundAction>& actions) {
  Labels assumptions =
      subtract_leftmost(backward_demand(problem, actions), problem.init);
  Labels augmented = problem.init;
  augmented.insert(augmented.end(), assumptions.begin(), assumptions.end());

  // The backward demand already covers every per-literal shortfall; this
  // loop only extends the init if the forward binding still finds a gap.
  while (true) {
    auto result = forward_pass(problem, actions, augmented);
    if (auto* missing = std::get_if<std::pair<Missing, std::optional<int>>>(&result)) {
      augmented.push_back(missing->first.literal);
      assumptions.push_back(missing->first.literal);
      continue;
    }
    Forward& f = std::get<Forward>(result);
    WovenPlan w;
    w.domain_name = problem.domain_name;
    w.problem_name = problem.name;
    w.diagram = Diagram::from_slices(std::move(f.slices));
    w.step_slices = std::move(f.step_slices);
    w.report.implicit_assumptions =
        attribute(problem.init, actions, problem.goal, assumptions);
    w.report.surplus_outputs = std::move(f.surplus);
    w.report.per_step_matches = std::move(f.matches);
    return w;
  }
}

Diagram extract_subdiagram(const WovenPlan& w, int from_step, int to_step) {
  const int n = static_cast<int>(w.step_count());
  if (from_step < 1 || from_step > to_step || to_step > n) {
    throw RangeError("step range [" + std::to_string(from_step) + ", " +
                     std::to_string(to_step) + "] outside 1.." +
                     std::to_string(n) + " or reversed");
  }
  std::size_t begin = from_step == 1 ? 1 : w.step_slices.at(from_step - 1) + 1;
  std::size_t end = w.step_slices.at(to_step);
  const auto& slices = w.diagram.slices();
  return Diagram::from_slices(
      {slices.begin() + static_cast<std::ptrdiff_t>(begin),
       slices.begin() + static_cast<std::ptrdiff_t>(end) + 1});
}

Diagram plan_core(const WovenPlan& w) {
  if (w.step_count() == 0) return Diagram::identity(w.augmented_init());
  return extract_subdiagram(w, 1, static_cast<int>(w.step_count()));
}

}  // namespace plan_strings
