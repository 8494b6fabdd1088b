#ifndef PLAN_STRINGS_TESTS_SUPPORT_FIXTURES_H_
#define PLAN_STRINGS_TESTS_SUPPORT_FIXTURES_H_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "plan_strings/grounding.h"
#include "plan_strings/literal.h"
#include "plan_strings/pddl.h"
#include "plan_strings/weaver.h"

namespace plan_strings::testing {

inline std::string data_path(const std::string& rel) {
  return std::string(PLAN_STRINGS_DATA_DIR) + "/" + rel;
}

inline std::string read_data(const std::string& rel) {
  std::ifstream in(data_path(rel));
  if (!in) throw std::runtime_error("missing test data " + rel);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Literal from its canonical text, e.g. L("¬(clear b)").
inline GroundLiteral L(std::string_view text) { return parse_literal_text(text); }

inline Labels Ls(std::initializer_list<std::string_view> texts) {
  Labels out;
  for (auto t : texts) out.push_back(L(t));
  return out;
}

struct Blocksworld {
  DomainModel domain;
  ProblemModel problem;
  Plan plan;
  std::vector<GroundAction> actions;
  WovenPlan woven;
};

inline Blocksworld load_blocksworld(
    const std::string& problem_file = "blocksworld/blocks-3-0.pddl") {
  Blocksworld b;
  b.domain = parse_domain(read_data("blocksworld/domain.pddl"));
  b.problem = parse_problem(read_data(problem_file), b.domain);
  b.plan = parse_plan(read_data("blocksworld/plan.txt"), b.domain, b.problem);
  b.actions = ground_plan(b.domain, b.plan);
  b.woven = weave(b.problem, b.actions);
  return b;
}

/// The six rows of the worked Blocksworld trace table, as literal multisets,
/// with the bold literals of each row.
struct ExpectedRow {
  Labels literals;
  Labels bold;
};

inline std::vector<ExpectedRow> table_rows() {
  return {
      {Ls({"(clear c)", "(ontable c)", "(clear b)", "(ontable b)", "(handempty)",
           "(clear a)", "(ontable a)"}),
       Ls({"(clear c)", "(ontable c)", "(clear b)", "(ontable b)", "(handempty)",
           "(clear a)", "(ontable a)"})},
      {Ls({"(clear c)", "(ontable c)", "(clear b)", "(ontable b)", "(handempty)",
           "(clear a)", "(ontable a)"}),
       Ls({"(clear b)", "(ontable b)", "(handempty)"})},
      {Ls({"(clear c)", "(ontable c)", "(holding b)", "(clear a)", "¬(ontable b)",
           "¬(clear b)", "¬(handempty)", "(ontable a)"}),
       Ls({"(holding b)", "(clear a)"})},
      {Ls({"(clear b)", "(clear c)", "(ontable c)", "(handempty)", "(on b a)",
           "¬(holding b)", "¬(clear a)", "¬(ontable b)", "¬(clear b)",
           "¬(handempty)", "(ontable a)"}),
       Ls({"(clear c)", "(ontable c)", "(handempty)"})},
      {Ls({"(holding c)", "(clear b)", "¬(ontable c)", "¬(clear c)",
           "¬(handempty)", "(on b a)", "¬(holding b)", "¬(clear a)",
           "¬(ontable b)", "¬(clear b)", "¬(handempty)", "(ontable a)"}),
       Ls({"(holding c)", "(clear b)"})},
      {Ls({"(clear c)", "(handempty)", "(on c b)", "¬(holding c)", "¬(clear b)",
           "¬(ontable c)", "¬(clear c)", "¬(handempty)", "(on b a)",
           "¬(holding b)", "¬(clear a)", "¬(ontable b)", "¬(clear b)",
           "¬(handempty)", "(ontable a)"}),
       Ls({"(on c b)", "(on b a)"})},
  };
}

}  // namespace plan_strings::testing

#endif  // PLAN_STRINGS_TESTS_SUPPORT_FIXTURES_H_
