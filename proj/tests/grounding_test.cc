#include "doctest.h"
#include "plan_strings/grounding.h"
#include "support/fixtures.h"

using namespace plan_strings;
using namespace plan_strings::testing;

TEST_CASE("ground pick-up b") {
  DomainModel d = parse_domain(read_data("blocksworld/domain.pddl"));
  GroundAction g = ground_action(*d.find_action("pick-up"), {"b"}, 1);
  CHECK(g.step_index == 1);
  CHECK(g.box.step_index == 1);
  CHECK(g.box.title() == "pick-up b");
  CHECK(g.box.dom == Ls({"(clear b)", "(ontable b)", "(handempty)"}));
  // Effects follow the schema file; the figure lists (holding b) first, so
  // compare as a multiset.
  CHECK(multiset_equal(g.box.cod, Ls({"(holding b)", "¬(ontable b)", "¬(clear b)",
                                      "¬(handempty)"})));
  CHECK(g.box.cod == Ls({"¬(ontable b)", "¬(clear b)", "¬(handempty)", "(holding b)"}));
}

TEST_CASE("ground stack b a") {
  DomainModel d = parse_domain(read_data("blocksworld/domain.pddl"));
  GroundAction g = ground_action(*d.find_action("stack"), {"b", "a"}, 2);
  CHECK(multiset_equal(g.box.dom, Ls({"(holding b)", "(clear a)"})));
  CHECK(multiset_equal(g.box.cod, Ls({"(on b a)", "(clear b)", "(handempty)",
                                      "¬(holding b)", "¬(clear a)"})));
}

TEST_CASE("zero-parameter schema grounds verbatim") {
  DomainModel d = parse_domain(R"((define (domain d) (:predicates (p) (q))
    (:action flip :precondition (and (p) (not (q))) :effect (and (q) (not (p))))))");
  GroundAction g = ground_action(*d.find_action("flip"), {}, 1);
  CHECK(g.box.dom == Ls({"(p)", "¬(q)"}));
  CHECK(g.box.cod == Ls({"(q)", "¬(p)"}));
  CHECK_THROWS_AS(ground_action(*d.find_action("flip"), {"x"}, 1), ArityMismatch);
}

TEST_CASE("grounding properties over the blocksworld schemas") {
  DomainModel d = parse_domain(read_data("blocksworld/domain.pddl"));
  const std::vector<std::string> objs{"a", "b", "c"};
  for (const auto& schema : d.actions) {
    std::vector<std::vector<std::string>> tuples;
    if (schema.params.size() == 1) {
      for (auto& x : objs) tuples.push_back({x});
    } else {
      for (auto& x : objs)
        for (auto& y : objs) tuples.push_back({x, y});
    }
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      GroundAction g = ground_action(schema, tuples[i], 1);
      CHECK(g.box.dom.size() == schema.preconditions.size());
      CHECK(g.box.cod.size() == schema.effects.size());
      // Negation commutes with substitution.
      for (std::size_t k = 0; k < schema.effects.size(); ++k) {
        CHECK(g.box.cod[k].negated == schema.effects[k].negated);
        LiteralTemplate flipped = schema.effects[k];
        flipped.negated = !flipped.negated;
        ActionSchema alt = schema;
        alt.effects[k] = flipped;
        GroundAction h = ground_action(alt, tuples[i], 1);
        GroundLiteral expect = g.box.cod[k];
        expect.negated = !expect.negated;
        CHECK(h.box.cod[k] == expect);
      }
      // Injective on argument tuples.
      for (std::size_t j = i + 1; j < tuples.size(); ++j) {
        GroundAction other = ground_action(schema, tuples[j], 1);
        CHECK((g.box.dom != other.box.dom || g.box.cod != other.box.cod));
      }
    }
  }
}

TEST_CASE("init and goal morphisms") {
  ProblemModel p = parse_problem(read_data("blocksworld/blocks-3-0.pddl"),
                                 parse_domain(read_data("blocksworld/domain.pddl")));
  BoxCell init = init_morphism(p.init);
  CHECK(init.name == "init");
  CHECK(init.dom.empty());
  CHECK(init.cod.size() == 7);

  BoxCell empty = init_morphism({});
  CHECK(empty.dom.empty());
  CHECK(empty.cod.empty());

  Labels augmented = p.init;
  augmented.push_back(L("(holding a)"));
  CHECK(init_morphism(augmented).cod.back() == L("(holding a)"));

  const auto rows = table_rows();
  BoxCell goal = goal_morphism(rows.back().literals);
  CHECK(goal.name == "goal");
  CHECK(goal.dom.size() == 15);
  CHECK(goal.cod.empty());
  CHECK(goal_morphism({}).dom.empty());
  CHECK(goal_morphism(p.goal).dom.size() == p.goal.size());
}
