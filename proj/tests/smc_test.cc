#include <algorithm>
#include <random>

#include "doctest.h"
#include "plan_strings/smc.h"
#include "support/blocksworld_gen.h"
#include "support/diagrams.h"
#include "support/fixtures.h"
#include "support/rewrites.h"

using namespace plan_strings;
using namespace plan_strings::testing;

namespace {

// Oracle: replay the swap slices over the label list.
Labels replay(Labels wires, const std::vector<Slice>& swaps) {
  for (const auto& s : swaps) {
    std::size_t pos = 0;
    for (const auto& c : s.cells) {
      if (const auto* sw = std::get_if<SwapCell>(&c)) {
        REQUIRE(wires[pos] == sw->left);
        REQUIRE(wires[pos + 1] == sw->right);
        std::swap(wires[pos], wires[pos + 1]);
        break;
      }
      ++pos;
    }
  }
  return wires;
}

std::size_t swap_cells(const Slice& s) {
  return static_cast<std::size_t>(std::count_if(s.cells.begin(), s.cells.end(), [](const Cell& c) {
    return std::holds_alternative<SwapCell>(c);
  }));
}

std::size_t box_inputs(const Diagram& d) {
  std::size_t n = 0;
  for (const auto& s : d.slices()) {
    for (const auto& c : s.cells) {
      if (const auto* b = std::get_if<BoxCell>(&c)) n += b->dom.size();
    }
  }
  return n;
}

}  // namespace

TEST_CASE("tensor concatenates cells") {
  Slice s = tensor(ids({L("(ontable b)")}), ids({L("¬(ontable a)")}));
  CHECK(s.dom() == Ls({"(ontable b)", "¬(ontable a)"}));
  CHECK(s.cod() == s.dom());

  Slice x = ids({L("(x)")}), y = ids({L("(y)")}), z = ids({L("(z)")});
  CHECK(tensor(Slice{}, x) == x);
  CHECK(tensor(x, Slice{}) == x);
  CHECK(tensor(tensor(x, y), z) == tensor(x, tensor(y, z)));
}

TEST_CASE("compose checks ordered boundaries") {
  BoxCell f = box("f", Ls({"(a)", "(b)"}), Ls({"(c)"}));
  Diagram df(one(f));
  Diagram composed = compose(df, Diagram::identity(Ls({"(c)"})));
  CHECK(composed.size() == 2);
  CHECK(composed.dom() == df.dom());
  CHECK(composed.cod() == df.cod());
  CHECK(compose(Diagram{}, df) == df);

  try {
    compose(df, Diagram::identity(Ls({"(d)"})));
    FAIL("expected CompositionMismatch");
  } catch (const CompositionMismatch& e) {
    CHECK(e.position() == 0);
    CHECK(e.upper_cod() == Ls({"(c)"}));
    CHECK(e.lower_dom() == Ls({"(d)"}));
  }
  // Same multiset, different order: still a mismatch.
  Diagram ab = Diagram::identity(Ls({"(a)", "(b)"}));
  try {
    compose(ab, Diagram::identity(Ls({"(a)", "(c)"})));
    FAIL("expected CompositionMismatch");
  } catch (const CompositionMismatch& e) {
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_AS(compose(ab, Diagram::identity(Ls({"(b)", "(a)"}))), CompositionMismatch);
  CHECK_THROWS_AS(Diagram::from_slices({ids(Ls({"(a)"})), ids(Ls({"(b)"}))}),
                  CompositionMismatch);
}

TEST_CASE("permutation_to_swaps") {
  SUBCASE("single braid") {
    auto swaps = permutation_to_swaps(Ls({"(x)", "(y)"}), Ls({"(y)", "(x)"}));
    REQUIRE(swaps.size() == 1);
    CHECK(swaps[0].cells.size() == 1);
    CHECK(swaps[0].cells[0] == Cell{SwapCell{L("(x)"), L("(y)")}});
  }
  SUBCASE("identity") {
    CHECK(permutation_to_swaps(Ls({"(a)", "(b)"}), Ls({"(a)", "(b)"})).empty());
  }
  SUBCASE("rotation") {
    Labels cur = Ls({"(a)", "(b)", "(c)"});
    Labels tgt = Ls({"(c)", "(a)", "(b)"});
    auto swaps = permutation_to_swaps(cur, tgt);
    CHECK(swaps.size() == 2);
    CHECK(replay(cur, swaps) == tgt);
  }
  SUBCASE("not a permutation") {
    CHECK_THROWS_AS(permutation_to_swaps(Ls({"(a)"}), Ls({"(b)"})), NotAPermutation);
    CHECK_THROWS_AS(permutation_to_swaps(Ls({"(a)", "(a)"}), Ls({"(a)"})), NotAPermutation);
  }
}

TEST_CASE("permutation_to_swaps replays to the target on random multisets") {
  std::mt19937 rng(11);
  for (int round = 0; round < 2000; ++round) {
    Labels cur = random_labels(rng, 12);
    Labels tgt = cur;
    std::shuffle(tgt.begin(), tgt.end(), rng);
    auto swaps = permutation_to_swaps(cur, tgt);
    REQUIRE(replay(cur, swaps) == tgt);

    // Minimal: one swap per inversion of the stable matching, counted by
    // brute force over pairs.
    std::vector<std::size_t> rank(cur.size());
    std::vector<bool> used(cur.size(), false);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = 0; j < tgt.size(); ++j) {
        if (!used[j] && tgt[j] == cur[i]) {
          used[j] = true;
          rank[i] = j;
          break;
        }
      }
    }
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < rank.size(); ++i) {
      for (std::size_t j = i + 1; j < rank.size(); ++j) inversions += rank[i] > rank[j];
    }
    CHECK(swaps.size() == inversions);

    Diagram d = Diagram::identity(cur);
    for (const auto& s : swaps) {
      CHECK(swap_cells(s) == 1);
      d.append(s);
    }
    CHECK(d.cod() == tgt);
  }
}

TEST_CASE("port graph traces wires through identities and braids") {
  PortGraph single = port_graph(Diagram::identity(Ls({"(x)"})));
  CHECK(single.nodes.size() == 2);
  REQUIRE(single.edges.size() == 1);
  CHECK(single.edges[0] ==
        PortGraph::Edge{PortGraph::kTop, 0, PortGraph::kBottom, 0, L("(x)")});

  // f: a → b, then a braid, then g: b → c on the right-hand wire.
  BoxCell f = box("f", Ls({"(a)"}), Ls({"(b)"}));
  BoxCell g = box("g", Ls({"(b)"}), Ls({"(c)"}));
  Diagram d = Diagram::from_slices({cells({one(f), ids(Ls({"(z)"}))}),
                                    one(SwapCell{L("(b)"), L("(z)")}),
                                    cells({ids(Ls({"(z)"})), one(g)})});
  PortGraph pg = port_graph(d);
  CHECK(pg.nodes.size() == 4);
  CHECK(pg.edges.size() == box_inputs(d) + d.cod().size());
  bool f_to_g = std::any_of(pg.edges.begin(), pg.edges.end(), [](const auto& e) {
    return e.source == 2 && e.target == 3 && e.label == L("(b)");
  });
  CHECK(f_to_g);
  bool z_through = std::any_of(pg.edges.begin(), pg.edges.end(), [](const auto& e) {
    return e.source == PortGraph::kTop && e.source_port == 1 &&
           e.target == PortGraph::kBottom && e.target_port == 0;
  });
  CHECK(z_through);
}

TEST_CASE("interchange law") {
  BoxCell f = box("f", Ls({"(a)"}), Ls({"(c)"}));
  BoxCell g = box("g", Ls({"(b)"}), Ls({"(d)"}));
  auto [left, right] = interchange_pair(f, g);
  CHECK(left.dom() == right.dom());
  CHECK(left.cod() == right.cod());
  CHECK_FALSE(left == right);
  CHECK(equivalent(left, right));
  CHECK(equivalent(right, left));

  // Same edges once boxes are identified by name.
  auto named = [](const Diagram& d) {
    PortGraph pg = port_graph(d);
    std::vector<std::string> out;
    auto nm = [&](std::size_t v) {
      return v < 2 ? std::to_string(v) : pg.nodes[v].box->name;
    };
    for (const auto& e : pg.edges) {
      out.push_back(nm(e.source) + ":" + std::to_string(e.source_port) + ">" +
                    nm(e.target) + ":" + std::to_string(e.target_port) + e.label.str());
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(named(left) == named(right));
}

TEST_CASE("equivalence basics") {
  Blocksworld bw = load_blocksworld();
  const Diagram& d = bw.woven.diagram;
  CHECK(equivalent(d, d));

  // Inserting B_{x,y} then B_{y,x} changes nothing.
  Labels w = d.slices()[0].cod();
  std::vector<Slice> slices = d.slices();
  Slice s1 = swap_slice(w, 2);
  Slice s2 = swap_slice(s1.cod(), 2);
  slices.insert(slices.begin() + 1, {s1, s2});
  Diagram padded = Diagram::from_slices(slices);
  CHECK(equivalent(d, padded));
  CHECK(equivalent(padded, d));

  auto pick_b = ground_action(*bw.domain.find_action("pick-up"), {"b"}, 1);
  auto pick_c = ground_action(*bw.domain.find_action("pick-up"), {"c"}, 1);
  CHECK_FALSE(equivalent(Diagram(one(pick_b.box)), Diagram(one(pick_c.box))));
  // Step numbers are not part of the shape.
  auto pick_b3 = ground_action(*bw.domain.find_action("pick-up"), {"b"}, 3);
  CHECK(equivalent(Diagram(one(pick_b.box)), Diagram(one(pick_b3.box))));
}

TEST_CASE("crossing equal labels is not the identity on boundary ports") {
  BoxCell f = box("f", Ls({"(x)"}), Ls({"(z)"}));
  Labels xx = Ls({"(x)", "(x)"});
  Diagram straight = Diagram::from_slices({ids(xx), cells({one(f), ids(Ls({"(x)"}))})});
  Diagram crossed = Diagram::from_slices({one(SwapCell{L("(x)"), L("(x)")}),
                                          cells({one(f), ids(Ls({"(x)"}))})});
  CHECK_FALSE(equivalent(straight, crossed));
  CHECK_FALSE(equivalent(straight, Diagram::identity(xx)));
}

TEST_CASE("duplicate boxes are matched by search") {
  // Two copies of h: I → (p) feeding k: (p) ⊗ (p) → I in either order.
  BoxCell h = box("h", {}, Ls({"(p)"}));
  BoxCell h2 = box("h", {}, Ls({"(q)"}));
  BoxCell k = box("k", Ls({"(p)", "(q)"}), {});
  Diagram a = Diagram::from_slices({cells({one(h), one(h2)}), one(k)});
  Diagram b = Diagram::from_slices({one(h), cells({ids(Ls({"(p)"})), one(h2)}), one(k)});
  Diagram c = Diagram::from_slices({one(h2), cells({one(h), ids(Ls({"(q)"}))}), one(k)});
  CHECK(equivalent(a, b));
  CHECK(equivalent(a, c));
  CHECK(equivalent(c, b));
}

TEST_CASE("equivalence survives random rewrites of woven plans") {
  BlocksworldGenerator gen(3);
  DomainModel domain = parse_domain(read_data("blocksworld/domain.pddl"));
  std::mt19937 rng(5);
  for (int round = 0; round < 60; ++round) {
    auto inst = gen.next(5, 10);
    ProblemModel p = parse_problem(inst.problem_text, domain);
    Plan plan = parse_plan(inst.plan_text, domain, p);
    WovenPlan w = weave(p, ground_plan(domain, plan));
    const std::size_t edges = port_graph(w.diagram).edges.size();
    Diagram d = w.diagram;
    for (int k = 0; k < 20; ++k) {
      std::optional<Diagram> next = (k % 2 == 0) ? random_interchange(d, rng)
                                                 : insert_inverse_swaps(d, rng);
      if (!next) continue;
      d = std::move(*next);
      REQUIRE(equivalent(w.diagram, d));
      REQUIRE(equivalent(d, w.diagram));
      CHECK(port_graph(d).edges.size() == edges);
      CHECK(edges == box_inputs(d) + d.cod().size());
    }
  }
}
