#ifndef PLAN_STRINGS_TESTS_SUPPORT_DIAGRAMS_H_
#define PLAN_STRINGS_TESTS_SUPPORT_DIAGRAMS_H_

#include <random>
#include <string>
#include <utility>

#include "plan_strings/smc.h"

namespace plan_strings::testing {

inline BoxCell box(std::string name, Labels dom, Labels cod) {
  return BoxCell{std::move(name), {}, std::move(dom), std::move(cod), std::nullopt};
}

inline Slice ids(const Labels& wires) {
  Slice s;
  for (const auto& w : wires) s.cells.emplace_back(IdCell{w});
  return s;
}

inline Slice cells(std::initializer_list<Slice> parts) {
  Slice out;
  for (const auto& p : parts) out = tensor(out, p);
  return out;
}

inline Slice one(Cell c) { return Slice{{std::move(c)}}; }

/// Both sides of the interchange law for f: A → C and g: B → D:
/// f above g on the left, g above f on the right.
inline std::pair<Diagram, Diagram> interchange_pair(const BoxCell& f,
                                                    const BoxCell& g) {
  Diagram left = Diagram::from_slices(
      {cells({one(f), ids(g.dom)}), cells({ids(f.cod), one(g)})});
  Diagram right = Diagram::from_slices(
      {cells({ids(f.dom), one(g)}), cells({one(f), ids(g.cod)})});
  return {left, right};
}

/// Random label list over a small alphabet so duplicates are common.
inline Labels random_labels(std::mt19937& rng, std::size_t max_len,
                            std::size_t alphabet = 4) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> sym(0, alphabet - 1);
  std::bernoulli_distribution neg(0.25);
  Labels out(len(rng));
  for (auto& l : out) {
    l.negated = neg(rng);
    l.predicate = "w" + std::to_string(sym(rng));
  }
  return out;
}

}  // namespace plan_strings::testing

#endif  // PLAN_STRINGS_TESTS_SUPPORT_DIAGRAMS_H_
