#ifndef PLAN_STRINGS_TESTS_SUPPORT_REWRITES_H_
#define PLAN_STRINGS_TESTS_SUPPORT_REWRITES_H_

// Random diagram rewrites that preserve deformation equivalence.

#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "plan_strings/smc.h"

namespace plan_strings::testing {

/// Wires at boundary `b`: 0 is the top, size() the bottom.
inline Labels boundary(const Diagram& d, std::size_t b) {
  return b == 0 ? d.dom() : d.slices()[b - 1].cod();
}

/// Inserts B_{x,y} immediately followed by B_{y,x} at a random boundary
/// carrying at least two wires. Returns nullopt when there is none.
inline std::optional<Diagram> insert_inverse_swaps(const Diagram& d,
                                                   std::mt19937& rng) {
  std::vector<std::size_t> candidates;
  for (std::size_t b = 0; b <= d.size(); ++b) {
    if (boundary(d, b).size() >= 2) candidates.push_back(b);
  }
  if (candidates.empty()) return std::nullopt;
  std::size_t b = candidates[std::uniform_int_distribution<std::size_t>(
      0, candidates.size() - 1)(rng)];
  Labels wires = boundary(d, b);
  std::size_t pos =
      std::uniform_int_distribution<std::size_t>(0, wires.size() - 2)(rng);
  Slice first = swap_slice(wires, pos);
  Slice second = swap_slice(first.cod(), pos);
  std::vector<Slice> slices = d.slices();
  slices.insert(slices.begin() + static_cast<std::ptrdiff_t>(b), {first, second});
  return Diagram::from_slices(std::move(slices));
}

namespace rewrite_detail {

struct Lone {
  Cell cell;
  std::size_t pos;  // wire offset of the cell
  std::size_t dom_size;
  std::size_t cod_size;
};

// The single non-identity cell of a slice, if there is exactly one.
inline std::optional<Lone> lone_cell(const Slice& s) {
  std::optional<Lone> out;
  std::size_t offset = 0;
  for (const auto& c : s.cells) {
    if (std::holds_alternative<IdCell>(c)) {
      ++offset;
      continue;
    }
    if (out) return std::nullopt;
    out = Lone{c, offset, cell_dom(c).size(), cell_cod(c).size()};
    offset += out->dom_size;
  }
  return out;
}

inline Slice place(const Labels& wires, std::size_t pos, const Cell& cell,
                   std::size_t width) {
  Slice s;
  for (std::size_t i = 0; i < pos; ++i) s.cells.emplace_back(IdCell{wires[i]});
  s.cells.push_back(cell);
  for (std::size_t i = pos + width; i < wires.size(); ++i) {
    s.cells.emplace_back(IdCell{wires[i]});
  }
  return s;
}

}  // namespace rewrite_detail

/// Slides one cell past another when they touch disjoint wires (the
/// interchange law). Returns nullopt if no adjacent pair qualifies.
inline std::optional<Diagram> random_interchange(const Diagram& d,
                                                 std::mt19937& rng) {
  using namespace rewrite_detail;
  std::vector<std::size_t> candidates;
  const auto& slices = d.slices();
  for (std::size_t i = 0; i + 1 < slices.size(); ++i) {
    auto x = lone_cell(slices[i]);
    auto y = lone_cell(slices[i + 1]);
    if (!x || !y) continue;
    bool disjoint = y->pos + y->dom_size <= x->pos || y->pos >= x->pos + x->cod_size;
    if (disjoint) candidates.push_back(i);
  }
  if (candidates.empty()) return std::nullopt;
  std::size_t i = candidates[std::uniform_int_distribution<std::size_t>(
      0, candidates.size() - 1)(rng)];
  Lone x = *lone_cell(slices[i]);
  Lone y = *lone_cell(slices[i + 1]);

  Labels top = slices[i].dom();
  bool y_right = y.pos >= x.pos + x.cod_size;
  std::size_t y_pos = y_right ? y.pos - x.cod_size + x.dom_size : y.pos;
  Slice first = place(top, y_pos, y.cell, y.dom_size);
  std::size_t x_pos = y_right ? x.pos : x.pos - y.dom_size + y.cod_size;
  Slice second = place(first.cod(), x_pos, x.cell, x.dom_size);

  std::vector<Slice> out = slices;
  out[i] = std::move(first);
  out[i + 1] = std::move(second);
  return Diagram::from_slices(std::move(out));
}

}  // namespace plan_strings::testing

#endif  // PLAN_STRINGS_TESTS_SUPPORT_REWRITES_H_
