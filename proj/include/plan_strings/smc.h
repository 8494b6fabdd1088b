#ifndef PLAN_STRINGS_SMC_H_
#define PLAN_STRINGS_SMC_H_

// Strict symmetric monoidal string diagrams. Objects are flat ordered lists
// of literal-labelled wires and the monoidal unit is the empty list, so the
// associator and unitors are identities on the representation.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plan_strings/error.h"
#include "plan_strings/literal.h"

namespace plan_strings {

/// A morphism drawn as a rectangle: an action step, init, or goal.
struct BoxCell {
  std::string name;
  std::vector<std::string> args;
  Labels dom;
  Labels cod;
  std::optional<int> step_index;

  /// `name a b`, the human readable box title.
  std::string title() const;

  bool operator==(const BoxCell&) const = default;
};

/// Identity string on one wire.
struct IdCell {
  GroundLiteral label;
  bool operator==(const IdCell&) const = default;
};

/// Braid of two adjacent wires: left ⊗ right → right ⊗ left.
struct SwapCell {
  GroundLiteral left;
  GroundLiteral right;
  bool operator==(const SwapCell&) const = default;
};

using Cell = std::variant<BoxCell, IdCell, SwapCell>;

Labels cell_dom(const Cell& cell);
Labels cell_cod(const Cell& cell);

/// One horizontal layer: cells tensored left to right.
struct Slice {
  std::vector<Cell> cells;

  Labels dom() const;
  Labels cod() const;
  bool operator==(const Slice&) const = default;
};

/// Raised when two boundaries that must agree as ordered lists do not.
class CompositionMismatch : public Error {
 public:
  CompositionMismatch(Labels upper_cod, Labels lower_dom, std::size_t position);

  const Labels& upper_cod() const { return upper_cod_; }
  const Labels& lower_dom() const { return lower_dom_; }
  /// First index where the lists differ (the shorter length if one is a
  /// prefix of the other).
  std::size_t position() const { return position_; }

 private:
  Labels upper_cod_;
  Labels lower_dom_;
  std::size_t position_;
};

/// Vertical composition of slices, read top to bottom. Every adjacent pair
/// of slices agrees on its shared boundary; the constructors enforce it.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(Slice slice);

  /// Throws CompositionMismatch at the first incompatible boundary.
  static Diagram from_slices(std::vector<Slice> slices);
  /// A single slice of identity cells; the empty list gives a diagram with
  /// one empty slice (the identity on the unit).
  static Diagram identity(const Labels& wires);

  const std::vector<Slice>& slices() const { return slices_; }
  std::size_t size() const { return slices_.size(); }
  bool empty() const { return slices_.empty(); }

  Labels dom() const;
  Labels cod() const;

  /// Appends `slice` below the current bottom boundary.
  void append(Slice slice);

  bool operator==(const Diagram&) const = default;

 private:
  std::vector<Slice> slices_;
};

/// Horizontal juxtaposition, `a` on the left.
Slice tensor(const Slice& a, const Slice& b);

/// Sequential composition: `upper` first, then `lower`.
Diagram compose(const Diagram& upper, const Diagram& lower);

/// Tensors identity strings onto both sides of every slice of `d`.
Diagram whisker(const Diagram& d, const Labels& left, const Labels& right);

/// Slice braiding wires[position] and wires[position + 1], with identities
/// on every other wire.
Slice swap_slice(const Labels& wires, std::size_t position);

/// Adjacent-transposition decomposition of the permutation taking `current`
/// to `target`. Equal labels keep their relative order. One swap per slice,
/// in the order produced by a left-to-right bubble pass. Throws
/// NotAPermutation if the lists differ as multisets.
std::vector<Slice> permutation_to_swaps(const Labels& current,
                                        const Labels& target);

/// Connectivity skeleton of a diagram: boxes as nodes, wires traced through
/// identities and braids as edges.
struct PortGraph {
  static constexpr std::size_t kTop = 0;
  static constexpr std::size_t kBottom = 1;

  struct Node {
    std::optional<BoxCell> box;  // empty for the two boundary nodes
    std::size_t slice = 0;
    std::size_t cell = 0;
  };
  struct Edge {
    std::size_t source;
    std::size_t source_port;
    std::size_t target;
    std::size_t target_port;
    GroundLiteral label;

    bool operator==(const Edge&) const = default;
  };

  /// nodes[kTop] and nodes[kBottom] are the diagram boundaries; boxes
  /// follow in slice order, which is a topological order.
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  Labels top;
  Labels bottom;
};

PortGraph port_graph(const Diagram& d);

/// Deformation equivalence: the port graphs are isomorphic by a map that
/// fixes both boundaries, preserves box name, arguments and port lists, and
/// preserves wire labels. Step indices are ignored.
bool equivalent(const Diagram& a, const Diagram& b);

}  // namespace plan_strings

#endif  // PLAN_STRINGS_SMC_H_
