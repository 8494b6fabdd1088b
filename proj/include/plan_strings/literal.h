#ifndef PLAN_STRINGS_LITERAL_H_
#define PLAN_STRINGS_LITERAL_H_

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace plan_strings {

/// A fully instantiated, possibly negated predicate. A literal and its
/// negation are unrelated values: no logical link between them is encoded.
struct GroundLiteral {
  bool negated = false;
  std::string predicate;
  std::vector<std::string> args;

  /// Canonical text: `(pred a b)` or `¬(pred a b)`.
  std::string str() const;

  auto operator<=>(const GroundLiteral&) const = default;
  bool operator==(const GroundLiteral&) const = default;
};

std::ostream& operator<<(std::ostream& os, const GroundLiteral& lit);

/// Parses the canonical text form produced by GroundLiteral::str(). Also
/// accepts the `not` spelling, `(not (pred a))`. Throws SyntaxError.
GroundLiteral parse_literal_text(std::string_view text);

using Labels = std::vector<GroundLiteral>;

/// Removes, for every element of `removed`, the leftmost remaining equal
/// element of `from`. Elements with no match are ignored.
Labels subtract_leftmost(Labels from, std::span<const GroundLiteral> removed);

/// Order-insensitive equality of two label lists.
bool multiset_equal(std::span<const GroundLiteral> a,
                    std::span<const GroundLiteral> b);

/// `(a) ⊗ (b)`-style join, mainly for messages.
std::string join_labels(std::span<const GroundLiteral> labels,
                        std::string_view sep = ", ");

}  // namespace plan_strings

#endif  // PLAN_STRINGS_LITERAL_H_
