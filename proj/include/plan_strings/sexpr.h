#ifndef PLAN_STRINGS_SEXPR_H_
#define PLAN_STRINGS_SEXPR_H_

#include <string>
#include <string_view>
#include <vector>

#include "plan_strings/error.h"

namespace plan_strings {

/// A node of a parsed s-expression document: either an atom or a list.
/// Atoms are lowercased on ingest.
struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  SourceLocation loc;

  bool is_atom() const { return !is_list; }
  bool is_atom(std::string_view text) const { return !is_list && atom == text; }
  /// True for a list whose first element is the atom `head`.
  bool has_head(std::string_view head) const {
    return is_list && !items.empty() && items.front().is_atom(head);
  }
};

/// Parses all top-level expressions in `text`. `;` starts a line comment.
/// Throws SyntaxError on unbalanced parentheses.
std::vector<SExpr> parse_sexprs(std::string_view text);

/// Parses a document that must consist of exactly one top-level list.
SExpr parse_single_sexpr(std::string_view text);

std::string to_string(const SExpr& expr);

}  // namespace plan_strings

#endif  // PLAN_STRINGS_SEXPR_H_
