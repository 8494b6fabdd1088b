#include "plan_strings/literal.h"

#include <algorithm>
#include <sstream>

#include "plan_strings/error.h"
#include "plan_strings/sexpr.h"

namespace plan_strings {

namespace {
constexpr std::string_view kNeg = "¬";
}  // namespace

std::string GroundLiteral::str() const {
  std::string out;
  if (negated) out += kNeg;
  out += '(';
  out += predicate;
  for (const auto& a : args) {
    out += ' ';
    out += a;
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const GroundLiteral& lit) {
  return os << lit.str();
}

GroundLiteral parse_literal_text(std::string_view text) {
  GroundLiteral lit;
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  if (text.starts_with(kNeg)) {
    lit.negated = true;
    text.remove_prefix(kNeg.size());
  }
  SExpr expr = parse_single_sexpr(text);
  if (expr.has_head("not") && expr.items.size() == 2 && !lit.negated) {
    lit.negated = true;
    SExpr inner = expr.items[1];
    expr = std::move(inner);
  }
  if (!expr.is_list || expr.items.empty()) {
    throw SyntaxError("expected a literal such as (pred a b), got '" +
                          std::string(text) + "'",
                      expr.loc);
  }
  for (const auto& item : expr.items) {
    if (item.is_list) {
      throw SyntaxError("nested list inside literal", item.loc);
    }
  }
  lit.predicate = expr.items.front().atom;
  for (std::size_t i = 1; i < expr.items.size(); ++i) {
    lit.args.push_back(expr.items[i].atom);
  }
  return lit;
}

Labels subtract_leftmost(Labels from, std::span<const GroundLiteral> removed) {
  for (const auto& r : removed) {
    auto it = std::find(from.begin(), from.end(), r);
    if (it != from.end()) from.erase(it);
  }
  return from;
}

bool multiset_equal(std::span<const GroundLiteral> a,
                    std::span<const GroundLiteral> b) {
  if (a.size() != b.size()) return false;
  Labels sa(a.begin(), a.end());
  Labels sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

std::string join_labels(std::span<const GroundLiteral> labels,
                        std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += sep;
    out += labels[i].str();
  }
  return out;
}

}  // namespace plan_strings
