#include "plan_strings/sexpr.h"

#include <cctype>

namespace plan_strings {
namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    skip_blank();
    while (!at_end()) {
      if (peek() == ')') throw SyntaxError("unexpected ')'", here());
      out.push_back(read());
      skip_blank();
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  SourceLocation here() const { return {line_, col_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (!at_end()) {
      char c = peek();
      if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  static bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == ';' ||
           std::isspace(static_cast<unsigned char>(c));
  }

  SExpr read() {
    SExpr node;
    node.loc = here();
    if (peek() == '(') {
      node.is_list = true;
      advance();
      skip_blank();
      while (true) {
        if (at_end()) {
          throw SyntaxError("unterminated list opened here", node.loc);
        }
        if (peek() == ')') {
          advance();
          break;
        }
        node.items.push_back(read());
        skip_blank();
      }
      return node;
    }
    while (!at_end() && !is_delimiter(peek())) {
      node.atom += static_cast<char>(
          std::tolower(static_cast<unsigned char>(peek())));
      advance();
    }
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<SExpr> parse_sexprs(std::string_view text) {
  return Reader(text).read_all();
}

SExpr parse_single_sexpr(std::string_view text) {
  auto exprs = parse_sexprs(text);
  if (exprs.empty()) throw SyntaxError("empty document", {1, 1});
  if (exprs.size() > 1) {
    throw SyntaxError("trailing content after top-level expression",
                      exprs[1].loc);
  }
  return std::move(exprs.front());
}

std::string to_string(const SExpr& expr) {
  if (!expr.is_list) return expr.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < expr.items.size(); ++i) {
    if (i) out += ' ';
    out += to_string(expr.items[i]);
  }
  out += ')';
  return out;
}

}  // namespace plan_strings
