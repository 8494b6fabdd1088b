#include "plan_strings/pddl.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "plan_strings/sexpr.h"

namespace plan_strings {
namespace {

// Keywords that only appear in PDDL beyond the STRIPS subset.
const std::set<std::string, std::less<>> kUnsupportedKeywords = {
    ":typing",
    ":types",
    ":constants",
    ":functions",
    ":equality",
    ":adl",
    ":conditional-effects",
    ":disjunctive-preconditions",
    ":existential-preconditions",
    ":universal-preconditions",
    ":quantified-preconditions",
    ":fluents",
    ":numeric-fluents",
    ":object-fluents",
    ":durative-actions",
    ":durative-action",
    ":derived",
    ":derived-predicates",
    ":action-costs",
    ":metric",
    ":constraints",
    ":preferences",
    ":timed-initial-literals",
    "-",
    "=",
};

// Heads of formulas outside STRIPS conjunctions of literals.
const std::set<std::string, std::less<>> kUnsupportedHeads = {
    "forall", "exists", "when",      "or",         "imply",
    "increase", "decrease", "assign", "scale-up", "scale-down",
    ">",        "<",        ">=",     "<=",
};

const std::set<std::string, std::less<>> kSupportedRequirements = {
    ":strips", ":negative-preconditions"};

void collect_unsupported(const SExpr& expr, bool in_requirements,
                         std::vector<std::string>& tokens,
                         SourceLocation& first) {
  auto note = [&](const std::string& token, SourceLocation loc) {
    if (std::find(tokens.begin(), tokens.end(), token) == tokens.end()) {
      if (tokens.empty()) first = loc;
      tokens.push_back(token);
    }
  };
  if (expr.is_atom()) {
    if (kUnsupportedKeywords.contains(expr.atom) ||
        (in_requirements && !kSupportedRequirements.contains(expr.atom))) {
      note(expr.atom, expr.loc);
    }
    return;
  }
  if (!expr.items.empty() && expr.items.front().is_atom() &&
      kUnsupportedHeads.contains(expr.items.front().atom)) {
    note(expr.items.front().atom, expr.items.front().loc);
  }
  bool requirements = expr.has_head(":requirements");
  for (std::size_t i = 0; i < expr.items.size(); ++i) {
    collect_unsupported(expr.items[i], requirements && i > 0, tokens, first);
  }
}

void reject_unsupported(const SExpr& doc) {
  std::vector<std::string> tokens;
  SourceLocation first;
  collect_unsupported(doc, false, tokens, first);
  if (!tokens.empty()) throw UnsupportedFeature(std::move(tokens), first);
}

std::string quote(std::string_view s) { return "'" + std::string(s) + "'"; }

const std::string& expect_atom(const SExpr& e, std::string_view what) {
  if (!e.is_atom()) throw SyntaxError("expected " + std::string(what), e.loc);
  return e.atom;
}

// Checks `(define (KIND name) ...)` and returns the name.
std::string read_header(const SExpr& doc, std::string_view kind) {
  if (!doc.has_head("define") || doc.items.size() < 2) {
    throw SyntaxError("expected (define (" + std::string(kind) + " ...) ...)",
                      doc.loc);
  }
  const SExpr& head = doc.items[1];
  if (!head.has_head(kind) || head.items.size() != 2) {
    throw SyntaxError("expected (" + std::string(kind) + " <name>)", head.loc);
  }
  return expect_atom(head.items[1], std::string(kind) + " name");
}

// Flattens nested `and` conjunctions into `out`, keeping file order.
void flatten_conjunction(const SExpr& e, std::vector<const SExpr*>& out) {
  if (e.is_atom()) throw SyntaxError("expected a literal or (and ...)", e.loc);
  if (e.items.empty()) return;
  if (e.has_head("and")) {
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      flatten_conjunction(e.items[i], out);
    }
    return;
  }
  out.push_back(&e);
}

struct RawLiteral {
  bool negated = false;
  std::string predicate;
  std::vector<std::string> args;
  SourceLocation loc;
};

RawLiteral read_raw_literal(const SExpr& e) {
  RawLiteral lit;
  lit.loc = e.loc;
  const SExpr* atom_list = &e;
  if (e.has_head("not")) {
    if (e.items.size() != 2 || !e.items[1].is_list) {
      throw SyntaxError("expected (not (<predicate> ...))", e.loc);
    }
    lit.negated = true;
    atom_list = &e.items[1];
    if (atom_list->has_head("not")) {
      throw SyntaxError("double negation is not STRIPS", atom_list->loc);
    }
  }
  if (atom_list->items.empty()) {
    throw SyntaxError("empty literal", atom_list->loc);
  }
  lit.predicate = expect_atom(atom_list->items[0], "predicate name");
  for (std::size_t i = 1; i < atom_list->items.size(); ++i) {
    lit.args.push_back(expect_atom(atom_list->items[i], "term"));
  }
  return lit;
}

const PredicateSchema& check_predicate(const DomainModel& domain,
                                       const RawLiteral& lit) {
  const PredicateSchema* pred = domain.find_predicate(lit.predicate);
  if (pred == nullptr) {
    throw SemanticError("undeclared predicate " + quote(lit.predicate),
                        lit.loc);
  }
  if (pred->arity() != lit.args.size()) {
    throw SemanticError("arity mismatch: " + lit.predicate + " expects " +
                            std::to_string(pred->arity()) + " args, got " +
                            std::to_string(lit.args.size()),
                        lit.loc);
  }
  return *pred;
}

std::string strip_variable(const SExpr& e) {
  const std::string& a = expect_atom(e, "parameter");
  if (a.size() < 2 || a.front() != '?') {
    throw SyntaxError("expected ?variable, got " + quote(a), e.loc);
  }
  return a.substr(1);
}

std::vector<std::string> read_variables(const SExpr& list,
                                        std::string_view what) {
  if (!list.is_list) throw SyntaxError("expected parameter list", list.loc);
  std::vector<std::string> out;
  for (const auto& item : list.items) {
    std::string name = strip_variable(item);
    if (std::find(out.begin(), out.end(), name) != out.end()) {
      throw SemanticError(
          "duplicate " + std::string(what) + " parameter ?" + name, item.loc);
    }
    out.push_back(std::move(name));
  }
  return out;
}

PredicateSchema read_predicate(const SExpr& e) {
  if (!e.is_list || e.items.empty()) {
    throw SyntaxError("expected (<predicate> ?params...)", e.loc);
  }
  PredicateSchema pred;
  pred.name = expect_atom(e.items[0], "predicate name");
  SExpr params;
  params.is_list = true;
  params.loc = e.loc;
  params.items.assign(e.items.begin() + 1, e.items.end());
  pred.param_names = read_variables(params, "predicate");
  return pred;
}

std::vector<LiteralTemplate> read_templates(const SExpr& formula,
                                            const DomainModel& domain,
                                            const ActionSchema& action,
                                            std::string_view section) {
  std::vector<const SExpr*> parts;
  flatten_conjunction(formula, parts);
  std::vector<LiteralTemplate> out;
  for (const SExpr* part : parts) {
    RawLiteral raw = read_raw_literal(*part);
    check_predicate(domain, raw);
    LiteralTemplate tmpl{raw.negated, raw.predicate, {}};
    for (std::size_t i = 0; i < raw.args.size(); ++i) {
      const std::string& arg = raw.args[i];
      if (arg.empty() || arg.front() != '?') {
        throw SemanticError("constant " + quote(arg) + " in action " +
                                action.name + " (only parameters allowed)",
                            raw.loc);
      }
      std::string name = arg.substr(1);
      if (std::find(action.params.begin(), action.params.end(), name) ==
          action.params.end()) {
        throw SemanticError("undeclared parameter ?" + name + " in action " +
                                action.name,
                            raw.loc);
      }
      tmpl.args.push_back(std::move(name));
    }
    if (std::find(out.begin(), out.end(), tmpl) != out.end()) {
      throw SemanticError("duplicate literal " + tmpl.str() + " in " +
                              std::string(section) + " of " + action.name,
                          raw.loc);
    }
    out.push_back(std::move(tmpl));
  }
  return out;
}

ActionSchema read_action(const SExpr& e, const DomainModel& domain) {
  if (e.items.size() < 2) throw SyntaxError("action without a name", e.loc);
  ActionSchema action;
  action.name = expect_atom(e.items[1], "action name");
  const SExpr* precondition = nullptr;
  const SExpr* effect = nullptr;
  for (std::size_t i = 2; i < e.items.size(); i += 2) {
    const std::string& key = expect_atom(e.items[i], "action keyword");
    if (i + 1 >= e.items.size()) {
      throw SyntaxError("missing value after " + key, e.items[i].loc);
    }
    const SExpr& value = e.items[i + 1];
    if (key == ":parameters") {
      action.params = read_variables(value, "action");
    } else if (key == ":precondition") {
      precondition = &value;
    } else if (key == ":effect") {
      effect = &value;
    } else {
      throw SyntaxError("unknown action keyword " + quote(key), e.items[i].loc);
    }
  }
  if (precondition) {
    action.preconditions =
        read_templates(*precondition, domain, action, "precondition");
  }
  if (effect) {
    action.effects = read_templates(*effect, domain, action, "effect");
  }
  for (const auto& p : action.preconditions) {
    if (!p.negated) continue;
    LiteralTemplate twin = p;
    twin.negated = false;
    if (std::find(action.preconditions.begin(), action.preconditions.end(),
                  twin) != action.preconditions.end()) {
      throw SemanticError("contradictory precondition " + p.str() + " in " +
                              action.name,
                          precondition->loc);
    }
  }
  return action;
}

GroundLiteral read_ground(const SExpr& e, const DomainModel& domain,
                          const std::vector<std::string>& objects) {
  RawLiteral raw = read_raw_literal(e);
  check_predicate(domain, raw);
  for (const auto& arg : raw.args) {
    if (std::find(objects.begin(), objects.end(), arg) == objects.end()) {
      throw SemanticError("undeclared object " + quote(arg), raw.loc);
    }
  }
  return GroundLiteral{raw.negated, raw.predicate, raw.args};
}

std::string trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

void print_template(std::ostream& os, const LiteralTemplate& t) {
  if (t.negated) os << "(not ";
  os << '(' << t.predicate;
  for (const auto& a : t.args) os << " ?" << a;
  os << ')';
  if (t.negated) os << ')';
}

void print_ground(std::ostream& os, const GroundLiteral& l) {
  if (l.negated) os << "(not ";
  os << '(' << l.predicate;
  for (const auto& a : l.args) os << ' ' << a;
  os << ')';
  if (l.negated) os << ')';
}

template <typename T, typename Print>
void print_conjunction(std::ostream& os, const std::vector<T>& items,
                       Print print) {
  os << "(and";
  for (const auto& item : items) {
    os << ' ';
    print(os, item);
  }
  os << ')';
}

}  // namespace

std::string LiteralTemplate::str() const {
  std::string out = negated ? "¬(" : "(";
  out += predicate;
  for (const auto& a : args) out += " ?" + a;
  return out + ")";
}

std::string PlanStep::str() const {
  std::string out = action;
  for (const auto& a : args) out += " " + a;
  return out;
}

const PredicateSchema* DomainModel::find_predicate(
    std::string_view predicate) const {
  auto it = std::find_if(predicates.begin(), predicates.end(),
                         [&](const auto& p) { return p.name == predicate; });
  return it == predicates.end() ? nullptr : &*it;
}

const ActionSchema* DomainModel::find_action(std::string_view action) const {
  auto it = std::find_if(actions.begin(), actions.end(),
                         [&](const auto& a) { return a.name == action; });
  return it == actions.end() ? nullptr : &*it;
}

DomainModel parse_domain(std::string_view text) {
  SExpr doc = parse_single_sexpr(text);
  reject_unsupported(doc);
  DomainModel domain;
  domain.name = read_header(doc, "domain");

  std::vector<const SExpr*> action_exprs;
  for (std::size_t i = 2; i < doc.items.size(); ++i) {
    const SExpr& section = doc.items[i];
    if (section.has_head(":requirements")) continue;
    if (section.has_head(":predicates")) {
      for (std::size_t j = 1; j < section.items.size(); ++j) {
        PredicateSchema pred = read_predicate(section.items[j]);
        if (domain.find_predicate(pred.name)) {
          throw SemanticError("duplicate predicate " + quote(pred.name),
                              section.items[j].loc);
        }
        domain.predicates.push_back(std::move(pred));
      }
    } else if (section.has_head(":action")) {
      action_exprs.push_back(&section);
    } else {
      throw SyntaxError("unknown domain section " + to_string(section),
                        section.loc);
    }
  }
  for (const SExpr* e : action_exprs) {
    ActionSchema action = read_action(*e, domain);
    if (domain.find_action(action.name)) {
      throw SemanticError("duplicate action " + quote(action.name), e->loc);
    }
    domain.actions.push_back(std::move(action));
  }
  return domain;
}

ProblemModel parse_problem(std::string_view text, const DomainModel& domain) {
  SExpr doc = parse_single_sexpr(text);
  reject_unsupported(doc);
  ProblemModel problem;
  problem.name = read_header(doc, "problem");

  const SExpr* init = nullptr;
  const SExpr* goal = nullptr;
  bool have_domain = false;
  for (std::size_t i = 2; i < doc.items.size(); ++i) {
    const SExpr& section = doc.items[i];
    if (section.has_head(":domain")) {
      if (section.items.size() != 2) {
        throw SyntaxError("expected (:domain <name>)", section.loc);
      }
      problem.domain_name = expect_atom(section.items[1], "domain name");
      if (problem.domain_name != domain.name) {
        throw SemanticError("domain name mismatch: problem names " +
                                quote(problem.domain_name) +
                                ", domain file defines " + quote(domain.name),
                            section.items[1].loc);
      }
      have_domain = true;
    } else if (section.has_head(":objects")) {
      for (std::size_t j = 1; j < section.items.size(); ++j) {
        const std::string& obj = expect_atom(section.items[j], "object name");
        if (std::find(problem.objects.begin(), problem.objects.end(), obj) !=
            problem.objects.end()) {
          throw SemanticError("duplicate object " + quote(obj),
                              section.items[j].loc);
        }
        problem.objects.push_back(obj);
      }
    } else if (section.has_head(":init")) {
      init = &section;
    } else if (section.has_head(":goal")) {
      goal = &section;
    } else if (section.has_head(":requirements")) {
      continue;
    } else {
      throw SyntaxError("unknown problem section " + to_string(section),
                        section.loc);
    }
  }
  if (!have_domain) throw SemanticError("missing (:domain ...)", doc.loc);
  if (goal == nullptr) throw SemanticError("missing (:goal ...)", doc.loc);

  if (init != nullptr) {
    for (std::size_t j = 1; j < init->items.size(); ++j) {
      const SExpr& e = init->items[j];
      GroundLiteral lit = read_ground(e, domain, problem.objects);
      if (lit.negated) {
        throw SemanticError("negative init literal " + lit.str() +
                                " (closed world: list only true facts)",
                            e.loc);
      }
      if (std::find(problem.init.begin(), problem.init.end(), lit) !=
          problem.init.end()) {
        throw SemanticError("duplicate init literal " + lit.str(), e.loc);
      }
      problem.init.push_back(std::move(lit));
    }
  }

  if (goal->items.size() > 2) {
    throw SyntaxError("expected a single goal formula", goal->items[2].loc);
  }
  if (goal->items.size() == 2) {
    std::vector<const SExpr*> parts;
    flatten_conjunction(goal->items[1], parts);
    for (const SExpr* e : parts) {
      GroundLiteral lit = read_ground(*e, domain, problem.objects);
      if (std::find(problem.goal.begin(), problem.goal.end(), lit) !=
          problem.goal.end()) {
        throw SemanticError("duplicate goal literal " + lit.str(), e->loc);
      }
      problem.goal.push_back(std::move(lit));
    }
  }
  return problem;
}

Plan parse_plan(std::string_view text, const DomainModel& domain,
                const ProblemModel& problem) {
  Plan plan;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto semi = raw.find(';'); semi != std::string_view::npos) {
      raw = raw.substr(0, semi);
    }
    std::string line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    int column = static_cast<int>(raw.find_first_not_of(" \t")) + 1;

    std::vector<SExpr> tokens;
    try {
      if (line.front() == '(') {
        SExpr e = parse_single_sexpr(line);
        tokens = e.items;
      } else {
        tokens = parse_sexprs(line);
      }
    } catch (const SyntaxError& err) {
      throw SyntaxError(err.what(),
                        {line_no, column + err.location().column - 1});
    }
    if (tokens.empty()) {
      throw SyntaxError("empty plan step", {line_no, column});
    }
    PlanStep step;
    step.line = line_no;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].is_list) {
        throw SyntaxError("unexpected nested list in plan step",
                          {line_no, column + tokens[i].loc.column - 1});
      }
      if (i == 0) {
        step.action = tokens[i].atom;
      } else {
        step.args.push_back(tokens[i].atom);
      }
    }
    const ActionSchema* schema = domain.find_action(step.action);
    if (schema == nullptr) {
      throw SemanticError("unknown action " + quote(step.action),
                          {line_no, column});
    }
    if (schema->params.size() != step.args.size()) {
      std::size_t n = schema->params.size();
      throw SemanticError("arity: " + step.action + " expects " +
                              std::to_string(n) + (n == 1 ? " arg" : " args") +
                              ", got " + std::to_string(step.args.size()),
                          {line_no, column});
    }
    for (const auto& arg : step.args) {
      if (std::find(problem.objects.begin(), problem.objects.end(), arg) ==
          problem.objects.end()) {
        throw SemanticError("unknown object " + quote(arg), {line_no, column});
      }
    }
    plan.steps.push_back(std::move(step));
    if (end == text.size()) break;
  }
  return plan;
}

std::string to_pddl(const DomainModel& domain) {
  std::ostringstream os;
  os << "(define (domain " << domain.name << ")\n";
  os << "  (:requirements :strips)\n";
  os << "  (:predicates";
  for (const auto& p : domain.predicates) {
    os << " (" << p.name;
    for (const auto& param : p.param_names) os << " ?" << param;
    os << ')';
  }
  os << ")";
  for (const auto& a : domain.actions) {
    os << "\n  (:action " << a.name << "\n    :parameters (";
    for (std::size_t i = 0; i < a.params.size(); ++i) {
      os << (i ? " ?" : "?") << a.params[i];
    }
    os << ")\n    :precondition ";
    print_conjunction(os, a.preconditions, print_template);
    os << "\n    :effect ";
    print_conjunction(os, a.effects, print_template);
    os << ")";
  }
  os << ")\n";
  return os.str();
}

std::string to_pddl(const ProblemModel& problem) {
  std::ostringstream os;
  os << "(define (problem " << problem.name << ")\n";
  os << "  (:domain " << problem.domain_name << ")\n";
  os << "  (:objects";
  for (const auto& o : problem.objects) os << ' ' << o;
  os << ")\n  (:init";
  for (const auto& l : problem.init) {
    os << ' ';
    print_ground(os, l);
  }
  os << ")\n  (:goal ";
  print_conjunction(os, problem.goal, print_ground);
  os << "))\n";
  return os.str();
}

}  // namespace plan_strings
