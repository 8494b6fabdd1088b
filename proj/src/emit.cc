#include "plan_strings/emit.h"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "json.hpp"

namespace plan_strings {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Linear notation

namespace {

std::string side_text(const Labels& wires) {
  if (wires.empty()) return "I";
  return join_labels(wires, " ⊗ ");
}

std::string cell_text(const Cell& cell) {
  if (const auto* id = std::get_if<IdCell>(&cell)) {
    return "id_{" + id->label.str() + "}";
  }
  if (const auto* sw = std::get_if<SwapCell>(&cell)) {
    return "B_{" + sw->left.str() + "," + sw->right.str() + "}";
  }
  const auto& box = std::get<BoxCell>(cell);
  std::string out = "⟦" + box.title();
  if (box.step_index) out += " #" + std::to_string(*box.step_index);
  out += " : " + side_text(box.dom) + " → " + side_text(box.cod) + "⟧";
  return out;
}

}  // namespace

std::string to_linear(const Diagram& d) {
  std::string out(kLinearHeader);
  out += '\n';
  const auto& slices = d.slices();
  for (std::size_t i = 0; i < slices.size(); ++i) {
    out += '(';
    if (slices[i].cells.empty()) out += "id_I";
    for (std::size_t c = 0; c < slices[i].cells.size(); ++c) {
      if (c) out += " ⊗ ";
      out += cell_text(slices[i].cells[c]);
    }
    out += ')';
    if (i + 1 < slices.size()) out += " ∘";
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// DOT

namespace {

std::string box_signature(const BoxCell& b) {
  return b.title() + "|" + join_labels(b.dom) + "|" + join_labels(b.cod);
}

// Canonical node numbering of a port graph. Neighbours are visited by port
// index, which an isomorphism fixing the boundaries preserves, so the order
// depends only on the graph up to isomorphism. Components not attached to a
// boundary start from their smallest box; ties are broken by trying every
// candidate root and keeping the smallest serialization.
class CanonicalOrder {
 public:
  explicit CanonicalOrder(const PortGraph& g) : g_(g), ord_(g.nodes.size(), kNone) {
    const std::size_t n = g.nodes.size();
    neighbours_.resize(n);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> ins(n), outs(n);
    for (const auto& e : g.edges) {
      ins[e.target].push_back({e.target_port, e.source});
      outs[e.source].push_back({e.source_port, e.target});
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(ins[v].begin(), ins[v].end());
      std::sort(outs[v].begin(), outs[v].end());
      for (auto& [port, u] : ins[v]) neighbours_[v].push_back(u);
      for (auto& [port, u] : outs[v]) neighbours_[v].push_back(u);
    }

    std::size_t next = 0;
    std::vector<std::size_t> seq = bfs({PortGraph::kTop, PortGraph::kBottom}, ord_);
    for (auto v : seq) ord_[v] = next++;

    // Remaining components.
    std::vector<std::pair<std::string, std::vector<std::size_t>>> comps;
    std::vector<std::size_t> seen = ord_;
    for (std::size_t v = 2; v < n; ++v) {
      if (seen[v] != kNone) continue;
      std::vector<std::size_t> members = bfs({v}, seen);
      for (auto m : members) seen[m] = 0;
      std::string best_sig;
      for (auto m : members) {
        std::string s = box_signature(*g.nodes[m].box);
        if (best_sig.empty() || s < best_sig) best_sig = s;
      }
      std::string best;
      std::vector<std::size_t> best_seq;
      for (auto m : members) {
        if (box_signature(*g.nodes[m].box) != best_sig) continue;
        std::vector<std::size_t> cand = bfs({m}, ord_);
        std::string ser = serialize(cand);
        if (best_seq.empty() || ser < best) {
          best = std::move(ser);
          best_seq = std::move(cand);
        }
      }
      comps.emplace_back(std::move(best), std::move(best_seq));
    }
    std::sort(comps.begin(), comps.end());
    for (auto& [ser, members] : comps) {
      for (auto v : members) ord_[v] = next++;
    }
  }

  std::size_t operator[](std::size_t node) const { return ord_[node]; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<std::size_t> bfs(std::vector<std::size_t> roots,
                               const std::vector<std::size_t>& blocked) const {
    std::vector<bool> seen(g_.nodes.size(), false);
    for (std::size_t v = 0; v < blocked.size(); ++v) seen[v] = blocked[v] != kNone;
    std::vector<std::size_t> seq;
    std::deque<std::size_t> queue;
    for (auto r : roots) {
      if (seen[r]) continue;
      seen[r] = true;
      queue.push_back(r);
      while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        seq.push_back(v);
        for (auto u : neighbours_[v]) {
          if (!seen[u]) {
            seen[u] = true;
            queue.push_back(u);
          }
        }
      }
    }
    return seq;
  }

  std::string serialize(const std::vector<std::size_t>& seq) const {
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < seq.size(); ++i) local[seq[i]] = i;
    std::ostringstream os;
    for (auto v : seq) os << box_signature(*g_.nodes[v].box) << ';';
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> es;
    for (const auto& e : g_.edges) {
      if (local.contains(e.source)) {
        es.emplace_back(local[e.source], e.source_port, local[e.target],
                        e.target_port);
      }
    }
    std::sort(es.begin(), es.end());
    for (auto& [a, b, c, d] : es) os << a << ':' << b << '>' << c << ':' << d << ';';
    return os.str();
  }

  const PortGraph& g_;
  std::vector<std::size_t> ord_;
  std::vector<std::vector<std::size_t>> neighbours_;
};

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string node_id(const PortGraph& g, const CanonicalOrder& order,
                    std::size_t v) {
  if (v == PortGraph::kTop) return "top";
  if (v == PortGraph::kBottom) return "bottom";
  (void)g;
  return "n" + std::to_string(order[v]);
}

}  // namespace

std::string to_dot(const Diagram& d, const WeaveReport* report) {
  PortGraph g = port_graph(d);
  CanonicalOrder order(g);

  std::vector<std::size_t> boxes;
  for (std::size_t v = 2; v < g.nodes.size(); ++v) boxes.push_back(v);
  std::sort(boxes.begin(), boxes.end(),
            [&](auto a, auto b) { return order[a] < order[b]; });

  std::ostringstream os;
  os << "digraph plan {\n";
  os << "  rankdir=TB;\n";
  os << "  node [fontname=\"Helvetica\"];\n";
  os << "  edge [fontname=\"Helvetica\", fontsize=10];\n";
  if (!g.top.empty()) os << "  top [shape=point];\n";
  if (!g.bottom.empty()) os << "  bottom [shape=point];\n";
  for (auto v : boxes) {
    const BoxCell& box = *g.nodes[v].box;
    const char* shape = "box";
    if (!box.step_index && box.name == kInitBoxName && box.dom.empty()) {
      shape = "invhouse";
    } else if (!box.step_index && box.name == kGoalBoxName && box.cod.empty()) {
      shape = "house";
    }
    os << "  " << node_id(g, order, v) << " [shape=" << shape << ", label=\""
       << dot_escape(box.title()) << "\"];\n";
  }

  std::vector<const PortGraph::Edge*> edges;
  for (const auto& e : g.edges) edges.push_back(&e);
  auto key = [&](const PortGraph::Edge* e) {
    auto rank = [&](std::size_t v) {
      return v == PortGraph::kTop ? 0 : v == PortGraph::kBottom ? 1 : order[v] + 2;
    };
    return std::make_tuple(rank(e->source), e->source_port, rank(e->target),
                           e->target_port);
  };
  std::sort(edges.begin(), edges.end(),
            [&](auto a, auto b) { return key(a) < key(b); });

  for (const auto* e : edges) {
    os << "  " << node_id(g, order, e->source) << " -> "
       << node_id(g, order, e->target) << " [label=\""
       << dot_escape(e->label.str()) << "\"";
    if (report) {
      const auto& src = g.nodes[e->source].box;
      const auto& dst = g.nodes[e->target].box;
      if (src && !src->step_index && src->name == kInitBoxName &&
          e->source_port + report->implicit_assumptions.size() >=
              src->cod.size()) {
        os << ", color=\"red\"";
      }
      if (dst && !dst->step_index && dst->name == kGoalBoxName &&
          e->target_port + report->surplus_outputs.size() >= dst->dom.size()) {
        os << ", style=\"dashed\"";
      }
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const WovenPlan& w) { return to_dot(w.diagram, &w.report); }

// ---------------------------------------------------------------------------
// JSON

namespace {

json literal_json(const GroundLiteral& l) {
  return json{{"neg", l.negated}, {"pred", l.predicate}, {"args", l.args}};
}

json labels_json(const Labels& labels) {
  json arr = json::array();
  for (const auto& l : labels) arr.push_back(literal_json(l));
  return arr;
}

json cell_json(const Cell& cell) {
  json j;
  if (const auto* box = std::get_if<BoxCell>(&cell)) {
    j["kind"] = "box";
    j["name"] = box->name;
    j["args"] = box->args;
    if (box->step_index) j["step"] = *box->step_index;
  } else if (std::holds_alternative<IdCell>(cell)) {
    j["kind"] = "id";
  } else {
    j["kind"] = "swap";
  }
  j["dom"] = labels_json(cell_dom(cell));
  j["cod"] = labels_json(cell_cod(cell));
  return j;
}

class JsonReader {
 public:
  const json& field(const json& obj, const std::string& path,
                    const std::string& key) const {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(path + "/" + key, "missing field");
    return *it;
  }

  std::string string(const json& j, const std::string& path) const {
    if (!j.is_string()) throw SchemaError(path, "expected a string");
    return j.get<std::string>();
  }

  int integer(const json& j, const std::string& path) const {
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
    return j.get<int>();
  }

  std::size_t index(const json& j, const std::string& path) const {
    if (!j.is_number_unsigned()) {
      throw SchemaError(path, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
  }

  const json& array(const json& j, const std::string& path) const {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    return j;
  }

  std::vector<std::string> strings(const json& j, const std::string& path) const {
    std::vector<std::string> out;
    const json& arr = array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      out.push_back(string(arr[i], path + "/" + std::to_string(i)));
    }
    return out;
  }

  GroundLiteral literal(const json& j, const std::string& path) const {
    GroundLiteral l;
    const json& neg = field(j, path, "neg");
    if (!neg.is_boolean()) throw SchemaError(path + "/neg", "expected a boolean");
    l.negated = neg.get<bool>();
    l.predicate = string(field(j, path, "pred"), path + "/pred");
    if (l.predicate.empty()) throw SchemaError(path + "/pred", "empty predicate");
    l.args = strings(field(j, path, "args"), path + "/args");
    return l;
  }

  Labels labels(const json& j, const std::string& path) const {
    Labels out;
    const json& arr = array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      out.push_back(literal(arr[i], path + "/" + std::to_string(i)));
    }
    return out;
  }

  Cell cell(const json& j, const std::string& path) const {
    std::string kind = string(field(j, path, "kind"), path + "/kind");
    Labels dom = labels(field(j, path, "dom"), path + "/dom");
    Labels cod = labels(field(j, path, "cod"), path + "/cod");
    if (kind == "box") {
      BoxCell box;
      box.name = string(field(j, path, "name"), path + "/name");
      box.args = strings(field(j, path, "args"), path + "/args");
      if (j.contains("step")) box.step_index = integer(j["step"], path + "/step");
      box.dom = std::move(dom);
      box.cod = std::move(cod);
      return box;
    }
    if (kind == "id") {
      if (dom.size() != 1 || cod != dom) {
        throw SchemaError(path, "identity cell needs dom = cod = [label]");
      }
      return IdCell{dom[0]};
    }
    if (kind == "swap") {
      if (dom.size() != 2 || cod != Labels{dom[1], dom[0]}) {
        throw SchemaError(path, "swap cell needs dom = [x,y], cod = [y,x]");
      }
      return SwapCell{dom[0], dom[1]};
    }
    throw SchemaError(path + "/kind", "unknown cell kind '" + kind + "'");
  }
};

const BoxCell* sole_box(const Slice& s, std::string_view name) {
  if (s.cells.size() != 1) return nullptr;
  const auto* box = std::get_if<BoxCell>(&s.cells.front());
  if (!box || box->name != name || box->step_index) return nullptr;
  return box;
}

}  // namespace

std::string to_json(const WovenPlan& w) {
  json j;
  j["version"] = kJsonVersion;
  j["domain_name"] = w.domain_name;
  j["problem_name"] = w.problem_name;
  json slices = json::array();
  for (const auto& s : w.diagram.slices()) {
    json cells = json::array();
    for (const auto& c : s.cells) cells.push_back(cell_json(c));
    slices.push_back(json{{"cells", cells}});
  }
  j["slices"] = slices;

  json assumptions = json::array();
  for (const auto& a : w.report.implicit_assumptions) {
    json entry{{"literal", literal_json(a.literal)}};
    if (a.first_demanded_at) {
      entry["first_demanded_at"] = *a.first_demanded_at;
    } else {
      entry["first_demanded_at"] = "goal";
    }
    assumptions.push_back(entry);
  }
  j["report"] = json{{"assumptions", assumptions},
                     {"surplus", labels_json(w.report.surplus_outputs)},
                     {"per_step_matches", w.report.per_step_matches}};
  json steps = json::object();
  for (const auto& [step, slice] : w.step_slices) {
    steps[std::to_string(step)] = slice;
  }
  j["step_slices"] = steps;
  return j.dump(2) + "\n";
}

WovenPlan from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  JsonReader r;
  const json& version = r.field(j, "", "version");
  if (!version.is_number_integer() || version.get<int>() != kJsonVersion) {
    throw SchemaError("/version", "unsupported version " + version.dump() +
                                      ", expected " +
                                      std::to_string(kJsonVersion));
  }
  WovenPlan w;
  w.domain_name = r.string(r.field(j, "", "domain_name"), "/domain_name");
  w.problem_name = r.string(r.field(j, "", "problem_name"), "/problem_name");

  const json& slices = r.array(r.field(j, "", "slices"), "/slices");
  std::vector<Slice> parsed;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    std::string path = "/slices/" + std::to_string(i);
    const json& cells = r.array(r.field(slices[i], path, "cells"), path + "/cells");
    Slice s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s.cells.push_back(r.cell(cells[c], path + "/cells/" + std::to_string(c)));
    }
    parsed.push_back(std::move(s));
  }
  if (parsed.size() < 2 || !sole_box(parsed.front(), kInitBoxName) ||
      !sole_box(parsed.back(), kGoalBoxName)) {
    throw SchemaError("/slices", "must start with the init box and end with "
                                 "the goal box");
  }
  Diagram d;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    try {
      d.append(parsed[i]);
    } catch (const CompositionMismatch& e) {
      throw SchemaError("/slices/" + std::to_string(i), e.what());
    }
  }
  w.diagram = std::move(d);

  const json& steps = r.field(j, "", "step_slices");
  if (!steps.is_object()) throw SchemaError("/step_slices", "expected an object");
  for (const auto& [key, value] : steps.items()) {
    std::string path = "/step_slices/" + key;
    int step = 0;
    try {
      std::size_t used = 0;
      step = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw SchemaError(path, "step keys must be integers");
    }
    std::size_t slice = r.index(value, path);
    if (slice >= w.diagram.size()) throw SchemaError(path, "slice out of range");
    bool found = false;
    for (const auto& c : w.diagram.slices()[slice].cells) {
      const auto* box = std::get_if<BoxCell>(&c);
      found = found || (box && box->step_index == step);
    }
    if (!found) throw SchemaError(path, "slice holds no box for this step");
    w.step_slices[step] = slice;
  }

  const json& report = r.field(j, "", "report");
  const json& assumptions =
      r.array(r.field(report, "/report", "assumptions"), "/report/assumptions");
  for (std::size_t i = 0; i < assumptions.size(); ++i) {
    std::string path = "/report/assumptions/" + std::to_string(i);
    ImplicitAssumption a;
    a.literal = r.literal(r.field(assumptions[i], path, "literal"), path + "/literal");
    const json& at = r.field(assumptions[i], path, "first_demanded_at");
    if (at.is_string() && at.get<std::string>() == "goal") {
      a.first_demanded_at = std::nullopt;
    } else {
      a.first_demanded_at = r.integer(at, path + "/first_demanded_at");
    }
    w.report.implicit_assumptions.push_back(std::move(a));
  }
  w.report.surplus_outputs =
      r.labels(r.field(report, "/report", "surplus"), "/report/surplus");
  const json& matches = r.array(r.field(report, "/report", "per_step_matches"),
                                "/report/per_step_matches");
  for (std::size_t i = 0; i < matches.size(); ++i) {
    std::string path = "/report/per_step_matches/" + std::to_string(i);
    std::vector<std::size_t> row;
    const json& arr = r.array(matches[i], path);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      row.push_back(r.index(arr[k], path + "/" + std::to_string(k)));
    }
    w.report.per_step_matches.push_back(std::move(row));
  }

  if (w.report.implicit_assumptions.size() > w.augmented_init().size()) {
    throw SchemaError("/report/assumptions", "more assumptions than init wires");
  }
  if (w.report.surplus_outputs.size() > w.final_frontier().size()) {
    throw SchemaError("/report/surplus", "more surplus than goal wires");
  }
  return w;
}

// ---------------------------------------------------------------------------
// Tables and text reports

std::string trace_table(const std::vector<TraceRow>& rows, TableFormat format) {
  std::ostringstream os;
  const bool md = format == TableFormat::kMarkdown;
  if (md) {
    os << "| State | Satisfied Literals | Action |\n";
    os << "| --- | --- | --- |\n";
  } else {
    os << "State\tSatisfied Literals\tAction\n";
  }
  for (const auto& row : rows) {
    std::vector<bool> hl(row.literals.size(), false);
    for (auto i : row.highlighted) hl[i] = true;
    std::string cells;
    for (std::size_t i = 0; i < row.literals.size(); ++i) {
      if (i) cells += ", ";
      std::string text = row.literals[i].str();
      if (hl[i]) text = md ? "**" + text + "**" : text + "*";
      cells += text;
    }
    if (md) {
      os << "| " << row.boundary_name << " | " << cells << " | " << row.action
         << " |\n";
    } else {
      os << row.boundary_name << '\t' << cells << '\t' << row.action << '\n';
    }
  }
  return os.str();
}

std::string format_report(const WovenPlan& w) {
  std::ostringstream os;
  const auto& assumptions = w.report.implicit_assumptions;
  os << assumptions.size() << " implicit assumption"
     << (assumptions.size() == 1 ? "" : "s") << "\n";
  for (const auto& a : assumptions) {
    os << "  " << a.literal.str() << " first demanded at "
       << (a.first_demanded_at ? "step " + std::to_string(*a.first_demanded_at)
                               : std::string("goal"))
       << "\n";
  }
  const auto& surplus = w.report.surplus_outputs;
  os << surplus.size() << " surplus output" << (surplus.size() == 1 ? "" : "s")
     << "\n";
  for (const auto& l : surplus) os << "  " << l.str() << "\n";
  return os.str();
}

std::string format_dependencies(const std::vector<DependencyEdge>& edges) {
  std::string out;
  for (const auto& e : edges) out += e.str() + "\n";
  return out;
}

std::string format_compat(const CompatReport& r) {
  std::ostringstream os;
  os << (r.composable ? "composable" : "not composable")
     << (r.strict ? " (strict)" : "") << "\n";
  os << "missing: " << r.missing.size() << "\n";
  for (const auto& l : r.missing) os << "  " << l.str() << "\n";
  os << "surplus: " << r.surplus.size() << "\n";
  for (const auto& l : r.surplus) os << "  " << l.str() << "\n";
  return os.str();
}

}  // namespace plan_strings
