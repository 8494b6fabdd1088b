#include "plan_strings/smc.h"

#include <algorithm>
#include <functional>
#include <numeric>

namespace plan_strings {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::size_t first_difference(const Labels& a, const Labels& b) {
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return static_cast<std::size_t>(ia - a.begin());
}

void check_boundary(const Labels& upper, const Labels& lower) {
  if (upper != lower) {
    throw CompositionMismatch(upper, lower, first_difference(upper, lower));
  }
}

}  // namespace

std::string BoxCell::title() const {
  std::string out = name;
  for (const auto& a : args) out += " " + a;
  return out;
}

Labels cell_dom(const Cell& cell) {
  return std::visit(
      Overloaded{[](const BoxCell& b) { return b.dom; },
                 [](const IdCell& c) { return Labels{c.label}; },
                 [](const SwapCell& s) { return Labels{s.left, s.right}; }},
      cell);
}

Labels cell_cod(const Cell& cell) {
  return std::visit(
      Overloaded{[](const BoxCell& b) { return b.cod; },
                 [](const IdCell& c) { return Labels{c.label}; },
                 [](const SwapCell& s) { return Labels{s.right, s.left}; }},
      cell);
}

Labels Slice::dom() const {
  Labels out;
  for (const auto& c : cells) {
    auto d = cell_dom(c);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

Labels Slice::cod() const {
  Labels out;
  for (const auto& c : cells) {
    auto d = cell_cod(c);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

CompositionMismatch::CompositionMismatch(Labels upper_cod, Labels lower_dom,
                                         std::size_t position)
    : Error("composition mismatch at wire " + std::to_string(position) +
            ": upper codomain [" + join_labels(upper_cod) +
            "] vs lower domain [" + join_labels(lower_dom) + "]"),
      upper_cod_(std::move(upper_cod)),
      lower_dom_(std::move(lower_dom)),
      position_(position) {}

Diagram::Diagram(Slice slice) { slices_.push_back(std::move(slice)); }

Diagram Diagram::from_slices(std::vector<Slice> slices) {
  Diagram d;
  for (auto& s : slices) d.append(std::move(s));
  return d;
}

Diagram Diagram::identity(const Labels& wires) {
  Slice s;
  for (const auto& w : wires) s.cells.emplace_back(IdCell{w});
  return Diagram(std::move(s));
}

Labels Diagram::dom() const {
  return slices_.empty() ? Labels{} : slices_.front().dom();
}

Labels Diagram::cod() const {
  return slices_.empty() ? Labels{} : slices_.back().cod();
}

void Diagram::append(Slice slice) {
  if (!slices_.empty()) check_boundary(slices_.back().cod(), slice.dom());
  slices_.push_back(std::move(slice));
}

Slice tensor(const Slice& a, const Slice& b) {
  Slice out = a;
  out.cells.insert(out.cells.end(), b.cells.begin(), b.cells.end());
  return out;
}

Diagram compose(const Diagram& upper, const Diagram& lower) {
  if (upper.empty()) return lower;
  if (lower.empty()) return upper;
  check_boundary(upper.cod(), lower.dom());
  Diagram out = upper;
  for (const auto& s : lower.slices()) out.append(s);
  return out;
}

Diagram whisker(const Diagram& d, const Labels& left, const Labels& right) {
  Slice l, r;
  for (const auto& w : left) l.cells.emplace_back(IdCell{w});
  for (const auto& w : right) r.cells.emplace_back(IdCell{w});
  std::vector<Slice> out;
  for (const auto& s : d.slices()) out.push_back(tensor(tensor(l, s), r));
  return Diagram::from_slices(std::move(out));
}

Slice swap_slice(const Labels& wires, std::size_t position) {
  if (position + 1 >= wires.size()) {
    throw RangeError("swap position " + std::to_string(position) +
                     " out of range for " + std::to_string(wires.size()) +
                     " wires");
  }
  Slice s;
  for (std::size_t i = 0; i < position; ++i) s.cells.emplace_back(IdCell{wires[i]});
  s.cells.emplace_back(SwapCell{wires[position], wires[position + 1]});
  for (std::size_t i = position + 2; i < wires.size(); ++i) {
    s.cells.emplace_back(IdCell{wires[i]});
  }
  return s;
}

std::vector<Slice> permutation_to_swaps(const Labels& current,
                                        const Labels& target) {
  if (!multiset_equal(current, target)) {
    throw NotAPermutation("[" + join_labels(current) + "] is not a permutation of [" +
                          join_labels(target) + "]");
  }
  // rank[i] = index in `target` of current[i]; the k-th occurrence of a
  // label maps to its k-th occurrence in target.
  const std::size_t n = current.size();
  std::vector<std::size_t> rank(n);
  std::vector<bool> taken(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!taken[j] && target[j] == current[i]) {
        taken[j] = true;
        rank[i] = j;
        break;
      }
    }
  }

  std::vector<Slice> out;
  Labels wires = current;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (rank[i] > rank[i + 1]) {
        out.push_back(swap_slice(wires, i));
        std::swap(rank[i], rank[i + 1]);
        std::swap(wires[i], wires[i + 1]);
        swapped = true;
      }
    }
  }
  return out;
}

PortGraph port_graph(const Diagram& d) {
  struct Source {
    std::size_t node;
    std::size_t port;
  };
  PortGraph g;
  g.nodes.resize(2);
  g.top = d.dom();
  g.bottom = d.cod();

  std::vector<Source> live;
  for (std::size_t i = 0; i < g.top.size(); ++i) live.push_back({PortGraph::kTop, i});

  for (std::size_t si = 0; si < d.slices().size(); ++si) {
    const Slice& slice = d.slices()[si];
    std::vector<Source> next;
    std::size_t pos = 0;
    for (std::size_t ci = 0; ci < slice.cells.size(); ++ci) {
      const Cell& cell = slice.cells[ci];
      if (std::holds_alternative<IdCell>(cell)) {
        next.push_back(live[pos++]);
      } else if (std::holds_alternative<SwapCell>(cell)) {
        next.push_back(live[pos + 1]);
        next.push_back(live[pos]);
        pos += 2;
      } else {
        const BoxCell& box = std::get<BoxCell>(cell);
        std::size_t id = g.nodes.size();
        g.nodes.push_back({box, si, ci});
        for (std::size_t p = 0; p < box.dom.size(); ++p) {
          const Source& src = live[pos++];
          g.edges.push_back({src.node, src.port, id, p, box.dom[p]});
        }
        for (std::size_t p = 0; p < box.cod.size(); ++p) next.push_back({id, p});
      }
    }
    live = std::move(next);
  }
  for (std::size_t i = 0; i < live.size(); ++i) {
    g.edges.push_back(
        {live[i].node, live[i].port, PortGraph::kBottom, i, g.bottom[i]});
  }
  return g;
}

namespace {

struct IndexedGraph {
  PortGraph graph;
  // in_edge[node][port] -> index into graph.edges
  std::vector<std::vector<std::size_t>> in_edge;

  explicit IndexedGraph(PortGraph g) : graph(std::move(g)) {
    in_edge.resize(graph.nodes.size());
    for (std::size_t n = 0; n < graph.nodes.size(); ++n) {
      std::size_t ports = n == PortGraph::kBottom ? graph.bottom.size()
                          : graph.nodes[n].box    ? graph.nodes[n].box->dom.size()
                                                  : 0;
      in_edge[n].assign(ports, 0);
    }
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
      const auto& edge = graph.edges[e];
      in_edge[edge.target][edge.target_port] = e;
    }
  }
};

bool same_shape(const BoxCell& a, const BoxCell& b) {
  return a.name == b.name && a.args == b.args && a.dom == b.dom &&
         a.cod == b.cod;
}

}  // namespace

bool equivalent(const Diagram& a, const Diagram& b) {
  IndexedGraph ga(port_graph(a));
  IndexedGraph gb(port_graph(b));
  if (ga.graph.top != gb.graph.top || ga.graph.bottom != gb.graph.bottom ||
      ga.graph.nodes.size() != gb.graph.nodes.size()) {
    return false;
  }
  const std::size_t n = ga.graph.nodes.size();
  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  map[PortGraph::kTop] = PortGraph::kTop;
  map[PortGraph::kBottom] = PortGraph::kBottom;
  used[PortGraph::kTop] = used[PortGraph::kBottom] = true;

  // Every input port carries exactly one edge, so checking the incoming
  // edges of each mapped node checks the whole edge set.
  auto inputs_match = [&](std::size_t na, std::size_t nb) {
    const auto& ins_a = ga.in_edge[na];
    const auto& ins_b = gb.in_edge[nb];
    if (ins_a.size() != ins_b.size()) return false;
    for (std::size_t p = 0; p < ins_a.size(); ++p) {
      const auto& ea = ga.graph.edges[ins_a[p]];
      const auto& eb = gb.graph.edges[ins_b[p]];
      if (map[ea.source] != eb.source || ea.source_port != eb.source_port ||
          ea.label != eb.label) {
        return false;
      }
    }
    return true;
  };

  // Boxes of `a` in slice order: sources of every input are mapped before
  // the box itself is tried.
  std::function<bool(std::size_t)> search = [&](std::size_t na) -> bool {
    if (na == n) return inputs_match(PortGraph::kBottom, PortGraph::kBottom);
    const BoxCell& box = *ga.graph.nodes[na].box;
    for (std::size_t nb = 2; nb < n; ++nb) {
      if (used[nb] || !same_shape(box, *gb.graph.nodes[nb].box)) continue;
      map[na] = nb;
      if (inputs_match(na, nb)) {
        used[nb] = true;
        if (search(na + 1)) return true;
        used[nb] = false;
      }
      map[na] = n;
    }
    return false;
  };
  return search(2);
}

}  // namespace plan_strings
