#include "snarklab/reductions.hpp"

#include <algorithm>
#include <functional>

#include "snarklab/circuits.hpp"
#include "snarklab/colouring.hpp"
#include "snarklab/factors.hpp"

namespace snarklab {
namespace {

using Step = std::optional<ReductionStep>;

Step next_short_circuit(const MultiGraph& g, int max_len) {
  auto c = shortest_circuit(g);
  if (!c || c->length() > max_len) return std::nullopt;
  ReductionStep s;
  s.rule = c->length() == 4 ? ReductionRule::four_circuit : ReductionRule::contract_circuit;
  s.vertices = c->vertices;
  s.edges = c->edges;
  return s;
}

MultiGraph delete_opposite_pair(const MultiGraph& g, EdgeId a, EdgeId b) {
  std::vector<EdgeId> pair{a, b};
  auto removed = remove_edges(g, pair);
  return suppress_all_degree2(removed.graph).graph;
}

// Sides of the cut: component labels after removing it, if exactly two.
std::optional<std::vector<int>> cut_sides(const MultiGraph& g, const std::vector<EdgeId>& cut) {
  auto r = remove_edges(g, cut);
  int count = 0;
  auto labels = component_labels(r.graph, &count);
  if (count != 2) return std::nullopt;
  for (EdgeId e : cut)
    if (labels[g.edge(e).u] == labels[g.edge(e).v]) return std::nullopt;
  return labels;
}

bool side_colourable(const MultiGraph& g, const std::vector<int>& labels, int side) {
  std::vector<VertexId> vs;
  for (VertexId v = 0; v < g.order(); ++v)
    if (labels[v] == side) vs.push_back(v);
  return is_colourable(induced_subgraph(g, vs).graph);
}

// All edge cuts of the given size (2 or 3) that split g into two parts, each
// reported once with its edges sorted, in lexicographic order.
std::vector<std::vector<EdgeId>> small_cuts(const MultiGraph& g, int size) {
  std::vector<std::vector<EdgeId>> cuts;
  const int m = g.size();
  auto collect = [&](std::vector<EdgeId> fixed) {
    auto r = remove_edges(g, fixed);
    if (!is_connected(r.graph)) return;
    std::vector<EdgeId> back(r.graph.size());
    for (EdgeId e = 0; e < m; ++e)
      if (r.edge_map[e] != kNone) back[r.edge_map[e]] = e;
    for (EdgeId b : bridges(r.graph)) {
      EdgeId orig = back[b];
      if (orig < fixed.back()) continue;
      auto cut = fixed;
      cut.push_back(orig);
      cuts.push_back(std::move(cut));
    }
  };
  for (EdgeId e = 0; e < m; ++e) {
    if (size == 2) {
      collect({e});
    } else {
      for (EdgeId f = e + 1; f < m; ++f) collect({e, f});
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

Step next_cut(const MultiGraph& g, int size) {
  for (auto& cut : small_cuts(g, size)) {
    auto labels = cut_sides(g, cut);
    if (!labels) continue;
    int sizes[2] = {0, 0};
    for (int l : *labels) ++sizes[l];
    if (size == 3 && (sizes[0] < 2 || sizes[1] < 2)) continue;
    for (int side = 0; side < 2; ++side) {
      if (!side_colourable(g, *labels, side)) continue;
      ReductionStep s;
      s.rule = size == 2 ? ReductionRule::cut2 : ReductionRule::cut3;
      s.edges = cut;
      for (VertexId v = 0; v < g.order(); ++v)
        if ((*labels)[v] == side) s.vertices.push_back(v);
      return s;
    }
  }
  return std::nullopt;
}

MultiGraph replace_side(const MultiGraph& g, const ReductionStep& s) {
  std::vector<bool> gone(g.order(), false);
  for (VertexId v : s.vertices) gone[v] = true;
  std::vector<VertexId> ends;
  for (EdgeId e : s.edges) {
    const Edge& ed = g.edge(e);
    if (gone[ed.u] == gone[ed.v]) throw ReductionError("recorded cut does not match its side");
    ends.push_back(gone[ed.u] ? ed.v : ed.u);
  }
  auto r = remove_vertices(g, s.vertices);
  MultiGraph out = std::move(r.graph);
  if (s.rule == ReductionRule::cut2) {
    out.add_edge(r.vertex_map[ends[0]], r.vertex_map[ends[1]]);
  } else {
    VertexId x = out.add_vertex();
    for (VertexId e : ends) out.add_edge(x, r.vertex_map[e]);
  }
  return out;
}

using Finder = std::function<Step(const MultiGraph&)>;

ReductionResult run(const MultiGraph& g, const std::vector<Finder>& finders, ReductionOptions opts) {
  require_snark(g);
  ReductionResult res;
  res.graph = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& find : finders) {
      while (auto step = find(res.graph)) {
        step->order_before = res.graph.order();
        res.graph = apply_step(res.graph, *step);
        step->order_after = res.graph.order();
        res.trace.steps.push_back(std::move(*step));
        changed = true;
      }
    }
  }
  if (opts.verify_oddness && !res.trace.steps.empty()) {
    res.oddness_before = oddness(g).value;
    res.oddness_after = oddness(res.graph).value;
    if (res.oddness_before != res.oddness_after)
      throw ReductionError("reduction changed the oddness from " + std::to_string(*res.oddness_before) +
                           " to " + std::to_string(res.oddness_after.value_or(-1)));
  }
  return res;
}

Step girth4_step(const MultiGraph& g) { return next_short_circuit(g, 3); }

Step girth5_step(const MultiGraph& g) {
  auto s = next_short_circuit(g, 4);
  if (!s || s->rule != ReductionRule::four_circuit) return s;
  // Keep the two opposite edges that are deleted; try both pairs.
  const auto& e = s->edges;
  for (auto pair : {std::pair{e[0], e[2]}, std::pair{e[1], e[3]}}) {
    try {
      if (is_two_edge_connected(delete_opposite_pair(g, pair.first, pair.second))) {
        s->edges = {pair.first, pair.second};
        return s;
      }
    } catch (const GraphError&) {
    }
  }
  throw ReductionError("neither opposite-edge pair of the 4-circuit through vertex " +
                       std::to_string(s->vertices[0]) + " leaves a 2-connected graph");
}

Step cut2_step(const MultiGraph& g) { return next_cut(g, 2); }
Step cut3_step(const MultiGraph& g) { return next_cut(g, 3); }

}  // namespace

std::string to_string(ReductionRule r) {
  switch (r) {
    case ReductionRule::contract_circuit: return "contract-circuit";
    case ReductionRule::four_circuit: return "4-circuit";
    case ReductionRule::cut2: return "2-cut";
    case ReductionRule::cut3: return "3-cut";
  }
  return "?";
}

void require_snark(const MultiGraph& g) {
  if (!g.is_cubic()) throw ReductionError("input is not cubic");
  if (!is_two_edge_connected(g)) throw ReductionError("input is not 2-connected");
  if (is_colourable(g)) throw ReductionError("input is 3-edge-colourable");
}

MultiGraph apply_step(const MultiGraph& g, const ReductionStep& s) {
  switch (s.rule) {
    case ReductionRule::contract_circuit:
      return contract_vertex_set(g, s.vertices).graph;
    case ReductionRule::four_circuit:
      return delete_opposite_pair(g, s.edges.at(0), s.edges.at(1));
    case ReductionRule::cut2:
    case ReductionRule::cut3:
      return replace_side(g, s);
  }
  throw ReductionError("unknown reduction rule");
}

MultiGraph replay(const MultiGraph& g, const ReductionTrace& trace) {
  MultiGraph cur = g;
  for (const auto& s : trace.steps) cur = apply_step(cur, s);
  return cur;
}

ReductionResult reduce_to_girth4(const MultiGraph& g, ReductionOptions opts) {
  return run(g, {girth4_step}, opts);
}

ReductionResult reduce_to_girth5(const MultiGraph& g, ReductionOptions opts) {
  return run(g, {girth4_step, girth5_step}, opts);
}

ReductionResult reduce_2cuts(const MultiGraph& g, ReductionOptions opts) { return run(g, {cut2_step}, opts); }

ReductionResult reduce_3cuts(const MultiGraph& g, ReductionOptions opts) { return run(g, {cut3_step}, opts); }

ReductionResult reduce_all(const MultiGraph& g, ReductionOptions opts) {
  return run(g, {girth4_step, girth5_step, cut2_step, cut3_step}, opts);
}

std::optional<std::vector<EdgeId>> cut_with_colourable_side(const MultiGraph& g, int size) {
  const int m = g.size();
  std::vector<EdgeId> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  if (size > m) return std::nullopt;
  while (true) {
    if (auto labels = cut_sides(g, pick)) {
      int side0 = static_cast<int>(std::count(labels->begin(), labels->end(), 0));
      bool trivial = size == 3 && (side0 == 1 || side0 == g.order() - 1);
      if (!trivial && (side_colourable(g, *labels, 0) || side_colourable(g, *labels, 1))) return pick;
    }
    int i = size - 1;
    while (i >= 0 && pick[i] == m - size + i) --i;
    if (i < 0) return std::nullopt;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

MultiGraph expand_to_triangle(const MultiGraph& g, VertexId v) {
  if (g.degree(v) != 3) throw GraphError("vertex " + std::to_string(v) + " does not have degree 3");
  const VertexId tri[3] = {v, g.order(), g.order() + 1};
  MultiGraph out(g.order() + 2);
  auto inc = g.incident(v);
  for (EdgeId e = 0; e < g.size(); ++e) {
    Edge ed = g.edge(e);
    for (int i = 0; i < 3; ++i)
      if (inc[i] == e) {
        if (ed.u == v)
          ed.u = tri[i];
        else
          ed.v = tri[i];
      }
    out.add_edge(ed.u, ed.v);
  }
  out.add_edge(tri[0], tri[1]);
  out.add_edge(tri[1], tri[2]);
  out.add_edge(tri[2], tri[0]);
  return out;
}

MultiGraph expand_to_square(const MultiGraph& g, EdgeId e, EdgeId f) {
  if (e == f) throw GraphError("edge " + std::to_string(e) + " given twice");
  const VertexId x1 = g.order(), x2 = x1 + 1, y1 = x1 + 2, y2 = x1 + 3;
  MultiGraph out(g.order() + 4);
  for (EdgeId k = 0; k < g.size(); ++k) {
    const Edge& ed = g.edge(k);
    if (k == e) {
      out.add_edge(ed.u, x1);
      out.add_edge(x1, x2);
      out.add_edge(x2, ed.v);
    } else if (k == f) {
      out.add_edge(ed.u, y1);
      out.add_edge(y1, y2);
      out.add_edge(y2, ed.v);
    } else {
      out.add_edge(ed.u, ed.v);
    }
  }
  out.add_edge(x1, y1);
  out.add_edge(x2, y2);
  return out;
}

MultiGraph insert_digon(const MultiGraph& g, EdgeId e) {
  const VertexId x = g.order(), y = x + 1;
  MultiGraph out(g.order() + 2);
  for (EdgeId k = 0; k < g.size(); ++k) {
    const Edge& ed = g.edge(k);
    if (k == e) {
      out.add_edge(ed.u, x);
      out.add_edge(x, y);
      out.add_edge(x, y);
      out.add_edge(y, ed.v);
    } else {
      out.add_edge(ed.u, ed.v);
    }
  }
  return out;
}

}  // namespace snarklab
