#include "snarklab/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace snarklab {

MultiGraph::MultiGraph(int order) : incidence_(order) {}

VertexId MultiGraph::add_vertex() {
  incidence_.emplace_back();
  return order() - 1;
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  EdgeId e = size();
  edges_.push_back({u, v});
  incidence_[u].push_back(e);
  incidence_[v].push_back(e);
  return e;
}

void MultiGraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= order()) throw GraphError("no such vertex " + std::to_string(v));
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
  int count = 0;
  for (EdgeId e : incidence_[u])
    if (edges_[e].other(u) == v) ++count;
  return count;
}

std::vector<VertexId> MultiGraph::neighbours(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(incidence_[v].size());
  for (EdgeId e : incidence_[v]) out.push_back(edges_[e].other(v));
  return out;
}

bool MultiGraph::is_cubic() const {
  return std::all_of(incidence_.begin(), incidence_.end(),
                     [](const auto& inc) { return inc.size() == 3; });
}

bool MultiGraph::is_simple() const {
  for (VertexId v = 0; v < order(); ++v) {
    auto nb = neighbours(v);
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
  }
  return true;
}

int MultiGraph::max_degree() const {
  int d = 0;
  for (const auto& inc : incidence_) d = std::max(d, static_cast<int>(inc.size()));
  return d;
}

// ---------------------------------------------------------------------------

bool Network::is_terminal(VertexId v) const { return terminal_index(v) != kNone; }

int Network::terminal_index(VertexId v) const {
  auto it = std::find(terminals.begin(), terminals.end(), v);
  return it == terminals.end() ? kNone : static_cast<int>(it - terminals.begin());
}

EdgeId Network::terminal_edge(int i) const {
  auto inc = graph.incident(terminals.at(i));
  if (inc.size() != 1)
    throw GraphError("terminal " + std::to_string(terminals[i]) + " does not have degree 1");
  return inc[0];
}

std::vector<EdgeId> Network::terminal_edges() const {
  std::vector<EdgeId> out;
  for (int i = 0; i < terminal_count(); ++i) out.push_back(terminal_edge(i));
  return out;
}

std::vector<VertexId> Network::nonterminals() const {
  std::vector<bool> term(graph.order(), false);
  for (VertexId t : terminals) term[t] = true;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < graph.order(); ++v)
    if (!term[v]) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Violation> validate(const MultiGraph& g) {
  std::vector<Violation> out;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (g.edge(e).u == g.edge(e).v)
      out.push_back({Violation::Kind::loop, e, "edge " + std::to_string(e) + " is a loop"});
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3)
      out.push_back({Violation::Kind::degree, v,
                     "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v))});
  return out;
}

std::vector<Violation> validate(const Network& n) {
  std::vector<Violation> out;
  const auto& g = n.graph;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (g.edge(e).u == g.edge(e).v)
      out.push_back({Violation::Kind::loop, e, "edge " + std::to_string(e) + " is a loop"});
  std::vector<int> seen(g.order(), 0);
  for (VertexId t : n.terminals) {
    if (t < 0 || t >= g.order()) {
      out.push_back({Violation::Kind::terminal, t, "terminal " + std::to_string(t) + " out of range"});
      continue;
    }
    if (seen[t]++)
      out.push_back({Violation::Kind::terminal, t, "terminal " + std::to_string(t) + " listed twice"});
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    int want = seen[v] ? 1 : 3;
    if (g.degree(v) != want)
      out.push_back({Violation::Kind::degree, v,
                     (seen[v] ? "terminal " : "vertex ") + std::to_string(v) + " has degree " +
                         std::to_string(g.degree(v))});
  }
  if (!n.connectors.empty()) {
    std::vector<int> covered(g.order(), 0);
    for (const auto& group : n.connectors)
      for (VertexId t : group) {
        if (t < 0 || t >= g.order() || !seen[t]) {
          out.push_back({Violation::Kind::connector, t,
                         "connector member " + std::to_string(t) + " is not a terminal"});
          continue;
        }
        ++covered[t];
      }
    for (VertexId t : n.terminals)
      if (t >= 0 && t < g.order() && covered[t] != 1)
        out.push_back({Violation::Kind::connector, t,
                       "terminal " + std::to_string(t) + " is in " + std::to_string(covered[t]) +
                           " connectors"});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<int> component_labels(const MultiGraph& g, int* count) {
  std::vector<int> label(g.order(), kNone);
  int c = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (label[s] != kNone) continue;
    label[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.other(e, v);
        if (label[w] == kNone) {
          label[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return label;
}

bool is_connected(const MultiGraph& g) {
  int c = 0;
  component_labels(g, &c);
  return c <= 1;
}

std::vector<EdgeId> bridges(const MultiGraph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> out;
  int timer = 0;
  // Iterative DFS; the parent is tracked by edge id so parallel edges are handled.
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    disc[s] = low[s] = timer++;
    stack.push_back({s, kNone, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        VertexId w = g.other(e, f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId p = stack.back().v;
          low[p] = std::min(low[p], low[done.v]);
          if (low[done.v] > disc[p]) out.push_back(done.via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_bridgeless(const MultiGraph& g) { return bridges(g).empty(); }

bool is_two_edge_connected(const MultiGraph& g) {
  return g.order() > 0 && is_connected(g) && is_bridgeless(g);
}

namespace {

Relabelled keep_subgraph(const MultiGraph& g, const std::vector<bool>& keep_vertex,
                         const std::vector<bool>& keep_edge) {
  Relabelled r;
  r.vertex_map.assign(g.order(), kNone);
  r.edge_map.assign(g.size(), kNone);
  int n = 0;
  for (VertexId v = 0; v < g.order(); ++v)
    if (keep_vertex[v]) r.vertex_map[v] = n++;
  r.graph = MultiGraph(n);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (!keep_edge[e] || !keep_vertex[ed.u] || !keep_vertex[ed.v]) continue;
    r.edge_map[e] = r.graph.add_edge(r.vertex_map[ed.u], r.vertex_map[ed.v]);
  }
  return r;
}

}  // namespace

Relabelled remove_vertices(const MultiGraph& g, std::span<const VertexId> vs) {
  std::vector<bool> keep(g.order(), true);
  for (VertexId v : vs) keep.at(v) = false;
  return keep_subgraph(g, keep, std::vector<bool>(g.size(), true));
}

Relabelled remove_edges(const MultiGraph& g, std::span<const EdgeId> es) {
  std::vector<bool> keep(g.size(), true);
  for (EdgeId e : es) keep.at(e) = false;
  return keep_subgraph(g, std::vector<bool>(g.order(), true), keep);
}

Relabelled induced_subgraph(const MultiGraph& g, std::span<const VertexId> vs) {
  std::vector<bool> keep(g.order(), false);
  for (VertexId v : vs) keep.at(v) = true;
  return keep_subgraph(g, keep, std::vector<bool>(g.size(), true));
}

MultiGraph relabel(const MultiGraph& g, std::span<const VertexId> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("relabel: permutation size mismatch");
  MultiGraph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  MultiGraph out(a.order() + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
  return out;
}

MultiGraph from_edges(int order, std::span<const std::pair<int, int>> edges) {
  MultiGraph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------

Subdivision subdivide(const MultiGraph& g, EdgeId e) {
  if (e < 0 || e >= g.size()) throw GraphError("subdivide: no such edge " + std::to_string(e));
  Subdivision s;
  s.graph = MultiGraph(g.order() + 1);
  s.vertex = g.order();
  for (EdgeId f = 0; f < g.size(); ++f) {
    const Edge& ed = g.edge(f);
    if (f == e)
      s.graph.add_edge(ed.u, s.vertex);
    else
      s.graph.add_edge(ed.u, ed.v);
  }
  s.second = s.graph.add_edge(s.vertex, g.edge(e).v);
  return s;
}

namespace {

// Removes the `vanish` vertices; every path through them is merged into one
// edge. `cont(y, e)` says how a walk arriving at vanishing vertex y via edge e
// continues: from which vertex and along which edge.
struct Hop {
  VertexId from;
  EdgeId edge;
};

struct Dissolved {
  MultiGraph graph;
  std::vector<VertexId> vertex_map;
  std::vector<std::vector<EdgeId>> chain;
  std::vector<EdgeId> edge_map;
};

Dissolved dissolve(const MultiGraph& g, const std::vector<bool>& vanish,
                   const std::function<Hop(VertexId, EdgeId)>& cont) {
  Dissolved d;
  d.vertex_map.assign(g.order(), kNone);
  int n = 0;
  for (VertexId v = 0; v < g.order(); ++v)
    if (!vanish[v]) d.vertex_map[v] = n++;
  d.graph = MultiGraph(n);
  d.edge_map.assign(g.size(), kNone);
  std::vector<bool> used(g.size(), false);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (used[e]) continue;
    const Edge& ed = g.edge(e);
    VertexId start;
    if (!vanish[ed.u])
      start = ed.u;
    else if (!vanish[ed.v])
      start = ed.v;
    else
      continue;  // reached later from a surviving end, or part of a closed circle
    std::vector<EdgeId> chain;
    VertexId at = start;
    EdgeId cur = e;
    VertexId end;
    while (true) {
      if (used[cur]) throw GraphError("dissolve: inconsistent chain through edge " + std::to_string(cur));
      used[cur] = true;
      chain.push_back(cur);
      VertexId y = g.other(cur, at);
      if (!vanish[y]) {
        end = y;
        break;
      }
      Hop h = cont(y, cur);
      at = h.from;
      cur = h.edge;
    }
    if (start == end)
      throw GraphError("operation would create a loop at vertex " + std::to_string(start));
    EdgeId ne = d.graph.add_edge(d.vertex_map[start], d.vertex_map[end]);
    for (EdgeId c : chain) d.edge_map[c] = ne;
    d.chain.push_back(std::move(chain));
  }
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!used[e])
      throw GraphError("operation would leave a closed circle without vertices (edge " +
                       std::to_string(e) + ")");
  return d;
}

Hop pass_through(const MultiGraph& g, VertexId y, EdgeId in) {
  auto inc = g.incident(y);
  if (inc.size() != 2)
    throw GraphError("vertex " + std::to_string(y) + " does not have degree 2");
  return {y, inc[0] == in ? inc[1] : inc[0]};
}

}  // namespace

Relabelled suppress_degree2(const MultiGraph& g, VertexId v) {
  if (v < 0 || v >= g.order()) throw GraphError("suppress: no such vertex " + std::to_string(v));
  if (g.degree(v) != 2)
    throw GraphError("suppress: vertex " + std::to_string(v) + " has degree " +
                     std::to_string(g.degree(v)));
  std::vector<bool> vanish(g.order(), false);
  vanish[v] = true;
  auto d = dissolve(g, vanish, [&](VertexId y, EdgeId in) { return pass_through(g, y, in); });
  return {std::move(d.graph), std::move(d.vertex_map), std::move(d.edge_map)};
}

Relabelled suppress_all_degree2(const MultiGraph& g) {
  std::vector<bool> vanish(g.order(), false);
  for (VertexId v = 0; v < g.order(); ++v) vanish[v] = g.degree(v) == 2;
  auto d = dissolve(g, vanish, [&](VertexId y, EdgeId in) { return pass_through(g, y, in); });
  return {std::move(d.graph), std::move(d.vertex_map), std::move(d.edge_map)};
}

Network split_off(const MultiGraph& g, VertexId v) {
  Network n;
  n.graph = g;
  n = split_off(n, v);
  return n;
}

Network split_off(const Network& in, VertexId v) {
  const MultiGraph& g = in.graph;
  if (v < 0 || v >= g.order()) throw GraphError("split_off: no such vertex " + std::to_string(v));
  if (in.is_terminal(v)) throw GraphError("split_off: vertex " + std::to_string(v) + " is a terminal");
  if (g.degree(v) < 1) throw GraphError("split_off: vertex " + std::to_string(v) + " is isolated");
  std::vector<VertexId> map(g.order(), kNone);
  int n = 0;
  for (VertexId w = 0; w < g.order(); ++w)
    if (w != v) map[w] = n++;
  Network out;
  out.graph = MultiGraph(n);
  std::vector<VertexId> fresh;
  for (EdgeId e : g.incident(v)) {
    (void)e;
    fresh.push_back(out.graph.add_vertex());
  }
  auto inc = g.incident(v);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u != v && ed.v != v) {
      out.graph.add_edge(map[ed.u], map[ed.v]);
    } else {
      int k = static_cast<int>(std::find(inc.begin(), inc.end(), e) - inc.begin());
      out.graph.add_edge(map[ed.other(v)], fresh[k]);
    }
  }
  for (VertexId t : in.terminals) out.terminals.push_back(map[t]);
  for (VertexId t : fresh) out.terminals.push_back(t);
  for (const auto& group : in.connectors) {
    std::vector<VertexId> ng;
    for (VertexId t : group) ng.push_back(map[t]);
    out.connectors.push_back(std::move(ng));
  }
  if (!in.connectors.empty()) out.connectors.push_back(fresh);
  return out;
}

Relabelled contract_vertex_set(const MultiGraph& g, std::span<const VertexId> vs) {
  if (vs.empty()) throw GraphError("contract: empty vertex set");
  std::vector<bool> in(g.order(), false);
  for (VertexId v : vs) {
    if (v < 0 || v >= g.order()) throw GraphError("contract: no such vertex " + std::to_string(v));
    in[v] = true;
  }
  VertexId rep = *std::min_element(vs.begin(), vs.end());
  std::vector<VertexId> map(g.order(), kNone);
  int n = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (in[v] && v != rep) continue;
    map[v] = n++;
  }
  for (VertexId v : vs) map[v] = map[rep];
  Relabelled r;
  r.graph = MultiGraph(n);
  r.vertex_map = map;
  r.edge_map.assign(g.size(), kNone);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (in[ed.u] && in[ed.v]) continue;
    r.edge_map[e] = r.graph.add_edge(map[ed.u], map[ed.v]);
  }
  VertexId x = map[rep];
  if (r.graph.degree(x) == 2) {
    auto s = suppress_degree2(r.graph, x);
    for (auto& m : r.vertex_map) m = m == kNone ? kNone : s.vertex_map[m];
    for (auto& m : r.edge_map) m = m == kNone ? kNone : s.edge_map[m];
    r.graph = std::move(s.graph);
  }
  return r;
}

// ---------------------------------------------------------------------------

Network disjoint_union(const Network& a, const Network& b) {
  Network out;
  out.graph = disjoint_union(a.graph, b.graph);
  const int off = a.graph.order();
  out.terminals = a.terminals;
  for (VertexId t : b.terminals) out.terminals.push_back(t + off);
  out.connectors = a.connectors;
  for (const auto& group : b.connectors) {
    std::vector<VertexId> ng;
    for (VertexId t : group) ng.push_back(t + off);
    out.connectors.push_back(std::move(ng));
  }
  return out;
}

JoinResult join_terminals(const Network& n,
                          std::span<const std::pair<VertexId, VertexId>> pairs) {
  const MultiGraph& g = n.graph;
  std::vector<VertexId> partner(g.order(), kNone);
  std::vector<bool> vanish(g.order(), false);
  for (auto [a, b] : pairs) {
    for (VertexId t : {a, b}) {
      if (!n.is_terminal(t)) throw GraphError("junction: vertex " + std::to_string(t) + " is not a terminal");
      if (vanish[t]) throw GraphError("junction: terminal " + std::to_string(t) + " joined twice");
      if (g.degree(t) != 1)
        throw GraphError("junction: terminal " + std::to_string(t) + " does not have degree 1");
    }
    if (a == b) throw GraphError("junction: terminal " + std::to_string(a) + " joined to itself");
    partner[a] = b;
    partner[b] = a;
    vanish[a] = vanish[b] = true;
  }
  auto d = dissolve(g, vanish, [&](VertexId y, EdgeId) {
    VertexId p = partner[y];
    return Hop{p, g.incident(p)[0]};
  });
  JoinResult r;
  r.network.graph = std::move(d.graph);
  r.vertex_map = std::move(d.vertex_map);
  r.edge_chain = std::move(d.chain);
  for (VertexId t : n.terminals)
    if (!vanish[t]) r.network.terminals.push_back(r.vertex_map[t]);
  for (const auto& group : n.connectors) {
    std::vector<VertexId> ng;
    for (VertexId t : group)
      if (!vanish[t]) ng.push_back(r.vertex_map[t]);
    if (!ng.empty()) r.network.connectors.push_back(std::move(ng));
  }
  return r;
}

Network junction(const Network& a, VertexId ta, const Network& b, VertexId tb) {
  Network u = disjoint_union(a, b);
  std::pair<VertexId, VertexId> p{ta, tb + a.graph.order()};
  return join_terminals(u, std::span(&p, 1)).network;
}

Network junction(const Network& a, std::span<const int> ia, const Network& b,
                 std::span<const int> ib) {
  if (ia.size() != ib.size()) throw GraphError("junction: connector size mismatch");
  Network u = disjoint_union(a, b);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < ia.size(); ++i)
    pairs.emplace_back(a.terminals.at(ia[i]), b.terminals.at(ib[i]) + a.graph.order());
  return join_terminals(u, pairs).network;
}

MultiGraph close(const Network& n) {
  if (!n.terminals.empty())
    throw GraphError("close: network still has " + std::to_string(n.terminals.size()) + " terminals");
  return n.graph;
}

}  // namespace snarklab
