#include "snarklab/networks.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace snarklab {
namespace {

// Splits off vertices of a graph one at a time while tracking original ids.
class Splitter {
 public:
  explicit Splitter(MultiGraph g) : pos_(g.order()) {
    net_.graph = std::move(g);
    std::iota(pos_.begin(), pos_.end(), 0);
  }

  void split(VertexId orig) {
    VertexId cur = pos_.at(orig);
    if (cur == kNone) throw GraphError("vertex " + std::to_string(orig) + " already split off");
    const int first = net_.terminal_count();
    net_ = split_off(net_, cur);
    for (auto& p : pos_)
      if (p != kNone && p > cur) --p;
    pos_[orig] = kNone;
    std::vector<int> group(net_.terminal_count() - first);
    std::iota(group.begin(), group.end(), first);
    groups_.push_back(std::move(group));
  }

  void mark_terminal(VertexId orig) {
    VertexId cur = pos_.at(orig);
    if (net_.graph.degree(cur) != 1)
      throw GraphError("vertex " + std::to_string(orig) + " does not have degree 1");
    groups_.push_back({net_.terminal_count()});
    net_.terminals.push_back(cur);
  }

  Network finish() {
    net_.connectors.clear();
    for (const auto& group : groups_) {
      std::vector<VertexId> c;
      for (int i : group) c.push_back(net_.terminals[i]);
      net_.connectors.push_back(std::move(c));
    }
    return net_;
  }

 private:
  Network net_;
  std::vector<VertexId> pos_;
  std::vector<std::vector<int>> groups_;
};

void require_edge(const MultiGraph& g, EdgeId e) {
  if (e < 0 || e >= g.size()) throw GraphError("no such edge " + std::to_string(e));
}

void require_vertex(const MultiGraph& g, VertexId v) {
  if (v < 0 || v >= g.order()) throw GraphError("no such vertex " + std::to_string(v));
}

int edge_distance(const MultiGraph& g, EdgeId e, EdgeId f) {
  int best = g.order();
  for (VertexId a : {g.edge(e).u, g.edge(e).v}) {
    auto d = distances_from(g, a);
    for (VertexId b : {g.edge(f).u, g.edge(f).v})
      if (d[b] != kNone) best = std::min(best, d[b]);
  }
  return best;
}

// Joins connector ca of a with connector cb of b, terminal by terminal.
Network join_connectors(const Network& a, int ca, const Network& b, int cb) {
  const auto& ta = a.connectors.at(ca);
  const auto& tb = b.connectors.at(cb);
  if (ta.size() != tb.size()) throw GraphError("connector size mismatch");
  Network u = disjoint_union(a, b);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < ta.size(); ++i) pairs.emplace_back(ta[i], tb[i] + a.graph.order());
  return join_terminals(u, pairs).network;
}

}  // namespace

std::vector<int> distances_from(const MultiGraph& g, VertexId v) {
  std::vector<int> d(g.order(), kNone);
  std::vector<VertexId> queue{v};
  d[v] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId x = queue[head];
    for (EdgeId e : g.incident(x)) {
      VertexId y = g.other(e, x);
      if (d[y] == kNone) {
        d[y] = d[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return d;
}

MultiGraph petersen() {
  MultiGraph g(10);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5);
  for (int i = 0; i < 5; ++i) g.add_edge(i + 5, (i + 2) % 5 + 5);
  return g;
}

MultiGraph flower_snark(int k) {
  if (k < 3 || k % 2 == 0) throw GraphError("flower snark needs an odd k >= 3, got " + std::to_string(k));
  MultiGraph g(4 * k);
  auto a = [](int i) { return 4 * i; };
  auto b = [](int i) { return 4 * i + 1; };
  auto c = [](int i) { return 4 * i + 2; };
  auto d = [](int i) { return 4 * i + 3; };
  for (int i = 0; i < k; ++i) {
    g.add_edge(a(i), b(i));
    g.add_edge(a(i), c(i));
    g.add_edge(a(i), d(i));
  }
  for (int i = 0; i < k; ++i) g.add_edge(b(i), b((i + 1) % k));
  for (int i = 0; i + 1 < k; ++i) {
    g.add_edge(c(i), c(i + 1));
    g.add_edge(d(i), d(i + 1));
  }
  g.add_edge(c(k - 1), d(0));
  g.add_edge(d(k - 1), c(0));
  return g;
}

Network build_P2() { return build_P2(0); }

Network build_P2(EdgeId e) {
  MultiGraph p = petersen();
  require_edge(p, e);
  auto s = subdivide(p, e);
  Splitter sp(s.graph);
  sp.split(s.vertex);
  return sp.finish();
}

Network build_P3() { return build_P3(0); }

Network build_P3(VertexId v) {
  MultiGraph p = petersen();
  require_vertex(p, v);
  Splitter sp(p);
  sp.split(v);
  return sp.finish();
}

Network build_P4v() { return build_P4v(0); }

Network build_P4v(EdgeId e) {
  MultiGraph p = petersen();
  require_edge(p, e);
  const Edge ed = p.edge(e);
  std::vector<EdgeId> del{e};
  Splitter sp(remove_edges(p, del).graph);
  sp.split(ed.u);
  sp.split(ed.v);
  return sp.finish();
}

Network build_P4e() { return build_P4e(0, 2); }

Network build_P4e(EdgeId e, EdgeId f) {
  MultiGraph p = petersen();
  require_edge(p, e);
  require_edge(p, f);
  if (edge_distance(p, e, f) != 1)
    throw GraphError("edges " + std::to_string(e) + " and " + std::to_string(f) + " are not at distance 1");
  auto s1 = subdivide(p, e);
  auto s2 = subdivide(s1.graph, f);
  Splitter sp(s2.graph);
  sp.split(s1.vertex);
  sp.split(s2.vertex);
  return sp.finish();
}

Network build_P5vvv() { return build_P5vvv(1, 0, 4); }

Network build_P5vvv(VertexId u, VertexId v, VertexId w) {
  MultiGraph p = petersen();
  for (VertexId x : {u, v, w}) require_vertex(p, x);
  if (u == w || !p.adjacent(u, v) || !p.adjacent(v, w))
    throw GraphError("vertices " + std::to_string(u) + ", " + std::to_string(v) + ", " + std::to_string(w) +
                     " do not form a path");
  std::vector<EdgeId> del;
  for (EdgeId e : p.incident(v))
    if (p.other(e, v) == u || p.other(e, v) == w) del.push_back(e);
  Splitter sp(remove_edges(p, del).graph);
  sp.split(u);
  sp.split(w);
  sp.mark_terminal(v);
  return sp.finish();
}

Network build_P5ev() { return build_P5ev(0, 2); }

Network build_P5ev(VertexId v, EdgeId e) {
  MultiGraph p = petersen();
  require_vertex(p, v);
  require_edge(p, e);
  auto d = distances_from(p, v);
  if (std::min(d[p.edge(e).u], d[p.edge(e).v]) != 2)
    throw GraphError("edge " + std::to_string(e) + " is not at distance 2 from vertex " + std::to_string(v));
  auto s = subdivide(p, e);
  Splitter sp(s.graph);
  sp.split(s.vertex);
  sp.split(v);
  return sp.finish();
}

Network build_N1() {
  // The free pair of P4e becomes connector 0, the free pair of P4v connector 1.
  return join_connectors(build_P4e(), 1, build_P4v(), 0);
}

Network build_N2() {
  Network left = join_connectors(build_P4v(), 1, build_P4e(), 0);
  return join_connectors(left, 1, build_P4v(), 0);
}

Network build_Z() {
  Network z = join_connectors(build_P5vvv(), 0, build_P5ev(), 0);
  z = join_connectors(z, 0, build_P5ev(), 0);
  // Connectors are now {single, triple, triple}.
  return z;
}

Network trivial_supervertex() {
  Network n;
  n.graph = MultiGraph(4);
  for (VertexId t = 1; t <= 3; ++t) {
    n.graph.add_edge(0, t);
    n.terminals.push_back(t);
    n.connectors.push_back({t});
  }
  return n;
}

Network trivial_superedge() {
  Network n;
  n.graph = MultiGraph(2);
  n.graph.add_edge(0, 1);
  n.terminals = {0, 1};
  n.connectors = {{0}, {1}};
  return n;
}

Network build_X() {
  Network n;
  n.graph = MultiGraph(8);
  for (VertexId t = 1; t <= 3; ++t) n.graph.add_edge(0, t);
  n.graph.add_edge(4, 5);
  n.graph.add_edge(6, 7);
  n.terminals = {1, 2, 3, 4, 5, 6, 7};
  n.connectors = {{1, 4, 6}, {2, 5, 7}, {3}};
  return n;
}

Network build_Y() {
  MultiGraph j = flower_snark(5);
  const VertexId b0 = 1;
  auto d = distances_from(j, b0);
  const int far = *std::max_element(d.begin(), d.end());
  VertexId other = static_cast<VertexId>(std::find(d.begin(), d.end(), far) - d.begin());
  return build_Y(other);
}

Network build_Y(VertexId other) {
  MultiGraph j = flower_snark(5);
  const VertexId b0 = 1;
  require_vertex(j, other);
  if (other == b0 || j.adjacent(b0, other))
    throw GraphError("vertex " + std::to_string(other) + " is adjacent or equal to b_0");
  Splitter sp(j);
  sp.split(b0);
  sp.split(other);
  return sp.finish();
}

}  // namespace snarklab
