#include "snarklab/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

namespace snarklab {
namespace {

void require_cubic_connected(const MultiGraph& g) {
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3)
      throw GraphError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                       "; a cubic graph is required");
  if (!is_connected(g)) throw GraphError("cyclic connectivity needs a connected graph");
}

// Unit-capacity max-flow between two disjoint vertex sets, each contracted.
class UnitFlow {
 public:
  explicit UnitFlow(const MultiGraph& g)
      : g_(g), flow_(g.size(), 0), label_(g.order(), 0), parent_(g.order(), kNone), seen_(g.order(), 0) {}

  // Returns the flow value, stopping once it exceeds `limit`.
  int run(std::span<const VertexId> source, std::span<const VertexId> sink, int limit) {
    std::fill(flow_.begin(), flow_.end(), 0);
    for (VertexId v : source) label_[v] = 1;
    for (VertexId v : sink) label_[v] = 2;
    int value = 0;
    while (value <= limit && augment(source)) ++value;
    reach(source);
    for (VertexId v : source) label_[v] = 0;
    for (VertexId v : sink) label_[v] = 0;
    return value;
  }

  // Vertices reachable from the source in the residual graph after run().
  const std::vector<char>& reachable() const { return reachable_; }

 private:
  int dir(EdgeId e, VertexId from) const { return g_.edge(e).u == from ? 1 : -1; }

  bool augment(std::span<const VertexId> source) {
    ++stamp_;
    std::vector<VertexId>& queue = queue_;
    queue.clear();
    for (VertexId v : source) {
      seen_[v] = stamp_;
      queue.push_back(v);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId x = queue[head];
      for (EdgeId e : g_.incident(x)) {
        VertexId y = g_.other(e, x);
        if (seen_[y] == stamp_ || flow_[e] == dir(e, x)) continue;
        seen_[y] = stamp_;
        parent_[y] = e;
        if (label_[y] == 2) {
          VertexId cur = y;
          while (label_[cur] != 1) {
            EdgeId pe = parent_[cur];
            VertexId prev = g_.other(pe, cur);
            flow_[pe] += dir(pe, prev);
            cur = prev;
          }
          return true;
        }
        queue.push_back(y);
      }
    }
    return false;
  }

  void reach(std::span<const VertexId> source) {
    reachable_.assign(g_.order(), 0);
    std::vector<VertexId> stack(source.begin(), source.end());
    for (VertexId v : source) reachable_[v] = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : g_.incident(x)) {
        VertexId y = g_.other(e, x);
        if (reachable_[y] || flow_[e] == dir(e, x)) continue;
        reachable_[y] = 1;
        stack.push_back(y);
      }
    }
  }

  const MultiGraph& g_;
  std::vector<int> flow_;
  std::vector<char> label_;
  std::vector<EdgeId> parent_;
  std::vector<int> seen_;
  std::vector<VertexId> queue_;
  std::vector<char> reachable_;
  int stamp_ = 0;
};

bool has_cycle_in(const MultiGraph& g, const std::vector<bool>& keep) {
  // A component with at least as many edges as vertices contains a cycle.
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Edge& e : g.edges()) {
    if (!keep[e.u] || !keep[e.v]) continue;
    int a = find(e.u), b = find(e.v);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

std::vector<EdgeId> coboundary(const MultiGraph& g, const std::vector<bool>& side) {
  std::vector<EdgeId> cut;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (side[g.edge(e).u] != side[g.edge(e).v]) cut.push_back(e);
  return cut;
}

// Certificate for the cut around `side`; both sides must contain circuits.
std::optional<CyclicCut> certificate_for(const MultiGraph& g, const std::vector<bool>& side) {
  CyclicCut c;
  for (VertexId v = 0; v < g.order(); ++v) (side[v] ? c.side_a : c.side_b).push_back(v);
  auto ca = circuit_within(g, c.side_a);
  auto cb = circuit_within(g, c.side_b);
  if (!ca || !cb) return std::nullopt;
  c.cut = coboundary(g, side);
  c.circuit_a = *ca;
  c.circuit_b = *cb;
  return c;
}

// The component of G[reachable] containing `seed`.
std::vector<bool> component_of(const MultiGraph& g, const std::vector<char>& reachable, VertexId seed) {
  std::vector<bool> comp(g.order(), false);
  std::vector<VertexId> stack{seed};
  comp[seed] = true;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      VertexId y = g.other(e, x);
      if (!comp[y] && reachable[y]) {
        comp[y] = true;
        stack.push_back(y);
      }
    }
  }
  return comp;
}

// Connected vertex sets of size k containing `root`, drawn from `allowed`
// (enumeration with exclusive neighbourhoods, each set exactly once).
void connected_sets(const MultiGraph& g, VertexId root, int k, const std::vector<bool>& allowed,
                    std::vector<std::vector<VertexId>>& out) {
  std::vector<VertexId> sub{root};
  std::vector<int> in_sub(g.order(), 0), near(g.order(), 0);
  in_sub[root] = 1;
  auto bump = [&](VertexId v, int d) {
    for (EdgeId e : g.incident(v)) near[g.other(e, v)] += d;
  };
  bump(root, 1);
  std::vector<VertexId> ext;
  for (EdgeId e : g.incident(root)) {
    VertexId w = g.other(e, root);
    if (allowed[w] && w != root && std::find(ext.begin(), ext.end(), w) == ext.end()) ext.push_back(w);
  }
  std::function<void(std::vector<VertexId>)> rec = [&](std::vector<VertexId> extension) {
    if (static_cast<int>(sub.size()) == k) {
      auto s = sub;
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
      return;
    }
    while (!extension.empty()) {
      VertexId w = extension.back();
      extension.pop_back();
      std::vector<VertexId> next = extension;
      for (EdgeId e : g.incident(w)) {
        VertexId u = g.other(e, w);
        if (!allowed[u] || in_sub[u] || near[u] > 0 || u == root) continue;
        if (std::find(next.begin(), next.end(), u) == next.end()) next.push_back(u);
      }
      sub.push_back(w);
      in_sub[w] = 1;
      bump(w, 1);
      rec(next);
      bump(w, -1);
      in_sub[w] = 0;
      sub.pop_back();
    }
  };
  rec(ext);
}

// Vertex set whose removal leaves only components with fewer than k vertices.
std::vector<VertexId> hitting_set(const MultiGraph& g, int k) {
  const int n = g.order();
  std::vector<bool> removed(n, false);
  std::vector<VertexId> w;
  if (k <= 1) {
    w.resize(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
  }
  while (true) {
    std::vector<int> comp(n, -1);
    std::vector<std::vector<VertexId>> comps;
    for (VertexId s = 0; s < n; ++s) {
      if (removed[s] || comp[s] != -1) continue;
      comps.emplace_back();
      std::vector<VertexId> stack{s};
      comp[s] = static_cast<int>(comps.size()) - 1;
      while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        comps.back().push_back(x);
        for (EdgeId e : g.incident(x)) {
          VertexId y = g.other(e, x);
          if (!removed[y] && comp[y] == -1) {
            comp[y] = comp[s];
            stack.push_back(y);
          }
        }
      }
    }
    std::size_t largest = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
      if (comps[i].size() > comps[largest].size()) largest = i;
    if (comps.empty() || static_cast<int>(comps[largest].size()) < k) break;
    VertexId pick = kNone;
    int best = -1;
    for (VertexId x : comps[largest]) {
      int d = 0;
      for (EdgeId e : g.incident(x)) d += !removed[g.other(e, x)];
      if (d > best || (d == best && x < pick)) {
        best = d;
        pick = x;
      }
    }
    removed[pick] = true;
    w.push_back(pick);
  }
  std::sort(w.begin(), w.end());
  return w;
}

class CyclicSolver {
 public:
  explicit CyclicSolver(const MultiGraph& g) : g_(g), flow_(g) {}

  // Smallest cycle-separating cut found between short disjoint circuits.
  std::optional<CyclicCut> upper_bound() {
    std::optional<CyclicCut> best;
    auto consider = [&](std::optional<CyclicCut> c) {
      if (c && (!best || c->cut.size() < best->cut.size())) best = std::move(c);
    };
    auto shortest = shortest_circuit(g_);
    if (!shortest) return best;
    std::vector<bool> side(g_.order(), false);
    for (VertexId v : shortest->vertices) side[v] = true;
    consider(certificate_for(g_, side));
    std::vector<Circuit> shortest_all;
    for_each_circuit(g_, shortest->length(), [&](const Circuit& c) {
      if (c.length() == shortest->length() && is_induced(g_, c)) shortest_all.push_back(c);
      return shortest_all.size() < 400;
    });
    std::vector<bool> in_a(g_.order());
    for (std::size_t i = 0; i < shortest_all.size(); ++i) {
      std::fill(in_a.begin(), in_a.end(), false);
      for (VertexId v : shortest_all[i].vertices) in_a[v] = true;
      for (std::size_t j = i + 1; j < shortest_all.size(); ++j) {
        const auto& b = shortest_all[j].vertices;
        if (std::any_of(b.begin(), b.end(), [&](VertexId v) { return in_a[v]; })) continue;
        int limit = best ? static_cast<int>(best->cut.size()) - 1 : g_.size();
        int value = flow_.run(shortest_all[i].vertices, b, limit);
        if (value > limit) continue;
        consider(certificate_for(g_, component_of(g_, flow_.reachable(), shortest_all[i].vertices[0])));
      }
    }
    return best;
  }

  // A cycle-separating cut of size exactly k, assuming none is smaller.
  std::optional<CyclicCut> level(int k) {
    const int n = g_.order();
    if (n < 2 * k) return std::nullopt;
    std::vector<bool> all(n, true);
    all[0] = false;
    std::vector<std::vector<VertexId>> seeds_a;
    if (k == 1)
      seeds_a.push_back({0});
    else
      connected_sets(g_, 0, k, all, seeds_a);
    auto w = hitting_set(g_, k);
    std::vector<std::vector<VertexId>> seeds_b;
    std::vector<bool> allowed(n, true);
    for (VertexId root : w) {
      allowed[root] = false;
      if (k == 1)
        seeds_b.push_back({root});
      else
        connected_sets(g_, root, k, allowed, seeds_b);
    }
    std::vector<int> mark(n, -1);
    for (std::size_t i = 0; i < seeds_a.size(); ++i) {
      for (VertexId v : seeds_a[i]) mark[v] = static_cast<int>(i);
      for (const auto& tb : seeds_b) {
        if (std::any_of(tb.begin(), tb.end(), [&](VertexId v) { return mark[v] == static_cast<int>(i); }))
          continue;
        int value = flow_.run(seeds_a[i], tb, k);
        if (value > k) continue;
        auto side = component_of(g_, flow_.reachable(), seeds_a[i][0]);
        auto cert = certificate_for(g_, side);
        if (cert && static_cast<int>(cert->cut.size()) <= k) return cert;
      }
    }
    return std::nullopt;
  }

 private:
  const MultiGraph& g_;
  UnitFlow flow_;
};

}  // namespace

int edge_connectivity(const MultiGraph& g) {
  if (g.order() <= 1) return 0;
  if (!is_connected(g)) return 0;
  UnitFlow flow(g);
  int best = std::numeric_limits<int>::max();
  for (VertexId v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  const VertexId s = 0;
  for (VertexId t = 1; t < g.order(); ++t) {
    std::vector<VertexId> a{s}, b{t};
    best = std::min(best, flow.run(a, b, best - 1));
  }
  return best;
}

std::optional<Circuit> circuit_within(const MultiGraph& g, std::span<const VertexId> side) {
  auto sub = induced_subgraph(g, side);
  auto c = shortest_circuit(sub.graph);
  if (!c) return std::nullopt;
  std::vector<VertexId> vback(sub.graph.order());
  for (VertexId v = 0; v < g.order(); ++v)
    if (sub.vertex_map[v] != kNone) vback[sub.vertex_map[v]] = v;
  std::vector<EdgeId> eback(sub.graph.size());
  for (EdgeId e = 0; e < g.size(); ++e)
    if (sub.edge_map[e] != kNone) eback[sub.edge_map[e]] = e;
  Circuit out;
  for (VertexId v : c->vertices) out.vertices.push_back(vback[v]);
  for (EdgeId e : c->edges) out.edges.push_back(eback[e]);
  // Restart at the least vertex; side lists are sorted so order is preserved.
  return out;
}

bool has_disjoint_circuits(const MultiGraph& g) {
  auto c = shortest_circuit(g);
  if (!c) return false;
  std::vector<bool> keep(g.order(), true);
  for (VertexId v : c->vertices) keep[v] = false;
  if (has_cycle_in(g, keep)) return true;
  bool found = false;
  for_each_circuit(g, g.order(), [&](const Circuit& circ) {
    std::fill(keep.begin(), keep.end(), true);
    for (VertexId v : circ.vertices) keep[v] = false;
    found = has_cycle_in(g, keep);
    return !found;
  });
  return found;
}

bool validate_cyclic_cut(const MultiGraph& g, const CyclicCut& c) {
  std::vector<int> side(g.order(), 0);
  for (VertexId v : c.side_a) {
    if (v < 0 || v >= g.order() || side[v]) return false;
    side[v] = 1;
  }
  for (VertexId v : c.side_b) {
    if (v < 0 || v >= g.order() || side[v]) return false;
    side[v] = 2;
  }
  if (std::count(side.begin(), side.end(), 0) != 0) return false;
  std::vector<EdgeId> cut = c.cut;
  std::sort(cut.begin(), cut.end());
  std::vector<EdgeId> expected;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (side[g.edge(e).u] != side[g.edge(e).v]) expected.push_back(e);
  if (cut != expected) return false;
  if (!is_circuit_of(g, c.circuit_a) || !is_circuit_of(g, c.circuit_b)) return false;
  for (VertexId v : c.circuit_a.vertices)
    if (side[v] != 1) return false;
  for (VertexId v : c.circuit_b.vertices)
    if (side[v] != 2) return false;
  return true;
}

ZetaResult cyclic_connectivity(const MultiGraph& g, int k_cap) {
  require_cubic_connected(g);
  ZetaResult r;
  if (!has_disjoint_circuits(g)) {
    r.kind = ZetaResult::Kind::no_cut;
    return r;
  }
  CyclicSolver solver(g);
  auto upper = solver.upper_bound();
  const int u = upper ? static_cast<int>(upper->cut.size()) : std::numeric_limits<int>::max();
  const int last = std::min(u - 1, k_cap);
  for (int k = 1; k <= last; ++k) {
    if (auto cut = solver.level(k)) {
      r.kind = ZetaResult::Kind::exact;
      r.value = static_cast<int>(cut->cut.size());
      r.certificate = std::move(cut);
      return r;
    }
  }
  if (upper && u <= k_cap + 1) {
    r.kind = ZetaResult::Kind::exact;
    r.value = u;
    r.certificate = std::move(upper);
    return r;
  }
  r.kind = ZetaResult::Kind::at_least;
  r.value = k_cap + 1;
  return r;
}

CyclicDecision is_cyclically_k_connected(const MultiGraph& g, int k) {
  CyclicDecision d;
  if (k <= 1) return d;
  auto r = cyclic_connectivity(g, k - 1);
  if (r.kind == ZetaResult::Kind::exact && r.value < k) {
    d.holds = false;
    d.counterexample = std::move(r.certificate);
  }
  return d;
}

std::optional<int> cyclic_cut_brute_force(const MultiGraph& g, int max_k) {
  const int m = g.size();
  std::vector<bool> removed(m, false);
  std::vector<int> parent(g.order());
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto separates = [&]() {
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> edges(g.order(), 0), verts(g.order(), 0);
    for (EdgeId e = 0; e < m; ++e) {
      if (removed[e]) continue;
      int a = find(g.edge(e).u), b = find(g.edge(e).v);
      if (a != b) parent[a] = b;
    }
    for (VertexId v = 0; v < g.order(); ++v) ++verts[find(v)];
    for (EdgeId e = 0; e < m; ++e)
      if (!removed[e]) ++edges[find(g.edge(e).u)];
    int cyclic = 0;
    for (VertexId v = 0; v < g.order(); ++v)
      if (find(v) == v && edges[v] >= verts[v]) ++cyclic;
    return cyclic >= 2;
  };
  for (int k = 1; k <= max_k && k <= m; ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      for (int i : idx) removed[i] = true;
      bool hit = separates();
      for (int i : idx) removed[i] = false;
      if (hit) return k;
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace snarklab
