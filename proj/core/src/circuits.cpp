#include "snarklab/circuits.hpp"

#include <algorithm>
#include <queue>

namespace snarklab {

std::optional<int> girth(const MultiGraph& g) {
  for (const Edge& e : g.edges())
    if (g.multiplicity(e.u, e.v) > 1) return 2;
  int best = g.order() + 1;
  std::vector<int> dist(g.order());
  std::vector<EdgeId> via(g.order());
  for (VertexId s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<VertexId> q;
    dist[s] = 0;
    via[s] = kNone;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      if (2 * dist[v] + 1 >= best) break;
      for (EdgeId e : g.incident(v)) {
        if (e == via[v]) continue;
        VertexId w = g.other(e, v);
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          via[w] = e;
          q.push(w);
        } else {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best > g.order()) return std::nullopt;
  return best;
}

void for_each_circuit(const MultiGraph& g, int max_len,
                      const std::function<bool(const Circuit&)>& visit) {
  if (max_len < 2) return;
  std::vector<bool> on_path(g.order(), false);
  Circuit path;
  bool stop = false;
  std::function<void(VertexId, VertexId)> extend = [&](VertexId s, VertexId v) {
    for (EdgeId e : g.incident(v)) {
      if (stop) return;
      if (!path.edges.empty() && e == path.edges.back()) continue;
      VertexId w = g.other(e, v);
      if (w == s) {
        if (path.length() >= 2 && path.edges.front() < e) {
          path.edges.push_back(e);
          if (!visit(path)) stop = true;
          path.edges.pop_back();
        }
        continue;
      }
      if (w < s || on_path[w] || path.length() >= max_len) continue;
      on_path[w] = true;
      path.vertices.push_back(w);
      path.edges.push_back(e);
      extend(s, w);
      path.vertices.pop_back();
      path.edges.pop_back();
      on_path[w] = false;
    }
  };
  for (VertexId s = 0; s < g.order() && !stop; ++s) {
    on_path[s] = true;
    path.vertices = {s};
    path.edges.clear();
    extend(s, s);
    on_path[s] = false;
  }
}

std::vector<Circuit> enumerate_circuits(const MultiGraph& g, int max_len) {
  std::vector<Circuit> out;
  for_each_circuit(g, max_len, [&](const Circuit& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::optional<Circuit> shortest_circuit(const MultiGraph& g) {
  auto len = girth(g);
  if (!len) return std::nullopt;
  std::optional<Circuit> best;
  for_each_circuit(g, *len, [&](const Circuit& c) {
    if (c.length() != *len) return true;
    if (!best || c.vertices < best->vertices) best = c;
    return true;
  });
  return best;
}

bool is_induced(const MultiGraph& g, const Circuit& c) {
  std::vector<bool> in(g.order(), false), used(g.size(), false);
  for (VertexId v : c.vertices) in[v] = true;
  for (EdgeId e : c.edges) used[e] = true;
  for (VertexId v : c.vertices)
    for (EdgeId e : g.incident(v))
      if (!used[e] && in[g.other(e, v)]) return false;
  return true;
}

FiveCircuitIncidence five_circuit_incidence(const MultiGraph& g) {
  FiveCircuitIncidence r;
  r.count.assign(g.order(), 0);
  for_each_circuit(g, 5, [&](const Circuit& c) {
    if (c.length() == 5) {
      ++r.circuits;
      for (VertexId v : c.vertices) ++r.count[v];
    }
    return true;
  });
  for (VertexId v = 0; v < g.order(); ++v) {
    if (r.count[v] > 6)
      r.overflow.push_back(v);
    else
      ++r.profile[r.count[v]];
  }
  return r;
}

bool is_circuit_of(const MultiGraph& g, const Circuit& c) {
  const int n = c.length();
  if (n < 2 || static_cast<int>(c.edges.size()) != n) return false;
  std::vector<VertexId> vs = c.vertices;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  std::vector<EdgeId> es = c.edges;
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (int i = 0; i < n; ++i) {
    EdgeId e = c.edges[i];
    if (e < 0 || e >= g.size()) return false;
    VertexId a = c.vertices[i], b = c.vertices[(i + 1) % n];
    const Edge& ed = g.edge(e);
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
  }
  return true;
}

}  // namespace snarklab
