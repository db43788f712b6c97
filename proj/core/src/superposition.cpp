#include "snarklab/superposition.hpp"

#include <algorithm>
#include <string>

#include "snarklab/networks.hpp"

namespace snarklab {
namespace {

int end_index(const MultiGraph& base, EdgeId e, VertexId v) { return base.edge(e).u == v ? 0 : 1; }

// Multi-source BFS distances inside a network from the terminals of one connector.
std::vector<int> connector_distances(const Network& n, int connector) {
  const MultiGraph& g = n.graph;
  std::vector<int> d(g.order(), kNone);
  std::vector<VertexId> queue;
  for (VertexId t : n.connectors[connector]) {
    d[t] = 0;
    queue.push_back(t);
  }
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

struct Piece {
  bool is_edge = false;
  int id = kNone;
};

}  // namespace

SuperpositionPlan trivial_plan(const MultiGraph& base) {
  SuperpositionPlan p;
  p.base = base;
  p.supervertex.assign(base.order(), trivial_supervertex());
  p.superedge.assign(base.size(), trivial_superedge());
  return p;
}

void validate_plan(const SuperpositionPlan& plan) {
  const MultiGraph& g = plan.base;
  if (!g.is_cubic()) throw GraphError("superposition base is not cubic");
  if (static_cast<int>(plan.supervertex.size()) != g.order())
    throw GraphError("plan has " + std::to_string(plan.supervertex.size()) + " supervertices for " +
                     std::to_string(g.order()) + " vertices");
  if (static_cast<int>(plan.superedge.size()) != g.size())
    throw GraphError("plan has " + std::to_string(plan.superedge.size()) + " superedges for " +
                     std::to_string(g.size()) + " edges");
  for (VertexId v = 0; v < g.order(); ++v) {
    const Network& x = plan.supervertex[v];
    if (x.connectors.size() != 3 || !validate(x).empty())
      throw GraphError("supervertex " + std::to_string(v) + " is not a network with three connectors");
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Network& y = plan.superedge[e];
    if (y.connectors.size() != 2 || !validate(y).empty())
      throw GraphError("superedge " + std::to_string(e) + " is not a network with two connectors");
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    auto inc = g.incident(v);
    for (int j = 0; j < 3; ++j) {
      EdgeId e = inc[j];
      std::size_t a = plan.supervertex[v].connectors[j].size();
      std::size_t b = plan.superedge[e].connectors[end_index(g, e, v)].size();
      if (a != b)
        throw GraphError("connector " + std::to_string(j) + " of supervertex " + std::to_string(v) + " has size " +
                         std::to_string(a) + " but superedge " + std::to_string(e) + " expects " + std::to_string(b));
    }
  }
}

Superposition superpose(const SuperpositionPlan& plan) {
  validate_plan(plan);
  const MultiGraph& g = plan.base;

  Network all;
  std::vector<int> v_offset(g.order()), e_offset(g.size());
  std::vector<Piece> owner;  // per union vertex
  auto append = [&](const Network& n, Piece p) {
    int off = all.graph.order();
    all = disjoint_union(all, n);
    owner.resize(all.graph.order(), p);
    return off;
  };
  for (VertexId v = 0; v < g.order(); ++v) v_offset[v] = append(plan.supervertex[v], {false, v});
  for (EdgeId e = 0; e < g.size(); ++e) e_offset[e] = append(plan.superedge[e], {true, e});

  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId v = 0; v < g.order(); ++v) {
    auto inc = g.incident(v);
    for (int j = 0; j < 3; ++j) {
      EdgeId e = inc[j];
      const auto& cx = plan.supervertex[v].connectors[j];
      const auto& cy = plan.superedge[e].connectors[end_index(g, e, v)];
      for (std::size_t i = 0; i < cx.size(); ++i) pairs.emplace_back(cx[i] + v_offset[v], cy[i] + e_offset[e]);
    }
  }
  auto joined = join_terminals(all, pairs);
  if (!joined.network.terminals.empty()) throw GraphError("superposition left unmatched terminals");

  Superposition s;
  s.graph = std::move(joined.network.graph);
  s.projection.vertex.assign(s.graph.order(), kNone);
  std::vector<std::vector<int>> dist0(g.size()), dist1(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) {
    dist0[e] = connector_distances(plan.superedge[e], 0);
    dist1[e] = connector_distances(plan.superedge[e], 1);
  }
  for (VertexId x = 0; x < all.graph.order(); ++x) {
    VertexId nx = joined.vertex_map[x];
    if (nx == kNone) continue;
    Piece p = owner[x];
    if (!p.is_edge) {
      s.projection.vertex[nx] = p.id;
      continue;
    }
    VertexId local = x - e_offset[p.id];
    int d0 = dist0[p.id][local], d1 = dist1[p.id][local];
    bool near_v = d1 != kNone && (d0 == kNone || d1 < d0);
    s.projection.vertex[nx] = near_v ? g.edge(p.id).v : g.edge(p.id).u;
  }

  s.projection.edge.resize(s.graph.size());
  for (EdgeId ne = 0; ne < s.graph.size(); ++ne) {
    VertexId pa = s.projection.vertex[s.graph.edge(ne).u];
    VertexId pb = s.projection.vertex[s.graph.edge(ne).v];
    if (pa == pb) {
      s.projection.edge[ne] = {true, pa};
      continue;
    }
    EdgeId found = kNone;
    for (EdgeId old : joined.edge_chain[ne]) {
      Piece p = owner[all.graph.edge(old).u];
      if (!p.is_edge) continue;
      const Edge& be = g.edge(p.id);
      if ((be.u == pa && be.v == pb) || (be.u == pb && be.v == pa)) {
        found = p.id;
        break;
      }
    }
    if (found == kNone)
      throw GraphError("superposed edge " + std::to_string(ne) + " has no consistent projection");
    s.projection.edge[ne] = {false, found};
  }
  return s;
}

bool verify_projection(const MultiGraph& base, const Superposition& s) {
  const auto& p = s.projection;
  if (static_cast<int>(p.vertex.size()) != s.graph.order() || static_cast<int>(p.edge.size()) != s.graph.size())
    return false;
  std::vector<bool> hit_v(base.order(), false), hit_e(base.size(), false);
  for (VertexId x : p.vertex) {
    if (x < 0 || x >= base.order()) return false;
    hit_v[x] = true;
  }
  for (EdgeId e = 0; e < s.graph.size(); ++e) {
    VertexId pa = p.vertex[s.graph.edge(e).u], pb = p.vertex[s.graph.edge(e).v];
    const ProjectedEdge& pe = p.edge[e];
    if (pe.to_vertex) {
      if (pe.id != pa || pe.id != pb) return false;
    } else {
      if (pe.id < 0 || pe.id >= base.size()) return false;
      const Edge& be = base.edge(pe.id);
      if (!((be.u == pa && be.v == pb) || (be.u == pb && be.v == pa))) return false;
      hit_e[pe.id] = true;
    }
  }
  return std::all_of(hit_v.begin(), hit_v.end(), [](bool b) { return b; }) &&
         std::all_of(hit_e.begin(), hit_e.end(), [](bool b) { return b; });
}

bool is_proper_superedge(const Network& y) {
  if (y.connectors.size() != 2) throw GraphError("a superedge needs exactly two connectors");
  std::vector<std::vector<int>> idx(2);
  for (int c = 0; c < 2; ++c)
    for (VertexId t : y.connectors[c]) idx[c].push_back(y.terminal_index(t));
  for (const auto& tuple : boundary_colourings(y)) {
    Colour s0 = 0, s1 = 0;
    for (int i : idx[0]) s0 ^= tuple[i];
    for (int i : idx[1]) s1 ^= tuple[i];
    if (s0 == 0 || s1 == 0 || s0 != s1) return false;
  }
  return true;
}

SuperpositionResistanceReport superposition_resistance_check(const MultiGraph& base, const Superposition& s,
                                                             bool exact) {
  SuperpositionResistanceReport r;
  ResistanceOptions quick;
  quick.lex_least = false;
  r.base_resistance = resistance(base, DeletionMode::vertex, quick).value;
  r.holds = resistance_at_least(s.graph, r.base_resistance);
  if (exact) {
    auto w = resistance(s.graph, DeletionMode::vertex, quick);
    for (VertexId x : w.witness.removed) r.projected.push_back(s.projection.vertex[x]);
    std::sort(r.projected.begin(), r.projected.end());
    r.projected.erase(std::unique(r.projected.begin(), r.projected.end()), r.projected.end());
    r.projected_colourable = is_colourable(remove_vertices(base, r.projected).graph);
    r.holds = r.holds && w.witness.removed.size() >= r.projected.size() &&
              static_cast<int>(r.projected.size()) >= r.base_resistance && r.projected_colourable;
    r.witness = std::move(w.witness);
  }
  return r;
}

}  // namespace snarklab
