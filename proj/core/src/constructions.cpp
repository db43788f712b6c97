#include "snarklab/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "snarklab/canonical.hpp"
#include "snarklab/colouring.hpp"
#include "snarklab/connectivity.hpp"
#include "snarklab/factors.hpp"
#include "snarklab/networks.hpp"

namespace snarklab {
namespace {

struct Union {
  Network net;
  std::vector<int> offset;  // per part
};

Union unite(const std::vector<Network>& parts) {
  Union u;
  for (const auto& p : parts) {
    u.offset.push_back(u.net.graph.order());
    u.net = disjoint_union(u.net, p);
  }
  return u;
}

VertexId terminal_neighbour(const Network& n, int i) {
  VertexId t = n.terminals[i];
  return n.graph.other(n.graph.incident(t)[0], t);
}

EdgeId edge_between(const MultiGraph& g, VertexId a, VertexId b) {
  for (EdgeId e : g.incident(a))
    if (g.other(e, a) == b) return e;
  throw GraphError("vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
}

bool acyclic(int order, const std::vector<Edge>& edges) {
  std::vector<int> parent(order);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Edge& e : edges) {
    int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

// A path of `len` edges from a to b in g whose removal leaves g acyclic.
std::vector<VertexId> tree_complement_path(const MultiGraph& g, VertexId a, VertexId b, int len) {
  std::vector<VertexId> path{a};
  std::vector<EdgeId> used;
  std::vector<bool> on(g.order(), false);
  on[a] = true;
  std::vector<VertexId> found;
  std::function<bool()> dfs = [&]() {
    VertexId x = path.back();
    if (static_cast<int>(used.size()) == len) {
      if (x != b) return false;
      std::vector<Edge> rest;
      for (EdgeId e = 0; e < g.size(); ++e)
        if (std::find(used.begin(), used.end(), e) == used.end()) rest.push_back(g.edge(e));
      if (!acyclic(g.order(), rest)) return false;
      found = path;
      return true;
    }
    for (EdgeId e : g.incident(x)) {
      VertexId y = g.other(e, x);
      if (on[y]) continue;
      on[y] = true;
      path.push_back(y);
      used.push_back(e);
      if (dfs()) return true;
      used.pop_back();
      path.pop_back();
      on[y] = false;
    }
    return false;
  };
  if (!dfs()) throw GraphError("no path with an acyclic complement exists");
  return found;
}

Circuit rotate_to_least(Circuit c) {
  auto it = std::min_element(c.vertices.begin(), c.vertices.end());
  auto k = it - c.vertices.begin();
  std::rotate(c.vertices.begin(), it, c.vertices.end());
  std::rotate(c.edges.begin(), c.edges.begin() + k, c.edges.end());
  return c;
}

std::vector<MultiGraph> compute_H_candidates() {
  Network p3 = build_P3();
  auto u = unite({p3, p3, p3, trivial_supervertex()});
  std::vector<VertexId> terms(u.net.terminals.begin(), u.net.terminals.begin() + 9);
  std::vector<VertexId> star(u.net.terminals.begin() + 9, u.net.terminals.end());
  std::map<std::string, MultiGraph> unique;
  std::vector<int> pick(9, 0);
  std::fill(pick.begin() + 6, pick.end(), 1);
  do {
    std::vector<std::pair<VertexId, VertexId>> base;
    std::vector<VertexId> rest;
    for (int i = 0, k = 0; i < 9; ++i) {
      if (pick[i])
        base.emplace_back(terms[i], star[k++]);
      else
        rest.push_back(terms[i]);
    }
    std::function<void(std::vector<VertexId>, std::vector<std::pair<VertexId, VertexId>>)> pairings =
        [&](std::vector<VertexId> left, std::vector<std::pair<VertexId, VertexId>> pairs) {
          if (left.empty()) {
            MultiGraph g = join_terminals(u.net, pairs).network.graph;
            if (is_two_edge_connected(g)) unique.emplace(canonical_form(g), std::move(g));
            return;
          }
          for (std::size_t j = 1; j < left.size(); ++j) {
            auto next = pairs;
            next.emplace_back(left[0], left[j]);
            std::vector<VertexId> rem;
            for (std::size_t k = 1; k < left.size(); ++k)
              if (k != j) rem.push_back(left[k]);
            pairings(rem, next);
          }
        };
    pairings(rest, base);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::vector<MultiGraph> out;
  for (auto& [key, g] : unique) {
    OddnessOptions opts;
    opts.lower_bound = 4;
    auto w = oddness(g, opts);
    if (w.value && *w.value == 4) out.push_back(std::move(g));
  }
  return out;
}

MultiGraph H_with_zeta(int zeta) {
  for (const auto& g : build_H_candidates()) {
    auto z = cyclic_connectivity(g);
    if (z.kind == ZetaResult::Kind::exact && z.value == zeta) return g;
  }
  throw GraphError("no candidate of order 28 and oddness 4 has cyclic connectivity " + std::to_string(zeta));
}

}  // namespace

void ensure_snark(const MultiGraph& g, const char* what) {
  std::string name(what);
  if (!g.is_cubic()) throw GraphError(name + " is not cubic");
  if (!is_two_edge_connected(g)) throw GraphError(name + " is not 2-connected");
  if (is_colourable(g)) throw GraphError(name + " is 3-edge-colourable");
}

MultiGraph insert_two_poles(const MultiGraph& g, const std::vector<EdgeId>& edges, const Network& two_pole) {
  if (two_pole.terminal_count() != 2) throw GraphError("insert_two_poles needs a 2-pole");
  std::vector<bool> cut(g.size(), false);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.size()) throw GraphError("no such edge " + std::to_string(e));
    cut[e] = true;
  }
  Network host;
  host.graph = MultiGraph(g.order());
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!cut[e]) host.graph.add_edge(g.edge(e).u, g.edge(e).v);
  std::vector<std::pair<VertexId, VertexId>> stubs;
  for (EdgeId e : edges) {
    VertexId s = host.graph.add_vertex(), t = host.graph.add_vertex();
    host.graph.add_edge(g.edge(e).u, s);
    host.graph.add_edge(g.edge(e).v, t);
    host.terminals.push_back(s);
    host.terminals.push_back(t);
    stubs.emplace_back(s, t);
  }
  std::vector<Network> parts{host};
  for (std::size_t i = 0; i < edges.size(); ++i) parts.push_back(two_pole);
  auto u = unite(parts);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int off = u.offset[i + 1];
    pairs.emplace_back(stubs[i].first, two_pole.terminals[0] + off);
    pairs.emplace_back(stubs[i].second, two_pole.terminals[1] + off);
  }
  return join_terminals(u.net, pairs).network.graph;
}

MultiGraph gv_extension(const MultiGraph& g, VertexId v) {
  if (!g.is_cubic()) throw GraphError("gv_extension needs a cubic graph");
  if (v < 0 || v >= g.order()) throw GraphError("no such vertex " + std::to_string(v));
  auto inc = g.incident(v);
  return insert_two_poles(g, std::vector<EdgeId>(inc.begin(), inc.end()), build_P2());
}

MultiGraph build_R(int i) {
  if (i < 0) throw GraphError("R index must be non-negative");
  if (i == 0) return petersen();
  if (i == 1) return build_H1();
  MultiGraph g = gv_extension(build_R(i - 2), 0);
  ensure_snark(g, "R");
  return g;
}

std::vector<MultiGraph> build_H_candidates() {
  static const std::vector<MultiGraph> cache = compute_H_candidates();
  return cache;
}

MultiGraph build_H1() { return H_with_zeta(2); }
MultiGraph build_H2() { return H_with_zeta(3); }

MultiGraph ring_join(const std::vector<Network>& blocks, unsigned orientation) {
  if (blocks.empty()) throw GraphError("ring_join needs at least one block");
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const auto& c = blocks[j].connectors;
    if (c.size() != 2 || c[0].size() != 2 || c[1].size() != 2 || blocks[j].terminal_count() != 4)
      throw GraphError("block " + std::to_string(j) + " is not a 4-pole with two pairs");
  }
  const int r = static_cast<int>(blocks.size());
  auto u = unite(blocks);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int j = 0; j < r; ++j) {
    int k = (j + 1) % r;
    const auto& a = blocks[j].connectors[1];
    const auto& b = blocks[k].connectors[0];
    bool crossed = (orientation >> (r - 1 - j)) & 1u;
    VertexId a0 = a[0] + u.offset[j], a1 = a[1] + u.offset[j];
    VertexId b0 = b[0] + u.offset[k], b1 = b[1] + u.offset[k];
    if (crossed) std::swap(b0, b1);
    pairs.emplace_back(a0, b0);
    pairs.emplace_back(a1, b1);
  }
  return join_terminals(u.net, pairs).network.graph;
}

MultiGraph ring_join(const std::vector<Network>& blocks) {
  const unsigned combos = 1u << blocks.size();
  for (unsigned o = 0; o < combos; ++o) {
    MultiGraph g = ring_join(blocks, o);
    if (is_two_edge_connected(g)) return g;
  }
  throw GraphError("no orientation of the ring is bridgeless");
}

MultiGraph build_ring(int n2_copies, bool with_n1) {
  if (n2_copies < 0 || (n2_copies == 0 && !with_n1)) throw GraphError("ring needs at least one block");
  std::vector<Network> blocks(n2_copies, build_N2());
  if (with_n1) blocks.push_back(build_N1());
  MultiGraph g = ring_join(blocks);
  ensure_snark(g, "ring");
  return g;
}

MultiGraph chain_Z(int r) {
  if (r < 2) throw GraphError("chain_Z needs r >= 2");
  std::vector<Network> parts(r, build_Z());
  if (r % 2 == 1) parts.push_back(trivial_supervertex());
  auto u = unite(parts);
  struct Term {
    VertexId id;
    int copy;
  };
  std::vector<Term> terms;
  for (int i = 0; i < r; ++i)
    for (VertexId t : parts[i].terminals) terms.push_back({t + u.offset[i], i});
  std::vector<VertexId> star;
  if (r % 2 == 1)
    for (VertexId t : parts[r].terminals) star.push_back(t + u.offset[r]);

  std::mt19937 rng(20110);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<Term> pool = terms;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::vector<int> used_copy;
    for (VertexId s : star) {
      auto it = std::find_if(pool.begin(), pool.end(), [&](const Term& t) {
        return std::find(used_copy.begin(), used_copy.end(), t.copy) == used_copy.end();
      });
      used_copy.push_back(it->copy);
      pairs.emplace_back(s, it->id);
      pool.erase(it);
    }
    bool ok = true;
    while (ok && !pool.empty()) {
      Term first = pool.front();
      pool.erase(pool.begin());
      auto it = std::find_if(pool.begin(), pool.end(), [&](const Term& t) { return t.copy != first.copy; });
      if (it == pool.end()) {
        ok = false;
        break;
      }
      pairs.emplace_back(first.id, it->id);
      pool.erase(it);
    }
    if (!ok) continue;
    MultiGraph g = join_terminals(u.net, pairs).network.graph;
    auto gi = girth(g);
    if (!gi || *gi < 5 || !is_two_edge_connected(g)) continue;
    if (!is_cyclically_k_connected(g, 5).holds) continue;
    ensure_snark(g, "Z-chain");
    return g;
  }
  throw GraphError("no cyclically 5-connected matching of Z copies was found");
}

LGraph build_L_detail(int r) {
  if (r < 2) throw GraphError("L needs r >= 2");
  Network p3 = build_P3();
  std::vector<Network> parts(r, p3);
  if (r % 2 == 1) parts.push_back(trivial_supervertex());
  auto u = unite(parts);
  auto term = [&](int copy, int i) { return p3.terminals[i] + u.offset[copy]; };

  std::vector<std::pair<VertexId, VertexId>> ring;
  for (int i = 0; i < r; ++i) ring.emplace_back(term(i, 1), term((i + 1) % r, 0));
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  do {
    auto pairs = ring;
    int paired = r % 2 == 0 ? r : r - 3;
    for (int i = 0; i < paired; i += 2) pairs.emplace_back(term(order[i], 2), term(order[i + 1], 2));
    for (int k = 0; paired + k < r; ++k)
      pairs.emplace_back(parts[r].terminals[k] + u.offset[r], term(order[paired + k], 2));
    auto joined = join_terminals(u.net, pairs);
    MultiGraph g = joined.network.graph;
    if (!g.is_cubic() || edge_connectivity(g) != 3) continue;

    LGraph l;
    l.graph = std::move(g);
    for (int i = 0; i < r; ++i) {
      std::vector<VertexId> vs;
      for (VertexId x = 0; x < p3.graph.order(); ++x)
        if (!p3.is_terminal(x)) vs.push_back(joined.vertex_map[x + u.offset[i]]);
      l.copies.push_back(std::move(vs));
    }
    std::vector<VertexId> core_vs;
    for (VertexId x = 0; x < p3.graph.order(); ++x)
      if (!p3.is_terminal(x)) core_vs.push_back(x);
    auto core = induced_subgraph(p3.graph, core_vs);
    VertexId a = core.vertex_map[terminal_neighbour(p3, 0)];
    VertexId b = core.vertex_map[terminal_neighbour(p3, 1)];
    auto path = tree_complement_path(core.graph, a, b, 4);
    std::vector<VertexId> back(core.graph.order());
    for (VertexId x = 0; x < p3.graph.order(); ++x)
      if (core.vertex_map[x] != kNone) back[core.vertex_map[x]] = x;
    Circuit c;
    for (int i = 0; i < r; ++i)
      for (VertexId x : path) c.vertices.push_back(joined.vertex_map[back[x] + u.offset[i]]);
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
      c.edges.push_back(edge_between(l.graph, c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]));
    l.circuit = rotate_to_least(std::move(c));
    if (!is_circuit_of(l.graph, l.circuit)) throw GraphError("L circuit is not a circuit");
    return l;
  } while (std::next_permutation(order.begin(), order.end()));
  throw GraphError("no 3-connected pairing of the leftover terminals was found");
}

MultiGraph build_L(int r) { return build_L_detail(r).graph; }

SuperpositionPlan build_M_plan(const LGraph& l) {
  const MultiGraph& g = l.graph;
  SuperpositionPlan plan = trivial_plan(g);
  const Circuit& c = l.circuit;
  const int n = c.length();
  const Network x = build_X();
  const Network y = build_Y();
  for (int i = 0; i < n; ++i) {
    VertexId v = c.vertices[i];
    EdgeId prev = c.edges[(i + n - 1) % n], next = c.edges[i];
    Network xv = x;
    auto inc = g.incident(v);
    for (int j = 0; j < 3; ++j) {
      if (inc[j] == prev)
        xv.connectors[j] = x.connectors[0];
      else if (inc[j] == next)
        xv.connectors[j] = x.connectors[1];
      else
        xv.connectors[j] = x.connectors[2];
    }
    plan.supervertex[v] = std::move(xv);
    Network ye = y;
    if (g.edge(next).u != v) std::swap(ye.connectors[0], ye.connectors[1]);
    plan.superedge[next] = std::move(ye);
  }
  return plan;
}

MultiGraph build_M(int r) {
  auto l = build_L_detail(r);
  MultiGraph g = superpose(build_M_plan(l)).graph;
  ensure_snark(g, "M");
  return g;
}

}  // namespace snarklab
