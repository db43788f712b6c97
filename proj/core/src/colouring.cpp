#include "snarklab/colouring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "colouring_dp.hpp"
#include "colouring_tree.hpp"

namespace snarklab {

bool is_proper_partial(const MultiGraph& g, const EdgeColouring& c) {
  if (static_cast<int>(c.size()) != g.size()) return false;
  for (Colour x : c)
    if (x > 3) return false;
  for (VertexId v = 0; v < g.order(); ++v) {
    int used = 0;
    for (EdgeId e : g.incident(v)) {
      Colour x = c[e];
      if (x == kNoColour) continue;
      if (used & (1 << x)) return false;
      used |= 1 << x;
    }
  }
  return true;
}

bool is_proper(const MultiGraph& g, const EdgeColouring& c) {
  if (static_cast<int>(c.size()) != g.size()) return false;
  for (Colour x : c)
    if (x == kNoColour) return false;
  return is_proper_partial(g, c);
}

namespace {

void require_subcubic(const MultiGraph& g) {
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) > 3)
      throw GraphError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                       "; colouring needs maximum degree 3");
}

void require_network(const Network& n) {
  for (const auto& viol : validate(n))
    throw GraphError("invalid network: " + viol.message);
}

detail::Problem plain_problem(const MultiGraph& g) {
  detail::Problem p;
  p.graph = &g;
  p.processable.assign(g.order(), true);
  return p;
}

detail::Problem network_problem(const Network& n) {
  detail::Problem p;
  p.graph = &n.graph;
  p.processable.assign(n.graph.order(), true);
  for (VertexId t : n.terminals) p.processable[t] = false;
  return p;
}

bool prefer_carving(const detail::Problem& p) {
  const int pw = detail::plan_width(p);
  return pw > 18 && detail::carving_width(*p.graph) < pw;
}

std::optional<EdgeColouring> solve_colouring(const detail::Problem& p, bool want_witness) {
  if (prefer_carving(p)) return detail::carving_colouring(*p.graph, p.processable, want_witness);
  auto sol = detail::solve(p, want_witness);
  if (!sol) return std::nullopt;
  return sol->colouring;
}

}  // namespace

std::optional<EdgeColouring> find_colouring(const MultiGraph& g) {
  require_subcubic(g);
  auto p = plain_problem(g);
  try {
    return solve_colouring(p, true);
  } catch (const std::length_error&) {
    return backtrack_colouring(g);
  }
}

std::optional<EdgeColouring> find_colouring(const Network& n) {
  require_network(n);
  auto p = network_problem(n);
  auto col = solve_colouring(p, true);
  if (!col) return std::nullopt;
  for (EdgeId e = 0; e < n.graph.size(); ++e)
    if ((*col)[e] == kNoColour) (*col)[e] = 1;  // terminal-to-terminal edge
  return col;
}

bool is_colourable(const MultiGraph& g) {
  require_subcubic(g);
  auto p = plain_problem(g);
  try {
    return solve_colouring(p, false).has_value();
  } catch (const std::length_error&) {
    return backtrack_colouring(g).has_value();
  }
}

bool is_colourable(const Network& n) {
  require_network(n);
  auto p = network_problem(n);
  return solve_colouring(p, false).has_value();
}

std::vector<BoundaryColouring> boundary_colourings(const Network& n) {
  require_network(n);
  auto p = network_problem(n);
  auto open = detail::open_states(p);
  const int k = n.terminal_count();
  // For each terminal: position among open edges, or the index of its free
  // terminal-to-terminal edge.
  std::vector<int> pos(k, -1), free_slot(k, -1);
  std::vector<EdgeId> free_edges;
  for (int i = 0; i < k; ++i) {
    EdgeId e = n.terminal_edge(i);
    auto it = std::find(open.open_edges.begin(), open.open_edges.end(), e);
    if (it != open.open_edges.end()) {
      pos[i] = static_cast<int>(it - open.open_edges.begin());
      continue;
    }
    auto f = std::find(free_edges.begin(), free_edges.end(), e);
    if (f == free_edges.end()) {
      free_edges.push_back(e);
      free_slot[i] = static_cast<int>(free_edges.size()) - 1;
    } else {
      free_slot[i] = static_cast<int>(f - free_edges.begin());
    }
  }
  static const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  std::set<BoundaryColouring> out;
  int free_combos = 1;
  for (std::size_t j = 0; j < free_edges.size(); ++j) free_combos *= 3;
  for (const auto& st : open.states) {
    for (const auto& perm : perms) {
      for (int code = 0; code < free_combos; ++code) {
        BoundaryColouring b(k);
        for (int i = 0; i < k; ++i) {
          if (pos[i] >= 0) {
            b[i] = static_cast<Colour>(perm[st[pos[i]] - 1]);
          } else {
            int c = code;
            for (int j = 0; j < free_slot[i]; ++j) c /= 3;
            b[i] = static_cast<Colour>(1 + c % 3);
          }
        }
        out.insert(std::move(b));
      }
    }
  }
  return {out.begin(), out.end()};
}

ParityReport verify_parity(const EdgeColouring& c, std::span<const EdgeId> cut) {
  ParityReport r;
  bool all_coloured = true;
  for (EdgeId e : cut) {
    Colour x = c.at(e);
    if (x >= 1 && x <= 3)
      ++r.counts[x - 1];
    else
      all_coloured = false;
  }
  const int m = static_cast<int>(cut.size()) % 2;
  r.holds = all_coloured && r.counts[0] % 2 == m && r.counts[1] % 2 == m && r.counts[2] % 2 == m;
  return r;
}

namespace {

detail::Problem deletion_problem(const MultiGraph& g, DeletionMode mode, int max_cost) {
  detail::Problem p = plain_problem(g);
  p.deletion = mode == DeletionMode::vertex ? detail::Deletion::vertex : detail::Deletion::edge;
  p.max_cost = max_cost;
  p.forced.assign(mode == DeletionMode::vertex ? g.order() : g.size(), -1);
  return p;
}

}  // namespace

ResistanceResult resistance(const MultiGraph& g, DeletionMode mode, ResistanceOptions opts) {
  require_subcubic(g);
  ResistanceResult r;
  r.witness.mode = mode;
  const int universe = mode == DeletionMode::vertex ? g.order() : g.size();
  int k = 0;
  std::optional<detail::Solution> sol;
  for (; k <= universe; ++k) {
    auto p = deletion_problem(g, mode, k);
    sol = detail::solve(p, !opts.lex_least);
    if (sol) break;
  }
  if (!sol) throw std::logic_error("resistance: no deletion set found");
  r.value = k;
  if (opts.lex_least && k > 0) {
    auto p = deletion_problem(g, mode, k);
    int chosen = 0;
    for (int x = 0; x < universe && chosen < k; ++x) {
      p.forced[x] = 1;
      if (detail::solve(p, false)) {
        ++chosen;
      } else {
        p.forced[x] = 0;
      }
    }
    for (int x = 0; x < universe; ++x)
      if (p.forced[x] == -1) p.forced[x] = 0;
    sol = detail::solve(p, true);
    if (!sol) throw std::logic_error("resistance: lexicographic witness lost");
  } else if (opts.lex_least) {
    auto p = deletion_problem(g, mode, 0);
    sol = detail::solve(p, true);
  }
  r.witness.removed = sol->deleted;
  r.witness.colouring = sol->colouring;
  return r;
}

bool resistance_at_least(const MultiGraph& g, int k, DeletionMode mode) {
  require_subcubic(g);
  if (k <= 0) return true;
  auto p = deletion_problem(g, mode, k - 1);
  if (!prefer_carving(p)) return !detail::solve(p, false).has_value();
  // Deleting more never hurts, so it suffices to try every set of exactly k-1.
  const int universe = mode == DeletionMode::vertex ? g.order() : g.size();
  if (k - 1 > universe) return false;
  std::vector<int> pick(k - 1);
  for (int i = 0; i < k - 1; ++i) pick[i] = i;
  while (true) {
    MultiGraph h = mode == DeletionMode::vertex
                       ? remove_vertices(g, std::vector<VertexId>(pick.begin(), pick.end())).graph
                       : remove_edges(g, std::vector<EdgeId>(pick.begin(), pick.end())).graph;
    if (is_colourable(h)) return false;
    int i = k - 2;
    while (i >= 0 && pick[i] == universe - (k - 1) + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < k - 1; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool verify_witness(const MultiGraph& g, const DeletionWitness& w) {
  if (static_cast<int>(w.colouring.size()) != g.size()) return false;
  std::vector<bool> gone_vertex(g.order(), false), gone_edge(g.size(), false);
  for (int x : w.removed) {
    if (w.mode == DeletionMode::vertex) {
      if (x < 0 || x >= g.order()) return false;
      gone_vertex[x] = true;
    } else {
      if (x < 0 || x >= g.size()) return false;
      gone_edge[x] = true;
    }
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    bool absent = gone_edge[e] || gone_vertex[ed.u] || gone_vertex[ed.v];
    if (absent != (w.colouring[e] == kNoColour)) return false;
  }
  return is_proper_partial(g, w.colouring);
}

// ---------------------------------------------------------------------------

namespace {

// Vertex-set coboundaries of size 2 or 3 with one side entirely cubic.
std::vector<std::vector<EdgeId>> small_cuts(const MultiGraph& g) {
  std::set<std::vector<EdgeId>> cuts;
  const int m = g.size();
  auto add_side_of = [&](const MultiGraph& h, const std::vector<EdgeId>& h_to_g, EdgeId bridge_in_h) {
    // The component of one endpoint of the bridge after removing it.
    const Edge& b = h.edge(bridge_in_h);
    std::vector<bool> side(g.order(), false);
    std::vector<VertexId> stack{b.u};
    side[b.u] = true;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : h.incident(v)) {
        if (e == bridge_in_h) continue;
        VertexId w = h.other(e, v);
        if (!side[w]) {
          side[w] = true;
          stack.push_back(w);
        }
      }
    }
    (void)h_to_g;
    std::vector<EdgeId> cut;
    for (EdgeId e = 0; e < m; ++e)
      if (side[g.edge(e).u] != side[g.edge(e).v]) cut.push_back(e);
    if (cut.size() < 2 || cut.size() > 3) return;
    bool in_cubic = true, out_cubic = true;
    for (VertexId v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 3) continue;
      if (side[v])
        in_cubic = false;
      else
        out_cubic = false;
    }
    if (in_cubic || out_cubic) cuts.insert(cut);
  };
  auto scan = [&](std::vector<EdgeId> removed) {
    auto r = remove_edges(g, removed);
    std::vector<EdgeId> back(r.graph.size());
    for (EdgeId e = 0; e < m; ++e)
      if (r.edge_map[e] != kNone) back[r.edge_map[e]] = e;
    // remove_edges keeps vertex ids, so sides transfer directly.
    for (EdgeId b : bridges(r.graph)) add_side_of(r.graph, back, b);
  };
  for (EdgeId e = 0; e < m; ++e) scan({e});
  if (m <= 200)
    for (EdgeId e = 0; e < m; ++e)
      for (EdgeId f = e + 1; f < m; ++f) scan({e, f});
  return {cuts.begin(), cuts.end()};
}

class Backtracker {
 public:
  explicit Backtracker(const MultiGraph& g) : g_(g), colour_(g.size(), kNoColour) {
    cuts_ = small_cuts(g);
    cuts_of_edge_.resize(g.size());
    for (std::size_t i = 0; i < cuts_.size(); ++i)
      for (EdgeId e : cuts_[i]) cuts_of_edge_[e].push_back(static_cast<int>(i));
  }

  std::optional<EdgeColouring> run() {
    if (search(0)) return colour_;
    return std::nullopt;
  }

 private:
  int used_at(VertexId v) const {
    int used = 0;
    for (EdgeId e : g_.incident(v))
      if (colour_[e]) used |= 1 << colour_[e];
    return used;
  }

  bool cuts_ok(EdgeId e) const {
    for (int i : cuts_of_edge_[e]) {
      const auto& cut = cuts_[i];
      int count[4] = {0, 0, 0, 0};
      bool complete = true;
      for (EdgeId f : cut) {
        if (colour_[f])
          ++count[colour_[f]];
        else
          complete = false;
      }
      if (cut.size() == 2) {
        if (complete && count[1] % 2 + count[2] % 2 + count[3] % 2 != 0) return false;
      } else {
        if (count[1] > 1 || count[2] > 1 || count[3] > 1) return false;
      }
    }
    return true;
  }

  bool search(int coloured) {
    if (coloured == g_.size()) return true;
    EdgeId pick = kNone;
    int best_options = 4, best_context = -1;
    for (EdgeId e = 0; e < g_.size(); ++e) {
      if (colour_[e]) continue;
      const Edge& ed = g_.edge(e);
      int used = used_at(ed.u) | used_at(ed.v);
      int options = 3 - __builtin_popcount(used & 0b1110);
      int context = __builtin_popcount(used);
      if (options < best_options || (options == best_options && context > best_context)) {
        best_options = options;
        best_context = context;
        pick = e;
      }
    }
    if (best_options == 0) return false;
    const Edge& ed = g_.edge(pick);
    int used = used_at(ed.u) | used_at(ed.v);
    for (int c = 1; c <= 3; ++c) {
      if (used & (1 << c)) continue;
      colour_[pick] = static_cast<Colour>(c);
      if (cuts_ok(pick) && search(coloured + 1)) return true;
      colour_[pick] = kNoColour;
      if (coloured == 0) break;  // colour symmetry: the first edge may take colour 1
    }
    return false;
  }

  const MultiGraph& g_;
  EdgeColouring colour_;
  std::vector<std::vector<EdgeId>> cuts_;
  std::vector<std::vector<int>> cuts_of_edge_;
};

}  // namespace

std::optional<EdgeColouring> backtrack_colouring(const MultiGraph& g) {
  require_subcubic(g);
  return Backtracker(g).run();
}

}  // namespace snarklab
