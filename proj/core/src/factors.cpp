#include "snarklab/factors.hpp"

#include <algorithm>
#include <queue>

namespace snarklab {

int TwoFactor::odd_count() const {
  return static_cast<int>(std::count_if(circuits.begin(), circuits.end(),
                                        [](const Circuit& c) { return c.odd(); }));
}

std::map<int, int> TwoFactor::length_counts() const {
  std::map<int, int> out;
  for (const auto& c : circuits) ++out[c.length()];
  return out;
}

namespace {

void require_cubic(const MultiGraph& g) {
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3)
      throw GraphError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                       "; a cubic graph is required");
}

class MatchingWalker {
 public:
  explicit MatchingWalker(const MultiGraph& g) : g_(g), mate_edge_(g.order(), kNone) {}

  void run(const std::function<bool(const PerfectMatching&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    rec(0);
  }

 private:
  bool dead(VertexId x) const {
    if (mate_edge_[x] != kNone) return false;
    for (EdgeId e : g_.incident(x))
      if (mate_edge_[g_.other(e, x)] == kNone) return false;
    return true;
  }

  void rec(VertexId from) {
    VertexId u = from;
    while (u < g_.order() && mate_edge_[u] != kNone) ++u;
    if (u == g_.order()) {
      PerfectMatching m;
      for (VertexId v = 0; v < g_.order(); ++v)
        if (g_.edge(mate_edge_[v]).u == v) m.push_back(mate_edge_[v]);
      std::sort(m.begin(), m.end());
      if (!(*visit_)(m)) stop_ = true;
      return;
    }
    for (EdgeId e : g_.incident(u)) {
      if (stop_) return;
      VertexId w = g_.other(e, u);
      if (mate_edge_[w] != kNone) continue;
      mate_edge_[u] = mate_edge_[w] = e;
      bool ok = true;
      for (VertexId x : {u, w})
        for (EdgeId f : g_.incident(x))
          if (dead(g_.other(f, x))) ok = false;
      if (ok) rec(u + 1);
      mate_edge_[u] = mate_edge_[w] = kNone;
    }
  }

  const MultiGraph& g_;
  std::vector<EdgeId> mate_edge_;
  const std::function<bool(const PerfectMatching&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace

void for_each_perfect_matching(const MultiGraph& g,
                               const std::function<bool(const PerfectMatching&)>& visit) {
  if (g.order() % 2) return;
  MatchingWalker(g).run(visit);
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const MultiGraph& g) {
  std::vector<PerfectMatching> out;
  for_each_perfect_matching(g, [&](const PerfectMatching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

bool is_perfect_matching(const MultiGraph& g, std::span<const EdgeId> m) {
  std::vector<int> cover(g.order(), 0);
  for (EdgeId e : m) {
    if (e < 0 || e >= g.size()) return false;
    ++cover[g.edge(e).u];
    ++cover[g.edge(e).v];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

std::optional<TwoFactor> make_two_factor(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<bool> in(g.size(), false);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.size() || in[e]) return std::nullopt;
    in[e] = true;
  }
  std::vector<std::vector<EdgeId>> at(g.order());
  for (EdgeId e : edges) {
    at[g.edge(e).u].push_back(e);
    at[g.edge(e).v].push_back(e);
  }
  for (const auto& a : at)
    if (a.size() != 2) return std::nullopt;
  TwoFactor f;
  f.edges.assign(edges.begin(), edges.end());
  std::sort(f.edges.begin(), f.edges.end());
  std::vector<bool> seen(g.order(), false);
  for (VertexId s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    Circuit c;
    EdgeId e = std::min(at[s][0], at[s][1]);
    VertexId v = s;
    while (true) {
      seen[v] = true;
      c.vertices.push_back(v);
      c.edges.push_back(e);
      v = g.other(e, v);
      if (v == s) break;
      e = at[v][0] == e ? at[v][1] : at[v][0];
    }
    f.circuits.push_back(std::move(c));
  }
  return f;
}

TwoFactor complement_two_factor(const MultiGraph& g, std::span<const EdgeId> matching) {
  std::vector<bool> in(g.size(), false);
  for (EdgeId e : matching) in[e] = true;
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!in[e]) rest.push_back(e);
  auto f = make_two_factor(g, rest);
  if (!f) throw GraphError("complement of the edge set is not a 2-factor");
  return *f;
}

// ---------------------------------------------------------------------------

namespace {

class OddnessSearch {
 public:
  OddnessSearch(const MultiGraph& g, int target) : g_(g), target_(target) {
    const int n = g.order();
    mate_edge_.assign(n, kNone);
    mark_.assign(n, 0);
    // Breadth-first order keeps circuits sealing early.
    std::vector<bool> seen(n, false);
    for (VertexId s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::queue<VertexId> q;
      q.push(s);
      seen[s] = true;
      while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        order_.push_back(v);
        for (EdgeId e : g.incident(v)) {
          VertexId w = g.other(e, v);
          if (!seen[w]) {
            seen[w] = true;
            q.push(w);
          }
        }
      }
    }
  }

  std::optional<std::vector<EdgeId>> run() {
    best_ = g_.order() + 2;
    rec(0, 0);
    if (best_matching_.empty() && g_.order() > 0) return std::nullopt;
    return best_matching_;
  }

  int best() const { return best_; }

 private:
  bool dead(VertexId x) const {
    if (mate_edge_[x] != kNone) return false;
    for (EdgeId e : g_.incident(x))
      if (mate_edge_[g_.other(e, x)] == kNone) return false;
    return true;
  }

  // Length of the 2-factor circuit through v if all its vertices are
  // matched, else 0. Marks visited vertices with `stamp`.
  int sealed_length(VertexId v, int stamp) {
    int len = 0;
    VertexId cur = v;
    EdgeId came = kNone;
    while (true) {
      if (mate_edge_[cur] == kNone) return 0;
      mark_[cur] = stamp;
      ++len;
      EdgeId next = kNone;
      for (EdgeId e : g_.incident(cur))
        if (e != mate_edge_[cur] && e != came) {
          next = e;
          break;
        }
      came = next;
      cur = g_.other(next, cur);
      if (cur == v) return len;
    }
  }

  void rec(std::size_t idx, int odd) {
    while (idx < order_.size() && mate_edge_[order_[idx]] != kNone) ++idx;
    if (idx == order_.size()) {
      if (odd < best_) {
        best_ = odd;
        best_matching_.clear();
        for (VertexId v = 0; v < g_.order(); ++v)
          if (g_.edge(mate_edge_[v]).u == v) best_matching_.push_back(mate_edge_[v]);
        std::sort(best_matching_.begin(), best_matching_.end());
      }
      return;
    }
    VertexId u = order_[idx];
    for (EdgeId e : g_.incident(u)) {
      if (best_ <= target_) return;
      VertexId w = g_.other(e, u);
      if (mate_edge_[w] != kNone) continue;
      mate_edge_[u] = mate_edge_[w] = e;
      bool ok = true;
      for (VertexId x : {u, w})
        for (EdgeId f : g_.incident(x))
          if (dead(g_.other(f, x))) ok = false;
      if (ok) {
        int total = odd;
        ++stamp_;
        int lu = sealed_length(u, stamp_);
        if (lu % 2) ++total;
        if (mark_[w] != stamp_) {
          int lw = sealed_length(w, stamp_);
          if (lw % 2) ++total;
        }
        int bound = total + (total % 2);
        if (bound < best_) rec(idx + 1, total);
      }
      mate_edge_[u] = mate_edge_[w] = kNone;
    }
  }

  const MultiGraph& g_;
  int target_;
  std::vector<VertexId> order_;
  std::vector<EdgeId> mate_edge_;
  std::vector<int> mark_;
  int stamp_ = 0;
  int best_ = 0;
  std::vector<EdgeId> best_matching_;
};

std::optional<OddnessResult> refuse_bridged(const MultiGraph& g) {
  require_cubic(g);
  auto b = bridges(g);
  if (b.empty()) return std::nullopt;
  OddnessResult r;
  r.bridge = b.front();
  return r;
}

}  // namespace

OddnessResult oddness(const MultiGraph& g, OddnessOptions opts) {
  if (auto r = refuse_bridged(g)) return *r;
  int target = std::max(0, opts.lower_bound);
  target += target % 2;
  OddnessSearch search(g, target);
  auto m = search.run();
  if (!m) throw GraphError("bridgeless cubic graph without a perfect matching");
  OddnessResult r;
  r.witness = complement_two_factor(g, *m);
  r.value = r.witness.odd_count();
  return r;
}

OddnessResult oddness_exhaustive(const MultiGraph& g) {
  if (auto r = refuse_bridged(g)) return *r;
  OddnessResult r;
  for_each_perfect_matching(g, [&](const PerfectMatching& m) {
    auto f = complement_two_factor(g, m);
    if (!r.value || f.odd_count() < *r.value) {
      r.value = f.odd_count();
      r.witness = std::move(f);
    }
    return true;
  });
  if (!r.value) throw GraphError("bridgeless cubic graph without a perfect matching");
  return r;
}

SelectionResult min_selected_5circuits(const MultiGraph& g, std::span<const Circuit> candidates) {
  require_cubic(g);
  for (const auto& c : candidates)
    if (c.length() != 5 || !is_circuit_of(g, c)) throw GraphError("candidate is not a 5-circuit of the graph");
  std::optional<SelectionResult> best;
  std::vector<bool> in(g.size());
  for_each_perfect_matching(g, [&](const PerfectMatching& m) {
    std::fill(in.begin(), in.end(), true);
    for (EdgeId e : m) in[e] = false;
    int count = 0;
    for (const auto& c : candidates)
      if (std::all_of(c.edges.begin(), c.edges.end(), [&](EdgeId e) { return in[e]; })) ++count;
    if (!best || count < best->value) best = SelectionResult{count, complement_two_factor(g, m)};
    return best->value > 0;
  });
  if (!best) throw GraphError("graph has no perfect matching");
  return *best;
}

SelectionResult max_selected_edges(const MultiGraph& g, std::span<const EdgeId> s) {
  require_cubic(g);
  std::vector<bool> chosen(g.size(), false);
  for (EdgeId e : s) chosen.at(e) = true;
  const int total = static_cast<int>(std::count(chosen.begin(), chosen.end(), true));
  std::optional<SelectionResult> best;
  for_each_perfect_matching(g, [&](const PerfectMatching& m) {
    int hit = 0;
    for (EdgeId e : m) hit += chosen[e];
    int value = total - hit;
    if (!best || value > best->value) best = SelectionResult{value, complement_two_factor(g, m)};
    return best->value < total;
  });
  if (!best) throw GraphError("graph has no perfect matching");
  return *best;
}

std::vector<EdgeId> special_edges(const MultiGraph& g) {
  require_cubic(g);
  std::vector<bool> on_odd(g.size(), false);
  for_each_perfect_matching(g, [&](const PerfectMatching& m) {
    auto f = complement_two_factor(g, m);
    for (const auto& c : f.circuits)
      if (c.odd())
        for (EdgeId e : c.edges) on_odd[e] = true;
    return true;
  });
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!on_odd[e]) out.push_back(e);
  return out;
}

Rational odd_circuit_bound(int order, int five_circuits) { return Rational(3LL * order + five_circuits, 21); }

RatioBoundReport oddness_ratio_bound(const MultiGraph& g, int omega, std::optional<int> zeta) {
  if (omega <= 0) throw GraphError("oddness ratio needs positive oddness");
  RatioBoundReport r;
  // The Petersen graph is the only cubic graph of order 10 and girth 5.
  r.exempt = g.order() == 10 && g.is_cubic() && girth(g) == 5;
  r.ratio = Rational(g.order(), omega);
  if (!zeta || *zeta >= 5)
    r.bound = Rational(35, 6);
  else if (*zeta >= 3)
    r.bound = Rational(105, 19);
  else
    r.bound = Rational(525, 97);
  r.pass = r.exempt || r.ratio >= r.bound;
  return r;
}

}  // namespace snarklab
