#include "colouring_dp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace snarklab::detail {
namespace {

using u128 = unsigned __int128;

constexpr int kMaxWidth = 42;
constexpr std::size_t kMaxSlots = std::size_t{1} << 25;
constexpr std::size_t kMaxKeptStates = std::size_t{40} << 20;
constexpr u128 kEmpty = ~static_cast<u128>(0);

class StateTable {
 public:
  void reset(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    keys_.assign(cap, kEmpty);
    cost_.assign(cap, 0);
    mask_ = cap - 1;
    count_ = 0;
  }

  void insert_min(u128 key, std::uint8_t cost) {
    if ((count_ + 1) * 10 > keys_.size() * 7) grow();
    std::size_t i = slot(key);
    while (keys_[i] != kEmpty && keys_[i] != key) i = (i + 1) & mask_;
    if (keys_[i] == kEmpty) {
      keys_[i] = key;
      cost_[i] = cost;
      ++count_;
    } else if (cost < cost_[i]) {
      cost_[i] = cost;
    }
  }

  int find(u128 key) const {
    if (keys_.empty()) return -1;
    std::size_t i = slot(key);
    while (keys_[i] != kEmpty) {
      if (keys_[i] == key) return cost_[i];
      i = (i + 1) & mask_;
    }
    return -1;
  }

  std::size_t size() const { return count_; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < keys_.size(); ++i)
      if (keys_[i] != kEmpty) f(keys_[i], cost_[i]);
  }

 private:
  std::size_t slot(u128 key) const {
    auto lo = static_cast<std::uint64_t>(key);
    auto hi = static_cast<std::uint64_t>(key >> 64);
    std::uint64_t h = (lo ^ (hi * 0x9e3779b97f4a7c15ULL)) * 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
    return static_cast<std::size_t>(h) & mask_;
  }

  void grow() {
    if (keys_.size() * 2 > kMaxSlots) throw std::length_error("state space too large for the colouring engine");
    std::vector<u128> old_keys = std::move(keys_);
    std::vector<std::uint8_t> old_cost = std::move(cost_);
    keys_.assign(old_keys.size() * 2, kEmpty);
    cost_.assign(old_keys.size() * 2, 0);
    mask_ = keys_.size() - 1;
    count_ = 0;
    for (std::size_t i = 0; i < old_keys.size(); ++i)
      if (old_keys[i] != kEmpty) insert_min(old_keys[i], old_cost[i]);
  }

  std::vector<u128> keys_;
  std::vector<std::uint8_t> cost_;
  std::size_t mask_ = 0;
  std::size_t count_ = 0;
};

struct Step {
  VertexId v = kNone;
  std::vector<int> closed;          // positions in the previous frontier
  std::vector<int> kept;            // previous positions surviving, in order
  std::vector<EdgeId> fresh;        // new frontier edges, appended after the kept ones
  std::vector<VertexId> fresh_end;  // unprocessed endpoint of each fresh edge
  int width_before = 0;
  int width_after = 0;
};

struct Plan {
  std::vector<Step> steps;
  std::vector<EdgeId> final_frontier;
};

// Greedy elimination order that keeps the frontier narrow.
std::vector<VertexId> greedy_order(const MultiGraph& g, const std::vector<bool>& processable,
                                   VertexId start, int& max_width, double& score) {
  const int n = g.order();
  std::vector<bool> done(n, false);
  std::vector<int> done_nb(n, 0);  // processed neighbours, counted with multiplicity
  std::vector<VertexId> order;
  int remaining = 0;
  for (VertexId v = 0; v < n; ++v) remaining += processable[v];
  int width = 0;
  max_width = 0;
  score = 0;
  VertexId next = start;
  while (remaining > 0) {
    if (next == kNone) {
      int best_delta = 1 << 30, best_closed = -1;
      for (VertexId v = 0; v < n; ++v) {
        if (!processable[v] || done[v]) continue;
        int closed = done_nb[v];
        int delta = g.degree(v) - 2 * closed;
        bool better;
        if ((closed > 0) != (best_closed > 0))
          better = closed > 0;
        else
          better = best_closed < 0 || delta < best_delta || (delta == best_delta && closed > best_closed);
        if (better) {
          best_delta = delta;
          best_closed = closed;
          next = v;
        }
      }
    }
    VertexId v = next;
    next = kNone;
    done[v] = true;
    --remaining;
    order.push_back(v);
    width += g.degree(v) - 2 * done_nb[v];
    for (EdgeId e : g.incident(v)) ++done_nb[g.other(e, v)];
    max_width = std::max(max_width, width);
    score += std::pow(3.0, width);
  }
  return order;
}

std::vector<VertexId> best_order(const MultiGraph& g, const std::vector<bool>& processable, int& best_width) {
  const int n = g.order();
  std::vector<VertexId> starts;
  for (VertexId v = 0; v < n; ++v)
    if (processable[v]) starts.push_back(v);
  if (starts.size() > 48) {
    std::vector<VertexId> spread;
    for (std::size_t k = 0; k < 48; ++k) spread.push_back(starts[k * starts.size() / 48]);
    starts = spread;
  }
  std::vector<VertexId> order;
  best_width = 1 << 30;
  double best_score = 0;
  for (VertexId s : starts) {
    int w;
    double score;
    auto o = greedy_order(g, processable, s, w, score);
    if (w < best_width || (w == best_width && score < best_score)) {
      best_width = w;
      best_score = score;
      order = std::move(o);
    }
  }
  if (starts.empty()) {
    double score;
    order = greedy_order(g, processable, kNone, best_width, score);
  }
  return order;
}

Plan make_plan(const MultiGraph& g, const std::vector<bool>& processable) {
  const int n = g.order();
  int width;
  auto order = best_order(g, processable, width);

  Plan plan;
  std::vector<bool> done(n, false);
  std::vector<EdgeId> frontier;
  for (VertexId v : order) {
    Step st;
    st.v = v;
    st.width_before = static_cast<int>(frontier.size());
    for (std::size_t p = 0; p < frontier.size(); ++p) {
      const Edge& ed = g.edge(frontier[p]);
      if (ed.u == v || ed.v == v) {
        st.closed.push_back(static_cast<int>(p));
      } else {
        st.kept.push_back(static_cast<int>(p));
      }
    }
    done[v] = true;
    std::vector<EdgeId> next;
    for (int p : st.kept) next.push_back(frontier[p]);
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other(e, v);
      if (done[w]) continue;
      st.fresh.push_back(e);
      st.fresh_end.push_back(w);
      next.push_back(e);
    }
    frontier = std::move(next);
    st.width_after = static_cast<int>(frontier.size());
    if (st.width_after > kMaxWidth) throw std::length_error("frontier too wide for the colouring engine");
    plan.steps.push_back(std::move(st));
  }
  plan.final_frontier = frontier;
  return plan;
}

inline int sym_at(u128 s, int p) { return static_cast<int>((s >> (3 * p)) & 7); }

u128 pack(const std::uint8_t* sym, int w) {
  u128 s = 0;
  for (int p = w - 1; p >= 0; --p) s = (s << 3) | sym[p];
  return s;
}

// Renames colours in order of first appearance.
u128 canonical(const std::uint8_t* sym, int w) {
  std::uint8_t map[8] = {0, 0, 0, 0, 4, 5, 6, 7};
  std::uint8_t next = 1;
  std::uint8_t tmp[kMaxWidth];
  for (int p = 0; p < w; ++p) {
    std::uint8_t x = sym[p];
    if (x >= 1 && x <= 3) {
      if (!map[x]) map[x] = next++;
      x = map[x];
    }
    tmp[p] = x;
  }
  return pack(tmp, w);
}

class Engine {
 public:
  Engine(const Problem& p) : p_(p), g_(*p.graph), plan_(make_plan(g_, p.processable)) {}

  // Runs forward; keeps every layer when `keep_layers`.
  bool forward(bool keep_layers) {
    StateTable cur;
    cur.reset(1);
    cur.insert_min(0, 0);
    if (keep_layers) layers_.push_back(cur);
    for (const Step& st : plan_.steps) {
      StateTable nxt;
      nxt.reset(cur.size());
      std::uint8_t before[kMaxWidth], after[kMaxWidth];
      cur.for_each([&](u128 s, std::uint8_t cost) {
        for (int p = 0; p < st.width_before; ++p) before[p] = static_cast<std::uint8_t>(sym_at(s, p));
        int k = 0;
        for (int p : st.kept) after[k++] = before[p];
        expand(st, before, after, k, cost, nxt);
      });
      if (nxt.size() == 0) return false;
      cur = std::move(nxt);
      if (keep_layers) {
        kept_states_ += cur.size();
        if (kept_states_ > kMaxKeptStates) throw std::length_error("state space too large for the colouring engine");
        layers_.push_back(cur);
      }
    }
    final_ = std::move(cur);
    return true;
  }

  const StateTable& final_layer() const { return final_; }
  const Plan& plan() const { return plan_; }

  Solution reconstruct(u128 final_state, int final_cost) const {
    Solution sol;
    sol.cost = final_cost;
    sol.colouring.assign(g_.size(), kNoColour);
    std::vector<std::uint8_t> cur(plan_.final_frontier.size());
    for (std::size_t p = 0; p < cur.size(); ++p) cur[p] = static_cast<std::uint8_t>(sym_at(final_state, p));
    for (std::size_t p = 0; p < cur.size(); ++p) record(plan_.final_frontier[p], cur[p], sol);
    int cost = final_cost;
    for (int i = static_cast<int>(plan_.steps.size()) - 1; i >= 0; --i) {
      const Step& st = plan_.steps[i];
      const StateTable& prev = layers_[i];
      std::vector<std::uint8_t> before(st.width_before);
      for (std::size_t k = 0; k < st.kept.size(); ++k) before[st.kept[k]] = cur[k];
      const std::uint8_t* fresh = cur.data() + st.kept.size();
      bool found = false;
      const int nc = static_cast<int>(st.closed.size());
      const int alphabet = p_.deletion == Deletion::none ? 3 : p_.deletion == Deletion::edge ? 4 : 5;
      int combos = 1;
      for (int k = 0; k < nc; ++k) combos *= alphabet;
      for (int del = 0; del <= (p_.deletion == Deletion::vertex ? 1 : 0) && !found; ++del) {
        for (int code = 0; code < combos && !found; ++code) {
          int c = code;
          std::uint8_t closed[3];
          for (int k = 0; k < nc; ++k) {
            closed[k] = static_cast<std::uint8_t>(1 + c % alphabet);
            c /= alphabet;
            before[st.closed[k]] = closed[k];
          }
          int delta = 0;
          if (!transition_ok(st, closed, del, fresh, delta)) continue;
          int pc = prev.find(canonical(before.data(), st.width_before));
          if (pc < 0 || pc + delta != cost) continue;
          found = true;
          cost = pc;
          for (int k = 0; k < nc; ++k) {
            record(edge_at_closed(i, k), closed[k], sol);
          }
          if (del) sol.deleted.push_back(st.v);
        }
      }
      if (!found) throw std::logic_error("colouring witness reconstruction failed");
      cur = before;
    }
    std::sort(sol.deleted.begin(), sol.deleted.end());
    return sol;
  }

 private:
  bool can_promise(VertexId w) const {
    return p_.processable[w] && (p_.forced.empty() || p_.forced[w] != 0);
  }
  int forced(int id) const { return p_.forced.empty() ? -1 : p_.forced[id]; }

  void emit(const std::uint8_t* after, int w, int cost, StateTable& nxt) const {
    if (cost > p_.max_cost) return;
    nxt.insert_min(canonical(after, w), static_cast<std::uint8_t>(cost));
  }

  void expand(const Step& st, const std::uint8_t* before, std::uint8_t* after, int k, int cost,
              StateTable& nxt) const {
    const int nf = static_cast<int>(st.fresh.size());
    const int w = k + nf;
    int used = 0;
    bool keep_ok = true, has_promise = false, all_gone = true;
    for (int p : st.closed) {
      int x = before[p];
      if (x <= 3) {
        all_gone = false;
        if (used & (1 << x)) keep_ok = false;
        used |= 1 << x;
      } else if (x == kPromise) {
        has_promise = true;
      }
    }
    if (p_.deletion == Deletion::vertex) {
      if (has_promise || forced(st.v) == 1) keep_ok = false;
      if (all_gone && forced(st.v) != 0) {
        for (int j = 0; j < nf; ++j) after[k + j] = kAbsent;
        emit(after, w, cost + 1, nxt);
      }
    }
    if (!keep_ok) return;
    fill_fresh(st, after, k, 0, used, cost, nxt);
  }

  void fill_fresh(const Step& st, std::uint8_t* after, int k, int j, int used, int cost,
                  StateTable& nxt) const {
    const int nf = static_cast<int>(st.fresh.size());
    if (cost > p_.max_cost) return;
    if (j == nf) {
      emit(after, k + nf, cost, nxt);
      return;
    }
    const EdgeId e = st.fresh[j];
    bool colour_ok = true;
    if (p_.deletion == Deletion::edge && forced(e) == 1) colour_ok = false;
    if (colour_ok) {
      for (int c = 1; c <= 3; ++c) {
        if (used & (1 << c)) continue;
        after[k + j] = static_cast<std::uint8_t>(c);
        fill_fresh(st, after, k, j + 1, used | (1 << c), cost, nxt);
      }
    }
    if (p_.deletion == Deletion::vertex && can_promise(st.fresh_end[j])) {
      after[k + j] = kPromise;
      fill_fresh(st, after, k, j + 1, used, cost, nxt);
    }
    if (p_.deletion == Deletion::edge && forced(e) != 0) {
      after[k + j] = kAbsent;
      fill_fresh(st, after, k, j + 1, used, cost + 1, nxt);
    }
  }

  // Checks that processing st.v with the given closed and fresh symbols is a
  // legal move, and reports its cost.
  bool transition_ok(const Step& st, const std::uint8_t* closed, int del, const std::uint8_t* fresh,
                     int& delta) const {
    const int nc = static_cast<int>(st.closed.size());
    const int nf = static_cast<int>(st.fresh.size());
    delta = 0;
    if (del) {
      if (forced(st.v) == 0) return false;
      for (int k = 0; k < nc; ++k)
        if (closed[k] <= 3) return false;
      for (int j = 0; j < nf; ++j)
        if (fresh[j] != kAbsent) return false;
      delta = 1;
      return true;
    }
    if (p_.deletion == Deletion::vertex && forced(st.v) == 1) return false;
    int used = 0;
    auto take = [&](int x) {
      if (x > 3) return true;
      if (used & (1 << x)) return false;
      used |= 1 << x;
      return true;
    };
    for (int k = 0; k < nc; ++k) {
      int x = closed[k];
      if (p_.deletion == Deletion::none && x > 3) return false;
      if (p_.deletion == Deletion::edge && x == kPromise) return false;
      if (p_.deletion == Deletion::vertex && x == kPromise) return false;
      if (!take(x)) return false;
    }
    for (int j = 0; j < nf; ++j) {
      int x = fresh[j];
      EdgeId e = st.fresh[j];
      if (x == kPromise) {
        if (p_.deletion != Deletion::vertex || !can_promise(st.fresh_end[j])) return false;
      } else if (x == kAbsent) {
        if (p_.deletion != Deletion::edge || forced(e) == 0) return false;
        ++delta;
      } else {
        if (p_.deletion == Deletion::edge && forced(e) == 1) return false;
        if (!take(x)) return false;
      }
    }
    return true;
  }

  EdgeId edge_at_closed(int step, int k) const { return closed_edges_[step][k]; }

  void record(EdgeId e, int sym, Solution& sol) const {
    if (sym >= 1 && sym <= 3) {
      sol.colouring[e] = static_cast<Colour>(sym);
    } else if (sym == kAbsent && p_.deletion == Deletion::edge) {
      sol.deleted.push_back(e);
    }
  }

 public:
  void index_closed_edges() {
    // Frontier contents per layer, to name the edges closed at each step.
    std::vector<EdgeId> frontier;
    closed_edges_.clear();
    for (const Step& st : plan_.steps) {
      std::vector<EdgeId> closed;
      for (int p : st.closed) closed.push_back(frontier[p]);
      closed_edges_.push_back(closed);
      std::vector<EdgeId> next;
      for (int p : st.kept) next.push_back(frontier[p]);
      for (EdgeId e : st.fresh) next.push_back(e);
      frontier = std::move(next);
    }
  }

 private:
  const Problem& p_;
  const MultiGraph& g_;
  Plan plan_;
  std::vector<StateTable> layers_;
  std::size_t kept_states_ = 0;
  StateTable final_;
  std::vector<std::vector<EdgeId>> closed_edges_;
};

}  // namespace

std::optional<Solution> solve(const Problem& p, bool want_witness) {
  Engine eng(p);
  if (!eng.forward(want_witness)) return std::nullopt;
  u128 best_state = 0;
  int best_cost = 1 << 30;
  eng.final_layer().for_each([&](u128 s, std::uint8_t c) {
    if (c < best_cost || (c == best_cost && s < best_state)) {
      best_cost = c;
      best_state = s;
    }
  });
  if (best_cost == (1 << 30)) return std::nullopt;
  if (!want_witness) {
    Solution sol;
    sol.cost = best_cost;
    return sol;
  }
  eng.index_closed_edges();
  return eng.reconstruct(best_state, best_cost);
}

OpenStates open_states(const Problem& p) {
  Engine eng(p);
  OpenStates out;
  out.open_edges = eng.plan().final_frontier;
  if (!eng.forward(false)) return out;
  const int w = static_cast<int>(out.open_edges.size());
  eng.final_layer().for_each([&](u128 s, std::uint8_t) {
    std::vector<int> sym(w);
    for (int q = 0; q < w; ++q) sym[q] = sym_at(s, q);
    out.states.push_back(std::move(sym));
  });
  std::sort(out.states.begin(), out.states.end());
  return out;
}

int plan_width(const Problem& p) {
  int width;
  best_order(*p.graph, p.processable, width);
  return width;
}

}  // namespace snarklab::detail
