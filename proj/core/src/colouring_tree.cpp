#include "colouring_tree.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <tuple>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace snarklab::detail {
namespace {

using Code = std::uint64_t;
inline constexpr int kMaxWidth = 32;
inline constexpr std::size_t kMaxStates = std::size_t{24} << 20;

int get(Code c, int i) { return static_cast<int>((c >> (2 * i)) & 3u); }
Code put(Code c, int i, int colour) { return c | (static_cast<Code>(colour) << (2 * i)); }

// Renames colours in order of first appearance.
Code canonical(Code c, int width) {
  int rename[4] = {0, 0, 0, 0};
  int next = 1;
  Code out = 0;
  for (int i = 0; i < width; ++i) {
    int x = get(c, i);
    if (x == 0) continue;
    if (rename[x] == 0) rename[x] = next++;
    out = put(out, i, rename[x]);
  }
  return out;
}

Code permute(Code c, int width, const int* perm) {
  Code out = 0;
  for (int i = 0; i < width; ++i) {
    int x = get(c, i);
    if (x) out = put(out, i, perm[x]);
  }
  return out;
}

const int kPerms[6][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1}};

struct Node {
  int left = -1, right = -1;
  VertexId vertex = kNone;
  std::vector<EdgeId> boundary;  // sorted
  std::vector<Code> states;      // sorted canonical codes
};

std::vector<EdgeId> boundary_of(const MultiGraph& g, const std::vector<int>& cluster, int id) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.size(); ++e)
    if ((cluster[g.edge(e).u] == id) != (cluster[g.edge(e).v] == id)) out.push_back(e);
  return out;
}

// Greedy agglomeration: repeatedly merge the two adjacent clusters whose union
// has the smallest boundary.
std::vector<Node> decompose(const MultiGraph& g) {
  const int n = g.order();
  std::vector<Node> nodes;
  std::vector<int> cluster(n);  // vertex -> node index of its current cluster
  std::map<int, int> size;      // live cluster -> vertex count
  std::map<int, int> bsize;     // live cluster -> boundary size
  for (VertexId v = 0; v < n; ++v) {
    Node leaf;
    leaf.vertex = v;
    for (EdgeId e : g.incident(v)) leaf.boundary.push_back(e);
    std::sort(leaf.boundary.begin(), leaf.boundary.end());
    cluster[v] = static_cast<int>(nodes.size());
    size[cluster[v]] = 1;
    bsize[cluster[v]] = static_cast<int>(leaf.boundary.size());
    nodes.push_back(std::move(leaf));
  }
  while (size.size() > 1) {
    std::map<std::pair<int, int>, int> between;
    for (const Edge& e : g.edges()) {
      int a = cluster[e.u], b = cluster[e.v];
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      ++between[{a, b}];
    }
    std::pair<int, int> best{-1, -1};
    std::tuple<int, int> best_key{1 << 30, 1 << 30};
    for (const auto& [pair, count] : between) {
      int nb = bsize[pair.first] + bsize[pair.second] - 2 * count;
      std::tuple<int, int> key{nb, size[pair.first] + size[pair.second]};
      if (key < best_key) {
        best_key = key;
        best = pair;
      }
    }
    if (best.first < 0) {
      auto it = size.begin();
      best.first = it->first;
      best.second = std::next(it)->first;
    }
    Node parent;
    parent.left = best.first;
    parent.right = best.second;
    const int id = static_cast<int>(nodes.size());
    for (VertexId v = 0; v < n; ++v)
      if (cluster[v] == best.first || cluster[v] == best.second) cluster[v] = id;
    parent.boundary = boundary_of(g, cluster, id);
    size[id] = size[best.first] + size[best.second];
    bsize[id] = static_cast<int>(parent.boundary.size());
    size.erase(best.first);
    size.erase(best.second);
    bsize.erase(best.first);
    bsize.erase(best.second);
    nodes.push_back(std::move(parent));
  }
  return nodes;
}

int width_of(const std::vector<Node>& nodes) {
  int w = 0;
  for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.boundary.size()));
  return w;
}

void leaf_states(Node& nd, bool constrained) {
  const int d = static_cast<int>(nd.boundary.size());
  std::unordered_set<Code> seen;
  int total = 1;
  for (int i = 0; i < d; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    Code c = 0;
    int used = 0, x = code;
    bool ok = true;
    for (int i = 0; i < d; ++i) {
      int colour = x % 3 + 1;
      x /= 3;
      if (constrained && (used & (1 << colour))) ok = false;
      used |= 1 << colour;
      c = put(c, i, colour);
    }
    if (ok) seen.insert(canonical(c, d));
  }
  nd.states.assign(seen.begin(), seen.end());
  std::sort(nd.states.begin(), nd.states.end());
}

struct Layout {
  std::vector<EdgeId> shared;
  std::vector<int> a_shared, a_out;  // per position of the child boundary
  std::vector<int> b_shared, b_out;
};

Layout layout(const Node& parent, const Node& a, const Node& b) {
  Layout l;
  std::set_intersection(a.boundary.begin(), a.boundary.end(), b.boundary.begin(), b.boundary.end(),
                        std::back_inserter(l.shared));
  auto index = [](const std::vector<EdgeId>& v, EdgeId e) {
    auto it = std::lower_bound(v.begin(), v.end(), e);
    return it != v.end() && *it == e ? static_cast<int>(it - v.begin()) : -1;
  };
  for (EdgeId e : a.boundary) {
    l.a_shared.push_back(index(l.shared, e));
    l.a_out.push_back(index(parent.boundary, e));
  }
  for (EdgeId e : b.boundary) {
    l.b_shared.push_back(index(l.shared, e));
    l.b_out.push_back(index(parent.boundary, e));
  }
  return l;
}

// Splits a child state into its shared-edge key (canonicalised) and its part
// of the parent boundary, renamed consistently with the key.
std::pair<Code, Code> split_state(Code s, int width, const std::vector<int>& shared_pos,
                                  const std::vector<int>& out_pos) {
  int rename[4] = {0, 0, 0, 0};
  int next = 1;
  Code key = 0;
  for (int i = 0; i < width; ++i) {
    if (shared_pos[i] < 0) continue;
    int x = get(s, i);
    if (rename[x] == 0) rename[x] = next++;
    key = put(key, shared_pos[i], rename[x]);
  }
  for (int x = 1; x <= 3; ++x)
    if (rename[x] == 0) rename[x] = next++;
  Code rest = 0;
  for (int i = 0; i < width; ++i)
    if (out_pos[i] >= 0) rest = put(rest, out_pos[i], rename[get(s, i)]);
  return {key, rest};
}

int key_colours(Code key, int width) {
  int used = 0;
  for (int i = 0; i < width; ++i) used |= 1 << get(key, i);
  return __builtin_popcount(static_cast<unsigned>(used & ~1));
}

void join(Node& parent, const Node& a, const Node& b) {
  const Layout l = layout(parent, a, b);
  const int wa = static_cast<int>(a.boundary.size());
  const int wb = static_cast<int>(b.boundary.size());
  const int wp = static_cast<int>(parent.boundary.size());
  const int ws = static_cast<int>(l.shared.size());
  std::unordered_map<Code, std::vector<Code>> from_a, from_b;
  for (Code s : a.states) {
    auto [key, rest] = split_state(s, wa, l.a_shared, l.a_out);
    from_a[key].push_back(rest);
  }
  for (Code s : b.states) {
    auto [key, rest] = split_state(s, wb, l.b_shared, l.b_out);
    from_b[key].push_back(rest);
  }
  std::unordered_set<Code> out;
  for (auto& [key, list_a] : from_a) {
    auto it = from_b.find(key);
    if (it == from_b.end()) continue;
    std::sort(list_a.begin(), list_a.end());
    list_a.erase(std::unique(list_a.begin(), list_a.end()), list_a.end());
    auto& list_b = it->second;
    std::sort(list_b.begin(), list_b.end());
    list_b.erase(std::unique(list_b.begin(), list_b.end()), list_b.end());
    const int k = key_colours(key, ws);
    // Colour permutations fixing every colour used on the shared edges.
    std::vector<const int*> stab;
    if (k >= 2)
      stab = {kPerms[0]};
    else if (k == 1)
      stab = {kPerms[0], kPerms[1]};
    else
      for (const auto& p : kPerms) stab.push_back(p);
    for (Code rb : list_b)
      for (const int* p : stab) {
        Code pb = permute(rb, wp, p);
        for (Code ra : list_a) out.insert(canonical(ra | pb, wp));
        if (out.size() > kMaxStates) throw std::length_error("state space too large for the colouring engine");
      }
  }
  parent.states.assign(out.begin(), out.end());
  std::sort(parent.states.begin(), parent.states.end());
}

// Chooses concrete colours on the shared edges of node `id`, given concrete
// colours on its boundary, then descends.
void reconstruct(std::vector<Node>& nodes, int id, EdgeColouring& col) {
  std::vector<int> stack{id};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    Node& nd = nodes[cur];
    if (nd.left < 0) continue;
    const Node& a = nodes[nd.left];
    const Node& b = nodes[nd.right];
    const int wa = static_cast<int>(a.boundary.size());
    const int wb = static_cast<int>(b.boundary.size());
    bool done = false;
    for (Code s : a.states) {
      for (const auto& p : kPerms) {
        Code ca = permute(s, wa, p);
        bool ok = true;
        for (int i = 0; i < wa && ok; ++i) {
          Colour known = col[a.boundary[i]];
          if (known != kNoColour && !std::binary_search(b.boundary.begin(), b.boundary.end(), a.boundary[i]))
            ok = get(ca, i) == known;
        }
        if (!ok) continue;
        Code cb = 0;
        for (int i = 0; i < wb; ++i) {
          EdgeId e = b.boundary[i];
          auto it = std::lower_bound(a.boundary.begin(), a.boundary.end(), e);
          int colour = (it != a.boundary.end() && *it == e) ? get(ca, static_cast<int>(it - a.boundary.begin()))
                                                            : col[e];
          cb = put(cb, i, colour);
        }
        if (!std::binary_search(b.states.begin(), b.states.end(), canonical(cb, wb))) continue;
        for (int i = 0; i < wa; ++i) col[a.boundary[i]] = static_cast<Colour>(get(ca, i));
        done = true;
        break;
      }
      if (done) break;
    }
    if (!done) throw std::logic_error("carving reconstruction found no consistent state");
    stack.push_back(nd.left);
    stack.push_back(nd.right);
  }
}

}  // namespace

int carving_width(const MultiGraph& g) {
  if (g.order() == 0) return 0;
  return width_of(decompose(g));
}

std::optional<EdgeColouring> carving_colouring(const MultiGraph& g, const std::vector<bool>& constrained,
                                               bool want_witness) {
  if (g.order() == 0) return EdgeColouring{};
  auto nodes = decompose(g);
  if (width_of(nodes) > kMaxWidth) throw std::length_error("decomposition too wide for the colouring engine");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Node& nd = nodes[i];
    if (nd.left < 0) {
      leaf_states(nd, constrained[nd.vertex]);
    } else {
      join(nd, nodes[nd.left], nodes[nd.right]);
      if (!want_witness) {
        std::vector<Code>().swap(nodes[nd.left].states);
        std::vector<Code>().swap(nodes[nd.right].states);
      }
    }
    if (nd.states.empty()) return std::nullopt;
  }
  EdgeColouring col(g.size(), kNoColour);
  if (!want_witness) return col;
  reconstruct(nodes, static_cast<int>(nodes.size()) - 1, col);
  return col;
}

}  // namespace snarklab::detail
