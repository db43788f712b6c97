#include "snarklab/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>

namespace snarklab {
namespace {

using Key = std::vector<std::int64_t>;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

class Search {
 public:
  explicit Search(const MultiGraph& g) : g_(g), n_(g.order()) {
    for (VertexId v = 0; v < n_; ++v) {
      std::map<VertexId, int> mult;
      for (EdgeId e : g.incident(v)) ++mult[g.other(e, v)];
      adj_.emplace_back(mult.begin(), mult.end());
    }
  }

  std::vector<VertexId> run() {
    std::vector<int> colour(n_, 0);
    std::uint64_t trace = refine(colour);
    std::vector<std::uint64_t> path{trace};
    descend(colour, path);
    return best_labels_;
  }

 private:
  // Equitable refinement; colours are ranks of canonical keys so they are
  // label-independent. Returns a hash of the refinement history.
  std::uint64_t refine(std::vector<int>& colour) const {
    std::uint64_t h = 0;
    int classes = count_classes(colour);
    while (true) {
      std::vector<std::pair<Key, VertexId>> keys(n_);
      for (VertexId v = 0; v < n_; ++v) {
        Key k{colour[v]};
        std::vector<std::pair<int, int>> nb;
        for (auto [w, m] : adj_[v]) nb.emplace_back(colour[w], m);
        std::sort(nb.begin(), nb.end());
        for (auto [c, m] : nb) {
          k.push_back(c);
          k.push_back(m);
        }
        keys[v] = {std::move(k), v};
      }
      std::vector<int> order(n_);
      for (int i = 0; i < n_; ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return keys[a].first < keys[b].first; });
      int rank = -1;
      const Key* prev = nullptr;
      for (int i : order) {
        if (!prev || keys[i].first != *prev) {
          ++rank;
          prev = &keys[i].first;
          for (auto x : *prev) h = mix(h, static_cast<std::uint64_t>(x));
          h = mix(h, 0xffff);
        }
        colour[i] = rank;
      }
      int next = rank + 1;
      if (next == classes) break;
      classes = next;
    }
    return h;
  }

  static int count_classes(const std::vector<int>& colour) {
    int m = -1;
    for (int c : colour) m = std::max(m, c);
    return m + 1;
  }

  std::vector<std::pair<int, int>> encode(const std::vector<int>& label) const {
    std::vector<std::pair<int, int>> e;
    e.reserve(g_.size());
    for (const Edge& ed : g_.edges()) {
      int a = label[ed.u], b = label[ed.v];
      e.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(e.begin(), e.end());
    return e;
  }

  // -1: path is below the best leaf's path, 0: a prefix of it, 1: above it.
  int compare_to_best(const std::vector<std::uint64_t>& path) const {
    std::size_t common = std::min(path.size(), best_path_.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (path[i] != best_path_[i]) return path[i] < best_path_[i] ? -1 : 1;
    }
    return path.size() > best_path_.size() ? 1 : 0;
  }

  void descend(const std::vector<int>& colour, std::vector<std::uint64_t>& path) {
    if (has_best_) {
      int cmp = compare_to_best(path);
      if (cmp > 0) return;
      if (cmp < 0) has_best_ = false;
    }
    int classes = count_classes(colour);
    if (classes == n_) {
      auto enc = encode(colour);
      if (!has_best_ || path.size() < best_path_.size() || enc < best_encoding_) {
        best_path_.assign(path.begin(), path.end());
        best_encoding_ = std::move(enc);
        best_labels_ = colour;
        has_best_ = true;
      }
      return;
    }
    // Target cell: the lowest colour class with more than one vertex.
    std::vector<int> size(classes, 0);
    for (int c : colour) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;
    for (VertexId v = 0; v < n_; ++v) {
      if (colour[v] != target) continue;
      std::vector<int> next(n_);
      for (VertexId w = 0; w < n_; ++w)
        next[w] = colour[w] < target || (colour[w] == target && w == v) ? colour[w] : colour[w] + 1;
      std::uint64_t h = refine(next);
      path.push_back(h);
      descend(next, path);
      path.pop_back();
    }
  }

  const MultiGraph& g_;
  int n_;
  std::vector<std::vector<std::pair<VertexId, int>>> adj_;
  bool has_best_ = false;
  std::vector<std::uint64_t> best_path_;
  std::vector<std::pair<int, int>> best_encoding_;
  std::vector<int> best_labels_;
};

}  // namespace

std::vector<VertexId> canonical_labelling(const MultiGraph& g) {
  if (g.order() == 0) return {};
  return Search(g).run();
}

std::string canonical_form(const MultiGraph& g) {
  auto label = canonical_labelling(g);
  std::vector<std::pair<int, int>> e;
  for (const Edge& ed : g.edges()) {
    int a = label[ed.u], b = label[ed.v];
    e.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(e.begin(), e.end());
  std::string s = std::to_string(g.order()) + ":";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i].first) + '-' + std::to_string(e[i].second);
  }
  return s;
}

std::string digest_of(const std::string& canonical) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string canonical_digest(const MultiGraph& g) { return digest_of(canonical_form(g)); }

bool is_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace snarklab
