#pragma once

#include <random>
#include <string>
#include <vector>

#include "snarklab/graph.hpp"
#include "snarklab/verify.hpp"

namespace testing {

inline snarklab::MultiGraph k4() {
  return snarklab::from_edges(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline snarklab::MultiGraph k33() {
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) es.push_back({a, b});
  return snarklab::from_edges(6, es);
}

inline snarklab::MultiGraph prism() {
  return snarklab::from_edges(
      6, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

inline snarklab::MultiGraph theta() {
  return snarklab::from_edges(2, std::vector<std::pair<int, int>>{{0, 1}, {0, 1}, {0, 1}});
}

// Two triangles with a doubled edge each, joined by the bridge 8.
inline snarklab::MultiGraph barbell() {
  return snarklab::from_edges(6, std::vector<std::pair<int, int>>{
                                     {0, 1}, {0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 4}, {3, 5}, {4, 5}, {2, 5}});
}

inline std::vector<snarklab::NamedGraph> small_fixture(int max_order = 12) {
  return snarklab::load_fixture(std::string(SNARKLAB_FIXTURE_DIR) + "/cubic_le12.g6", max_order);
}

inline std::vector<snarklab::NamedGraph> sample_fixture() {
  return snarklab::load_fixture(std::string(SNARKLAB_FIXTURE_DIR) + "/cubic_sample_14_16.g6", 16);
}

inline std::vector<snarklab::VertexId> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<snarklab::VertexId> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testing
