#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "snarklab/circuits.hpp"
#include "snarklab/graph.hpp"
#include "snarklab/rational.hpp"

namespace snarklab {

/// Sorted edge ids covering every vertex exactly once.
using PerfectMatching = std::vector<EdgeId>;

struct TwoFactor {
  std::vector<EdgeId> edges;  // sorted
  std::vector<Circuit> circuits;

  int odd_count() const;
  /// Number of circuits of each length.
  std::map<int, int> length_counts() const;
};

/// Calls `visit` for each perfect matching, lowest uncovered vertex first.
/// Returning false stops the enumeration.
void for_each_perfect_matching(const MultiGraph& g,
                               const std::function<bool(const PerfectMatching&)>& visit);
std::vector<PerfectMatching> enumerate_perfect_matchings(const MultiGraph& g);

bool is_perfect_matching(const MultiGraph& g, std::span<const EdgeId> m);
/// The complementary 2-factor of a perfect matching of a cubic graph.
TwoFactor complement_two_factor(const MultiGraph& g, std::span<const EdgeId> matching);
/// Decomposes a spanning 2-regular edge set into circuits; nullopt if it is not one.
std::optional<TwoFactor> make_two_factor(const MultiGraph& g, std::span<const EdgeId> edges);

struct OddnessResult {
  /// nullopt when the graph has a bridge (oddness is undefined).
  std::optional<int> value;
  EdgeId bridge = kNone;
  TwoFactor witness;
};

struct OddnessOptions {
  /// A known lower bound; the search stops as soon as it is met.
  int lower_bound = 0;
};

/// Branch and bound over perfect matchings. Requires a cubic graph.
OddnessResult oddness(const MultiGraph& g, OddnessOptions opts = {});

/// Reference implementation: minimum over all perfect matchings, no pruning.
OddnessResult oddness_exhaustive(const MultiGraph& g);

struct SelectionResult {
  int value = 0;
  TwoFactor witness;
};

/// Least number of members of `candidates` that appear as circuits of one 2-factor.
SelectionResult min_selected_5circuits(const MultiGraph& g, std::span<const Circuit> candidates);
/// Greatest number of edges of `s` contained in one 2-factor.
SelectionResult max_selected_edges(const MultiGraph& g, std::span<const EdgeId> s);

/// Edges lying on no odd circuit of any 2-factor.
std::vector<EdgeId> special_edges(const MultiGraph& g);

/// Upper bound (3n + q) / 21 on the oddness of a snark of girth at least 4
/// with n vertices and q 5-circuits.
Rational odd_circuit_bound(int order, int five_circuits);

struct RatioBoundReport {
  bool exempt = false;  // the Petersen graph is excluded
  Rational ratio;       // n / omega
  Rational bound;       // 525/97, 105/19 or 35/6 by cyclic connectivity
  bool pass = false;
};

/// Lower bound on n / omega for snarks other than the Petersen graph; the
/// bound depends on the cyclic connectivity (nullopt: no cycle-separating cut).
RatioBoundReport oddness_ratio_bound(const MultiGraph& g, int omega, std::optional<int> zeta);

}  // namespace snarklab
