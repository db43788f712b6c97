#pragma once

#include <optional>
#include <span>
#include <vector>

#include "snarklab/circuits.hpp"
#include "snarklab/graph.hpp"

namespace snarklab {

/// Size of a minimum edge cut; 0 for a disconnected graph.
int edge_connectivity(const MultiGraph& g);

/// A cycle-separating edge cut: removing `cut` leaves `side_a` and `side_b`
/// in different components, and each side contains the given circuit.
struct CyclicCut {
  std::vector<EdgeId> cut;
  std::vector<VertexId> side_a;
  std::vector<VertexId> side_b;
  Circuit circuit_a;
  Circuit circuit_b;
};

/// Checks a certificate independently of the solver.
bool validate_cyclic_cut(const MultiGraph& g, const CyclicCut& c);

struct ZetaResult {
  enum class Kind {
    exact,     // value is the cyclic connectivity
    at_least,  // no cycle-separating cut below `value`
    no_cut,    // the graph has no two vertex-disjoint circuits
  };
  Kind kind = Kind::no_cut;
  int value = 0;
  std::optional<CyclicCut> certificate;  // present for exact results
};

/// Exact cyclic connectivity of a connected cubic graph when it is at most
/// `k_cap`; otherwise reports a lower bound of k_cap + 1.
ZetaResult cyclic_connectivity(const MultiGraph& g, int k_cap = 7);

struct CyclicDecision {
  bool holds = true;
  std::optional<CyclicCut> counterexample;
};

/// True iff no fewer than k edges separate two circuits. Graphs without two
/// disjoint circuits are cyclically k-connected for every k.
CyclicDecision is_cyclically_k_connected(const MultiGraph& g, int k);

/// True iff the graph contains two vertex-disjoint circuits.
bool has_disjoint_circuits(const MultiGraph& g);

/// A shortest circuit inside the subgraph induced by `side`, if any.
std::optional<Circuit> circuit_within(const MultiGraph& g, std::span<const VertexId> side);

/// Reference solver: smallest cycle-separating cut of size <= max_k found by
/// trying every edge subset, or nullopt.
std::optional<int> cyclic_cut_brute_force(const MultiGraph& g, int max_k);

}  // namespace snarklab
