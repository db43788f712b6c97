#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "snarklab/graph.hpp"

namespace snarklab {

/// A circuit as a closed walk without repeated vertices. `edges[i]` joins
/// `vertices[i]` and `vertices[(i + 1) % length()]`, so parallel edges are
/// distinguished. The sequence starts at its least vertex.
struct Circuit {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(vertices.size()); }
  bool odd() const { return length() % 2 == 1; }
  bool operator==(const Circuit&) const = default;
};

/// Length of a shortest circuit, or nullopt for a forest.
std::optional<int> girth(const MultiGraph& g);

/// Calls `visit` once for every circuit of length <= max_len (up to rotation
/// and reflection) in deterministic order. Returning false stops the search.
void for_each_circuit(const MultiGraph& g, int max_len,
                      const std::function<bool(const Circuit&)>& visit);
std::vector<Circuit> enumerate_circuits(const MultiGraph& g, int max_len);

/// A shortest circuit, preferring the lexicographically least vertex sequence.
std::optional<Circuit> shortest_circuit(const MultiGraph& g);

/// True iff the circuit has no chord (an edge outside it joining two of its vertices).
bool is_induced(const MultiGraph& g, const Circuit& c);

struct FiveCircuitIncidence {
  std::vector<int> count;        // per vertex
  std::array<int, 7> profile{};  // profile[i] = vertices on exactly i 5-circuits
  std::vector<VertexId> overflow;  // vertices on more than six 5-circuits
  int circuits = 0;              // number of 5-circuits
};

FiveCircuitIncidence five_circuit_incidence(const MultiGraph& g);

/// Checks that `c` is a circuit of `g`.
bool is_circuit_of(const MultiGraph& g, const Circuit& c);

}  // namespace snarklab
