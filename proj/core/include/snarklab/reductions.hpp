#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snarklab/graph.hpp"

namespace snarklab {

/// Raised for inputs that are not snarks and for a reduction that changed
/// the oddness (which would contradict the reduction's guarantee).
class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ReductionRule {
  contract_circuit,  // contract a 2- or 3-circuit, suppress a 2-valent result
  four_circuit,      // delete a pair of opposite edges of a 4-circuit
  cut2,              // replace the colourable side of a 2-edge-cut by an edge
  cut3,              // replace the colourable side of a 3-edge-cut by a vertex
};

std::string to_string(ReductionRule r);

/// One reduction step. Ids refer to the graph the step was applied to.
struct ReductionStep {
  ReductionRule rule = ReductionRule::contract_circuit;
  std::vector<VertexId> vertices;  // circuit vertices, or the discarded side
  std::vector<EdgeId> edges;       // circuit edges, deleted edges, or the cut
  int order_before = 0;
  int order_after = 0;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct ReductionOptions {
  /// Compare oddness before and after and throw ReductionError on mismatch.
  bool verify_oddness = true;
};

struct ReductionResult {
  MultiGraph graph;
  ReductionTrace trace;
  std::optional<int> oddness_before;  // filled when verified
  std::optional<int> oddness_after;
};

/// Contracts 2- and 3-circuits until the girth is at least 4.
ReductionResult reduce_to_girth4(const MultiGraph& g, ReductionOptions opts = {});
/// Also removes 4-circuits, keeping the opposite-edge choice that stays 2-connected.
ReductionResult reduce_to_girth5(const MultiGraph& g, ReductionOptions opts = {});
/// Until every 2-edge-cut separates two uncolourable sides.
ReductionResult reduce_2cuts(const MultiGraph& g, ReductionOptions opts = {});
/// Until every 3-edge-cut other than the cut around a single vertex separates
/// two uncolourable sides.
ReductionResult reduce_3cuts(const MultiGraph& g, ReductionOptions opts = {});
/// Applies the four reductions in turn until none of them changes the graph.
ReductionResult reduce_all(const MultiGraph& g, ReductionOptions opts = {});

/// Applies a single recorded step.
MultiGraph apply_step(const MultiGraph& g, const ReductionStep& step);
/// Replays a trace on its input graph.
MultiGraph replay(const MultiGraph& g, const ReductionTrace& trace);

/// Throws ReductionError unless g is cubic, 2-connected and uncolourable.
void require_snark(const MultiGraph& g);

/// Checks by trying every edge subset of the given size (2 or 3) that each
/// minimal edge cut of that size leaves two uncolourable sides. For size 3
/// the cut around a single vertex is ignored. Returns the offending cut.
std::optional<std::vector<EdgeId>> cut_with_colourable_side(const MultiGraph& g, int size);

// Inverses of the reductions, for building test inputs.

/// Replaces v by a triangle; the i-th new vertex takes incident(v)[i].
MultiGraph expand_to_triangle(const MultiGraph& g, VertexId v);
/// Subdivides e and f twice each and joins the new vertices into a 4-circuit.
MultiGraph expand_to_square(const MultiGraph& g, EdgeId e, EdgeId f);
/// Replaces e by a path through a pair of parallel edges.
MultiGraph insert_digon(const MultiGraph& g, EdgeId e);

}  // namespace snarklab
