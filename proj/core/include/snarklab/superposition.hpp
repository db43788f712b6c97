#pragma once

#include <optional>
#include <vector>

#include "snarklab/colouring.hpp"
#include "snarklab/graph.hpp"

namespace snarklab {

/// Replacement of every vertex and edge of a cubic base graph by a network.
/// Connector j of supervertex[v] is associated with the end of
/// base.incident(v)[j] at v; connector 0 of superedge[e] with the end at
/// base.edge(e).u and connector 1 with the end at base.edge(e).v. Terminals
/// of associated connectors are joined in order.
struct SuperpositionPlan {
  MultiGraph base;
  std::vector<Network> supervertex;
  std::vector<Network> superedge;
};

/// A plan with trivial supervertices and superedges everywhere.
SuperpositionPlan trivial_plan(const MultiGraph& base);

/// Throws GraphError naming the first connector count or size mismatch.
void validate_plan(const SuperpositionPlan& plan);

/// Image of an edge under the projection: a base edge, or a base vertex when
/// the edge is contracted.
struct ProjectedEdge {
  bool to_vertex = false;
  int id = kNone;
  bool operator==(const ProjectedEdge&) const = default;
};

struct Projection {
  std::vector<VertexId> vertex;     // superposed vertex -> base vertex
  std::vector<ProjectedEdge> edge;  // superposed edge -> base edge or vertex
};

struct Superposition {
  MultiGraph graph;
  Projection projection;
};

/// Performs all junctions of the plan. Nonterminal vertices of a superedge
/// project to the end whose connector is nearer (ties go to base.edge(e).u).
Superposition superpose(const SuperpositionPlan& plan);

/// Incidence-preserving and surjective.
bool verify_projection(const MultiGraph& base, const Superposition& s);

/// Every colouring of y gives both connectors the same nonzero colour sum.
/// Requires exactly two connectors.
bool is_proper_superedge(const Network& y);

struct SuperpositionResistanceReport {
  int base_resistance = 0;
  /// resistance(superposed) >= base_resistance was established.
  bool holds = false;
  /// Filled when an exact witness for the superposed graph was requested.
  std::optional<DeletionWitness> witness;
  std::vector<VertexId> projected;  // p(W), sorted and deduplicated
  bool projected_colourable = false;  // base minus p(W) is colourable
};

/// Checks that resistance does not drop under the superposition. With
/// `exact`, also computes a minimum deletion set W of the superposed graph
/// and checks |W| >= |p(W)| >= base resistance and that base - p(W) is colourable.
SuperpositionResistanceReport superposition_resistance_check(const MultiGraph& base, const Superposition& s,
                                                             bool exact = false);

}  // namespace snarklab
