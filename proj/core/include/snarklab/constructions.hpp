#pragma once

#include <vector>

#include "snarklab/circuits.hpp"
#include "snarklab/graph.hpp"
#include "snarklab/superposition.hpp"

namespace snarklab {

/// Throws GraphError unless g is cubic, 2-connected and not 3-edge-colourable.
void ensure_snark(const MultiGraph& g, const char* what);

/// Replaces each listed edge xy by x -- P -- y for a copy of the 2-pole P
/// (terminal 0 at edge(e).u). Vertices of g keep their ids.
MultiGraph insert_two_poles(const MultiGraph& g, const std::vector<EdgeId>& edges, const Network& two_pole);

/// Inserts a copy of P2 into each of the three edges at v.
MultiGraph gv_extension(const MultiGraph& g, VertexId v);

/// R_0 = Petersen, R_1 = H1, R_{i+2} = gv_extension(R_i, 0).
MultiGraph build_R(int i);

/// 2-connected graphs of oddness 4 made of three P3 copies and one extra
/// vertex, one per isomorphism class, sorted by canonical form.
std::vector<MultiGraph> build_H_candidates();
/// The candidate with cyclic connectivity 2 (H1) and 3 (H2).
MultiGraph build_H1();
MultiGraph build_H2();

/// Joins connector 1 of each block to connector 0 of the next one (cyclically).
/// Bit j of `orientation` (most significant first for block 0) crosses the
/// pair between block j and block j+1.
MultiGraph ring_join(const std::vector<Network>& blocks, unsigned orientation);
/// The first orientation, in lexicographic order, giving a bridgeless graph.
MultiGraph ring_join(const std::vector<Network>& blocks);
/// r copies of N2, followed by one N1 when with_n1 is set.
MultiGraph build_ring(int n2_copies, bool with_n1);

/// r copies of Z with terminals matched into a cyclically 5-connected graph
/// of girth at least 5 (odd r uses one extra vertex for a leftover triple).
MultiGraph chain_Z(int r);

struct LGraph {
  MultiGraph graph;
  std::vector<std::vector<VertexId>> copies;  // vertices of each P3 copy
  Circuit circuit;                            // meets every copy in a 5-vertex path
};

/// r copies of P3 in a ring with leftover terminals paired (one triple when
/// r is odd), 3-connected; the circuit leaves each copy acyclic when removed.
LGraph build_L_detail(int r);
MultiGraph build_L(int r);

/// Superposition of L_r with X on the circuit's vertices, Y on its edges and
/// trivial pieces elsewhere.
SuperpositionPlan build_M_plan(const LGraph& l);
MultiGraph build_M(int r);

}  // namespace snarklab
