#pragma once

#include "snarklab/graph.hpp"

namespace snarklab {

/// Outer 5-cycle 0..4 (edges 0..4), spokes i--i+5 (edges 5..9) and inner
/// pentagram i+5--(i+2)%5+5 (edges 10..14).
MultiGraph petersen();

/// Flower snark J_k for odd k >= 3: vertex 4i is the centre a_i joined to
/// b_i = 4i+1, c_i = 4i+2, d_i = 4i+3; the b_i form a k-cycle and the c_i, d_i
/// a 2k-cycle c_0 .. c_{k-1} d_0 .. d_{k-1}.
MultiGraph flower_snark(int k);

/// Networks derived from the Petersen graph. Terminals are grouped into
/// connectors, one per split vertex (a deleted edge's free end is a singleton).
/// The defaults use fixed edges/vertices of petersen(); the parameterised
/// forms validate their arguments and exist to check symmetry.
Network build_P2();
Network build_P2(EdgeId e);
Network build_P3();
Network build_P3(VertexId v);
Network build_P4v();
Network build_P4v(EdgeId e);
/// e and f at distance 1: not adjacent but joined by an edge.
Network build_P4e();
Network build_P4e(EdgeId e, EdgeId f);
/// Deletes edges uv and vw; connectors {u pair, w pair, v}.
Network build_P5vvv();
Network build_P5vvv(VertexId u, VertexId v, VertexId w);
/// Splits off v and subdivides e at distance two from v; connectors {pair, triple}.
Network build_P5ev();
Network build_P5ev(VertexId v, EdgeId e);

/// P4e with one pair joined to a pair of P4v; connectors are the two free pairs.
Network build_N1();
/// P4e with each pair joined to a pair of a separate P4v copy.
Network build_N2();

/// P5vvv with each pair joined to the pair of a separate P5ev copy; connectors
/// {single, triple, triple}.
Network build_Z();

/// One vertex with three pendant terminals.
Network trivial_supervertex();
/// A single edge between two terminals.
Network trivial_superedge();

/// The 7-pole supervertex with one nonterminal vertex x: terminals t1..t3
/// pendant at x, and two terminal-to-terminal edges t4--t5 and t6--t7.
/// Connectors {t1, t4, t6}, {t2, t5, t7}, {t3}.
Network build_X();

/// Superedge from J5 by splitting off b_0 and the vertex `other` (which must
/// not be adjacent to b_0); connectors are the two split triples.
Network build_Y();
Network build_Y(VertexId other);

/// Vertices at distance 0, 1, 2, ... from v (BFS), kNone where unreachable.
std::vector<int> distances_from(const MultiGraph& g, VertexId v);

}  // namespace snarklab
