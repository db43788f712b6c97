#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snarklab {

using VertexId = int;
using EdgeId = int;

inline constexpr int kNone = -1;

/// Raised when an operation's precondition does not hold. The message names
/// the offending vertex or edge.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId u = kNone;
  VertexId v = kNone;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

/// Undirected multigraph on dense vertex ids 0..order()-1. Parallel edges are
/// allowed, loops are not. Edge ids are the insertion index and never change
/// for the lifetime of the object; editing operations build new graphs.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int order);

  int order() const { return static_cast<int>(incidence_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v);

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const { return incidence_[v]; }
  int degree(VertexId v) const { return static_cast<int>(incidence_[v].size()); }
  VertexId other(EdgeId e, VertexId v) const { return edges_[e].other(v); }

  /// Number of edges joining u and v.
  int multiplicity(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return multiplicity(u, v) > 0; }
  std::vector<VertexId> neighbours(VertexId v) const;

  bool is_cubic() const;
  bool is_simple() const;
  int max_degree() const;

  bool operator==(const MultiGraph&) const = default;

 private:
  void check_vertex(VertexId v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// A graph together with an ordered list of degree-1 terminals. Terminals may
/// be grouped into connectors; when `connectors` is non-empty the groups
/// partition the terminal list.
struct Network {
  MultiGraph graph;
  std::vector<VertexId> terminals;
  std::vector<std::vector<VertexId>> connectors;

  int terminal_count() const { return static_cast<int>(terminals.size()); }
  int nonterminal_count() const { return graph.order() - terminal_count(); }
  bool is_terminal(VertexId v) const;
  int terminal_index(VertexId v) const;
  /// The unique edge at terminal `terminals[i]`.
  EdgeId terminal_edge(int i) const;
  std::vector<EdgeId> terminal_edges() const;
  std::vector<VertexId> nonterminals() const;
};

// ---------------------------------------------------------------------------
// Validation

enum class DegreeContract { cubic, network };

struct Violation {
  enum class Kind { degree, loop, terminal, connector } kind;
  int id;  // vertex id (edge id for loops)
  std::string message;
};

std::vector<Violation> validate(const MultiGraph& g);
std::vector<Violation> validate(const Network& n);

// ---------------------------------------------------------------------------
// Structural helpers

std::vector<int> component_labels(const MultiGraph& g, int* count = nullptr);
bool is_connected(const MultiGraph& g);
/// Edges whose removal disconnects their component (parallel edges are never bridges).
std::vector<EdgeId> bridges(const MultiGraph& g);
bool is_bridgeless(const MultiGraph& g);
/// Connected, loopless and without bridges.
bool is_two_edge_connected(const MultiGraph& g);

/// Result of an edit that renumbers vertices and edges. Maps hold the new id
/// of every old vertex/edge, or kNone if it disappeared.
struct Relabelled {
  MultiGraph graph;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};

Relabelled remove_vertices(const MultiGraph& g, std::span<const VertexId> vs);
Relabelled remove_edges(const MultiGraph& g, std::span<const EdgeId> es);
Relabelled induced_subgraph(const MultiGraph& g, std::span<const VertexId> vs);
MultiGraph relabel(const MultiGraph& g, std::span<const VertexId> perm);
MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);

// ---------------------------------------------------------------------------
// Editing primitives

struct Subdivision {
  MultiGraph graph;
  VertexId vertex;  // the new degree-2 vertex
  EdgeId second;    // edge e keeps its id for the first half, this is the second half
};
Subdivision subdivide(const MultiGraph& g, EdgeId e);

/// Removes degree-2 vertex v and joins its two neighbours. Fails if the
/// result would contain a loop.
Relabelled suppress_degree2(const MultiGraph& g, VertexId v);

/// Suppresses every degree-2 vertex (including chains) in one pass.
Relabelled suppress_all_degree2(const MultiGraph& g);

/// Replaces v by one new terminal per incident edge. Terminals are appended
/// after the surviving vertices, in the order of v's incident edges.
Network split_off(const MultiGraph& g, VertexId v);
Network split_off(const Network& n, VertexId v);

/// Contracts the vertex set of a circuit to one vertex; a resulting degree-2
/// vertex is suppressed. Edges between circuit vertices disappear.
Relabelled contract_vertex_set(const MultiGraph& g, std::span<const VertexId> vs);

Network disjoint_union(const Network& a, const Network& b);

struct JoinResult {
  Network network;
  std::vector<VertexId> vertex_map;             // old vertex -> new (kNone if it vanished)
  std::vector<std::vector<EdgeId>> edge_chain;  // new edge -> old edges merged into it
};

/// Identifies each listed pair of terminals and suppresses the resulting
/// 2-valent vertices. Terminal-to-terminal edges chain through, so the new
/// edge may merge several old ones.
JoinResult join_terminals(const Network& n,
                          std::span<const std::pair<VertexId, VertexId>> pairs);

/// Junction of terminal ta of a with terminal tb of b.
Network junction(const Network& a, VertexId ta, const Network& b, VertexId tb);

/// Joins terminals pairwise in order: a.terminals[ia[i]] with b.terminals[ib[i]].
Network junction(const Network& a, std::span<const int> ia, const Network& b,
                 std::span<const int> ib);

/// The underlying graph of a network without terminals.
MultiGraph close(const Network& n);

/// Builds a graph from an edge list.
MultiGraph from_edges(int order, std::span<const std::pair<int, int>> edges);

}  // namespace snarklab
