#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "snarklab/graph.hpp"

namespace snarklab {

/// Colours are the nonzero elements of Z2 x Z2 encoded as 1, 2, 3, so the
/// group sum is bitwise xor. 0 marks an edge that carries no colour.
using Colour = std::uint8_t;
inline constexpr Colour kNoColour = 0;

/// Colour per edge id.
using EdgeColouring = std::vector<Colour>;

/// Colours of the terminal edges, in terminal order.
using BoundaryColouring = std::vector<Colour>;

/// Proper on a graph of maximum degree 3: every edge coloured and the
/// colours at each vertex pairwise distinct.
bool is_proper(const MultiGraph& g, const EdgeColouring& c);

/// Like is_proper, but edges coloured kNoColour count as absent.
bool is_proper_partial(const MultiGraph& g, const EdgeColouring& c);

/// Exact colouring search. Throws GraphError if a vertex has degree above 3.
std::optional<EdgeColouring> find_colouring(const MultiGraph& g);
/// Terminals impose no constraint; nonterminals must have degree 3.
std::optional<EdgeColouring> find_colouring(const Network& n);
bool is_colourable(const MultiGraph& g);
bool is_colourable(const Network& n);

/// Every achievable tuple of terminal edge colours, sorted.
std::vector<BoundaryColouring> boundary_colourings(const Network& n);

struct ParityReport {
  bool holds = false;
  std::array<int, 3> counts{};  // multiplicity of colours 1, 2, 3 on the cut
};

/// Checks m1 = m2 = m3 = |cut| (mod 2).
ParityReport verify_parity(const EdgeColouring& c, std::span<const EdgeId> cut);

enum class DeletionMode { vertex, edge };

struct DeletionWitness {
  DeletionMode mode = DeletionMode::vertex;
  std::vector<int> removed;  // vertex or edge ids, sorted
  /// Colouring of the original edge ids; edges absent after the deletion are kNoColour.
  EdgeColouring colouring;
};

struct ResistanceResult {
  int value = 0;
  DeletionWitness witness;
};

struct ResistanceOptions {
  /// Spend extra solver calls to return the lexicographically least deletion set.
  bool lex_least = true;
};

/// Least number of vertices (or edges) whose removal leaves a colourable graph.
ResistanceResult resistance(const MultiGraph& g, DeletionMode mode = DeletionMode::vertex,
                            ResistanceOptions opts = {});

/// Decides resistance >= k without computing the exact value.
bool resistance_at_least(const MultiGraph& g, int k, DeletionMode mode = DeletionMode::vertex);

/// Checks a deletion witness independently of the solver.
bool verify_witness(const MultiGraph& g, const DeletionWitness& w);

/// Reference solver: plain backtracking over edges (most constrained first)
/// with parity pruning on 2- and 3-edge cuts. Independent of the main engine.
std::optional<EdgeColouring> backtrack_colouring(const MultiGraph& g);

}  // namespace snarklab
