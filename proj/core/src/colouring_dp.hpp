#pragma once

#include <optional>
#include <vector>

#include "snarklab/colouring.hpp"

namespace snarklab::detail {

// Frontier dynamic programme over a vertex elimination order. A state gives a
// symbol to each frontier edge (one endpoint processed): a colour 1..3,
// kAbsent (edge deleted, or its processed endpoint deleted) or kPromise (its
// unprocessed endpoint will be deleted). States are kept up to permutation of
// the colours, together with the least number of deletions reaching them.
inline constexpr int kAbsent = 4;
inline constexpr int kPromise = 5;

enum class Deletion { none, vertex, edge };

struct Problem {
  const MultiGraph* graph = nullptr;
  std::vector<bool> processable;  // vertices to eliminate; others stay open (terminals)
  Deletion deletion = Deletion::none;
  int max_cost = 0;
  std::vector<int> forced;  // per vertex (vertex mode) or edge (edge mode): -1 free, 0 keep, 1 delete
};

struct Solution {
  int cost = 0;
  EdgeColouring colouring;     // kNoColour on absent edges and on edges never reached
  std::vector<int> deleted;    // sorted vertex or edge ids
};

// Minimum-cost solution, or nullopt when no state survives.
std::optional<Solution> solve(const Problem& p, bool want_witness);

// Final frontier states (the open edges' symbols, canonical under colour
// permutation) for a problem without deletions.
struct OpenStates {
  std::vector<EdgeId> open_edges;
  std::vector<std::vector<int>> states;
};
OpenStates open_states(const Problem& p);

// Widest frontier of the elimination order the engine would use.
int plan_width(const Problem& p);

}  // namespace snarklab::detail
