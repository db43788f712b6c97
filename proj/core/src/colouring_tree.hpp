#pragma once

#include <optional>
#include <vector>

#include "snarklab/colouring.hpp"

namespace snarklab::detail {

// Colouring over a carving decomposition: vertices are merged pairwise into
// a binary tree and each tree node keeps the colourings of the edges leaving
// its vertex set, up to permutation of the colours. Suits graphs built as
// rings or trees of gadgets, where any linear vertex order has a wide frontier.

// Largest edge cut in the greedy decomposition of g.
int carving_width(const MultiGraph& g);

// `constrained[v]` false leaves v unconstrained (a terminal). Throws
// std::length_error if the decomposition is wider than the state encoding.
std::optional<EdgeColouring> carving_colouring(const MultiGraph& g, const std::vector<bool>& constrained,
                                               bool want_witness);

}  // namespace snarklab::detail
