#pragma once

#include <string>
#include <vector>

#include "snarklab/graph.hpp"

namespace snarklab {

/// A labelling `label[v]` such that relabelling any isomorphic copy by its
/// own canonical labelling yields the same edge multiset.
std::vector<VertexId> canonical_labelling(const MultiGraph& g);

/// Canonical byte string: equal iff the graphs are isomorphic (parallel edge
/// multiplicities included).
std::string canonical_form(const MultiGraph& g);

/// Short hexadecimal digest of the canonical form, for display and file names.
std::string canonical_digest(const MultiGraph& g);
std::string digest_of(const std::string& canonical);

bool is_isomorphic(const MultiGraph& a, const MultiGraph& b);

}  // namespace snarklab
