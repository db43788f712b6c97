#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "snarklab/graph.hpp"

namespace snarklab {

struct ClaimResult {
  int number = 0;
  std::string id;
  std::string statement;
  bool pass = false;
  std::vector<std::string> measured;  // values established along the way
  std::vector<std::string> failures;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no runtime limit
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  int size_cap = 12;        // largest fixture order used by exhaustive suites
  std::string fixture_dir;  // holds cubic_le12.g6 and cubic_sample_14_16.g6
};

struct Criterion {
  int number;
  std::string id;
  std::string statement;
  double limit_seconds;
  bool slow;
  std::function<void(const VerifyOptions&, ClaimResult&)> body;
};

/// The ten acceptance criteria in order.
const std::vector<Criterion>& criteria();

/// Criterion numbers of a suite: "claims" (constructions and measured
/// values), "properties" or "oracles". Throws std::invalid_argument.
std::vector<int> suite_members(const std::string& suite);

/// Runs one criterion, timing it and turning exceptions into failures. The
/// runtime limit counts as part of the criterion.
ClaimResult run_criterion(const Criterion& c, const VerifyOptions& opts);

struct NamedGraph {
  std::string name;
  MultiGraph graph;
};

/// Twenty snarks with short circuits or small cuts built from the Petersen
/// graph and small networks.
std::vector<NamedGraph> reduction_inputs();

/// Snarks beyond the Petersen graph on which the counting bounds are checked.
std::vector<NamedGraph> reference_snarks();

/// Graphs of a fixture file with at most max_order vertices.
std::vector<NamedGraph> load_fixture(const std::string& path, int max_order);

}  // namespace snarklab
