#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snarklab/connectivity.hpp"
#include "snarklab/graph.hpp"
#include "snarklab/rational.hpp"

namespace snarklab {

/// A computed quantity, or the reason it is missing.
struct Measure {
  enum class State { computed, skipped, undefined, unavailable };
  State state = State::skipped;
  int value = 0;
  std::string note;  // e.g. "bridge 7" for undefined oddness

  bool ok() const { return state == State::computed; }
  static Measure of(int v) { return {State::computed, v, {}}; }
};

std::string to_string(Measure::State s);

/// One inequality evaluated on a record.
struct BoundCheck {
  std::string name;
  bool applicable = false;
  bool pass = true;
  std::string detail;
};

struct InvariantRecord {
  std::string key;  // canonical digest
  int order = 0;
  std::optional<int> girth;
  int edge_connectivity = 0;
  std::optional<ZetaResult> zeta;  // nullopt when skipped
  bool colourable = false;
  Measure resistance;
  Measure oddness;
  std::array<int, 7> five_profile{};
  int five_circuits = 0;
  std::optional<Rational> ratio;  // n / oddness
  std::vector<BoundCheck> bounds;
  std::map<std::string, double> timings;  // seconds per computed field

  bool is_snark() const;
};

struct AnalysisOptions {
  int max_zeta = 7;
  bool zeta = true;
  bool resistance = true;
  bool oddness = true;
};

/// Computes every requested invariant of a cubic graph and the bound checks
/// that apply to it. Throws GraphError for non-cubic input.
InvariantRecord analyze(const MultiGraph& g, const AnalysisOptions& opts = {});

/// Structural consistency of a record: resistance <= oddness, oddness even,
/// resistance != 1, resistance 2 iff oddness 2, ratio arithmetic. Returns
/// the violated statements.
std::vector<std::string> record_inconsistencies(const InvariantRecord& r);

/// Vertex counts by number of 5-circuits must satisfy n6 = 0, n5 <= 2n/5,
/// n5 = 0 if cyclically 3-connected and n4 = 0 if cyclically 5-connected, for
/// snarks of girth at least 4 other than the Petersen graph.
BoundCheck five_circuit_profile_check(const MultiGraph& g, const std::array<int, 7>& profile,
                                      const ZetaResult& zeta);

/// For snarks other than the Petersen graph: every vertex is avoided by the
/// 5-circuits of some 2-factor.
BoundCheck five_circuit_avoidance_check(const MultiGraph& g);

bool is_petersen(const MultiGraph& g);

}  // namespace snarklab
