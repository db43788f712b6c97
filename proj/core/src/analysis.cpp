#include "snarklab/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "snarklab/canonical.hpp"
#include "snarklab/circuits.hpp"
#include "snarklab/colouring.hpp"
#include "snarklab/factors.hpp"

namespace snarklab {
namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::optional<int> zeta_bound(const ZetaResult& z) {
  if (z.kind == ZetaResult::Kind::no_cut) return std::nullopt;
  return z.value;
}

}  // namespace

std::string to_string(Measure::State s) {
  switch (s) {
    case Measure::State::computed:
      return "computed";
    case Measure::State::skipped:
      return "skipped";
    case Measure::State::undefined:
      return "undefined";
    case Measure::State::unavailable:
      return "unavailable";
  }
  return "?";
}

bool InvariantRecord::is_snark() const { return edge_connectivity >= 2 && !colourable; }

bool is_petersen(const MultiGraph& g) {
  // The Petersen graph is the only cubic graph of order 10 and girth 5.
  return g.order() == 10 && g.is_cubic() && girth(g) == 5;
}

BoundCheck five_circuit_profile_check(const MultiGraph& g, const std::array<int, 7>& profile,
                                      const ZetaResult& zeta) {
  BoundCheck b;
  b.name = "five_circuit_profile";
  if (is_petersen(g)) {
    b.detail = "petersen exempt";
    return b;
  }
  b.applicable = true;
  const int n = g.order();
  const bool cyc3 = zeta.kind == ZetaResult::Kind::no_cut || zeta.value >= 3;
  const bool cyc5 = zeta.kind == ZetaResult::Kind::no_cut || zeta.value >= 5;
  std::string failed;
  if (profile[6] != 0) failed += " n6=" + std::to_string(profile[6]);
  if (5 * profile[5] > 2 * n) failed += " n5>2n/5";
  if (cyc3 && profile[5] != 0) failed += " n5!=0 (cyclically 3-connected)";
  if (cyc5 && profile[4] != 0) failed += " n4!=0 (cyclically 5-connected)";
  b.pass = failed.empty();
  b.detail = b.pass ? "n4=" + std::to_string(profile[4]) + " n5=" + std::to_string(profile[5]) : failed.substr(1);
  return b;
}

BoundCheck five_circuit_avoidance_check(const MultiGraph& g) {
  BoundCheck b;
  b.name = "five_circuit_avoidance";
  if (is_petersen(g)) {
    b.detail = "petersen exempt";
    return b;
  }
  b.applicable = true;
  auto circuits = enumerate_circuits(g, 5);
  for (VertexId v = 0; v < g.order(); ++v) {
    std::vector<Circuit> through;
    for (const auto& c : circuits)
      if (c.length() == 5 && std::find(c.vertices.begin(), c.vertices.end(), v) != c.vertices.end())
        through.push_back(c);
    if (min_selected_5circuits(g, through).value != 0) {
      b.pass = false;
      b.detail = "vertex " + std::to_string(v);
      return b;
    }
  }
  b.detail = std::to_string(g.order()) + " vertices";
  return b;
}

InvariantRecord analyze(const MultiGraph& g, const AnalysisOptions& opts) {
  if (!g.is_cubic()) throw GraphError("analysis needs a cubic graph");
  InvariantRecord r;
  Stopwatch total;
  r.key = canonical_digest(g);
  r.order = g.order();
  r.girth = girth(g);
  r.edge_connectivity = edge_connectivity(g);

  {
    Stopwatch t;
    r.colourable = is_colourable(g);
    r.timings["colourable"] = t.seconds();
  }
  {
    Stopwatch t;
    auto inc = five_circuit_incidence(g);
    r.five_profile = inc.profile;
    r.five_circuits = inc.circuits;
    r.timings["five_circuits"] = t.seconds();
  }
  if (opts.zeta) {
    Stopwatch t;
    r.zeta = cyclic_connectivity(g, opts.max_zeta);
    r.timings["zeta"] = t.seconds();
  }
  if (opts.resistance) {
    Stopwatch t;
    if (r.colourable) {
      r.resistance = Measure::of(0);
    } else {
      try {
        ResistanceOptions ro;
        ro.lex_least = false;
        r.resistance = Measure::of(resistance(g, DeletionMode::vertex, ro).value);
      } catch (const std::length_error& e) {
        r.resistance = {Measure::State::unavailable, 0, e.what()};
      }
    }
    r.timings["resistance"] = t.seconds();
  }
  if (opts.oddness) {
    Stopwatch t;
    if (r.edge_connectivity < 2) {
      auto br = bridges(g);
      r.oddness = {Measure::State::undefined, 0, br.empty() ? "disconnected" : "bridge " + std::to_string(br[0])};
    } else if (r.colourable) {
      r.oddness = Measure::of(0);
    } else {
      OddnessOptions oo;
      if (r.resistance.ok()) oo.lower_bound = r.resistance.value + r.resistance.value % 2;
      auto od = oddness(g, oo);
      r.oddness = Measure::of(*od.value);
    }
    r.timings["oddness"] = t.seconds();
  }
  if (r.oddness.ok() && r.oddness.value > 0) r.ratio = Rational(r.order, r.oddness.value);

  if (r.is_snark()) {
    BoundCheck odd;
    odd.name = "odd_circuit_bound";
    if (r.oddness.ok() && r.girth && *r.girth >= 4) {
      Rational bound = odd_circuit_bound(r.order, r.five_circuits);
      odd.applicable = true;
      odd.pass = Rational(r.oddness.value) <= bound;
      odd.detail = std::to_string(r.oddness.value) + " <= " + bound.str();
    }
    r.bounds.push_back(odd);

    BoundCheck ratio;
    ratio.name = "oddness_ratio_bound";
    if (r.oddness.ok() && r.zeta) {
      auto rb = oddness_ratio_bound(g, r.oddness.value, zeta_bound(*r.zeta));
      ratio.applicable = !rb.exempt;
      ratio.pass = rb.pass;
      ratio.detail = rb.exempt ? "petersen exempt" : rb.ratio.str() + " >= " + rb.bound.str();
    }
    r.bounds.push_back(ratio);

    if (!r.girth || *r.girth < 4) {
      r.bounds.push_back({"five_circuit_profile", false, true, "girth below 4"});
    } else if (r.zeta) {
      r.bounds.push_back(five_circuit_profile_check(g, r.five_profile, *r.zeta));
    } else {
      r.bounds.push_back({"five_circuit_profile", false, true, "zeta skipped"});
    }
  }
  r.timings["total"] = total.seconds();
  return r;
}

std::vector<std::string> record_inconsistencies(const InvariantRecord& r) {
  std::vector<std::string> out;
  const auto& rho = r.resistance;
  const auto& om = r.oddness;
  if (rho.ok() && rho.value == 1) out.push_back("resistance equals 1");
  if (rho.ok() && (rho.value == 0) != r.colourable) out.push_back("resistance 0 disagrees with colourability");
  if (om.ok() && om.value % 2 != 0) out.push_back("oddness is odd");
  if (rho.ok() && om.ok()) {
    if (rho.value > om.value) out.push_back("resistance exceeds oddness");
    if ((rho.value == 2) != (om.value == 2)) out.push_back("resistance 2 and oddness 2 disagree");
  }
  if (r.ratio && (!om.ok() || *r.ratio != Rational(r.order, om.value))) out.push_back("ratio arithmetic");
  for (const auto& b : r.bounds)
    if (b.applicable && !b.pass) out.push_back(b.name + " fails: " + b.detail);
  return out;
}

}  // namespace snarklab
