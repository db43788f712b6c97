#include "snarklab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "snarklab/analysis.hpp"
#include "snarklab/canonical.hpp"
#include "snarklab/circuits.hpp"
#include "snarklab/colouring.hpp"
#include "snarklab/connectivity.hpp"
#include "snarklab/constructions.hpp"
#include "snarklab/factors.hpp"
#include "snarklab/io.hpp"
#include "snarklab/networks.hpp"
#include "snarklab/reductions.hpp"
#include "snarklab/superposition.hpp"

namespace snarklab {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

void expect(ClaimResult& r, bool ok, const std::string& what) {
  if (!ok) r.failures.push_back(what);
}

void note(ClaimResult& r, const std::string& what) { r.measured.push_back(what); }

std::string str(const ZetaResult& z) {
  switch (z.kind) {
    case ZetaResult::Kind::exact:
      return std::to_string(z.value);
    case ZetaResult::Kind::at_least:
      return ">=" + std::to_string(z.value);
    case ZetaResult::Kind::no_cut:
      return "none";
  }
  return "?";
}

bool zeta_is(const ZetaResult& z, int k) { return z.kind == ZetaResult::Kind::exact && z.value == k; }

// Larger means more cyclically connected; graphs without a cycle-separating
// cut rank above everything.
int zeta_rank(const ZetaResult& z) { return z.kind == ZetaResult::Kind::no_cut ? 1 << 20 : z.value; }

int rho(const MultiGraph& g, DeletionMode mode = DeletionMode::vertex) {
  ResistanceOptions o;
  o.lex_least = false;
  return resistance(g, mode, o).value;
}

int omega(const MultiGraph& g) {
  auto r = oddness(g);
  if (!r.value) throw GraphError("oddness undefined: bridge " + std::to_string(r.bridge));
  return *r.value;
}

bool is_snark(const MultiGraph& g) { return g.is_cubic() && is_two_edge_connected(g) && !is_colourable(g); }

MultiGraph close_pair(const Network& a, const Network& b) {
  std::vector<int> ia(a.terminal_count()), ib(b.terminal_count());
  for (int i = 0; i < a.terminal_count(); ++i) ia[i] = i;
  for (int i = 0; i < b.terminal_count(); ++i) ib[i] = i;
  // First terminal order of b, lexicographically, giving a bridgeless graph.
  do {
    MultiGraph g = close(junction(a, ia, b, ib));
    if (is_two_edge_connected(g)) return g;
  } while (std::next_permutation(ib.begin(), ib.end()));
  throw GraphError("no bridgeless junction");
}

Network two_pole(const MultiGraph& g, EdgeId e) {
  auto s = subdivide(g, e);
  return split_off(s.graph, s.vertex);
}

MultiGraph k4() { return from_edges(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
MultiGraph k33() {
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) es.push_back({a, b});
  return from_edges(6, es);
}
MultiGraph prism() {
  return from_edges(6, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

// Colour tuple indexed by connector position.
std::vector<Colour> connector_colours(const Network& n, const BoundaryColouring& b, int connector) {
  std::vector<Colour> out;
  for (VertexId t : n.connectors[connector]) out.push_back(b[n.terminal_index(t)]);
  return out;
}

bool mono(const std::vector<Colour>& c) { return c.size() == 2 && c[0] == c[1]; }
bool bichromatic(const std::vector<Colour>& c) { return c.size() == 2 && c[0] != c[1]; }

// --------------------------------------------------------------------------

void petersen_baseline(const VerifyOptions&, ClaimResult& r) {
  MultiGraph p = petersen();
  expect(r, p.order() == 10, "order");
  expect(r, girth(p) == 5, "girth 5");
  auto z = cyclic_connectivity(p);
  expect(r, zeta_is(z, 5), "zeta 5, got " + str(z));
  expect(r, rho(p) == 2, "resistance 2");
  expect(r, omega(p) == 2, "oddness 2");
  auto cs = enumerate_circuits(p, 5);
  expect(r, cs.size() == 12, "twelve 5-circuits, got " + std::to_string(cs.size()));
  for (const auto& c : cs) expect(r, c.length() == 5, "circuit of length " + std::to_string(c.length()));
  auto pms = enumerate_perfect_matchings(p);
  expect(r, pms.size() == 6, "six 2-factors, got " + std::to_string(pms.size()));
  for (const auto& m : pms) {
    auto f = complement_two_factor(p, m);
    expect(r, f.circuits.size() == 2 && f.circuits[0].length() == 5 && f.circuits[1].length() == 5,
           "2-factor that is not two 5-circuits");
  }
  note(r, "order 10, girth 5, zeta " + str(z) + ", rho 2, omega 2, 12 five-circuits, 6 two-factors");
}

void network_laws(const VerifyOptions&, ClaimResult& r) {
  struct Item {
    const char* name;
    Network net;
    int nonterminals;
  };
  std::vector<Item> items = {{"P2", build_P2(), 10},   {"P3", build_P3(), 9},     {"P4v", build_P4v(), 8},
                             {"P4e", build_P4e(), 10}, {"P5vvv", build_P5vvv(), 7}, {"P5ev", build_P5ev(), 9}};
  std::string counts;
  for (const auto& it : items) {
    expect(r, it.net.nonterminal_count() == it.nonterminals,
           std::string(it.name) + " has " + std::to_string(it.net.nonterminal_count()) + " nonterminal vertices");
    counts += " " + std::to_string(it.net.nonterminal_count());
  }
  note(r, "nonterminal counts" + counts);

  // P2 and P3: the parity law leaves no colouring at all.
  for (int i = 0; i < 2; ++i) {
    auto b = boundary_colourings(items[i].net);
    expect(r, b.empty(), std::string(items[i].name) + " has a colouring");
    for (const auto& t : b) expect(r, t.size() == 2 && t[0] == t[1], std::string(items[i].name) + " unequal pair");
  }
  auto law = [&](const Item& it, const std::function<bool(const BoundaryColouring&)>& ok) {
    auto b = boundary_colourings(it.net);
    expect(r, !b.empty(), std::string(it.name) + " has no colouring");
    for (const auto& t : b)
      if (!ok(t)) {
        r.failures.push_back(std::string(it.name) + " violates its boundary law");
        break;
      }
    note(r, std::string(it.name) + ": " + std::to_string(b.size()) + " boundary tuples");
  };
  const Network& p4v = items[2].net;
  law(items[2], [&](const BoundaryColouring& t) {
    return mono(connector_colours(p4v, t, 0)) && mono(connector_colours(p4v, t, 1));
  });
  const Network& p4e = items[3].net;
  law(items[3], [&](const BoundaryColouring& t) {
    return bichromatic(connector_colours(p4e, t, 0)) && bichromatic(connector_colours(p4e, t, 1));
  });
  const Network& p5 = items[4].net;
  law(items[4], [&](const BoundaryColouring& t) {
    int counts[4] = {0, 0, 0, 0};
    for (Colour c : t) ++counts[c];
    std::vector<int> m{counts[1], counts[2], counts[3]};
    std::sort(m.begin(), m.end());
    auto a = connector_colours(p5, t, 0), b = connector_colours(p5, t, 1);
    return m == std::vector<int>{1, 1, 3} && ((mono(a) && bichromatic(b)) || (bichromatic(a) && mono(b)));
  });
  const Network& pev = items[5].net;
  law(items[5], [&](const BoundaryColouring& t) {
    auto pair = connector_colours(pev, t, 0).size() == 2 ? connector_colours(pev, t, 0) : connector_colours(pev, t, 1);
    return bichromatic(pair);
  });
}

void oddness_four_snarks(const VerifyOptions&, ClaimResult& r) {
  auto hs = build_H_candidates();
  note(r, std::to_string(hs.size()) + " candidates after isomorphism reduction");
  expect(r, !hs.empty(), "no candidates");
  std::set<int> zetas;
  std::set<std::string> forms;
  for (const auto& h : hs) {
    forms.insert(canonical_form(h));
    auto z = cyclic_connectivity(h);
    if (z.kind == ZetaResult::Kind::exact) zetas.insert(z.value);
    int om = omega(h), rh = rho(h);
    auto gi = girth(h);
    expect(r, h.order() == 28, "order " + std::to_string(h.order()));
    expect(r, om == 4, "oddness " + std::to_string(om));
    expect(r, rh == 3, "resistance " + std::to_string(rh));
    expect(r, gi && *gi >= 5, "girth below 5");
    expect(r, is_snark(h), "candidate is not a snark");
    note(r, "order 28, zeta " + str(z) + ", omega " + std::to_string(om) + ", rho " + std::to_string(rh) +
                ", girth " + std::to_string(gi.value_or(0)));
  }
  expect(r, forms.size() == hs.size(), "duplicate isomorphism classes");
  expect(r, zetas.count(2) == 1, "no candidate with cyclic connectivity 2");
  expect(r, zetas.count(3) == 1, "no candidate with cyclic connectivity 3");
  note(r, "minimality among all snarks of order <= 26 is not checked (needs an external census)");
}

void extension_family(const VerifyOptions&, ClaimResult& r) {
  MultiGraph r1 = build_R(1), r2 = build_R(2);
  int o1 = omega(r1), o2 = omega(r2);
  expect(r, r1.order() == 28 && o1 == 4, "R1: order " + std::to_string(r1.order()) + ", oddness " + std::to_string(o1));
  expect(r, r2.order() == 40 && o2 == 6, "R2: order " + std::to_string(r2.order()) + ", oddness " + std::to_string(o2));
  expect(r, Rational(r1.order(), o1) == Rational(7), "R1 ratio");
  expect(r, Rational(r2.order(), o2) == Rational(20, 3), "R2 ratio");
  note(r, "R1: 28 vertices, oddness " + std::to_string(o1) + ", ratio " + Rational(r1.order(), o1).str());
  note(r, "R2: 40 vertices, oddness " + std::to_string(o2) + ", ratio " + Rational(r2.order(), o2).str());

  std::set<std::string> forms;
  MultiGraph p = petersen();
  for (VertexId v = 0; v < p.order(); ++v) forms.insert(canonical_form(gv_extension(p, v)));
  expect(r, forms.size() == 1, "extension of the Petersen graph depends on the vertex");

  for (const auto& [name, base, ob] : {std::tuple{"R1", r1, o1}, std::tuple{"R2", r2, o2}}) {
    MultiGraph ext = gv_extension(base, 0);
    int oe = omega(ext);
    expect(r, ext.order() == base.order() + 30, std::string(name) + " extension order");
    expect(r, oe == ob + 4, std::string(name) + " extension oddness " + std::to_string(oe));
    expect(r, is_snark(ext), std::string(name) + " extension is not a snark");
    note(r, std::string(name) + " extended: " + std::to_string(ext.order()) + " vertices, oddness " +
                std::to_string(oe));
  }
}

void ring_family(const VerifyOptions&, ClaimResult& r) {
  Network n1 = build_N1(), n2 = build_N2();
  expect(r, !is_colourable(n1), "N1 is colourable");
  expect(r, n1.nonterminal_count() == 18, "N1 nonterminal count");
  expect(r, n2.nonterminal_count() == 26, "N2 nonterminal count");
  int calls = 1;
  for (VertexId w : n2.nonterminals()) {
    std::vector<VertexId> del{w};
    ++calls;
    expect(r, !is_colourable(remove_vertices(n2.graph, del).graph), "N2 - " + std::to_string(w) + " is colourable");
  }
  note(r, std::to_string(calls) + " colourability calls on N1 and N2 - w");

  MultiGraph g44 = build_ring(1, true);
  auto z = cyclic_connectivity(g44);
  int rh = rho(g44), om = omega(g44);
  expect(r, g44.order() == 44, "ring N2,N1 order " + std::to_string(g44.order()));
  expect(r, rh == 3, "ring N2,N1 resistance " + std::to_string(rh));
  expect(r, om == 4, "ring N2,N1 oddness " + std::to_string(om));
  expect(r, zeta_is(z, 4), "ring N2,N1 zeta " + str(z));
  expect(r, girth(g44) == 5, "ring N2,N1 girth");
  note(r, "ring N2,N1: 44 vertices, rho " + std::to_string(rh) + ", omega " + std::to_string(om) + ", zeta " + str(z) +
              ", girth 5");

  MultiGraph g52 = build_ring(2, false);
  int r52 = rho(g52);
  expect(r, g52.order() == 52, "ring N2,N2 order");
  expect(r, r52 == 4, "ring N2,N2 resistance " + std::to_string(r52));
  note(r, "ring N2,N2: 52 vertices, rho " + std::to_string(r52));
}

void z_chain(const VerifyOptions&, ClaimResult& r) {
  Network z = build_Z();
  expect(r, z.nonterminal_count() == 25, "Z nonterminal count");
  expect(r, !is_colourable(z), "Z is colourable");
  MultiGraph c2 = chain_Z(2);
  expect(r, c2.order() == 50, "chain order " + std::to_string(c2.order()));
  expect(r, resistance_at_least(c2, 2), "chain resistance below 2");
  auto zc = cyclic_connectivity(c2);
  expect(r, zeta_is(zc, 5), "chain zeta " + str(zc));
  note(r, "Z: 25 vertices, uncolourable; chain of 2: 50 vertices, rho >= 2, zeta " + str(zc));
}

void superposition_family(const VerifyOptions&, ClaimResult& r) {
  Network y = build_Y();
  expect(r, y.nonterminal_count() == 18, "Y nonterminal count");
  expect(r, is_proper_superedge(y), "Y is not proper");

  LGraph l = build_L_detail(2);
  Superposition s = superpose(build_M_plan(l));
  const MultiGraph& m = s.graph;
  expect(r, m.order() == 198, "M2 order " + std::to_string(m.order()));
  expect(r, verify_projection(l.graph, s), "projection is not incidence-preserving and surjective");

  auto t = Clock::now();
  expect(r, !is_colourable(m), "M2 is colourable");
  double worst = since(t);
  int calls = 1;
  for (VertexId v = 0; v < m.order(); ++v) {
    std::vector<VertexId> del{v};
    MultiGraph h = remove_vertices(m, del).graph;
    t = Clock::now();
    bool col = is_colourable(h);
    worst = std::max(worst, since(t));
    ++calls;
    expect(r, !col, "M2 - " + std::to_string(v) + " is colourable");
  }
  expect(r, worst < 2.0, "slowest colourability call took " + std::to_string(worst) + " s");
  std::ostringstream os;
  os.precision(3);
  os << calls << " colourability calls, slowest " << worst << " s";
  note(r, os.str());

  auto cyc = is_cyclically_k_connected(m, 6);
  expect(r, cyc.holds, "M2 is not cyclically 6-connected");
  note(r, "M2 cyclically 6-connected");

  auto rep = superposition_resistance_check(l.graph, s);
  expect(r, rep.base_resistance == 2, "L2 resistance " + std::to_string(rep.base_resistance));
  expect(r, rep.holds, "resistance of M2 below that of L2");
  note(r, "rho(L2) = " + std::to_string(rep.base_resistance) + " <= rho(M2)");

  MultiGraph m3 = build_M(3);
  expect(r, m3.order() == 298, "M3 order " + std::to_string(m3.order()));
  note(r, "M3: " + std::to_string(m3.order()) + " vertices");
}

// Edge ids of a circuit as a sorted key.
std::vector<EdgeId> edge_key(const Circuit& c) {
  auto k = c.edges;
  std::sort(k.begin(), k.end());
  return k;
}

int oracle_min_selected(const MultiGraph& g, const std::vector<Circuit>& cs) {
  std::set<std::vector<EdgeId>> keys;
  for (const auto& c : cs) keys.insert(edge_key(c));
  int best = 1 << 30;
  for (const auto& m : enumerate_perfect_matchings(g)) {
    int k = 0;
    for (const auto& c : complement_two_factor(g, m).circuits) k += static_cast<int>(keys.count(edge_key(c)));
    best = std::min(best, k);
  }
  return best;
}

int oracle_max_edges(const MultiGraph& g, const std::vector<EdgeId>& s) {
  int best = -1;
  for (const auto& m : enumerate_perfect_matchings(g)) {
    auto f = complement_two_factor(g, m);
    int k = 0;
    for (EdgeId e : s) k += std::binary_search(f.edges.begin(), f.edges.end(), e);
    best = std::max(best, k);
  }
  return best;
}

std::vector<VertexId> side_of(int n, unsigned mask) {
  std::vector<VertexId> out;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1u) out.push_back(v);
  return out;
}

std::string fixture(const VerifyOptions& o, const char* file) {
  return (o.fixture_dir.empty() ? std::string(".") : o.fixture_dir) + "/" + file;
}

void property_suite(const VerifyOptions& o, ClaimResult& r) {
  auto graphs = load_fixture(fixture(o, "cubic_le12.g6"), o.size_cap);
  expect(r, !graphs.empty(), "empty fixture");
  int cuts = 0, subsets = 0, snarks = 0;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const MultiGraph& g = graphs[gi].graph;
    const std::string& name = graphs[gi].name;
    std::mt19937_64 rng(o.seed + gi);
    ResistanceOptions lex;
    auto rv = resistance(g, DeletionMode::vertex, lex);
    auto re = resistance(g, DeletionMode::edge, lex);
    int om = omega(g);
    expect(r, verify_witness(g, rv.witness) && verify_witness(g, re.witness), name + ": witness fails");
    expect(r, rv.value <= om, name + ": rho > omega");
    expect(r, om % 2 == 0, name + ": odd oddness");
    expect(r, rv.value != 1, name + ": rho = 1");
    expect(r, (rv.value == 2) == (om == 2), name + ": rho = 2 and omega = 2 disagree");
    expect(r, rv.value == re.value, name + ": vertex and edge resistance differ");

    auto inc = five_circuit_incidence(g);
    int weighted = 0;
    for (int i = 0; i <= 6; ++i) weighted += i * inc.profile[i];
    expect(r, weighted == 5 * inc.circuits && inc.overflow.empty(), name + ": 5-circuit double counting");

    if (auto col = find_colouring(g)) {
      const int n = g.order();
      for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        auto side = side_of(n, mask);
        std::vector<EdgeId> cut;
        for (EdgeId e = 0; e < g.size(); ++e)
          if ((mask >> g.edge(e).u & 1u) != (mask >> g.edge(e).v & 1u)) cut.push_back(e);
        if (cut.size() > 4) continue;
        ++cuts;
        expect(r, verify_parity(*col, cut).holds, name + ": parity fails on a cut");
      }
    }

    auto fives = enumerate_circuits(g, 5);
    fives.erase(std::remove_if(fives.begin(), fives.end(), [](const Circuit& c) { return c.length() != 5; }),
                fives.end());
    const int q = static_cast<int>(fives.size());
    const bool all_subsets = q <= 8;
    const int trials = all_subsets ? (1 << q) : 100;
    for (int t = 0; t < trials; ++t) {
      std::vector<Circuit> pick;
      for (int i = 0; i < q; ++i)
        if (all_subsets ? (t >> i & 1) : (rng() & 1u)) pick.push_back(fives[i]);
      auto sel = min_selected_5circuits(g, pick);
      ++subsets;
      expect(r, 6 * sel.value <= static_cast<int>(pick.size()), name + ": a 2-factor with few selected 5-circuits is missing");
    }
    for (int t = 0; t < 100; ++t) {
      std::vector<EdgeId> s;
      for (EdgeId e = 0; e < g.size(); ++e)
        if (rng() & 1u) s.push_back(e);
      auto sel = max_selected_edges(g, s);
      ++subsets;
      expect(r, 3 * sel.value >= 2 * static_cast<int>(s.size()), name + ": no 2-factor holds 2/3 of the edge set");
    }

    for (const auto& m : enumerate_perfect_matchings(g)) {
      auto f = complement_two_factor(g, m);
      expect(r, make_two_factor(g, f.edges).has_value(), name + ": matching complement is not a 2-factor");
    }

    if (!is_colourable(g)) {
      ++snarks;
      auto rec = analyze(g);
      for (const auto& bad : record_inconsistencies(rec)) r.failures.push_back(name + ": " + bad);
      bool odd_checked = false;
      for (const auto& b : rec.bounds)
        if (b.name == "odd_circuit_bound") odd_checked = b.applicable;
      expect(r, odd_checked || !rec.girth || *rec.girth < 4, name + ": odd circuit bound not evaluated");
    }
  }
  note(r, std::to_string(graphs.size()) + " fixture graphs, " + std::to_string(cuts) + " cuts of size <= 4, " +
              std::to_string(subsets) + " selection problems, " + std::to_string(snarks) + " snark(s)");

  int refs = 0;
  for (const auto& [name, g] : reference_snarks()) {
    ++refs;
    auto rec = analyze(g);
    for (const auto& bad : record_inconsistencies(rec)) r.failures.push_back(name + ": " + bad);
    for (const auto& b : rec.bounds)
      expect(r, b.applicable || b.name == "odd_circuit_bound", name + ": " + b.name + " not applicable");
    auto avoid = five_circuit_avoidance_check(g);
    expect(r, avoid.pass, name + ": five_circuit_avoidance fails at " + avoid.detail);
  }
  note(r, std::to_string(refs) + " reference snarks checked against the counting bounds");
}

void oracle_agreement(const VerifyOptions& o, ClaimResult& r) {
  auto small = load_fixture(fixture(o, "cubic_le12.g6"), 16);
  auto big = load_fixture(fixture(o, "cubic_sample_14_16.g6"), 16);
  std::vector<NamedGraph> all = small;
  all.insert(all.end(), big.begin(), big.end());
  int zeta_cases = 0, odd_cases = 0, sel_cases = 0;
  for (std::size_t gi = 0; gi < all.size(); ++gi) {
    const auto& [name, g] = all[gi];
    auto z = cyclic_connectivity(g);
    auto brute = cyclic_cut_brute_force(g, 4);
    for (int k = 2; k <= 4; ++k) {
      bool solver = is_cyclically_k_connected(g, k).holds;
      bool oracle = !brute || *brute >= k;
      expect(r, solver == oracle, name + ": cyclic " + std::to_string(k) + "-connectivity disagrees");
      ++zeta_cases;
    }
    if (brute) {
      expect(r, zeta_is(z, *brute), name + ": zeta " + str(z) + " vs brute force " + std::to_string(*brute));
    } else {
      expect(r, zeta_rank(z) > 4, name + ": zeta " + str(z) + " but no cut of size <= 4");
    }
    if (z.certificate) expect(r, validate_cyclic_cut(g, *z.certificate), name + ": invalid cut certificate");
    if (z.kind == ZetaResult::Kind::exact && z.value <= 3)
      expect(r, z.value == edge_connectivity(g), name + ": zeta <= 3 differs from edge connectivity");

    if (g.order() > o.size_cap) continue;
    auto fast = oddness(g), slow = oddness_exhaustive(g);
    expect(r, fast.value == slow.value, name + ": oddness branch and bound disagrees");
    ++odd_cases;
    expect(r, is_colourable(g) == backtrack_colouring(g).has_value(), name + ": colouring engines disagree");

    std::mt19937_64 rng(o.seed ^ (gi * 0x9e3779b97f4a7c15ULL));
    auto fives = enumerate_circuits(g, 5);
    for (int t = 0; t < 10; ++t) {
      std::vector<Circuit> pick;
      for (const auto& c : fives)
        if (c.length() == 5 && (rng() & 1u)) pick.push_back(c);
      std::vector<EdgeId> s;
      for (EdgeId e = 0; e < g.size(); ++e)
        if (rng() & 1u) s.push_back(e);
      expect(r, min_selected_5circuits(g, pick).value == oracle_min_selected(g, pick), name + ": 5-circuit selection");
      expect(r, max_selected_edges(g, s).value == oracle_max_edges(g, s), name + ": edge selection");
      sel_cases += 2;
    }
  }
  note(r, std::to_string(all.size()) + " graphs, " + std::to_string(zeta_cases) + " connectivity decisions, " +
              std::to_string(odd_cases) + " oddness comparisons, " + std::to_string(sel_cases) +
              " selection comparisons");
}

void reduction_suite(const VerifyOptions&, ClaimResult& r) {
  auto inputs = reduction_inputs();
  expect(r, inputs.size() == 20, "expected 20 inputs");
  MultiGraph p = petersen();
  int steps = 0;
  for (const auto& [name, g] : inputs) {
    if (!is_snark(g)) {
      r.failures.push_back(name + ": input is not a snark");
      continue;
    }
    const int om = omega(g);
    const auto z = cyclic_connectivity(g);
    auto check = [&](const char* op, const ReductionResult& res) {
      const MultiGraph& h = res.graph;
      const std::string tag = name + " " + op;
      steps += static_cast<int>(res.trace.steps.size());
      expect(r, is_snark(h), tag + ": result is not a snark");
      expect(r, h.order() <= g.order(), tag + ": order grew");
      expect(r, omega(h) == om, tag + ": oddness changed");
      expect(r, replay(g, res.trace) == h, tag + ": trace does not replay");
      for (const auto& st : res.trace.steps) expect(r, st.order_after <= st.order_before, tag + ": step grew");
      return h;
    };
    auto g4 = check("girth4", reduce_to_girth4(g));
    expect(r, girth(g4).value_or(0) >= 4, name + " girth4: girth below 4");
    expect(r, zeta_rank(cyclic_connectivity(g4)) >= zeta_rank(z), name + " girth4: cyclic connectivity dropped");
    auto g5 = check("girth5", reduce_to_girth5(g));
    expect(r, girth(g5).value_or(0) >= 5, name + " girth5: girth below 5");
    auto c2 = check("cut2", reduce_2cuts(g));
    expect(r, !cut_with_colourable_side(c2, 2), name + " cut2: a 2-cut has a colourable side");
    auto c3 = check("cut3", reduce_3cuts(g));
    expect(r, !cut_with_colourable_side(c3, 3), name + " cut3: a 3-cut has a colourable side");
    auto all = check("all", reduce_all(g));
    expect(r, girth(all).value_or(0) >= 5 && !cut_with_colourable_side(all, 2) && !cut_with_colourable_side(all, 3),
           name + " all: not a fixpoint of every rule");
    if (name.rfind("triangle", 0) == 0) expect(r, is_isomorphic(g4, p), name + ": girth4 does not give the Petersen graph");
    if (name.rfind("P2+colourable", 0) == 0) expect(r, is_isomorphic(c2, p), name + ": cut2 does not give the Petersen graph");
    if (name.rfind("P3+colourable", 0) == 0) expect(r, is_isomorphic(c3, p), name + ": cut3 does not give the Petersen graph");
  }
  note(r, std::to_string(inputs.size()) + " inputs, 5 operations each, " + std::to_string(steps) + " reduction steps");
}

}  // namespace

std::vector<NamedGraph> reduction_inputs() {
  MultiGraph p = petersen();
  std::vector<NamedGraph> out;
  out.push_back({"triangle at 0", expand_to_triangle(p, 0)});
  out.push_back({"triangle at 0,1", expand_to_triangle(expand_to_triangle(p, 0), 1)});
  out.push_back({"triangle at 0,7", expand_to_triangle(expand_to_triangle(p, 0), 7)});
  out.push_back({"triangle at 0,1,2", expand_to_triangle(expand_to_triangle(expand_to_triangle(p, 0), 1), 2)});
  out.push_back({"square on 0,1", expand_to_square(p, 0, 1)});
  out.push_back({"square on 0,6", expand_to_square(p, 0, 6)});
  out.push_back({"square on 0,5", expand_to_square(p, 0, 5)});
  out.push_back({"square on 10,12", expand_to_square(p, 10, 12)});
  out.push_back({"digon on 0", insert_digon(p, 0)});
  out.push_back({"digon on 0,7", insert_digon(insert_digon(p, 0), 7)});
  Network p2 = build_P2(), p3 = build_P3();
  out.push_back({"P2+colourable K4", close_pair(p2, two_pole(k4(), 0))});
  out.push_back({"P2+colourable prism", close_pair(p2, two_pole(prism(), 0))});
  out.push_back({"P2+colourable K33", close_pair(p2, two_pole(k33(), 0))});
  out.push_back({"P2+P2", close_pair(p2, p2)});
  out.push_back({"P3+colourable K4", close_pair(p3, split_off(k4(), 0))});
  out.push_back({"P3+colourable K33", close_pair(p3, split_off(k33(), 0))});
  out.push_back({"P3+colourable prism", close_pair(p3, split_off(prism(), 0))});
  out.push_back({"P3+P3", close_pair(p3, p3)});
  out.push_back({"H1", build_H1()});
  out.push_back({"digon and triangle", expand_to_triangle(insert_digon(p, 0), 5)});
  return out;
}

std::vector<NamedGraph> reference_snarks() {
  return {{"J5", flower_snark(5)},   {"J7", flower_snark(7)},         {"H1", build_H1()},
          {"H2", build_H2()},        {"ring N2,N1", build_ring(1, true)}, {"R2", build_R(2)}};
}

std::vector<NamedGraph> load_fixture(const std::string& path, int max_order) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::vector<NamedGraph> out;
  for (auto& rec : read_catalogue(ss.str())) {
    if (auto* err = std::get_if<ParseError>(&rec.value)) throw *err;
    auto& g = std::get<MultiGraph>(rec.value);
    if (g.order() > max_order) continue;
    out.push_back({path.substr(path.find_last_of('/') + 1) + ":" + std::to_string(rec.line), std::move(g)});
  }
  return out;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "petersen-baseline", "Petersen graph: order, girth, zeta, rho, omega, 5-circuits and 2-factors", 1, false,
       petersen_baseline},
      {2, "network-laws", "Petersen-derived networks: nonterminal counts and boundary colouring laws", 5, false,
       network_laws},
      {3, "oddness-four-order-28", "order-28 snarks of oddness 4 from three P3 copies", 300, false,
       oddness_four_snarks},
      {4, "extension-family", "R1 and R2, and one further extension of each", 300, false, extension_family},
      {5, "ring-family", "N1, N2 - w, and rings of N-blocks", 600, false, ring_family},
      {6, "z-chain", "7-pole Z and the chain of two copies", 300, false, z_chain},
      {7, "superposition-family", "M2: order, colourability of M2 and M2 - v, cyclic 6-connectivity, resistance",
       1800, true, superposition_family},
      {8, "property-suite", "invariant relations and counting bounds over the fixture graphs", 900, false,
       property_suite},
      {9, "oracle-agreement", "solvers against brute-force references", 0, false, oracle_agreement},
      {10, "reduction-suite", "reductions preserve oddness and meet their postconditions", 300, false,
       reduction_suite},
  };
  return list;
}

std::vector<int> suite_members(const std::string& suite) {
  if (suite == "claims") return {1, 2, 3, 4, 5, 6, 7, 10};
  if (suite == "properties") return {8};
  if (suite == "oracles") return {9};
  throw std::invalid_argument("unknown suite '" + suite + "' (expected claims, properties or oracles)");
}

ClaimResult run_criterion(const Criterion& c, const VerifyOptions& opts) {
  ClaimResult r;
  r.number = c.number;
  r.id = c.id;
  r.statement = c.statement;
  r.limit_seconds = c.limit_seconds;
  auto t = Clock::now();
  try {
    c.body(opts, r);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = since(t);
  if (c.limit_seconds > 0 && r.seconds > c.limit_seconds)
    r.failures.push_back("runtime " + std::to_string(r.seconds) + " s exceeds " + std::to_string(c.limit_seconds) + " s");
  r.pass = r.failures.empty();
  return r;
}

}  // namespace snarklab
