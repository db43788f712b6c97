#include "doctest.h"
#include "snarklab/analysis.hpp"
#include "snarklab/networks.hpp"
#include "support.hpp"

using namespace snarklab;

TEST_CASE("petersen record") {
  auto r = analyze(petersen());
  CHECK(r.order == 10);
  CHECK(r.girth == 5);
  CHECK(r.edge_connectivity == 3);
  CHECK_FALSE(r.colourable);
  CHECK(r.resistance.value == 2);
  CHECK(r.oddness.value == 2);
  CHECK(r.five_circuits == 12);
  CHECK(r.five_profile[6] == 10);
  REQUIRE(r.ratio);
  CHECK(*r.ratio == Rational(5));
  CHECK(r.is_snark());
  CHECK(record_inconsistencies(r).empty());
}

TEST_CASE("bridged graphs have undefined oddness") {
  MultiGraph barbell = testing::barbell();
  auto r = analyze(barbell);
  CHECK(r.oddness.state == Measure::State::undefined);
  CHECK(r.oddness.note == "bridge 8");
  CHECK_FALSE(r.ratio);
}

TEST_CASE("skipped fields stay skipped") {
  AnalysisOptions o;
  o.zeta = false;
  o.oddness = false;
  auto r = analyze(testing::k33(), o);
  CHECK_FALSE(r.zeta);
  CHECK(r.oddness.state == Measure::State::skipped);
  CHECK(r.resistance.value == 0);
}

TEST_CASE("inconsistent records are reported") {
  InvariantRecord r;
  r.resistance = Measure::of(3);
  r.oddness = Measure::of(2);
  auto bad = record_inconsistencies(r);
  CHECK(bad.size() >= 2);
}

TEST_CASE("records over the fixture are consistent") {
  for (const auto& [name, g] : testing::small_fixture()) {
    CAPTURE(name);
    auto r = analyze(g);
    CHECK(record_inconsistencies(r).empty());
  }
}

TEST_CASE("reference snarks avoid each vertex with the 5-circuits of some 2-factor") {
  for (const auto& [name, g] : reference_snarks()) {
    CAPTURE(name);
    auto b = five_circuit_avoidance_check(g);
    CHECK(b.applicable);
    CHECK(b.pass);
  }
}
