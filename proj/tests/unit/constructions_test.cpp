#include "doctest.h"
#include "snarklab/canonical.hpp"
#include "snarklab/circuits.hpp"
#include "snarklab/colouring.hpp"
#include "snarklab/constructions.hpp"
#include "snarklab/networks.hpp"
#include "snarklab/superposition.hpp"

using namespace snarklab;

TEST_CASE("flower snark orders") {
  for (int k = 3; k <= 9; k += 2) CHECK(flower_snark(k).order() == 4 * k);
}

TEST_CASE("network nonterminal counts") {
  CHECK(build_P2().nonterminal_count() == 10);
  CHECK(build_P3().nonterminal_count() == 9);
  CHECK(build_P4v().nonterminal_count() == 8);
  CHECK(build_P4e().nonterminal_count() == 10);
  CHECK(build_P5vvv().nonterminal_count() == 7);
  CHECK(build_P5ev().nonterminal_count() == 9);
  CHECK(build_N1().nonterminal_count() == 18);
  CHECK(build_N2().nonterminal_count() == 26);
  CHECK(build_Z().nonterminal_count() == 25);
  CHECK(build_Y().nonterminal_count() == 18);
}

TEST_CASE("extension adds thirty vertices") {
  MultiGraph p = petersen();
  MultiGraph e = gv_extension(p, 0);
  CHECK(e.order() == 40);
  CHECK(e.is_cubic());
  CHECK_FALSE(is_colourable(e));
}

TEST_CASE("R family orders") {
  CHECK(build_R(1).order() == 28);
  CHECK(build_R(2).order() == 40);
}

TEST_CASE("rings of N blocks") {
  MultiGraph g = build_ring(1, true);
  CHECK(g.order() == 44);
  CHECK(g.is_cubic());
  CHECK(girth(g) == 5);
}

TEST_CASE("trivial superposition reproduces the base graph") {
  MultiGraph p = petersen();
  auto s = superpose(trivial_plan(p));
  CHECK(is_isomorphic(s.graph, p));
  CHECK(verify_projection(p, s));
}

TEST_CASE("Y and the trivial superedge are proper") {
  CHECK(is_proper_superedge(build_Y()));
  CHECK(is_proper_superedge(trivial_superedge()));
}

TEST_CASE("ring orders are the sums of the block orders") {
  CHECK(ring_join({build_N1()}).order() == 18);
  CHECK(build_ring(1, false).order() == 26);
  CHECK(build_ring(1, true).order() == 44);
  CHECK(build_ring(2, false).order() == 52);
  CHECK(build_ring(3, false).order() == 78);
}

TEST_CASE("chain orders: 25 per copy, plus one vertex for an odd number of copies") {
  CHECK(chain_Z(2).order() == 50);
  MultiGraph c3 = chain_Z(3);
  CHECK(c3.order() == 76);
  CHECK(c3.is_cubic());
}

TEST_CASE("L orders") {
  CHECK(build_L(2).order() == 18);
  CHECK(build_L(3).order() == 28);
}
