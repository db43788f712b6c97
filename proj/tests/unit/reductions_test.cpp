#include "doctest.h"
#include "snarklab/canonical.hpp"
#include "snarklab/circuits.hpp"
#include "snarklab/networks.hpp"
#include "snarklab/reductions.hpp"
#include "support.hpp"

using namespace snarklab;

TEST_CASE("reductions reject colourable input") {
  CHECK_THROWS_AS(reduce_all(testing::k33()), ReductionError);
  CHECK_THROWS_AS(reduce_to_girth4(testing::prism()), ReductionError);
}

TEST_CASE("a blown-up triangle contracts back to the petersen graph") {
  MultiGraph g = expand_to_triangle(petersen(), 4);
  CHECK(g.order() == 12);
  CHECK(girth(g) == 3);
  auto r = reduce_to_girth4(g);
  CHECK(is_isomorphic(r.graph, petersen()));
  CHECK(r.oddness_before == 2);
  CHECK(r.oddness_after == 2);
  REQUIRE(r.trace.steps.size() == 1);
  CHECK(replay(g, r.trace) == r.graph);
}

TEST_CASE("a digon is removed by the girth reductions") {
  MultiGraph g = insert_digon(petersen(), 3);
  CHECK(girth(g) == 2);
  auto r = reduce_to_girth5(g);
  CHECK(girth(r.graph) == 5);
  CHECK(is_isomorphic(r.graph, petersen()));
}

TEST_CASE("the petersen graph is already reduced") {
  auto r = reduce_all(petersen());
  CHECK(r.trace.steps.empty());
  CHECK(r.graph == petersen());
  CHECK_FALSE(cut_with_colourable_side(petersen(), 3));
}

TEST_CASE("the reduction-suite inputs are snarks") {
  auto inputs = reduction_inputs();
  CHECK(inputs.size() == 20);
}
