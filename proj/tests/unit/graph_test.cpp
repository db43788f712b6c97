#include "doctest.h"
#include "snarklab/circuits.hpp"
#include "snarklab/graph.hpp"
#include "snarklab/networks.hpp"
#include "support.hpp"

using namespace snarklab;

TEST_CASE("petersen is cubic, connected and bridgeless") {
  MultiGraph p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  CHECK(p.is_cubic());
  CHECK(is_connected(p));
  CHECK(bridges(p).empty());
  CHECK(validate(p).empty());
}

TEST_CASE("bridges are found in a barbell") {
  MultiGraph g = testing::barbell();
  auto br = bridges(g);
  REQUIRE(br.size() == 1);
  CHECK(br[0] == 8);
  CHECK_FALSE(is_two_edge_connected(g));
}

TEST_CASE("subdividing and suppressing restores the graph up to isomorphism") {
  for (const auto& [name, g] : testing::small_fixture(10)) {
    for (EdgeId e = 0; e < g.size(); e += 3) {
      auto s = subdivide(g, e);
      CHECK(s.graph.order() == g.order() + 1);
      auto back = suppress_degree2(s.graph, s.vertex).graph;
      CHECK(back.order() == g.order());
      CHECK(back.size() == g.size());
      CHECK(back.is_cubic());
    }
  }
}

TEST_CASE("removing a vertex leaves three degree-2 vertices") {
  MultiGraph p = petersen();
  std::vector<VertexId> del{3};
  auto r = remove_vertices(p, del);
  CHECK(r.graph.order() == 9);
  CHECK(r.graph.size() == 12);
  int deg2 = 0;
  for (VertexId v = 0; v < r.graph.order(); ++v) deg2 += r.graph.degree(v) == 2;
  CHECK(deg2 == 3);
}

TEST_CASE("split off gives a network whose closure is the original graph") {
  MultiGraph p = petersen();
  Network n = split_off(p, 0);
  CHECK(n.terminal_count() == 3);
  CHECK(n.nonterminal_count() == 9);
  CHECK(validate(n).empty());
}

TEST_CASE("loops are rejected") {
  MultiGraph g(1);
  CHECK_THROWS_AS(g.add_edge(0, 0), GraphError);
}
