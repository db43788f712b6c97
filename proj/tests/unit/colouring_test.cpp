#include <random>

#include "colouring_dp.hpp"
#include "colouring_tree.hpp"
#include "doctest.h"
#include "snarklab/colouring.hpp"
#include "snarklab/constructions.hpp"
#include "snarklab/networks.hpp"
#include "support.hpp"

using namespace snarklab;

TEST_CASE("small colourable graphs and the petersen graph") {
  CHECK(is_colourable(testing::k4()));
  CHECK(is_colourable(testing::k33()));
  CHECK(is_colourable(testing::prism()));
  CHECK(is_colourable(testing::theta()));
  CHECK_FALSE(is_colourable(petersen()));
  CHECK_FALSE(is_colourable(flower_snark(5)));
  CHECK_THROWS_AS(flower_snark(4), GraphError);
}

TEST_CASE("colouring engines agree with backtracking") {
  auto graphs = testing::small_fixture();
  for (const auto& g : testing::sample_fixture()) graphs.push_back(g);
  for (const auto& [name, g] : graphs) {
    CAPTURE(name);
    bool bt = backtrack_colouring(g).has_value();
    std::vector<bool> constrained(g.order(), true);
    auto carving = detail::carving_colouring(g, constrained, true);
    CHECK(carving.has_value() == bt);
    if (carving) CHECK(is_proper(g, *carving));
    auto found = find_colouring(g);
    CHECK(found.has_value() == bt);
    if (found) CHECK(is_proper(g, *found));
  }
}

TEST_CASE("carving engine handles wide snarks") {
  MultiGraph r2 = build_R(2);
  std::vector<bool> constrained(r2.order(), true);
  CHECK_FALSE(detail::carving_colouring(r2, constrained, false).has_value());
  MultiGraph j9 = flower_snark(9);
  CHECK(detail::carving_width(j9) <= 12);
  CHECK_FALSE(is_colourable(j9));
}

TEST_CASE("parity holds on every small cut of a colouring") {
  std::mt19937_64 rng(7);
  for (const auto& [name, g] : testing::sample_fixture()) {
    auto col = find_colouring(g);
    if (!col) continue;
    for (int t = 0; t < 50; ++t) {
      std::vector<EdgeId> cut;
      unsigned long mask = rng();
      for (EdgeId e = 0; e < g.size(); ++e)
        if ((mask >> g.edge(e).u & 1ul) != (mask >> g.edge(e).v & 1ul)) cut.push_back(e);
      auto rep = verify_parity(*col, cut);
      CHECK(rep.holds);
      CHECK((rep.counts[0] % 2 == cut.size() % 2));
    }
  }
}

TEST_CASE("resistance of the petersen graph and its witnesses") {
  MultiGraph p = petersen();
  for (auto mode : {DeletionMode::vertex, DeletionMode::edge}) {
    auto r = resistance(p, mode);
    CHECK(r.value == 2);
    CHECK(verify_witness(p, r.witness));
    CHECK(resistance_at_least(p, 2, mode));
    CHECK_FALSE(resistance_at_least(p, 3, mode));
  }
}

TEST_CASE("resistance of colourable graphs is zero") {
  auto r = resistance(testing::k33());
  CHECK(r.value == 0);
  CHECK(r.witness.removed.empty());
}

TEST_CASE("boundary colourings of a split-off vertex use three distinct colours") {
  Network n = split_off(testing::k4(), 0);
  auto b = boundary_colourings(n);
  REQUIRE_FALSE(b.empty());
  for (const auto& t : b) {
    REQUIRE(t.size() == 3);
    CHECK(t[0] != t[1]);
    CHECK(t[1] != t[2]);
    CHECK(t[0] != t[2]);
  }
}
