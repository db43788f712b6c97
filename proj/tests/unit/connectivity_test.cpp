#include "doctest.h"
#include "snarklab/connectivity.hpp"
#include "snarklab/networks.hpp"
#include "support.hpp"

using namespace snarklab;

TEST_CASE("cyclic connectivity of small graphs") {
  CHECK(cyclic_connectivity(testing::k4()).kind == ZetaResult::Kind::no_cut);
  CHECK(cyclic_connectivity(testing::k33()).kind == ZetaResult::Kind::no_cut);
  auto z = cyclic_connectivity(testing::prism());
  CHECK(z.kind == ZetaResult::Kind::exact);
  CHECK(z.value == 3);
  REQUIRE(z.certificate);
  CHECK(validate_cyclic_cut(testing::prism(), *z.certificate));
  auto zp = cyclic_connectivity(petersen());
  CHECK(zp.kind == ZetaResult::Kind::exact);
  CHECK(zp.value == 5);
}

TEST_CASE("cyclic connectivity cap yields a lower bound") {
  auto z = cyclic_connectivity(petersen(), 3);
  CHECK(z.kind == ZetaResult::Kind::at_least);
  CHECK(z.value == 4);
  auto exact = cyclic_connectivity(petersen(), 4);
  CHECK(exact.kind == ZetaResult::Kind::exact);
  CHECK(exact.value == 5);
}

TEST_CASE("edge connectivity") {
  CHECK(edge_connectivity(petersen()) == 3);
  CHECK(edge_connectivity(testing::theta()) == 3);
  MultiGraph barbell = testing::barbell();
  CHECK(edge_connectivity(barbell) == 1);
}

TEST_CASE("cyclic connectivity matches brute force on the fixtures") {
  auto graphs = testing::small_fixture();
  for (const auto& g : testing::sample_fixture()) graphs.push_back(g);
  for (const auto& [name, g] : graphs) {
    CAPTURE(name);
    auto brute = cyclic_cut_brute_force(g, 5);
    auto z = cyclic_connectivity(g);
    if (brute) {
      CHECK(z.kind == ZetaResult::Kind::exact);
      CHECK(z.value == *brute);
    } else {
      CHECK((z.kind == ZetaResult::Kind::no_cut || z.value > 5));
    }
    auto d = is_cyclically_k_connected(g, 4);
    CHECK(d.holds == (!brute || *brute >= 4));
    if (!d.holds) {
      REQUIRE(d.counterexample);
      CHECK(validate_cyclic_cut(g, *d.counterexample));
    }
  }
}
