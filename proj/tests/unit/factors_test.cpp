#include <random>

#include "doctest.h"
#include "snarklab/circuits.hpp"
#include "snarklab/colouring.hpp"
#include "snarklab/factors.hpp"
#include "snarklab/networks.hpp"
#include "support.hpp"

using namespace snarklab;

TEST_CASE("perfect matching counts") {
  CHECK(enumerate_perfect_matchings(testing::k4()).size() == 3);
  CHECK(enumerate_perfect_matchings(testing::k33()).size() == 6);
  CHECK(enumerate_perfect_matchings(testing::prism()).size() == 4);
  CHECK(enumerate_perfect_matchings(petersen()).size() == 6);
}

TEST_CASE("matching complements are 2-factors") {
  for (const auto& [name, g] : testing::small_fixture(10)) {
    for (const auto& m : enumerate_perfect_matchings(g)) {
      CHECK(is_perfect_matching(g, m));
      auto f = complement_two_factor(g, m);
      int total = 0;
      for (const auto& c : f.circuits) total += c.length();
      CHECK(total == g.order());
      CHECK(static_cast<int>(f.edges.size()) == g.order());
    }
  }
}

TEST_CASE("oddness of snarks and colourable graphs") {
  CHECK(oddness(petersen()).value == 2);
  CHECK(oddness(flower_snark(5)).value == 2);
  CHECK(oddness(flower_snark(7)).value == 2);
  CHECK(oddness(testing::k33()).value == 0);
  MultiGraph barbell = testing::barbell();
  auto r = oddness(barbell);
  CHECK_FALSE(r.value.has_value());
  CHECK(r.bridge == 8);
}

TEST_CASE("oddness witness is a 2-factor with that many odd circuits") {
  for (const auto& [name, g] : testing::small_fixture()) {
    auto r = oddness(g);
    REQUIRE(r.value);
    CHECK(r.witness.odd_count() == *r.value);
    CHECK(make_two_factor(g, r.witness.edges).has_value());
  }
}

TEST_CASE("odd circuit bound values") {
  CHECK(odd_circuit_bound(10, 12) == Rational(2));
  CHECK(odd_circuit_bound(28, 0) == Rational(4));
  CHECK(odd_circuit_bound(20, 3) == Rational(63, 21));
}

TEST_CASE("oddness ratio bound by cyclic connectivity") {
  MultiGraph j5 = flower_snark(5);
  CHECK(oddness_ratio_bound(j5, 2, 2).bound == Rational(525, 97));
  CHECK(oddness_ratio_bound(j5, 2, 4).bound == Rational(105, 19));
  CHECK(oddness_ratio_bound(j5, 2, 5).bound == Rational(35, 6));
  CHECK(oddness_ratio_bound(j5, 2, std::nullopt).bound == Rational(35, 6));
  CHECK(oddness_ratio_bound(j5, 2, 5).pass);
  CHECK_FALSE(oddness_ratio_bound(j5, 4, 5).pass);
}

TEST_CASE("oddness ratio bound exempts the petersen graph") {
  auto r = oddness_ratio_bound(petersen(), 2, 5);
  CHECK(r.exempt);
}

TEST_CASE("every edge set has a 2-factor holding two thirds of it") {
  std::mt19937_64 rng(3);
  for (const auto& [name, g] : testing::sample_fixture()) {
    std::vector<EdgeId> s;
    for (EdgeId e = 0; e < g.size(); ++e)
      if (rng() & 1u) s.push_back(e);
    auto r = max_selected_edges(g, s);
    CHECK(3 * r.value >= 2 * static_cast<int>(s.size()));
  }
}
