#include <random>
#include <set>

#include "doctest.h"
#include "snarklab/canonical.hpp"
#include "snarklab/io.hpp"
#include "snarklab/networks.hpp"
#include "support.hpp"

using namespace snarklab;

TEST_CASE("petersen graph6 string") {
  std::string s = write_graph6(petersen());
  CHECK(s.size() == 9);
  CHECK(is_isomorphic(read_graph6(s), petersen()));
}

TEST_CASE("graph6 round trip over the fixture") {
  for (const auto& [name, g] : testing::small_fixture()) {
    MultiGraph back = read_graph6(write_graph6(g));
    CHECK(canonical_form(back) == canonical_form(g));
  }
}

TEST_CASE("multigraph text keeps parallel edges") {
  MultiGraph t = testing::theta();
  MultiGraph back = read_multi_text(write_multi_text(t));
  CHECK(back.order() == 2);
  CHECK(back.size() == 3);
  CHECK(detect_format(write_multi_text(t)) == Format::multi_text);
}

TEST_CASE("malformed catalogue lines become located parse errors") {
  auto recs = read_catalogue("IsHGqCSGW\n@@@\nIsHGqCSGW\n");
  REQUIRE(recs.size() == 3);
  CHECK(std::holds_alternative<MultiGraph>(recs[0].value));
  REQUIRE(std::holds_alternative<ParseError>(recs[1].value));
  CHECK(std::get<ParseError>(recs[1].value).line() == 2);
  CHECK(std::holds_alternative<MultiGraph>(recs[2].value));
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(20240601);
  for (const auto& [name, g] : testing::sample_fixture()) {
    MultiGraph h = relabel(g, testing::random_permutation(g.order(), rng));
    CHECK(canonical_form(h) == canonical_form(g));
    CHECK(canonical_digest(h) == canonical_digest(g));
  }
}

TEST_CASE("fixture graphs are pairwise non-isomorphic") {
  std::set<std::string> forms;
  auto fx = testing::small_fixture();
  for (const auto& [name, g] : fx) forms.insert(canonical_form(g));
  CHECK(forms.size() == fx.size());
  CHECK(fx.size() == 107);
}
