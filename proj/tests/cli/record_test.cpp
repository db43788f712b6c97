#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "cache.hpp"
#include "doctest.h"
#include "report.hpp"
#include "snarklab/canonical.hpp"
#include "snarklab/constructions.hpp"
#include "snarklab/networks.hpp"
#include "snarklab/verify.hpp"

using namespace snarklab;
using cli::Json;

namespace {

std::vector<NamedGraph> catalogue() {
  const std::string dir = SNARKLAB_FIXTURE_DIR;
  auto all = load_fixture(dir + "/cubic_le12.g6", 12);
  for (auto& g : load_fixture(dir + "/cubic_sample_14_16.g6", 16)) all.push_back(std::move(g));
  return all;
}

std::string temp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("cached records equal fresh records on 100 catalogue samples") {
  auto graphs = catalogue();
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
  const std::string path = temp_path("snarklab_record_test.jsonl");
  std::vector<std::pair<std::string, Json>> expected;
  {
    cli::RecordCache cache(path, false);
    for (int i = 0; i < 100; ++i) {
      const MultiGraph& g = graphs[pick(rng)].graph;
      auto r = analyze(g);
      Json fresh = cli::to_json(r, false);
      CHECK(cli::to_json(cli::record_from_json(fresh), false) == fresh);
      cache.append(canonical_form(g), r);
      expected.push_back({canonical_form(g), fresh});
    }
  }
  cli::RecordCache reread(path, true);
  CHECK(reread.invalid().empty());
  for (const auto& [form, fresh] : expected) {
    auto hit = reread.find(form);
    REQUIRE(hit);
    CHECK(cli::to_json(*hit, false) == fresh);
  }
  std::filesystem::remove(path);
}

TEST_CASE("corrupt cache entries are dropped and the file is repaired") {
  const std::string path = temp_path("snarklab_corrupt_test.jsonl");
  {
    cli::RecordCache cache(path, false);
    cache.append(canonical_form(petersen()), analyze(petersen()));
  }
  {
    std::ofstream out(path, std::ios::app);
    out << "{\"form\":\"x\",\"record\":{\"key\":\"0\"}}\n" << "not json\n";
  }
  {
    cli::RecordCache cache(path, true);
    CHECK(cache.invalid().size() == 2);
    CHECK(cache.size() == 1);
    CHECK(cache.find(canonical_form(petersen())));
  }
  cli::RecordCache again(path, true);
  CHECK(again.invalid().empty());
  CHECK(again.size() == 1);
  std::filesystem::remove(path);
}

TEST_CASE("zeta-class summary of the petersen graph, H1 and the 44-vertex snark") {
  std::vector<InvariantRecord> rs = {analyze(petersen()), analyze(build_H1()), analyze(build_ring(1, true))};
  auto s = cli::summarise(rs);
  REQUIRE(s.size() == 3);
  CHECK(s.at("5").min == Rational(5));
  CHECK(s.at("2").max == Rational(7));
  CHECK(s.at("4").count == 1);
  CHECK(s.at("4").sum == Rational(11));
  Json j = cli::to_json(s, 3);
  CHECK(j["summary"]["zeta_classes"]["4"]["mean_ratio"] == "11");
}

TEST_CASE("summary means are exact rationals") {
  InvariantRecord a, b;
  a.ratio = Rational(7);
  b.ratio = Rational(20, 3);
  a.zeta = b.zeta = ZetaResult{ZetaResult::Kind::exact, 2, std::nullopt};
  auto s = cli::summarise({a, b});
  Json j = cli::to_json(s, 2);
  CHECK(j["summary"]["zeta_classes"]["2"]["mean_ratio"] == "41/6");
  CHECK(j["summary"]["zeta_classes"]["2"]["min_ratio"] == "20/3");
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS_AS(cli::record_from_json(Json::parse("{\"key\":1}")), std::invalid_argument);
  Json good = cli::to_json(analyze(petersen()), false);
  good["oddness"] = {{"state", "bogus"}};
  CHECK_THROWS_AS(cli::record_from_json(good), std::invalid_argument);
}
