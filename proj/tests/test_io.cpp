#include "doctest.h"
#include "helpers.hpp"

#include "hurwitz/errors.hpp"

using namespace hurwitz;
using namespace hurwitz::test;

TEST_SUITE("cli") {

TEST_CASE("group files") {
  auto s = load_setting(Json::parse(R"j({"degree": 3, "generators": [[[1,2]], "(1 2 3)"], "classes": ["(2 3)"]})j"));
  CHECK(s->group().order() == 6);
  CHECK(s->classes().xi == std::vector<int>{1});

  auto again = load_setting(setting_to_json(*s));
  CHECK(again->group().order() == 6);
  CHECK(again->classes().classes == s->classes().classes);

  auto xi = load_setting(Json::parse(R"j({"degree": 3, "generators": ["(1 2)", "(1 2 3)"], "classes": ["(1 2)"], "xi": {"0": 2}})j"));
  CHECK(xi->classes().xi == std::vector<int>{2});

  CHECK_THROWS_AS(load_setting(Json::parse(R"j({"degree": 3, "generators": ["(1 2)"]})j")), InvalidArgument);
  CHECK_THROWS_AS(load_setting(Json::parse(R"j({"degree": 3, "generators": ["(1 2)"], "classes": ["(1 2 3)"]})j")),
                  InvalidArgument);
  CHECK_THROWS_AS(load_setting(Json::parse(R"j({"degree": 3, "generators": ["(1 2)", "(1 2 3)"], "classes": ["(1 2)"], "xi": {"0": 0}})j")),
                  InvalidArgument);
  CHECK_THROWS_AS(load_setting(Json::parse(R"j({"degree": 3, "generators": ["(1 2)", "(1 2 3)"], "classes": ["(1 2)"], "xi": {"3": 1}})j")),
                  InvalidArgument);
  CHECK_THROWS_AS(load_setting(Json::parse(R"j({"degree": 3, "generators": [[[1,5]]], "classes": []})j")), InvalidArgument);
  Caps caps;
  caps.max_degree = 4;
  CHECK_THROWS_AS(load_setting(Json::parse(R"j({"degree": 5, "generators": ["(1 2)"], "classes": ["(1 2)"]})j"), caps),
                  CapExceeded);
  CHECK_THROWS_AS(load_setting_file("/nonexistent.json"), InvalidArgument);
}

TEST_CASE("fixtures load") {
  CHECK(fixture("s3")->group().order() == 6);
  CHECK(fixture("s4")->group().order() == 24);
  CHECK(fixture("s5")->group().order() == 120);
  CHECK(fixture("d4")->group().order() == 8);
  CHECK(fixture("q8")->group().order() == 8);
  CHECK(fixture("q8")->classes().size() == 3);
  CHECK(fixture("q8")->group().derived_subgroup().size() == 2);
}

TEST_CASE("tuples round trip as cycle strings") {
  auto s = fixture("s4");
  const auto &g = s->group();
  Tuple t = tup(g, {"(1 2)", "(3 4)", "()"});
  auto j = tuple_to_json(g, t);
  CHECK(j.dump() == R"j(["(1 2)","(3 4)","()"])j");
  CHECK(tuple_from_json(g, j) == t);
}

TEST_CASE("components report") {
  auto t = MonoidTable::build(fixture("s3"), 6);
  auto j = components_json(t, hilbert_table(t));
  CHECK(j["schema_version"] == schema_version);
  CHECK(j["totals"].dump() == "[1,0,3,0,4,0,4]");
  CHECK(j["non_factorizable"]["complete"] == true);
  // Byte-identical across builds.
  auto t2 = MonoidTable::build(fixture("s3"), 6);
  CHECK(components_json(t2, hilbert_table(t2)).dump() == j.dump());
  auto csv = hilbert_csv(t, hilbert_table(t));
  CHECK(csv.rfind("degree,subgroup,subgroup_order,count\n", 0) == 0);
  CHECK(csv.find("4,total,,4\n") != std::string::npos);
}

TEST_CASE("symmetric spectrum report") {
  auto j = symmetric_spectrum_json(spec_sd(3));
  CHECK(j["stratum_count"] == 4);
  CHECK(j["krull_dimension"] == 1);
  auto j4 = symmetric_spectrum_json(spec_sd(4));
  CHECK(j4["proj"]["points"] == 11);
  CHECK(j4["proj"]["lines"] == 3);
}

} // TEST_SUITE
