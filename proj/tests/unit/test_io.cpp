#include <cmath>

#include "doctest.h"
#include "frac/error.hpp"
#include "frac/io.hpp"

using namespace frac;
using nlohmann::json;

TEST_CASE("shortest round-trip rendering") {
  CHECK(shortest(0.1) == "0.1");
  CHECK(shortest(1.0) == "1");
  CHECK(shortest(-7.789425828382411) == "-7.789425828382411");
  CHECK(std::stod(shortest(M_PI)) == M_PI);
}

TEST_CASE("series JSON round trip") {
  const IndexPair idx = IndexPair::two(0.5, std::sqrt(2.0), 1.0);
  const FracSeries s = SeriesBuilder(idx, 4.0).add_at(0, 0, 1.5).add_at(1, 2, -0.25).add_at(3, 0, 1e-300).build();
  const json j = series_to_json(s);
  CHECK(j.at("terms").size() == 3);
  CHECK(j.at("side") == "right");
  const FracSeries back = series_from_json(j);
  CHECK(back.indices() == idx);
  CHECK(max_relative_difference(s, back, 4.0) == 0.0);
  CHECK(series_to_json(back) == j);
}

TEST_CASE("series JSON input handling") {
  SUBCASE("single index, repeated keys summed") {
    const json j = json::parse(R"({"alpha":0.5,"cutoff":2,"terms":[{"m":1,"c":1},{"m":1,"n":0,"c":2}]})");
    const FracSeries s = series_from_json(j);
    CHECK(s.coefficient_at(1) == 3.0);
    CHECK_FALSE(j.contains("beta"));
  }
  SUBCASE("normalized lattices relabel canonically") {
    const json j = json::parse(R"({"alpha":0.5,"beta":1.0,"cutoff":3,"terms":[{"m":2,"n":1,"c":1}]})");
    const json out = series_to_json(series_from_json(j));
    const auto& t = out.at("terms").at(0);
    CHECK(t.at("m").get<int>() * 0.5 + t.at("n").get<int>() * 1.0 == 2.0);
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(series_from_json(json::parse(R"({"cutoff":2})")), DomainError);
    CHECK_THROWS_AS(series_from_json(json::parse(R"({"alpha":0.5,"cutoff":1,"terms":[{"m":3,"c":1}]})")), DomainError);
    CHECK_THROWS_AS(series_from_json(json::parse(R"({"alpha":0.5,"cutoff":1,"terms":[{"m":1.5,"c":1}]})")), DomainError);
    CHECK_THROWS_AS(series_from_json(json::parse(R"({"alpha":0.5,"cutoff":1,"terms":[{"m":1}]})")), DomainError);
    CHECK_THROWS_AS(series_from_json(json::parse(R"({"alpha":0.5,"cutoff":1,"side":"up"})")), DomainError);
    CHECK_THROWS_AS(series_from_json(json::parse("[1,2]")), DomainError);
  }
}

TEST_CASE("problem JSON") {
  const json j = json::parse(R"({"alpha":0.5,"beta":1.0,"base":0.0,
    "terms":[{"shift":0.5,"order":1.0,"coeff":1.0},{"shift":0.0,"order":0.5,"coeff":-1.0}],
    "rhs":{"cutoff":3,"terms":[{"m":0,"n":1,"c":1}]},"y0":0.0})");
  const FdeProblem p = problem_from_json(j);
  CHECK(p.terms().size() == 2);
  CHECK(p.terms()[0].order == 1.0);
  CHECK(p.rhs().size() == 1);
  const FdeProblem again = problem_from_json(problem_to_json(p));
  CHECK(problem_to_json(again) == problem_to_json(p));

  json bad = j;
  bad["rhs"]["alpha"] = 0.25;
  CHECK_THROWS_AS(problem_from_json(bad), IncompatibleError);
  json off = j;
  off["terms"][0]["order"] = 0.3;
  CHECK_THROWS_AS(problem_from_json(off), LatticeError);
}

TEST_CASE("CSV table") {
  const FracSeries s = SeriesBuilder(IndexPair::single(0.5), 2.0).add_at(0, 0, 1.0).add_at(3, 0, 0.1).build();
  CHECK(series_to_csv(s) == "m,n,exponent,coefficient\n0,0,0,1\n3,0,1.5,0.1\n");
}

TEST_CASE("report JSON") {
  Report r("demo");
  r.add("ok", 1e-15, 1e-12);
  r.add("bad", NAN, 1e-12);
  const json j = report_to_json(r);
  CHECK(j.at("passed") == false);
  CHECK(j.at("checks").at(1).at("value").is_null());
  CHECK(j.at("checks").at(0).at("passed") == true);
}
