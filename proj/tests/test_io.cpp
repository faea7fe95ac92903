#include <doctest.h>

#include "artifact/io.hpp"

using namespace artifact;

TEST_SUITE("io") {
  TEST_CASE("code json") {
    Code G = code_from_json(json::parse(R"({"r": 4, "generators": ["1100", "0011"]})"));
    CHECK(G.dim() == 2);
    CHECK(G.n() == 4);
    CHECK(code_from_json(code_to_json(G)) == G);
    CHECK(code_from_json(json("<111>")) == code_from_json(json::parse(R"({"generators": ["111"]})")));
    CHECK_THROWS_AS(code_from_json(json::parse(R"({"r": 3, "generators": ["11"]})")), std::invalid_argument);
    CHECK_THROWS_AS(code_from_json(json::parse(R"({"r": 3})")), std::invalid_argument);
  }

  TEST_CASE("algebra json round trip") {
    FramedAlgebra S = ising_algebra();
    json j = algebra_to_json(S);
    FramedAlgebra T = algebra_from_json(json::parse(j.dump()));
    CHECK(algebra_to_json(T) == j);
    for (const auto& r : verify_axioms(T)) CHECK(r.pass());
    FramedAlgebra U = algebra_from_json(algebra_to_json(build_SG(code_from_json(json("<11>")))));
    CHECK(U.size() == 10);
    json bad = j;
    bad["products"][0]["terms"][0]["k"] = "nope";
    CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
    json bad2 = j;
    bad2.erase("basis");
    CHECK_THROWS_AS(algebra_from_json(bad2), std::invalid_argument);
  }

  TEST_CASE("sector and cyclo json") {
    Sector s(parse_word("10|10"), parse_word("01|00"));
    CHECK(sector_from_json(sector_to_json(s)) == s);
    Cyclo c = Cyclo::zeta(3) * Rational(-2, 7) + Cyclo(1);
    CHECK(cyclo_from_json(cyclo_to_json(c)) == c);
    CHECK(cyclo_from_json(json(5)) == Cyclo(5));
  }

  TEST_CASE("code summary") {
    json j = code_summary(code_from_json(json("<111111>")));
    CHECK(j["dims"]["total"] == 2080);
    CHECK(j["modular_invariant"] == true);
    CHECK(j["currents"] == 15);
    CHECK(j["enumerator"] == json::parse("[1,0,0,0,0,0,1]"));
  }
}
