#include <catch2/catch_amalgamated.hpp>

#include "pipedreams/serialize.hpp"

using namespace pipedreams;

TEST_CASE("canonical polynomial text") {
  REQUIRE(to_text(Polynomial::zero(3)) == "0");
  REQUIRE(to_text(Polynomial::constant(1, 0)) == "1");
  REQUIRE(to_text(Polynomial::constant(-7, 2)) == "-7");

  REQUIRE(to_text(schubert_by_operators(Permutation({1, 4, 3, 2}))) ==
          "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3");

  REQUIRE(to_text(grothendieck_by_operators(Permutation({1, 4, 3, 2}))) ==
          "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3 + b*x1^2*x2^2 + "
          "2*b*x1^2*x2*x3 + 2*b*x1*x2^2*x3 + b^2*x1^2*x2^2*x3");

  const Polynomial signs = Polynomial::monomial(1, 0, {1}) -
                           Polynomial::monomial(3, 2, {0}) -
                           Polynomial::monomial(1, 1, {2});
  REQUIRE(to_text(signs) == "x1 - b*x1^2 - 3*b^2");
}

TEST_CASE("polynomial JSON is in canonical order") {
  const Json j = json_of(schubert_by_operators(Permutation({1, 4, 3, 2})));
  REQUIRE(j.size() == 5);
  REQUIRE(j[0]["coeff"] == 1);
  REQUIRE(j[0]["beta"] == 0);
  REQUIRE(j[0]["exps"] == Json::array({2, 1, 0}));
  REQUIRE(j[4]["exps"] == Json::array({0, 2, 1}));
}

TEST_CASE("pipe dream JSON") {
  const PipeDream p = PipeDream::from_crosses(4, {{2, 1}, {1, 2}, {2, 2}});
  const Json j = json_of(p, true);
  REQUIRE(j["n"] == 4);
  REQUIRE(j["crosses"] ==
          Json::array({Json::array({1, 2}), Json::array({2, 1}),
                       Json::array({2, 2})}));
  REQUIRE(j["shape"] == "1432");
  REQUIRE(j["excess"] == 0);
  REQUIRE(j["word"] == "2,3,2");
  REQUIRE(j["monomial"] == "x1*x2^2");
}

TEST_CASE("ascii art") {
  const PipeDream p = PipeDream::from_crosses(4, {{1, 2}, {1, 3}, {2, 2}});
  REQUIRE(ascii_art(p) ==
          ".++.\n"
          ".+.\n"
          "..\n"
          ".\n");
  REQUIRE(ascii_art(PipeDream(1, 0)) == ".\n");
}

TEST_CASE("complex JSON") {
  const Complex c =
      build_complex(Word(4, {3, 2, 1, 3, 2, 3}), Permutation({1, 4, 3, 2}));
  const Json j = json_of(c);
  REQUIRE(j["word"] == "3,2,1,3,2,3");
  REQUIRE(j["kind"] == "subword");
  REQUIRE(j["target"] == "1432");
  REQUIRE(j["facets"].size() == 5);
  REQUIRE(j["interior_count"] == 11);
  REQUIRE(j["euler"] == 1);
  REQUIRE(j["classification"] == "ball");

  const Json sphere = json_of(build_complex(Word(2, {1, 1}), Word(2, {1})));
  REQUIRE(sphere["kind"] == "slide");
  REQUIRE(sphere["classification"] == "sphere");
  REQUIRE(sphere["boundary_count"] == 0);

  const Json tetra =
      json_of(build_complex(Word(2, {1, 1, 1, 1}), Word(2, {1, 1})));
  REQUIRE(tetra["classification"] == "unclassifiable");
  REQUIRE(tetra["euler"] == -2);
}

TEST_CASE("word parsing") {
  REQUIRE(parse_word("3,2,1,3,2,3", 4) == Word(4, {3, 2, 1, 3, 2, 3}));
  REQUIRE(parse_word("", 4) == Word(4, {}));
  REQUIRE_THROWS_AS(parse_word("3,4", 4), ParseError);
  REQUIRE_THROWS_AS(parse_word("0", 4), ParseError);
  REQUIRE_THROWS_AS(parse_word("a,b", 4), ParseError);
}

TEST_CASE("serialization round trips") {
  for (const std::string text : {"1432", "1", "4231", "10,3,2,4,5,6,7,8,9,1"})
    REQUIRE(to_text(parse_permutation(text)) == text);
  for (const std::string text : {"", "3,2,3", "1,2,1,2"}) {
    REQUIRE(to_text(parse_word(text, 4)) == text);
  }
}
