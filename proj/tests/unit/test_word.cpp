#include "doctest.h"

#include "mennicke/collector.hpp"
#include "mennicke/word.hpp"

using namespace mennicke;

TEST_CASE("parse and print round trip") {
  for (auto text : {"x y^-2 z", "1", "x^10 y^-3", "z"}) {
    CHECK(to_string(parse_word(text, GroupId::M)) == text);
  }
  CHECK(to_string(parse_word("X A D^2 E", GroupId::P)) == "X A D^2 E");
  CHECK(to_string(parse_word("", GroupId::M)) == "1");
}

TEST_CASE("words are freely reduced") {
  CHECK(parse_word("x x^-1", GroupId::M).empty());
  CHECK(to_string(parse_word("x x y y^-1 x", GroupId::M)) == "x^3");
  Word w = parse_word("x y^2 z^-1", GroupId::M);
  CHECK((w * w.inverse()).empty());
  CHECK(to_string(w.pow(-1)) == "z y^-2 x^-1");
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_word("x q", GroupId::M), ParseError);
  CHECK_THROWS_AS(parse_word("X", GroupId::M), ParseError);
  CHECK_THROWS_AS(parse_word("x^", GroupId::M), ParseError);
  CHECK_THROWS_AS(parse_word("E", GroupId::G), ParseError);
  try {
    parse_word("x y q", GroupId::M);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("group ids") {
  CHECK(parse_group_id("G") == GroupId::G);
  CHECK_FALSE(parse_group_id("Q").has_value());
  CHECK(generator_rank(GroupId::G, 'A') == 3);
  CHECK(generator_rank(GroupId::M, 'A') == -1);
}

TEST_CASE("collector fixed examples") {
  CHECK(to_string(collect(parse_word("x y z x", GroupId::M), GroupId::M)) == "y z^-1");
  CHECK(to_string(collect(parse_word("", GroupId::M), GroupId::M)) == "1");
  CHECK(to_string(collect(parse_word("y^-1 x y", GroupId::M), GroupId::M)) == "x^-1");
  CHECK(to_string(collect(parse_word("A A", GroupId::G), GroupId::G)) == "Z^2");
  CHECK(to_string(collect(parse_word("D^3", GroupId::G), GroupId::G)) == "1");
  CHECK(to_string(collect(parse_word("Y^-1 X Y", GroupId::G), GroupId::G)) == "X^-1");
  CHECK(to_string(collect(parse_word("E E", GroupId::P), GroupId::P)) == "A B C");
}

TEST_CASE("collection does not depend on rewrite order") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    for (GroupId g : {GroupId::M, GroupId::G, GroupId::P}) {
      Word w = random_word(s, g, 12, 3);
      CHECK(collect(w, g) == collect_randomized(w, g, s + 7));
    }
  }
}
