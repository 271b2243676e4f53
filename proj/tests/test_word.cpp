#include "doctest.h"

#include "wordlab/errors.hpp"
#include "wordlab/word.hpp"

using namespace wordlab;

TEST_CASE("parsing basic shapes") {
  const Word c = parse_word("[x1,x2]");
  CHECK(c.root().kind == NodeKind::Commutator);
  CHECK(c.arity() == 2);
  CHECK(c.variables() == std::vector<std::string>{"x1", "x2"});

  const Word p = parse_word("x1^2");
  CHECK(p.root().kind == NodeKind::Power);
  CHECK(p.root().exponent == 2);
  CHECK(p.arity() == 1);

  const Word n = parse_word("[[x1^2,x2]^3,x3]");
  CHECK(n.root().kind == NodeKind::Commutator);
  CHECK(n.arity() == 3);
  CHECK(n.root().children[0].kind == NodeKind::Power);
  CHECK(n.root().children[0].exponent == 3);

  const Word prod = parse_word("x1 x2^-1 x1");
  CHECK(prod.root().kind == NodeKind::Product);
  CHECK(prod.root().children.size() == 3);
  CHECK(prod.arity() == 2);
}

TEST_CASE("bracket lists fold into left-normed commutators") {
  const Word w = parse_word("[x1,x2,x3]");
  CHECK(w.render() == "[[x1,x2],x3]");
  const Word v = parse_word("[x1,x2,x3,x4]");
  CHECK(v.render() == "[[[x1,x2],x3],x4]");
}

TEST_CASE("negative and multi-digit exponents") {
  const Word w = parse_word("x2^-3");
  CHECK(w.root().kind == NodeKind::Power);
  CHECK(w.root().exponent == -3);
  CHECK(parse_word("x1^12").root().exponent == 12);
}

TEST_CASE("renderer round-trip is a fixed point") {
  for (const char* text :
       {"[x1,x2]", "x1^2", "[[x1^2,x2]^3,x3]", "x1 x2 x1^-1 x2^-1",
        "(x1 x2)^2", "[x1,[x2,x3]]", "[x1,x2,x3]", "x1^-1", "x3",
        "(x1^2 x2)^-2 [x1,x2]"}) {
    const std::string once = parse_word(text).render();
    CHECK(parse_word(once).render() == once);
  }
}

TEST_CASE("renderer keeps grouping parentheses") {
  CHECK(parse_word("(x1 x2)^2").render() == "(x1x2)^2");
  CHECK(parse_word("x1 (x2 x1)").render() == "x1x2x1");  // flat product
  CHECK(parse_word("((x1))").render() == "x1");
}

TEST_CASE("variables are ordered by index and deduplicated") {
  const Word w = parse_word("x3 x1 x3 x10");
  CHECK(w.variables() == std::vector<std::string>{"x1", "x3", "x10"});
  CHECK(w.arity() == 3);
}

TEST_CASE("parse errors carry a position") {
  for (const char* bad : {"", "x", "y1", "x1^", "x1^0", "[x1]", "[x1,", "(x1",
                          "x1)", "x1^x2", "[,x2]", "x1 ^2 )"}) {
    CHECK_THROWS_AS(parse_word(bad), ParseError);
  }
}

TEST_CASE("builder factories validate their inputs") {
  CHECK_THROWS_AS(Word::power(Word::variable("x1"), 0), ValidationError);
  CHECK_THROWS_AS(Word::product({Word::variable("x1")}), ValidationError);
  CHECK_THROWS_AS(Word::variable("y1"), ValidationError);
}

TEST_CASE("gamma power words") {
  CHECK(gamma_power_word({2}).render() == "x1^2");
  CHECK(gamma_power_word({1, 1}).render() == "[x1,x2]");
  CHECK(gamma_power_word({2, 3}).render() == "[x1^2,x2]^3");
  CHECK(gamma_power_word({1, 1, 1}).render() == "[[x1,x2],x3]");
  CHECK(gamma_power_word({2, 1, 3}).render() == "[[x1^2,x2],x3]^3");
  CHECK(gamma_power_word({1}).render() == "x1");
  CHECK_THROWS_AS(gamma_power_word({}), ValidationError);
  CHECK_THROWS_AS(gamma_power_word({0, 1}), ValidationError);
}
