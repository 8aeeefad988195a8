#include <doctest.h>

#include "qlsc/gcharacter.hpp"
#include "qlsc/rational.hpp"

using namespace qlsc;

TEST_CASE("rational helpers") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4 ") == Rational(-4));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK(floor_of(Rational(-1, 2)) == -1);
  CHECK(ceil_of(Rational(-1, 2)) == 0);
  CHECK(floor_of(Rational(7, 2)) == 3);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(Rational(2, 2) == 1);
  CHECK(Rational(1, 2) != 1);
}

TEST_CASE("terms combine and cancel") {
  GradedCharacter a;
  Weight x = Weight::from_ints({1, 0}), y = Weight::from_ints({0, 1});
  a.add_term(x, Rational(0));
  a.add_term(x, Rational(0), 2);
  a.add_term(y, Rational(1));
  CHECK(a.coefficient(x, Rational(0)) == 3);
  CHECK(a.size() == 2);
  a.add_term(y, Rational(1), -1);
  CHECK(a.size() == 1);
  GradedCharacter b = a.scaled(-1);
  CHECK((a + b).empty());
  CHECK(a.dimension() == 3);
}

TEST_CASE("specialisation and comparison") {
  GradedCharacter a, b;
  Weight x = Weight::from_ints({1, 0});
  a.add_term(x, Rational(0));
  a.add_term(x, Rational(2));
  b.add_term(x, Rational(0));
  auto s = a.specialize_q(Rational(1, 2));
  CHECK(s.at(x) == Rational(5, 4));
  CHECK(first_difference(a, a) == std::nullopt);
  CHECK(first_difference(a, b).has_value());
  CHECK(a.degrees_integral());
  b.add_term(x, Rational(1, 2));
  CHECK_FALSE(b.degrees_integral());
}

TEST_CASE("text and json forms") {
  GradedCharacter a;
  a.add_term(Weight::from_ints({-1, 0}), Rational(1), 2);
  a.add_term(Weight::from_ints({0, 0}), Rational(0));
  CHECK(character_from_json(to_json(a)) == a);
  CHECK(to_text(a).find("e^[-1,0]") != std::string::npos);
  auto terms = a.terms();
  REQUIRE(terms.size() == 2);
  CHECK(terms.front().deg == 0);
}
