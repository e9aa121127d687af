#include "support.hpp"

using namespace lep;
using lep::test::F;

TEST_CASE("multiset keeps multiplicity") {
  FormulaBag b{F("A"), F("B"), F("A")};
  CHECK(b.size() == 3);
  CHECK(b.count(F("A")) == 2);
  CHECK(b.support().size() == 2);
  CHECK(b.remove_one(F("A")));
  CHECK(b.count(F("A")) == 1);
  CHECK_FALSE(b.remove_one(F("C")));
  CHECK(FormulaBag{F("A")}.subset_of(b));
  CHECK_FALSE((FormulaBag{F("A"), F("A")}).subset_of(b));
  CHECK((FormulaBag{F("B"), F("A")} == FormulaBag{F("A"), F("B")}));
  CHECK((FormulaBag{F("A"), F("A"), F("B")}.minus(FormulaBag{F("A")}) == FormulaBag{F("A"), F("B")}));
}

TEST_CASE("stp-c printing and parsing") {
  const StpC empty{};
  CHECK(print_stpc(empty) == "· ; ·");
  const StpC s{FormulaBag{F("A"), F("B ->c C")}, F("A & B")};
  CHECK(parse_stpc(print_stpc(s)) == s);
  CHECK(parse_stpc("A, A ; ·") == StpC{FormulaBag{F("A"), F("A")}, std::nullopt});
  CHECK(parse_stpc(". ; A") == StpC{{}, F("A")});
}

TEST_CASE("a stoup with two formulas is rejected") {
  CHECK_THROWS_AS(parse_stpc("A ; B, C"), StoupOverflow);
  CHECK_THROWS_AS(parse_stpc("A ; B ; C"), ParseError);
  CHECK_THROWS_AS(parse_stpc("A B"), ParseError);
}
