#include <map>

#include "lep/generate.hpp"
#include "support.hpp"

using namespace lep;
using lep::test::F;

TEST_CASE("parse examples") {
  CHECK(F("A ->c B") == Formula::imp_c(Formula::atom("A"), Formula::atom("B")));
  CHECK(F("~A & B") == Formula::conj(Formula::neg(Formula::atom("A")), Formula::atom("B")));
  CHECK(F("A ->i B ->i C") ==
        Formula::imp_i(Formula::atom("A"), Formula::imp_i(Formula::atom("B"), Formula::atom("C"))));
  CHECK(F("A & B & C") == Formula::conj(F("A & B"), Formula::atom("C")));
  CHECK(F("A \\/i B \\/c C") == Formula::or_c(F("A \\/i B"), Formula::atom("C")));
  CHECK(F("A & B \\/i C ->c D") == Formula::imp_c(F("(A & B) \\/i C"), Formula::atom("D")));
  CHECK(F("  ( A )  ") == Formula::atom("A"));
  CHECK(F("bot").is(Connective::Bot));
}

TEST_CASE("unicode aliases parse to the ASCII tree") {
  CHECK(F("¬A ∧ B") == F("~A & B"));
  CHECK(F("⊥") == Formula::bot());
}

TEST_CASE("print examples") {
  CHECK(print_formula(F("A ->c B")) == "A ->c B");
  CHECK(print_formula(Formula::neg(F("A \\/c B"))) == "~(A \\/c B)");
  CHECK(print_formula(Formula::bot()) == "bot");
  CHECK(print_formula(F("(A ->i B) ->i C")) == "(A ->i B) ->i C");
  CHECK(print_formula(F("A ->i (B ->i C)")) == "A ->i B ->i C");
  CHECK(print_formula(F("A & (B & C)")) == "A & (B & C)");
  CHECK(print_formula(F("c:p ->c p")) == "c:p ->c p");
}

TEST_CASE("malformed input reports offset and expected tokens") {
  auto offset_of = [](const char* text) {
    try {
      parse_formula(text);
    } catch (const ParseError& e) {
      CHECK_FALSE(e.expected().empty());
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset_of("A &") == 3);
  CHECK(offset_of("(A") == 2);
  CHECK(offset_of("A B") == 2);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("A -> B") >= 2);
  CHECK(offset_of("1A") == 0);
}

TEST_CASE("weight") {
  CHECK(weight(Formula::bot()) == 0);
  CHECK(weight(F("A \\/c ~A")) == 2);
  CHECK(weight(F("((A ->c B) ->c A) ->c A")) == 3);
  CHECK(weight(F("~~A")) == 2);
}

namespace {

Formula rename(const Formula& f, const std::map<std::string, std::string>& m) {
  switch (f.kind()) {
    case Connective::Atom:
      return Formula::atom(m.count(f.name()) ? m.at(f.name()) : f.name());
    case Connective::Bot:
      return f;
    case Connective::Neg:
      return Formula::neg(rename(f.lhs(), m));
    default:
      return Formula::binary(f.kind(), rename(f.lhs(), m), rename(f.rhs(), m));
  }
}

}  // namespace

TEST_CASE("property: print then parse is the identity up to depth 8") {
  Generator g(7, GenOptions{{"A", "B", "p1", "q_2", "c:r"}, 8, 4});
  for (int i = 0; i < 2000; ++i) {
    const Formula f = g.formula(1 + i % 8);
    INFO(print_formula(f));
    REQUIRE(parse_formula(print_formula(f)) == f);
  }
}

TEST_CASE("property: weight is zero exactly on atoms and bot, and ignores atom names") {
  Generator g(8, GenOptions{{"A", "B", "C"}, 5, 4});
  const std::map<std::string, std::string> swap{{"A", "B"}, {"B", "C"}, {"C", "Zed"}};
  for (int i = 0; i < 1000; ++i) {
    const Formula f = g.formula(i % 6);
    CHECK((weight(f) == 0) == f.is_atomic());
    CHECK(weight(rename(f, swap)) == weight(f));
  }
}
