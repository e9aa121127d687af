#include <functional>

#include "lep/generate.hpp"
#include "lep/invariants.hpp"
#include "lep/oracle.hpp"
#include "support.hpp"

using namespace lep;
using lep::test::F;

TEST_CASE("negative translation") {
  CHECK(neg_translate(F("A \\/c ~A")) == F("~(~A & ~~A)"));
  CHECK(neg_translate(F("A ->i B")) == F("A ->i B"));
  CHECK(neg_translate(F("((A ->c B) ->c A) ->c A")) == F("~(~(~(A & ~B) & ~A) & ~A)"));
  CHECK(neg_translate(F("c:p")) == F("~~p"));
  CHECK(neg_translate(F("c:p & (A \\/i B)")) == F("~~p & (A \\/i B)"));
}

TEST_CASE("decisions") {
  CHECK(decide(F("A \\/c ~A")).provable);
  CHECK(decide(F("~~A ->c A")).provable);
  CHECK(decide(F("c:p ->c p")).provable);
  CHECK(decide(F("A ->i A")).provable);
  CHECK(decide(F("(A & B) ->i (B & A)")).provable);
  CHECK(decide(F("~~(A \\/i ~A)")).provable);
  for (const char* text : {"A \\/i ~A", "((A ->i B) ->i A) ->i A", "~~A ->i A", "(A ->i B) \\/i (B ->i A)",
                           "c:p ->i p", "A", "bot"}) {
    INFO(text);
    const Verdict v = decide(F(text));
    CHECK_FALSE(v.provable);
    REQUIRE(v.countermodel);
    CHECK(verify_countermodel(*v.countermodel, F(text)));
  }
}

TEST_CASE("the Peirce and Dummett families are provable when the outer connective is classical") {
  const char* imps[] = {"->i", "->c"};
  for (const char* j : imps) {
    for (const char* k : imps) {
      const std::string jj(j), kk(k);
      CHECK(decide(F("((A " + jj + " B) " + kk + " A) ->c A"), {8, false}).provable);
      CHECK(decide(F("(A " + jj + " B) \\/c (B " + kk + " A)"), {8, false}).provable);
    }
  }
}

TEST_CASE("small countermodels") {
  const Verdict lem = decide(F("A \\/i ~A"));
  REQUIRE(lem.countermodel);
  CHECK(lem.countermodel->worlds == 2);
  const Verdict dummett = decide(F("(A ->i B) \\/i (B ->i A)"));
  REQUIRE(dummett.countermodel);
  CHECK(dummett.countermodel->worlds == 3);
}

TEST_CASE("countermodel search bound") {
  DecideOptions tight{1, true};
  CHECK_THROWS_AS(decide(F("A \\/i ~A"), tight), SearchBound);
  CHECK_FALSE(decide(F("A \\/i ~A"), DecideOptions{1, false}).provable);
}

TEST_CASE("bad models are rejected") {
  KripkeModel m;
  m.worlds = 2;
  m.order_pairs = {{0, 0}, {1, 1}, {0, 1}};
  m.forcing["A"] = {1};
  CHECK(verify_countermodel(m, F("A \\/i ~A")));
  // Root forces the formula.
  CHECK_FALSE(verify_countermodel(m, F("~~A")));
  // Not monotone.
  KripkeModel bad = m;
  bad.forcing["A"] = {0};
  CHECK_FALSE(verify_countermodel(bad, F("A \\/i ~A")));
  // Missing reflexive pair.
  KripkeModel irreflexive = m;
  irreflexive.order_pairs = {{0, 0}, {0, 1}};
  CHECK_FALSE(verify_countermodel(irreflexive, F("A \\/i ~A")));
  // Root is not least.
  KripkeModel rootless = m;
  rootless.order_pairs = {{0, 0}, {1, 1}};
  CHECK_FALSE(verify_countermodel(rootless, F("A \\/i ~A")));
}

TEST_CASE("judgment formula") {
  const Formula f = judgment_formula(FormulaBag{F("A")}, FormulaBag{F("B")}, std::nullopt);
  CHECK(f == F("A & ~B ->i bot"));
  CHECK(judgment_formula({}, {}, F("C")) == F("C"));
}

namespace {

// Classical truth-table validity for formulas in the atoms A, B, C.
bool tautology(const Formula& f) {
  std::function<bool(const Formula&, unsigned)> eval = [&](const Formula& g, unsigned v) -> bool {
    switch (g.kind()) {
      case Connective::Atom:
        return (v >> (g.name()[0] - 'A')) & 1u;
      case Connective::Bot:
        return false;
      case Connective::Neg:
        return !eval(g.lhs(), v);
      case Connective::And:
        return eval(g.lhs(), v) && eval(g.rhs(), v);
      case Connective::ImpI:
      case Connective::ImpC:
        return !eval(g.lhs(), v) || eval(g.rhs(), v);
      case Connective::OrI:
      case Connective::OrC:
        return eval(g.lhs(), v) || eval(g.rhs(), v);
    }
    return false;
  };
  for (unsigned v = 0; v < 8; ++v) {
    if (!eval(f, v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("property: verdicts agree with independent evidence") {
  Generator g(71, GenOptions{{"A", "B", "C"}, 3, 4});
  std::size_t provable = 0, refuted = 0;
  for (int i = 0; i < 600; ++i) {
    const Formula f = g.formula(1 + i % 4);
    INFO(print_formula(f));
    const Verdict v = decide(f);
    if (v.provable) {
      ++provable;
      // Intuitionistic provability of the translation implies classical truth.
      CHECK(tautology(f));
    } else {
      ++refuted;
      REQUIRE(v.countermodel);
      CHECK(verify_countermodel(*v.countermodel, f));
    }
    // Classical connectives make every classical tautology provable.
    if (tautology(f)) {
      std::function<Formula(const Formula&)> classical = [&](const Formula& h) -> Formula {
        switch (h.kind()) {
          case Connective::Atom:
          case Connective::Bot:
            return h;
          case Connective::Neg:
            return Formula::neg(classical(h.lhs()));
          case Connective::ImpI:
          case Connective::ImpC:
            return Formula::imp_c(classical(h.lhs()), classical(h.rhs()));
          case Connective::OrI:
          case Connective::OrC:
            return Formula::or_c(classical(h.lhs()), classical(h.rhs()));
          case Connective::And:
            return Formula::conj(classical(h.lhs()), classical(h.rhs()));
        }
        return h;
      };
      // A classical tautology holds in every model once its outer claim is double negated.
      CHECK(provable_intuitionistic(Formula::neg(Formula::neg(neg_translate(classical(f))))));
    }
  }
  CHECK(provable > 20);
  CHECK(refuted > 20);
}

TEST_CASE("property: checked derivations have provable judgments") {
  Generator g(72, GenOptions{{"A", "B", "C"}, 2, 8});
  for (int i = 0; i < 300; ++i) {
    const auto v = invariants::oracle_agrees(g.derivation());
    CHECK_MESSAGE(!v, v.value_or(""));
  }
}
