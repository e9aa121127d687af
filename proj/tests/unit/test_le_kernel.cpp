#include "lep/generate.hpp"
#include "support.hpp"

using namespace lep;
using lep::test::F;

namespace {

le::Deriv H(const std::string& l, const std::string& f) { return le::hyp(l, F(f)); }
Binder B(const std::string& l, const std::string& f) { return Binder{l, F(f)}; }
StpC S(const std::string& text) { return parse_stpc(text); }

}  // namespace

TEST_CASE("golden proofs check with the printed judgments") {
  for (const auto& p : golden_proofs()) {
    if (p.system != System::LE) continue;
    INFO(p.name);
    const le::Deriv d = read_le_script(p.script);
    CHECK(le::print_judgment(le::check_le(d)) == p.judgment);
  }
  CHECK(le::le_theorem(test::golden_le("peirce")) == F("((A ->c B) ->c A) ->c A"));
  CHECK(le::le_theorem(test::golden_le("excluded_middle")) == F("A \\/c ~A"));
  CHECK(le::le_theorem(test::golden_le("dummett")) == F("(A ->c B) \\/c (B ->c A)"));
}

TEST_CASE("theorems need no hypotheses, no context and a stoup") {
  CHECK_FALSE(le::le_theorem(H("x", "A")));
  CHECK_FALSE(le::le_theorem(le::der(H("x", "A"))));
  CHECK_FALSE(le::le_theorem(le::neg_i(B("x", "A"), le::der(H("x", "A")))));
  CHECK(le::le_theorem(le::impi_i(B("x", "A"), H("x", "A"))) == F("A ->i A"));
}

TEST_CASE("structural rules") {
  CHECK(le::der(H("x", "A")).conclusion == S("A ; ·"));
  CHECK(le::wi(F("B"), le::der(H("x", "A"))).conclusion == S("A ; B"));
  CHECK(le::wc(F("B"), H("x", "A")).conclusion == S("B ; A"));
  CHECK(le::cc(F("B"), le::wc(F("B"), le::wc(F("B"), H("x", "A")))).conclusion == S("B ; A"));
  CHECK_THROWS_AS(le::cc(F("B"), le::wc(F("B"), H("x", "A"))), CheckError);
  CHECK_THROWS_AS(le::der(le::der(H("x", "A"))), CheckError);
  CHECK_THROWS_AS(le::wi(F("B"), H("x", "A")), CheckError);
}

TEST_CASE("intuitionistic and neutral rules combine contexts multiplicatively") {
  const le::Deriv a = le::wc(F("C"), H("x", "A"));
  const le::Deriv b = le::wc(F("C"), H("y", "B"));
  CHECK(le::and_i(a, b).conclusion == S("C, C ; A & B"));
  CHECK(le::and_e2(le::and_i(a, b)).conclusion == S("C, C ; B"));
  CHECK(le::impi_e(le::wc(F("D"), H("f", "A ->i B")), a).conclusion == S("C, D ; B"));
  CHECK(le::impi_i(B("x", "A"), a).conclusion == S("C ; A ->i A"));
  CHECK(le::ori_i2(F("B \\/i A"), a).conclusion == S("C ; B \\/i A"));
  CHECK_THROWS_AS(le::ori_i1(F("B \\/i A"), a), CheckError);
  const le::Deriv e = le::ori_e(H("d", "A \\/i B"), B("x", "A"), le::wc(F("D"), H("z", "C")), B("y", "B"), H("z", "C"));
  CHECK(e.conclusion == S("D ; C"));
  CHECK_THROWS_AS(le::ori_e(H("d", "A \\/i B"), B("x", "A"), H("z", "C"), B("y", "B"), H("w", "D")), CheckError);
  // Empty stoups in both minors.
  const le::Deriv empty_minors =
      le::ori_e(H("d", "A \\/i B"), B("x", "A"), le::der(H("x", "A")), B("y", "B"), le::der(H("y", "B")));
  CHECK(empty_minors.conclusion == S("A, B ; ·"));
  CHECK(le::neg_e(a, H("n", "~A")).conclusion == S("C ; ·"));
  CHECK(le::neg_i(B("x", "A"), le::neg_e(H("x", "A"), H("n", "~A"))).conclusion == S("· ; ~A"));
  CHECK_THROWS_AS(le::neg_i(B("x", "A"), H("x", "A")), CheckError);
}

TEST_CASE("classical rules move formulas through the context") {
  const le::Deriv body = le::wc(F("B"), le::der(H("x", "A")));
  CHECK(le::impc_i(B("x", "A"), F("B"), body).conclusion == S("A ; A ->c B"));
  CHECK_THROWS_AS(le::impc_i(B("x", "A"), F("C"), body), CheckError);
  CHECK(le::orc_i(F("A"), F("B"), body).conclusion == S("· ; A \\/c B"));
  CHECK_THROWS_AS(le::orc_i(F("A"), F("A"), body), CheckError);
  const le::Deriv ce = le::impc_e(H("f", "A ->c B"), H("a", "A"), B("y", "B"), le::der(H("y", "B")));
  CHECK(ce.conclusion == S("B ; ·"));
  const le::Deriv oe = le::orc_e(H("d", "A \\/c B"), B("x", "A"), le::der(H("x", "A")), B("y", "B"),
                                 le::wc(F("C"), le::der(H("y", "B"))));
  CHECK(oe.conclusion == S("A, B, C ; ·"));
  CHECK_THROWS_AS(le::orc_e(H("d", "A \\/c B"), B("x", "A"), H("x", "A"), B("y", "B"), le::der(H("y", "B"))),
                  CheckError);
}

TEST_CASE("hypotheses discharged by a rule stop being open") {
  const le::Deriv d = le::impi_i(B("x", "A"), le::and_i(H("x", "A"), H("y", "B")));
  CHECK(le::check_le(d).open_hyps == FormulaBag{F("B")});
}

TEST_CASE("a tampered conclusion is rejected at its node") {
  le::Deriv d = le::and_i(H("x", "A"), le::wc(F("C"), H("y", "B")));
  d.premises[1].conclusion = S("C, C ; B");
  d.conclusion = S("C, C ; A & B");
  try {
    le::check_le(d);
    FAIL("expected a CheckError");
  } catch (const CheckError& e) {
    CHECK(e.path() == NodePath{1});
  }
}

TEST_CASE("fit_context adds and contracts but never drops") {
  const le::Deriv d = le::wc(F("A"), le::wc(F("A"), H("x", "B")));
  CHECK(le::fit_context(d, FormulaBag{F("A"), F("C")}).conclusion == S("A, C ; B"));
  CHECK_THROWS(le::fit_context(d, FormulaBag{F("C")}));
}

namespace {

// Context multiplicities of a node as the rule's schema predicts them.
FormulaBag predicted_context(const le::Deriv& n) {
  using R = le::Rule;
  FormulaBag sum;
  for (const auto& p : n.premises) sum.add_all(p.conclusion.context);
  const auto ex = n.is_leaf() ? std::vector<Formula>{} : le::extras(n);
  switch (n.rule) {
    case R::Der:
      sum.add(*n.premises[0].conclusion.stoup);
      break;
    case R::Wc:
      sum.add(ex[0]);
      break;
    case R::Cc:
      sum.remove_one(ex[0]);
      break;
    case R::ImpcI:
      sum.remove_one(ex[0]);
      break;
    case R::OrcI:
      sum.remove_one(ex[0]);
      sum.remove_one(ex[1]);
      break;
    default:
      break;
  }
  return sum;
}

}  // namespace

TEST_CASE("property: context multiplicities equal the schema sum at every node") {
  Generator g(21, GenOptions{{"A", "B", "C"}, 2, 8});
  for (int i = 0; i < 300; ++i) {
    const le::Deriv d = g.derivation();
    le::check_le(d);
    visit_preorder(d, [&](const le::Deriv& n, const NodePath& path) {
      INFO(format_path(path));
      CHECK(n.conclusion.context == predicted_context(n));
    });
  }
}
