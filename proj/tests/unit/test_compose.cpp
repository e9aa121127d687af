#include "lep/compose.hpp"
#include "lep/generate.hpp"
#include "lep/invariants.hpp"
#include "support.hpp"

using namespace lep;
using lep::test::F;

namespace {

le::Deriv H(const std::string& l, const std::string& f) { return le::hyp(l, F(f)); }
Binder B(const std::string& l, const std::string& f) { return Binder{l, F(f)}; }
StpC S(const std::string& text) { return parse_stpc(text); }

std::size_t count_rule(const le::Deriv& d, le::Rule r) {
  std::size_t n = d.rule == r ? 1 : 0;
  for (const auto& p : d.premises) n += count_rule(p, r);
  return n;
}

}  // namespace

TEST_CASE("substituting into a bare hypothesis gives p1") {
  const le::Deriv p1 = le::wc(F("C"), le::and_i(H("a", "A"), H("b", "B")));
  CHECK(compose_stoup(p1, "x", H("x", "A & B")) == p1);
}

TEST_CASE("p2 ending in dereliction") {
  const le::Deriv p1 = le::wc(F("C"), H("a", "A"));
  const le::Deriv r = compose_stoup(p1, "x", le::der(H("x", "A")));
  CHECK(r.rule == le::Rule::Der);
  CHECK(le::check_le(r).conclusion == S("A, C ; ·"));
}

TEST_CASE("hypothesis used in all three premises of a classical disjunction elimination") {
  const le::Deriv p1 = le::wc(F("C"), H("a", "A \\/c A"));
  const le::Deriv p2 = le::orc_e(H("x", "A \\/c A"), B("u", "A"), le::der(H("x", "A \\/c A")), B("v", "A"),
                                 le::der(H("x", "A \\/c A")));
  const le::Deriv r = compose_stoup(p1, "x", p2);
  CHECK(r.rule == le::Rule::Cc);
  CHECK(count_rule(r, le::Rule::Cc) == 2);
  CHECK(le::check_le(r).conclusion == S("A \\/c A, A \\/c A, C ; ·"));
  CHECK_FALSE(has_open_label(r, "x"));
}

TEST_CASE("hypothesis used twice under one node") {
  const le::Deriv p1 = le::wc(F("C"), H("a", "A"));
  const le::Deriv p2 =
      le::impc_e(H("f", "A ->c B"), H("x", "A"), B("y", "B"), le::neg_e(H("x", "A"), H("n", "~A")));
  const le::Deriv r = compose_stoup(p1, "x", p2);
  CHECK(count_rule(r, le::Rule::Cc) == 1);
  CHECK(le::check_le(r).conclusion == S("C ; ·"));
}

TEST_CASE("zero occurrences weaken Δ1 in") {
  const le::Deriv p1 = le::wc(F("C"), H("a", "A"));
  const le::Deriv r = compose_stoup(p1, "x", H("y", "B"));
  CHECK(le::check_le(r).conclusion == S("C ; B"));
}

TEST_CASE("compose_stoup rejects mismatches") {
  CHECK_THROWS_AS(compose_stoup(le::der(H("a", "A")), "x", H("x", "A")), ComposeError);
  CHECK_THROWS_AS(compose_stoup(H("a", "B"), "x", H("x", "A")), ComposeError);
}

TEST_CASE("bound labels of p1 are not captured") {
  const le::Deriv p1 = le::impi_i(B("y", "A"), H("y", "A"));
  const le::Deriv p2 = le::impi_i(B("y", "A"), le::impi_e(H("x", "A ->i A"), H("y", "A")));
  const le::Deriv r = compose_stoup(p1, "x", p2);
  CHECK(le::check_le(r).conclusion == S("· ; A ->i A"));
  CHECK(le::check_le(r).open_hyps.empty());
}

TEST_CASE("context composition at a dereliction") {
  // p1 = der(a : A) ends in A ; ·; p2 discharges ·;A at x and ends in D ; B.
  const le::Deriv p1 = le::der(H("a", "A"));
  const le::Deriv p2 = le::wc(F("D"), le::and_e1(le::and_i(le::wc(F("E"), H("q", "B")), H("x", "A"))));
  const le::Deriv r = compose_context(p1, F("A"), "x", p2);
  const le::Judgment j = le::check_le(r);
  CHECK(j.conclusion == S("B, D, E ; ·"));
}

TEST_CASE("context composition replaces weakenings of the removed formula") {
  const le::Deriv p1 = le::wc(F("A"), H("c", "C"));
  const le::Deriv p2 = le::wc(F("D"), H("q", "B"));
  const le::Deriv r = compose_context(p1, F("A"), "x", p2);
  const le::Judgment j = le::check_le(r);
  CHECK(j.conclusion == S("B, D ; C"));
  CHECK_FALSE(j.conclusion.context.contains(F("A")));
}

TEST_CASE("context composition needs the formula in the context") {
  CHECK_THROWS_AS(compose_context(H("c", "C"), F("A"), "x", H("q", "B")), ComposeError);
}

TEST_CASE("property: junction law and composite judgments") {
  Generator g(51);
  for (int i = 0; i < 300; ++i) {
    const auto j = g.junction();
    const auto v = invariants::junction_law(j);
    CHECK_MESSAGE(!v, v.value_or(""));
    const le::Judgment j1 = le::check_le(j.p1), j2 = le::check_le(j.p2);
    const le::Judgment jc = le::check_le(compose_stoup(j.p1, j.label, j.p2));
    CHECK(jc.conclusion.stoup == j2.conclusion.stoup);
    CHECK(jc.conclusion.context == j1.conclusion.context + j2.conclusion.context);
  }
}

TEST_CASE("property: context composition removes every occurrence") {
  Generator g(52, GenOptions{{"A", "B"}, 2, 6});
  std::size_t tried = 0;
  for (int i = 0; i < 400 && tried < 150; ++i) {
    const le::Deriv p1 = g.derivation();
    const auto& ctx = p1.conclusion.context;
    if (ctx.empty()) continue;
    const Formula a = ctx.items().front();
    const le::Deriv body = le::wc(F("D"), le::impi_e(le::hyp("q_f", F("A ->i B")), le::hyp("q_a", F("A"))));
    const le::Deriv p2 = le::and_e1(le::and_i(body, le::hyp("x_sub", a)));
    ++tried;
    const le::Deriv r = compose_context(p1, a, "x_sub", p2);
    const le::Judgment j = le::check_le(r);
    FormulaBag want = ctx;
    want.remove_all(a);
    want.add_all(p2.conclusion.context);
    want.add(*p2.conclusion.stoup);
    CHECK(j.conclusion.context == want);
    CHECK(j.conclusion.stoup == p1.conclusion.stoup);
  }
  CHECK(tried > 50);
}
