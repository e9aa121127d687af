#include "lep/bridge.hpp"
#include "lep/generate.hpp"
#include "lep/invariants.hpp"
#include "support.hpp"

using namespace lep;
using lep::test::F;

TEST_CASE("hypotheses translate to themselves") {
  CHECK(le_to_ne(le::hyp("x", F("A"))) == ne::hyp("x", F("A")));
  CHECK(ne_to_le(ne::hyp("x", F("A")), {}) == le::hyp("x", F("A")));
}

TEST_CASE("dereliction becomes negation elimination") {
  const ne::Deriv n = le_to_ne(le::der(le::hyp("x", F("A"))));
  CHECK(n.rule == ne::Rule::NegE);
  const ne::Judgment j = ne::check_ne(n);
  CHECK(j.conclusion == Formula::bot());
  CHECK(j.open_assumptions == FormulaBag{F("A"), F("~A")});
}

TEST_CASE("a designated negation becomes context via dereliction") {
  const ne::Deriv n = ne::neg_e(ne::hyp("x", F("B")), ne::hyp("y", F("~B")));
  const le::Deriv d = ne_to_le(n, FormulaBag{F("~B")});
  CHECK(d.rule == le::Rule::Der);
  CHECK(le::print_judgment(le::check_le(d)) == "B ⊢ B ; ·");
}

TEST_CASE("excluded middle goes to NE_p and back") {
  const le::Deriv d = test::golden_le("excluded_middle");
  const ne::Deriv n = le_to_ne(d);
  CHECK(n.rule == ne::Rule::OrcI);
  const ne::Judgment j = ne::check_ne(n);
  CHECK(j.conclusion == F("A \\/c ~A"));
  CHECK(j.open_assumptions.empty());
  const le::Deriv back = ne_to_le(n, {});
  CHECK(le::print_judgment(le::check_le(back)) == "⊢ · ; A \\/c ~A");
}

TEST_CASE("NE golden proofs translate to LE_p theorems") {
  for (const auto& p : golden_proofs()) {
    if (p.system != System::NE) continue;
    const le::Deriv d = ne_to_le(read_ne_script(p.script), {});
    CHECK(le::le_theorem(d) == ne::check_ne(read_ne_script(p.script)).conclusion);
  }
}

TEST_CASE("split errors") {
  CHECK_THROWS_AS(ne_to_le(ne::hyp("x", F("A")), FormulaBag{F("A")}), SplitError);
  const ne::Deriv pc = ne::pc_e(ne::hyp("c", F("c:p")), ne::hyp("n", F("~p")));
  CHECK_THROWS_AS(ne_to_le(pc, {}), SplitError);
  // A stoup bot cannot become an empty stoup.
  CHECK_THROWS_AS(ne_to_le(ne::hyp("x", F("bot")), {}, RootStoup::Empty), SplitError);
  CHECK(ne_to_le(ne::hyp("x", F("bot")), {}).conclusion == parse_stpc("· ; bot"));
}

TEST_CASE("root stoup choice for a bot conclusion") {
  const ne::Deriv n = ne::neg_e(ne::hyp("x", F("A")), ne::hyp("y", F("~A")));
  CHECK(ne_to_le(n, {}, RootStoup::Formula).conclusion == parse_stpc("· ; bot"));
  CHECK(ne_to_le(n, {}, RootStoup::Auto).conclusion == parse_stpc("· ; ·"));
}

TEST_CASE("property: sequent-level round trip and translation size") {
  Generator g(41, GenOptions{{"A", "B", "C"}, 2, 8});
  for (int i = 0; i < 400; ++i) {
    const le::Deriv d = g.derivation();
    const auto v = invariants::round_trip(d);
    INFO(write_le_script(d));
    CHECK_MESSAGE(!v, v.value_or(""));
    const ne::Deriv n = le_to_ne(d);
    CHECK(node_count(n) <= 6 * node_count(d));
    const le::Judgment j = le::check_le(d);
    const le::Deriv back = ne_to_le(n, negate_all(j.conclusion.context),
                                    j.conclusion.stoup ? RootStoup::Formula : RootStoup::Empty);
    CHECK(node_count(back) <= 6 * node_count(n));
    if (auto thm = le::le_theorem(d)) {
      const ne::Judgment nj = ne::check_ne(n);
      CHECK(nj.conclusion == *thm);
      CHECK(nj.open_assumptions.empty());
    }
  }
}
