#include <fstream>
#include <sstream>

#include "lep/generate.hpp"
#include "support.hpp"

using namespace lep;
using lep::test::F;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(LEP_PROOFS_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("proof files match the built-in corpus") {
  for (const auto& p : golden_proofs()) {
    INFO(p.name);
    if (p.system == System::LE) {
      CHECK(read_le_script(slurp(p.name + ".lep")) == read_le_script(p.script));
    } else {
      CHECK(read_ne_script(slurp(p.name + ".nep")) == read_ne_script(p.script));
    }
  }
}

TEST_CASE("writer output is canonical") {
  const le::Deriv d = test::golden_le("peirce");
  const std::string text = write_le_script(d);
  CHECK(text ==
        "(impc_i (x3 \"(A ->c B) ->c A\") \"A\"\n"
        "  (cc \"A\"\n"
        "    (impc_e\n"
        "      (hyp x3 \"(A ->c B) ->c A\")\n"
        "      (impc_i (x1 \"A\") \"B\"\n"
        "        (wc \"B\"\n"
        "          (der\n"
        "            (hyp x1 \"A\"))))\n"
        "      (x2 \"A\")\n"
        "      (der\n"
        "        (hyp x2 \"A\")))))\n");
  CHECK(read_le_script(text) == d);
}

TEST_CASE("comments and whitespace are ignored") {
  const auto d = read_le_script("; leading\n(der ; inline\n   (hyp x \"A\")) ; trailing");
  CHECK(d.conclusion == parse_stpc("A ; ·"));
}

TEST_CASE("structural problems are parse errors") {
  CHECK_THROWS_AS(read_le_script(""), ParseError);
  CHECK_THROWS_AS(read_le_script("(der (hyp x \"A\")) (der (hyp y \"B\"))"), ParseError);
  CHECK_THROWS_AS(read_le_script("(der (hyp x \"A\")"), ParseError);
  CHECK_THROWS_AS(read_le_script("(frob (hyp x \"A\"))"), ParseError);
  CHECK_THROWS_AS(read_le_script("(der)"), ParseError);
  CHECK_THROWS_AS(read_le_script("(hyp x \"A &\")"), ParseError);
  CHECK_THROWS_AS(read_le_script("(hyp x-y \"A\")"), ParseError);
  CHECK_THROWS_AS(read_le_script("(impi_i x (hyp x \"A\"))"), ParseError);
  CHECK_THROWS_AS(read_le_script("(wc A (hyp x \"A\"))"), ParseError);
  CHECK_THROWS_AS(read_ne_script("(der (hyp x \"A\"))"), ParseError);
  CHECK_THROWS_AS(read_le_script("(bot_e \"A\" (hyp x \"bot\"))"), ParseError);
}

TEST_CASE("formula errors point into the script") {
  try {
    read_le_script("(hyp x \"A & \")");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() >= 8);
  }
}

TEST_CASE("rule misuse is a check error with the node path") {
  try {
    read_le_script("(and_i (hyp x \"A\") (and_e1 (hyp y \"B\")))");
    FAIL("expected a CheckError");
  } catch (const CheckError& e) {
    CHECK(e.path() == NodePath{1});
  }
}

TEST_CASE("property: random scripts re-read to the same derivation") {
  Generator g(31, GenOptions{{"A", "B", "c:p"}, 3, 8});
  for (int i = 0; i < 200; ++i) {
    const le::Deriv d = g.derivation();
    const std::string text = write_le_script(d);
    const le::Deriv again = read_le_script(text);
    REQUIRE(again == d);
    CHECK(write_le_script(again) == text);
    CHECK(le::print_judgment(le::check_le(again)) == le::print_judgment(le::check_le(d)));
  }
}
