// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lep/bridge.hpp"
#include "lep/corpus.hpp"
#include "lep/generate.hpp"
#include "lep/invariants.hpp"
#include "lep/oracle.hpp"
#include "lep/script.hpp"

using namespace lep;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    ok = false;
    if (failures.size() < 5) failures.push_back(why);
  }
};

std::vector<le::Deriv> random_corpus(std::uint64_t seed, unsigned height, std::size_t n) {
  Generator g(seed, GenOptions{{"A", "B", "C"}, 2, height});
  std::vector<le::Deriv> out;
  out.reserve(n);
  while (out.size() < n) out.push_back(g.derivation());
  return out;
}

std::vector<le::Deriv> golden_le() {
  std::vector<le::Deriv> out;
  for (const auto& p : golden_proofs()) {
    if (p.system == System::LE) out.push_back(read_le_script(p.script));
  }
  return out;
}

const std::vector<le::Deriv>& corpus8() {
  static const auto c = random_corpus(0x5eed0008, 8, 500);
  return c;
}

const std::vector<le::Deriv>& corpus10() {
  static const auto c = random_corpus(0x5eed0010, 10, 1000);
  return c;
}

Outcome golden() {
  Outcome o;
  const char* wanted[] = {"peirce", "excluded_middle", "dummett"};
  std::size_t seen = 0;
  for (const auto& p : golden_proofs()) {
    if (p.system != System::LE) continue;
    if (std::find(std::begin(wanted), std::end(wanted), p.name) == std::end(wanted)) continue;
    ++seen;
    try {
      const le::Deriv d = read_le_script(p.script);
      const std::string j = le::print_judgment(le::check_le(d));
      if (j != p.judgment) o.fail(p.name + " concludes \"" + j + "\"");
      if (degree(d) != 0) o.fail(p.name + " has degree " + std::to_string(degree(d)));
    } catch (const Error& e) {
      o.fail(p.name + ": " + e.what());
    }
  }
  if (seen != 3) o.fail("golden corpus incomplete");
  o.detail = "3 proofs, degree 0, judgments as printed";
  return o;
}

Outcome families() {
  Outcome o;
  const Formula a = Formula::atom("A"), b = Formula::atom("B");
  std::size_t decided = 0;
  for (Connective j : {Connective::ImpI, Connective::ImpC}) {
    for (Connective k : {Connective::ImpI, Connective::ImpC}) {
      const Formula peirce = Formula::imp_c(Formula::binary(k, Formula::binary(j, a, b), a), a);
      const Formula dummett = Formula::or_c(Formula::binary(j, a, b), Formula::binary(k, b, a));
      for (const Formula& f : {peirce, dummett}) {
        ++decided;
        if (!decide(f, {8, false}).provable) o.fail(print_formula(f) + " not provable");
      }
    }
  }
  const Formula lem = Formula::or_i(a, Formula::neg(a));
  const Verdict v = decide(lem);
  if (v.provable) o.fail("A \\/i ~A decided provable");
  else if (!v.countermodel) o.fail("no countermodel for A \\/i ~A");
  else if (!verify_countermodel(*v.countermodel, lem)) o.fail("countermodel for A \\/i ~A does not verify");
  o.detail = std::to_string(decided) + " family members provable, A \\/i ~A refuted by a " +
             (v.countermodel ? std::to_string(v.countermodel->worlds) : std::string("?")) + "-world model";
  return o;
}

Outcome round_trips() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& d : golden_le()) {
    ++n;
    if (auto v = invariants::round_trip(d)) o.fail("golden: " + *v);
  }
  for (const auto& p : golden_proofs()) {
    if (p.system != System::NE) continue;
    ++n;
    try {
      const le::Deriv d = ne_to_le(read_ne_script(p.script), {});
      if (le::print_judgment(le::check_le(d)) != "⊢ · ; " + p.judgment.substr(std::string("⊢ ").size())) {
        o.fail(p.name + ".nep translates to " + le::print_judgment(le::check_le(d)));
      }
      if (auto v = invariants::round_trip(d)) o.fail(p.name + ".nep: " + *v);
    } catch (const Error& e) {
      o.fail(p.name + ".nep: " + e.what());
    }
  }
  for (const auto& d : corpus8()) {
    ++n;
    if (height(d) > 8) o.fail("corpus derivation of height " + std::to_string(height(d)));
    if (auto v = invariants::round_trip(d)) o.fail(*v + "\n" + write_le_script(d));
  }
  o.detail = std::to_string(n) + " derivations";
  return o;
}

Outcome junctions() {
  Outcome o;
  Generator g(0x5eed0004);
  for (int i = 0; i < 500; ++i) {
    const auto j = g.junction();
    if (auto v = invariants::junction_law(j)) {
      o.fail(*v + "\n" + write_le_script(j.p1) + j.label + "\n" + write_le_script(j.p2));
    }
  }
  o.detail = "500 composable pairs";
  return o;
}

Outcome reductions() {
  Outcome o;
  std::map<Reduction, std::size_t> applied;
  auto apply = [&](const le::Deriv& d, const MaximalSegment& m) {
    Reduction kind;
    try {
      kind = classify(d, m);
    } catch (const NoRedex&) {
      return;
    }
    ++applied[kind];
    if (auto v = invariants::reduction_safe(d, m)) o.fail(std::string(reduction_name(kind)) + ": " + *v);
  };
  Generator g(0x5eed0005);
  for (Reduction kind : all_reductions()) {
    for (int i = 0; i < 60; ++i) {
      const le::Deriv d = g.redex(kind);
      for (const auto& m : maximal_segments(d)) {
        if (m.elim_node.empty()) {
          if (classify(d, m) != kind) o.fail(std::string("redex for ") + reduction_name(kind) + " classified otherwise");
          apply(d, m);
        }
      }
    }
  }
  for (std::size_t i = 0; i < 300; ++i) {
    const le::Deriv& d = corpus10()[i];
    for (const auto& m : maximal_segments(d)) apply(d, m);
  }
  std::ostringstream counts;
  std::size_t total = 0;
  for (Reduction kind : all_reductions()) {
    counts << (total == 0 && kind == all_reductions().front() ? "" : " ") << reduction_name(kind) << "=" << applied[kind];
    total += applied[kind];
    if (applied[kind] < 50) o.fail(std::string(reduction_name(kind)) + " applied fewer than 50 times");
  }
  o.detail = std::to_string(total) + " applications: " + counts.str();
  return o;
}

Outcome normalization() {
  Outcome o;
  std::size_t steps = 0, detours = 0;
  for (const auto& d : corpus10()) {
    if (height(d) > 10) o.fail("corpus derivation of height " + std::to_string(height(d)));
    if (degree(d) > 0) ++detours;
    if (auto v = invariants::normalizes(d)) o.fail(*v + "\n" + write_le_script(d));
    else steps += normalize(d).trace.size();
  }
  o.detail = "1000 derivations, " + std::to_string(detours) + " with detours, " + std::to_string(steps) + " steps";
  return o;
}

Outcome oracle_consistency() {
  Outcome o;
  std::size_t n = 0;
  auto check = [&](const le::Deriv& d) {
    ++n;
    if (auto v = invariants::oracle_agrees(d)) o.fail(*v);
  };
  for (const auto& d : golden_le()) check(d);
  for (const auto& d : corpus8()) check(d);
  for (const auto& d : corpus10()) check(d);
  o.detail = std::to_string(n) + " judgments provable";
  return o;
}

Outcome syntax() {
  Outcome o;
  Generator g(0x5eed0008 + 1, GenOptions{{"A", "B", "C", "p", "c:q"}, 4, 6});
  for (int i = 0; i < 1000; ++i) {
    const Formula f = g.formula(1 + i % 5);
    if (auto v = invariants::formula_round_trip(f)) o.fail(*v);
  }
  for (int i = 0; i < 200; ++i) {
    if (auto v = invariants::script_round_trip(g.derivation())) o.fail(*v);
  }
  o.detail = "1000 formulas, 200 scripts";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"golden proofs", golden},
      {"oracle families", families},
      {"LE/NE round trip", round_trips},
      {"junction law", junctions},
      {"reduction safety", reductions},
      {"normalization", normalization},
      {"oracle consistency", oracle_consistency},
      {"syntax round trips", syntax},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " (" << o.detail << ", " << ms
              << " ms)\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    if (!o.ok) ++failed;
  }
  const auto total =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << total << " ms\n";
  return failed;
}
