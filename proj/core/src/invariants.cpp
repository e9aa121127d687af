#include "lep/invariants.hpp"

#include <algorithm>

#include "lep/bridge.hpp"
#include "lep/compose.hpp"
#include "lep/oracle.hpp"
#include "lep/script.hpp"

namespace lep::invariants {

namespace {

std::string show(const FormulaBag& bag) { return "{" + print_bag(bag) + "}"; }

}  // namespace

FormulaBag hypothesis_set(const FormulaBag& bag) { return bag.support(); }

Violation round_trip(const le::Deriv& d) {
  try {
    const le::Judgment j = le::check_le(d);
    const ne::Deriv n = le_to_ne(d);
    const ne::Judgment nj = ne::check_ne(n);
    const Formula want = j.conclusion.stoup.value_or(Formula::bot());
    if (!(nj.conclusion == want)) return "le_to_ne concludes " + print_formula(nj.conclusion);
    const FormulaBag allowed = hypothesis_set(j.open_hyps + negate_all(j.conclusion.context));
    if (!hypothesis_set(nj.open_assumptions).subset_of(allowed)) {
      return "le_to_ne assumptions " + show(nj.open_assumptions) + " exceed " + show(allowed);
    }
    const RootStoup root = j.conclusion.stoup ? RootStoup::Formula : RootStoup::Empty;
    const le::Deriv back = ne_to_le(n, negate_all(j.conclusion.context), root);
    const le::Judgment bj = le::check_le(back);
    if (!(bj.conclusion == j.conclusion)) {
      return "ne_to_le concludes " + print_stpc(bj.conclusion) + " instead of " + print_stpc(j.conclusion);
    }
    if (!hypothesis_set(bj.open_hyps).subset_of(hypothesis_set(j.open_hyps))) {
      return "ne_to_le hypotheses " + show(bj.open_hyps) + " exceed " + show(j.open_hyps);
    }
  } catch (const Error& e) {
    return std::string("round trip raised: ") + e.what();
  }
  return std::nullopt;
}

Violation junction_law(const Generator::Junction& j) {
  try {
    le::check_le(j.p1);
    le::check_le(j.p2);
    const le::Deriv c = compose_stoup(j.p1, j.label, j.p2);
    le::check_le(c);
    const unsigned want = std::max({degree(j.p1), degree(j.p2), weight(*j.p1.conclusion.stoup)});
    const unsigned got = degree(c);
    if (got != want) return "composite degree " + std::to_string(got) + ", expected " + std::to_string(want);
  } catch (const Error& e) {
    return std::string("composition raised: ") + e.what();
  }
  return std::nullopt;
}

Violation reduction_safe(const le::Deriv& d, const MaximalSegment& target) {
  try {
    const le::Judgment before = le::check_le(d);
    const le::Deriv r = reduce_at(d, target);
    const le::Judgment after = le::check_le(r);
    if (!(after.conclusion == before.conclusion)) {
      return "conclusion changed to " + print_stpc(after.conclusion) + " from " + print_stpc(before.conclusion);
    }
    if (!hypothesis_set(after.open_hyps).subset_of(hypothesis_set(before.open_hyps))) {
      return "hypotheses grew to " + show(after.open_hyps);
    }
    if (degree(r) > degree(d)) {
      return "degree rose from " + std::to_string(degree(d)) + " to " + std::to_string(degree(r));
    }
  } catch (const Error& e) {
    return std::string("reduction raised: ") + e.what();
  }
  return std::nullopt;
}

Violation normalizes(const le::Deriv& d, std::size_t step_ceiling) {
  try {
    const le::Judgment before = le::check_le(d);
    const Normalized n = normalize(d, step_ceiling);
    const le::Judgment after = le::check_le(n.derivation);
    if (degree(n.derivation) != 0) return "normal form has degree " + std::to_string(degree(n.derivation));
    if (!(after.conclusion == before.conclusion)) return "conclusion changed to " + print_stpc(after.conclusion);
    if (!hypothesis_set(after.open_hyps).subset_of(hypothesis_set(before.open_hyps))) {
      return "hypotheses grew to " + show(after.open_hyps);
    }
    for (const auto& s : n.trace) {
      if (s.degree_after > s.degree_before) return "step " + std::to_string(s.step) + " raised the degree";
    }
  } catch (const Error& e) {
    return std::string("normalization raised: ") + e.what();
  }
  return std::nullopt;
}

Violation oracle_agrees(const le::Deriv& d) {
  try {
    const le::Judgment j = le::check_le(d);
    const Formula f = judgment_formula(hypothesis_set(j.open_hyps), j.conclusion.context, j.conclusion.stoup);
    if (!provable_intuitionistic(neg_translate(f))) return "oracle refutes " + print_formula(f);
  } catch (const Error& e) {
    return std::string("oracle check raised: ") + e.what();
  }
  return std::nullopt;
}

Violation formula_round_trip(const Formula& f) {
  const std::string text = print_formula(f);
  try {
    const Formula g = parse_formula(text);
    if (!(g == f)) return "\"" + text + "\" re-reads as \"" + print_formula(g) + "\"";
    if (print_formula(g) != text) return "\"" + text + "\" prints differently after re-reading";
  } catch (const Error& e) {
    return "\"" + text + "\" does not parse: " + e.what();
  }
  return std::nullopt;
}

Violation script_round_trip(const le::Deriv& d) {
  try {
    const le::Judgment j = le::check_le(d);
    const std::string text = write_le_script(d);
    const le::Deriv again = read_le_script(text);
    const le::Judgment k = le::check_le(again);
    if (!(again == d)) return std::string("LE script re-reads to a different tree");
    if (!(k.conclusion == j.conclusion) || !(k.open_hyps == j.open_hyps)) {
      return std::string("LE script re-reads to a different judgment");
    }
    if (write_le_script(again) != text) return std::string("LE script is not a fixed point of write/read");

    const ne::Deriv n = le_to_ne(d);
    const ne::Judgment nj = ne::check_ne(n);
    const ne::Deriv n2 = read_ne_script(write_ne_script(n));
    const ne::Judgment nk = ne::check_ne(n2);
    if (!(n2 == n)) return std::string("NE script re-reads to a different tree");
    if (!(nk.conclusion == nj.conclusion) || !(nk.open_assumptions == nj.open_assumptions)) {
      return std::string("NE script re-reads to a different judgment");
    }
  } catch (const Error& e) {
    return std::string("script round trip raised: ") + e.what();
  }
  return std::nullopt;
}

}  // namespace lep::invariants
