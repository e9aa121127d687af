#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lep/derivation.hpp"
#include "lep/multiset.hpp"

namespace lep {

// Stoup with a context, Δ;Σ. The stoup holds at most one formula.
struct StpC {
  FormulaBag context;
  std::optional<Formula> stoup;

  bool empty_stoup() const { return !stoup.has_value(); }
  friend bool operator==(const StpC&, const StpC&) = default;
};

// "Δ ; Σ" with `·` for an empty context or stoup.
std::string print_stpc(const StpC& s);
// Inverse of print_stpc. Throws StoupOverflow when the stoup lists more than
// one formula and ParseError on malformed input.
StpC parse_stpc(std::string_view text);

namespace le {

enum class Rule {
  Hyp,
  Der, Wi, Wc, Cc,
  AndI, AndE1, AndE2,
  ImpiI, ImpiE,
  OriI1, OriI2, OriE,
  NegI, NegE,
  ImpcI, ImpcE,
  OrcI, OrcE,
};

struct Traits {
  using Rule = le::Rule;
  using Conclusion = StpC;
  static constexpr Rule hyp = Rule::Hyp;
  static Formula leaf_formula(const StpC& s) { return *s.stoup; }
  static std::size_t binder_target(Rule r, std::size_t binder);
};

using Deriv = Derivation<Traits>;

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
std::size_t arity(Rule r);
std::size_t binder_count(Rule r);

bool is_intro(Rule r);
bool is_elim(Rule r);
// Index of the major premise of an elimination.
std::size_t major_index(Rule r);

struct Judgment {
  FormulaBag open_hyps;
  StpC conclusion;
};

// Γ set-collapsed, then "⊢ Δ ; Σ".
std::string print_judgment(const Judgment& j);

Judgment check_le(const Deriv& d);

// The theorem proved by `d`, if it has no open hypotheses and concludes ·;A.
std::optional<Formula> le_theorem(const Deriv& d);

// Builders infer the conclusion and throw CheckError when the schema does
// not apply.
Deriv hyp(std::string label, Formula f);
Deriv der(Deriv p);
Deriv wi(Formula a, Deriv p);
Deriv wc(Formula a, Deriv p);
Deriv cc(Formula a, Deriv p);
Deriv and_i(Deriv a, Deriv b);
Deriv and_e1(Deriv p);
Deriv and_e2(Deriv p);
Deriv impi_i(Binder x, Deriv body);
Deriv impi_e(Deriv major, Deriv minor);
Deriv ori_i1(Formula disjunction, Deriv p);
Deriv ori_i2(Formula disjunction, Deriv p);
Deriv ori_e(Deriv major, Binder x, Deriv left, Binder y, Deriv right);
Deriv neg_i(Binder x, Deriv body);
Deriv neg_e(Deriv a, Deriv neg_a);
Deriv impc_i(Binder x, Formula removed, Deriv body);
Deriv impc_e(Deriv major, Deriv antecedent, Binder y, Deriv body);
Deriv orc_i(Formula left, Formula right, Deriv body);
Deriv orc_e(Deriv major, Binder x, Deriv left, Binder y, Deriv right);

// Formula arguments a node carries in script order: the hypothesis formula,
// the formula added by wi/wc or contracted by cc, the disjunction of ori_i,
// B for impc_i, and A, B for orc_i. Recovered from the stored conclusion;
// throws CheckError when the conclusion does not fit the rule.
std::vector<Formula> extras(const Deriv& node);

// Rebuilds a node over new premises, keeping its rule, binders and extras.
Deriv rebuild(const Deriv& node, std::vector<Deriv> premises);

// Generic constructor used by the script reader. `extra` carries the formula
// arguments in script order (wc "A", orc_i "A" "B", ...).
Deriv make_node(Rule r, std::vector<Deriv> premises, std::vector<Binder> binders, std::vector<Formula> extra);

// Applies W_c and C_c below `d` until its context equals `target`. Formulas
// in the context that `target` lacks entirely cannot be removed.
Deriv fit_context(Deriv d, const FormulaBag& target);
// Weakens `d` by every formula of `extra`.
Deriv weaken(Deriv d, const FormulaBag& extra);
// Contracts one copy of each formula of `dup`.
Deriv contract(Deriv d, const FormulaBag& dup);

}  // namespace le
}  // namespace lep
