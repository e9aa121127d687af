#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lep/derivation.hpp"
#include "lep/multiset.hpp"

namespace lep::ne {

// Propositional rules of Prawitz's ecumenical natural deduction.
enum class Rule {
  Hyp,
  ImpiI, ImpiE,
  OriI1, OriI2, OriE,
  ImpcI, ImpcE,
  OrcI, OrcE,
  AndI, AndE1, AndE2,
  NegI, NegE,
  BotE,
  PcI, PcE,
};

struct Traits {
  using Rule = ne::Rule;
  using Conclusion = Formula;
  static constexpr Rule hyp = Rule::Hyp;
  static Formula leaf_formula(const Formula& f) { return f; }
  static std::size_t binder_target(Rule r, std::size_t binder);
};

using Deriv = Derivation<Traits>;

// Script atom for a rule (`impc_i`, `orc_e`, ...).
std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
std::size_t arity(Rule r);
std::size_t binder_count(Rule r);

struct Judgment {
  FormulaBag open_assumptions;
  Formula conclusion;
};

// Verifies every node against its rule schema and the label discipline.
// Throws CheckError for the first failing node in pre-order.
Judgment check_ne(const Deriv& d);

// Builders infer the conclusion from the premises and throw CheckError when
// the schema cannot apply.
Deriv hyp(std::string label, Formula f);
Deriv impi_i(Binder x, Deriv body);
Deriv impi_e(Deriv major, Deriv minor);
Deriv ori_i1(Formula disjunction, Deriv p);
Deriv ori_i2(Formula disjunction, Deriv p);
Deriv ori_e(Deriv major, Binder x, Deriv left, Binder y, Deriv right);
Deriv impc_i(Binder antecedent, Binder negated_consequent, Deriv body);
Deriv impc_e(Deriv major, Deriv antecedent, Deriv negated_consequent);
Deriv orc_i(Binder neg_left, Binder neg_right, Deriv body);
Deriv orc_e(Deriv major, Deriv neg_left, Deriv neg_right);
Deriv and_i(Deriv a, Deriv b);
Deriv and_e1(Deriv p);
Deriv and_e2(Deriv p);
Deriv neg_i(Binder x, Deriv body);
Deriv neg_e(Deriv a, Deriv neg_a);
Deriv bot_e(Formula conclusion, Deriv p);
Deriv pc_i(Binder neg_atom, Deriv body);
Deriv pc_e(Deriv classical_atom, Deriv neg_atom);

// Generic constructor used by the script reader: infers the conclusion for
// rules that determine it, otherwise uses `annotation`.
Deriv make_node(Rule r, std::vector<Deriv> premises, std::vector<Binder> binders,
                std::optional<Formula> annotation);

// "Γ ⊢ C" with Γ set-collapsed, e.g. "⊢ A \/c ~A".
std::string print_judgment(const Judgment& j);

}  // namespace lep::ne
