#include "lep/ne_kernel.hpp"

#include <array>

namespace lep::ne {

namespace {

struct RuleInfo {
  Rule rule;
  std::string_view name;
  std::size_t arity;
  std::size_t binders;
  std::string_view schema;
};

constexpr std::array<RuleInfo, 18> kRules{{
    {Rule::Hyp, "hyp", 0, 0, "hypothesis A"},
    {Rule::ImpiI, "impi_i", 1, 1, "[A] B / A ->i B"},
    {Rule::ImpiE, "impi_e", 2, 0, "A ->i B, A / B"},
    {Rule::OriI1, "ori_i1", 1, 0, "A / A \\/i B"},
    {Rule::OriI2, "ori_i2", 1, 0, "B / A \\/i B"},
    {Rule::OriE, "ori_e", 3, 2, "A \\/i B, [A] C, [B] C / C"},
    {Rule::ImpcI, "impc_i", 1, 2, "[A, ~B] bot / A ->c B"},
    {Rule::ImpcE, "impc_e", 3, 0, "A ->c B, A, ~B / bot"},
    {Rule::OrcI, "orc_i", 1, 2, "[~A, ~B] bot / A \\/c B"},
    {Rule::OrcE, "orc_e", 3, 0, "A \\/c B, ~A, ~B / bot"},
    {Rule::AndI, "and_i", 2, 0, "A, B / A & B"},
    {Rule::AndE1, "and_e1", 1, 0, "A & B / A"},
    {Rule::AndE2, "and_e2", 1, 0, "A & B / B"},
    {Rule::NegI, "neg_i", 1, 1, "[A] bot / ~A"},
    {Rule::NegE, "neg_e", 2, 0, "A, ~A / bot"},
    {Rule::BotE, "bot_e", 1, 0, "bot / A"},
    {Rule::PcI, "pc_i", 1, 1, "[~p] bot / c:p"},
    {Rule::PcE, "pc_e", 2, 0, "c:p, ~p / bot"},
}};

const RuleInfo& info(Rule r) { return kRules[static_cast<std::size_t>(r)]; }

std::string show(const Formula& f) { return print_formula(f); }

[[noreturn]] void mismatch(Rule r, const std::string& found) {
  throw CheckError({}, std::string(rule_name(r)) + " (" + std::string(info(r).schema) + ")", found);
}

Formula require(Rule r, const Formula& f, Connective c, const char* role) {
  if (!f.is(c)) mismatch(r, std::string(role) + " " + show(f));
  return f;
}

void require_eq(Rule r, const Formula& expected, const Formula& got, const char* role) {
  if (!(expected == got)) mismatch(r, std::string(role) + " " + show(got) + " where " + show(expected) + " is required");
}

// Conclusion forced by the rule, premises and binders. `annotation` is the
// conclusion recorded on the node for rules that do not determine it.
Formula infer(Rule r, const std::vector<Formula>& prem, const std::vector<Binder>& b,
              const std::optional<Formula>& annotation) {
  if (prem.size() != arity(r)) {
    mismatch(r, std::to_string(prem.size()) + " premises");
  }
  if (b.size() != binder_count(r)) {
    mismatch(r, std::to_string(b.size()) + " binders");
  }
  const Formula bot = Formula::bot();
  switch (r) {
    case Rule::Hyp:
      if (!annotation) mismatch(r, "no formula");
      return *annotation;
    case Rule::ImpiI:
      return Formula::imp_i(b[0].formula, prem[0]);
    case Rule::ImpiE: {
      const Formula imp = require(r, prem[0], Connective::ImpI, "major premise");
      require_eq(r, imp.lhs(), prem[1], "minor premise");
      return imp.rhs();
    }
    case Rule::OriI1:
    case Rule::OriI2: {
      if (!annotation) mismatch(r, "no disjunction given");
      const Formula dis = require(r, *annotation, Connective::OrI, "conclusion");
      require_eq(r, r == Rule::OriI1 ? dis.lhs() : dis.rhs(), prem[0], "premise");
      return dis;
    }
    case Rule::OriE: {
      const Formula dis = require(r, prem[0], Connective::OrI, "major premise");
      require_eq(r, dis.lhs(), b[0].formula, "left discharge");
      require_eq(r, dis.rhs(), b[1].formula, "right discharge");
      require_eq(r, prem[1], prem[2], "right minor premise");
      return prem[1];
    }
    case Rule::ImpcI: {
      require_eq(r, bot, prem[0], "premise");
      const Formula nb = require(r, b[1].formula, Connective::Neg, "second discharge");
      return Formula::imp_c(b[0].formula, nb.lhs());
    }
    case Rule::ImpcE: {
      const Formula imp = require(r, prem[0], Connective::ImpC, "major premise");
      require_eq(r, imp.lhs(), prem[1], "second premise");
      require_eq(r, Formula::neg(imp.rhs()), prem[2], "third premise");
      return bot;
    }
    case Rule::OrcI: {
      require_eq(r, bot, prem[0], "premise");
      const Formula na = require(r, b[0].formula, Connective::Neg, "first discharge");
      const Formula nb = require(r, b[1].formula, Connective::Neg, "second discharge");
      return Formula::or_c(na.lhs(), nb.lhs());
    }
    case Rule::OrcE: {
      const Formula dis = require(r, prem[0], Connective::OrC, "major premise");
      require_eq(r, Formula::neg(dis.lhs()), prem[1], "second premise");
      require_eq(r, Formula::neg(dis.rhs()), prem[2], "third premise");
      return bot;
    }
    case Rule::AndI:
      return Formula::conj(prem[0], prem[1]);
    case Rule::AndE1:
    case Rule::AndE2: {
      const Formula c = require(r, prem[0], Connective::And, "premise");
      return r == Rule::AndE1 ? c.lhs() : c.rhs();
    }
    case Rule::NegI:
      require_eq(r, bot, prem[0], "premise");
      return Formula::neg(b[0].formula);
    case Rule::NegE:
      require_eq(r, Formula::neg(prem[0]), prem[1], "second premise");
      return bot;
    case Rule::BotE:
      require_eq(r, bot, prem[0], "premise");
      if (!annotation) mismatch(r, "no conclusion given");
      return *annotation;
    case Rule::PcI: {
      require_eq(r, bot, prem[0], "premise");
      const Formula np = require(r, b[0].formula, Connective::Neg, "discharge");
      const Formula p = np.lhs();
      if (!p.is(Connective::Atom) || p.is_classical_atom()) mismatch(r, "discharge " + show(np));
      return Formula::atom("c:" + p.name());
    }
    case Rule::PcE: {
      const Formula& pc = prem[0];
      if (!pc.is_classical_atom()) mismatch(r, "first premise " + show(pc));
      require_eq(r, Formula::neg(Formula::atom(pc.base_name())), prem[1], "second premise");
      return Formula::bot();
    }
  }
  mismatch(r, "unknown rule");
}

std::vector<Formula> conclusions(const std::vector<Deriv>& ps) {
  std::vector<Formula> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.conclusion);
  return out;
}

bool conclusion_is_annotation(Rule r) {
  return r == Rule::Hyp || r == Rule::OriI1 || r == Rule::OriI2 || r == Rule::BotE;
}

Deriv build(Rule r, std::vector<Deriv> premises, std::vector<Binder> binders,
            std::optional<Formula> annotation = std::nullopt) {
  Formula c = infer(r, conclusions(premises), binders, annotation);
  return Deriv{r, std::move(c), std::move(premises), std::move(binders), {}};
}

}  // namespace

std::size_t Traits::binder_target(Rule r, std::size_t binder) {
  switch (r) {
    case Rule::OriE:
      return binder + 1;
    default:
      return 0;
  }
}

std::string_view rule_name(Rule r) { return info(r).name; }

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& i : kRules) {
    if (i.name == name) return i.rule;
  }
  return std::nullopt;
}

std::size_t arity(Rule r) { return info(r).arity; }
std::size_t binder_count(Rule r) { return info(r).binders; }

Judgment check_ne(const Deriv& d) {
  visit_preorder(d, [](const Deriv& n, const NodePath& path) {
    try {
      if (n.is_leaf()) {
        if (!n.premises.empty() || !n.binders.empty()) mismatch(n.rule, "premises on a leaf");
        return;
      }
      const std::optional<Formula> annotation =
          conclusion_is_annotation(n.rule) ? std::optional<Formula>(n.conclusion) : std::nullopt;
      const Formula expected = infer(n.rule, conclusions(n.premises), n.binders, annotation);
      if (!(expected == n.conclusion)) {
        throw CheckError(path, std::string(rule_name(n.rule)) + " concluding " + show(expected),
                         "conclusion " + show(n.conclusion));
      }
    } catch (const CheckError& e) {
      if (!e.path().empty()) throw;
      throw CheckError(path, e.schema(), e.found());
    }
  });
  check_label_discipline(d);
  Judgment j{{}, d.conclusion};
  for (const auto& [label, f] : open_leaves(d)) j.open_assumptions.add(f);
  return j;
}

Deriv hyp(std::string label, Formula f) { return Deriv{Rule::Hyp, std::move(f), {}, {}, std::move(label)}; }
Deriv impi_i(Binder x, Deriv body) { return build(Rule::ImpiI, {std::move(body)}, {std::move(x)}); }
Deriv impi_e(Deriv major, Deriv minor) { return build(Rule::ImpiE, {std::move(major), std::move(minor)}, {}); }
Deriv ori_i1(Formula disjunction, Deriv p) { return build(Rule::OriI1, {std::move(p)}, {}, std::move(disjunction)); }
Deriv ori_i2(Formula disjunction, Deriv p) { return build(Rule::OriI2, {std::move(p)}, {}, std::move(disjunction)); }
Deriv ori_e(Deriv major, Binder x, Deriv left, Binder y, Deriv right) {
  return build(Rule::OriE, {std::move(major), std::move(left), std::move(right)}, {std::move(x), std::move(y)});
}
Deriv impc_i(Binder antecedent, Binder negated_consequent, Deriv body) {
  return build(Rule::ImpcI, {std::move(body)}, {std::move(antecedent), std::move(negated_consequent)});
}
Deriv impc_e(Deriv major, Deriv antecedent, Deriv negated_consequent) {
  return build(Rule::ImpcE, {std::move(major), std::move(antecedent), std::move(negated_consequent)}, {});
}
Deriv orc_i(Binder neg_left, Binder neg_right, Deriv body) {
  return build(Rule::OrcI, {std::move(body)}, {std::move(neg_left), std::move(neg_right)});
}
Deriv orc_e(Deriv major, Deriv neg_left, Deriv neg_right) {
  return build(Rule::OrcE, {std::move(major), std::move(neg_left), std::move(neg_right)}, {});
}
Deriv and_i(Deriv a, Deriv b) { return build(Rule::AndI, {std::move(a), std::move(b)}, {}); }
Deriv and_e1(Deriv p) { return build(Rule::AndE1, {std::move(p)}, {}); }
Deriv and_e2(Deriv p) { return build(Rule::AndE2, {std::move(p)}, {}); }
Deriv neg_i(Binder x, Deriv body) { return build(Rule::NegI, {std::move(body)}, {std::move(x)}); }
Deriv neg_e(Deriv a, Deriv neg_a) { return build(Rule::NegE, {std::move(a), std::move(neg_a)}, {}); }
Deriv bot_e(Formula conclusion, Deriv p) { return build(Rule::BotE, {std::move(p)}, {}, std::move(conclusion)); }
Deriv pc_i(Binder neg_atom, Deriv body) { return build(Rule::PcI, {std::move(body)}, {std::move(neg_atom)}); }
Deriv pc_e(Deriv classical_atom, Deriv neg_atom) {
  return build(Rule::PcE, {std::move(classical_atom), std::move(neg_atom)}, {});
}

Deriv make_node(Rule r, std::vector<Deriv> premises, std::vector<Binder> binders, std::optional<Formula> annotation) {
  return build(r, std::move(premises), std::move(binders), std::move(annotation));
}

std::string print_judgment(const Judgment& j) {
  const FormulaBag gamma = j.open_assumptions.support();
  std::string out;
  if (!gamma.empty()) out = print_bag(gamma) + " ";
  return out + "⊢ " + print_formula(j.conclusion);
}

}  // namespace lep::ne
