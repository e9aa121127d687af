#include "lep/le_kernel.hpp"

#include <array>

namespace lep {

std::string print_stpc(const StpC& s) {
  return print_bag(s.context) + " ; " + (s.stoup ? print_formula(*s.stoup) : std::string("·"));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

bool is_empty_mark(std::string_view s) { return s == "·" || s == "." || s.empty(); }

std::vector<Formula> parse_list(std::string_view text, std::size_t base) {
  std::vector<Formula> out;
  if (is_empty_mark(trim(text))) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_formula(piece));
    } catch (const ParseError& e) {
      throw ParseError(base + start + e.offset(), e.expected(), "malformed formula in stp-c");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

StpC parse_stpc(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError(text.size(), {"';'"}, "stp-c needs a context and a stoup");
  StpC s;
  for (auto& f : parse_list(text.substr(0, semi), 0)) s.context.add(f);
  auto stoup = parse_list(text.substr(semi + 1), semi + 1);
  if (stoup.size() > 1) {
    throw StoupOverflow("stoup holds " + std::to_string(stoup.size()) + " formulas; at most one is allowed");
  }
  if (!stoup.empty()) s.stoup = stoup.front();
  return s;
}

namespace le {

namespace {

struct RuleInfo {
  Rule rule;
  std::string_view name;
  std::size_t arity;
  std::size_t binders;
  std::string_view schema;
};

constexpr std::array<RuleInfo, 19> kRules{{
    {Rule::Hyp, "hyp", 0, 0, "· ; A"},
    {Rule::Der, "der", 1, 0, "Δ ; A / Δ, A ; ·"},
    {Rule::Wi, "wi", 1, 0, "Δ ; · / Δ ; A"},
    {Rule::Wc, "wc", 1, 0, "Δ ; C / Δ, A ; C"},
    {Rule::Cc, "cc", 1, 0, "Δ, A, A ; C / Δ, A ; C"},
    {Rule::AndI, "and_i", 2, 0, "Δ1 ; A, Δ2 ; B / Δ1, Δ2 ; A & B"},
    {Rule::AndE1, "and_e1", 1, 0, "Δ ; A & B / Δ ; A"},
    {Rule::AndE2, "and_e2", 1, 0, "Δ ; A & B / Δ ; B"},
    {Rule::ImpiI, "impi_i", 1, 1, "[· ; A] Δ ; B / Δ ; A ->i B"},
    {Rule::ImpiE, "impi_e", 2, 0, "Δ1 ; A ->i B, Δ2 ; A / Δ1, Δ2 ; B"},
    {Rule::OriI1, "ori_i1", 1, 0, "Δ ; A / Δ ; A \\/i B"},
    {Rule::OriI2, "ori_i2", 1, 0, "Δ ; B / Δ ; A \\/i B"},
    {Rule::OriE, "ori_e", 3, 2, "Δ1 ; A \\/i B, [· ; A] Δ2 ; C, [· ; B] Δ3 ; C / Δ1, Δ2, Δ3 ; C"},
    {Rule::NegI, "neg_i", 1, 1, "[· ; A] Δ ; · / Δ ; ~A"},
    {Rule::NegE, "neg_e", 2, 0, "Δ1 ; A, Δ2 ; ~A / Δ1, Δ2 ; ·"},
    {Rule::ImpcI, "impc_i", 1, 1, "[· ; A] Δ, B ; · / Δ ; A ->c B"},
    {Rule::ImpcE, "impc_e", 3, 1, "Δ1 ; A ->c B, Δ2 ; A, [· ; B] Δ3 ; · / Δ1, Δ2, Δ3 ; ·"},
    {Rule::OrcI, "orc_i", 1, 0, "Δ, A, B ; · / Δ ; A \\/c B"},
    {Rule::OrcE, "orc_e", 3, 2, "Δ1 ; A \\/c B, [· ; A] Δ2 ; ·, [· ; B] Δ3 ; · / Δ1, Δ2, Δ3 ; ·"},
}};

const RuleInfo& info(Rule r) { return kRules[static_cast<std::size_t>(r)]; }

std::string show(const Formula& f) { return print_formula(f); }
std::string show(const StpC& s) { return print_stpc(s); }

[[noreturn]] void mismatch(Rule r, const std::string& found) {
  throw CheckError({}, std::string(rule_name(r)) + " (" + std::string(info(r).schema) + ")", found);
}

Formula stoup_of(Rule r, const StpC& s, const char* role) {
  if (!s.stoup) mismatch(r, std::string(role) + " with empty stoup");
  return *s.stoup;
}

Formula stoup_with(Rule r, const StpC& s, Connective c, const char* role) {
  const Formula f = stoup_of(r, s, role);
  if (!f.is(c)) mismatch(r, std::string(role) + " " + show(s));
  return f;
}

void require_empty(Rule r, const StpC& s, const char* role) {
  if (s.stoup) mismatch(r, std::string(role) + " " + show(s) + " where an empty stoup is required");
}

void require_eq(Rule r, const Formula& expected, const Formula& got, const char* role) {
  if (!(expected == got)) mismatch(r, std::string(role) + " " + show(got) + " where " + show(expected) + " is required");
}

std::size_t extra_count(Rule r) {
  switch (r) {
    case Rule::Hyp:
    case Rule::Wi:
    case Rule::Wc:
    case Rule::Cc:
    case Rule::OriI1:
    case Rule::OriI2:
    case Rule::ImpcI:
      return 1;
    case Rule::OrcI:
      return 2;
    default:
      return 0;
  }
}

StpC infer(Rule r, const std::vector<StpC>& prem, const std::vector<Binder>& b, const std::vector<Formula>& x) {
  if (prem.size() != arity(r)) mismatch(r, std::to_string(prem.size()) + " premises");
  if (b.size() != binder_count(r)) mismatch(r, std::to_string(b.size()) + " binders");
  if (x.size() != extra_count(r)) mismatch(r, std::to_string(x.size()) + " formula arguments");
  auto sum = [&](std::initializer_list<std::size_t> idx) {
    FormulaBag out;
    for (auto i : idx) out.add_all(prem[i].context);
    return out;
  };
  switch (r) {
    case Rule::Hyp:
      return StpC{{}, x[0]};
    case Rule::Der: {
      StpC out{prem[0].context, std::nullopt};
      out.context.add(stoup_of(r, prem[0], "premise"));
      return out;
    }
    case Rule::Wi:
      require_empty(r, prem[0], "premise");
      return StpC{prem[0].context, x[0]};
    case Rule::Wc: {
      StpC out = prem[0];
      out.context.add(x[0]);
      return out;
    }
    case Rule::Cc: {
      if (prem[0].context.count(x[0]) < 2) mismatch(r, "premise " + show(prem[0]) + " without two copies of " + show(x[0]));
      StpC out = prem[0];
      out.context.remove_one(x[0]);
      return out;
    }
    case Rule::AndI:
      return StpC{sum({0, 1}), Formula::conj(stoup_of(r, prem[0], "left premise"), stoup_of(r, prem[1], "right premise"))};
    case Rule::AndE1:
    case Rule::AndE2: {
      const Formula c = stoup_with(r, prem[0], Connective::And, "premise");
      return StpC{prem[0].context, r == Rule::AndE1 ? c.lhs() : c.rhs()};
    }
    case Rule::ImpiI:
      return StpC{prem[0].context, Formula::imp_i(b[0].formula, stoup_of(r, prem[0], "premise"))};
    case Rule::ImpiE: {
      const Formula imp = stoup_with(r, prem[0], Connective::ImpI, "major premise");
      require_eq(r, imp.lhs(), stoup_of(r, prem[1], "minor premise"), "minor premise");
      return StpC{sum({0, 1}), imp.rhs()};
    }
    case Rule::OriI1:
    case Rule::OriI2: {
      if (!x[0].is(Connective::OrI)) mismatch(r, "conclusion " + show(x[0]));
      require_eq(r, r == Rule::OriI1 ? x[0].lhs() : x[0].rhs(), stoup_of(r, prem[0], "premise"), "premise");
      return StpC{prem[0].context, x[0]};
    }
    case Rule::OriE: {
      const Formula dis = stoup_with(r, prem[0], Connective::OrI, "major premise");
      require_eq(r, dis.lhs(), b[0].formula, "left discharge");
      require_eq(r, dis.rhs(), b[1].formula, "right discharge");
      if (prem[1].stoup != prem[2].stoup) mismatch(r, "minor premises " + show(prem[1]) + " and " + show(prem[2]));
      return StpC{sum({0, 1, 2}), prem[1].stoup};
    }
    case Rule::NegI:
      require_empty(r, prem[0], "premise");
      return StpC{prem[0].context, Formula::neg(b[0].formula)};
    case Rule::NegE: {
      const Formula a = stoup_of(r, prem[0], "first premise");
      require_eq(r, Formula::neg(a), stoup_of(r, prem[1], "second premise"), "second premise");
      return StpC{sum({0, 1}), std::nullopt};
    }
    case Rule::ImpcI: {
      require_empty(r, prem[0], "premise");
      StpC out{prem[0].context, Formula::imp_c(b[0].formula, x[0])};
      if (!out.context.remove_one(x[0])) mismatch(r, "premise " + show(prem[0]) + " without " + show(x[0]) + " in context");
      return out;
    }
    case Rule::ImpcE: {
      const Formula imp = stoup_with(r, prem[0], Connective::ImpC, "major premise");
      require_eq(r, imp.lhs(), stoup_of(r, prem[1], "second premise"), "second premise");
      require_eq(r, imp.rhs(), b[0].formula, "discharge");
      require_empty(r, prem[2], "third premise");
      return StpC{sum({0, 1, 2}), std::nullopt};
    }
    case Rule::OrcI: {
      require_empty(r, prem[0], "premise");
      StpC out{prem[0].context, Formula::or_c(x[0], x[1])};
      if (!out.context.remove_one(x[0]) || !out.context.remove_one(x[1])) {
        mismatch(r, "premise " + show(prem[0]) + " without " + show(x[0]) + ", " + show(x[1]) + " in context");
      }
      return out;
    }
    case Rule::OrcE: {
      const Formula dis = stoup_with(r, prem[0], Connective::OrC, "major premise");
      require_eq(r, dis.lhs(), b[0].formula, "left discharge");
      require_eq(r, dis.rhs(), b[1].formula, "right discharge");
      require_empty(r, prem[1], "second premise");
      require_empty(r, prem[2], "third premise");
      return StpC{sum({0, 1, 2}), std::nullopt};
    }
  }
  mismatch(r, "unknown rule");
}

std::vector<StpC> conclusions(const std::vector<Deriv>& ps) {
  std::vector<StpC> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.conclusion);
  return out;
}

Deriv build(Rule r, std::vector<Deriv> premises, std::vector<Binder> binders, std::vector<Formula> x = {}) {
  StpC c = infer(r, conclusions(premises), binders, x);
  return Deriv{r, std::move(c), std::move(premises), std::move(binders), {}};
}

Formula single_difference(Rule r, const FormulaBag& big, const FormulaBag& small, const StpC& shown) {
  if (!small.subset_of(big)) mismatch(r, "conclusion " + show(shown));
  const FormulaBag diff = big.minus(small);
  if (diff.size() != 1) mismatch(r, "conclusion " + show(shown));
  return *diff.begin();
}

}  // namespace

std::size_t Traits::binder_target(Rule r, std::size_t binder) {
  switch (r) {
    case Rule::OriE:
    case Rule::OrcE:
      return binder + 1;
    case Rule::ImpcE:
      return 2;
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

bool is_intro(Rule r) {
  switch (r) {
    case Rule::AndI:
    case Rule::ImpiI:
    case Rule::OriI1:
    case Rule::OriI2:
    case Rule::NegI:
    case Rule::ImpcI:
    case Rule::OrcI:
      return true;
    default:
      return false;
  }
}

bool is_elim(Rule r) {
  switch (r) {
    case Rule::AndE1:
    case Rule::AndE2:
    case Rule::ImpiE:
    case Rule::OriE:
    case Rule::NegE:
    case Rule::ImpcE:
    case Rule::OrcE:
      return true;
    default:
      return false;
  }
}

std::size_t major_index(Rule r) { return r == Rule::NegE ? 1 : 0; }

std::vector<Formula> extras(const Deriv& n) {
  const Rule r = n.rule;
  const StpC& c = n.conclusion;
  switch (r) {
    case Rule::Hyp:
    case Rule::Wi:
    case Rule::OriI1:
    case Rule::OriI2:
      if (!c.stoup) mismatch(r, "conclusion " + show(c));
      return {*c.stoup};
    case Rule::Wc:
      if (n.premises.size() != 1) mismatch(r, std::to_string(n.premises.size()) + " premises");
      return {single_difference(r, c.context, n.premises[0].conclusion.context, c)};
    case Rule::Cc:
      if (n.premises.size() != 1) mismatch(r, std::to_string(n.premises.size()) + " premises");
      return {single_difference(r, n.premises[0].conclusion.context, c.context, c)};
    case Rule::ImpcI:
      if (!c.stoup || !c.stoup->is(Connective::ImpC)) mismatch(r, "conclusion " + show(c));
      return {c.stoup->rhs()};
    case Rule::OrcI:
      if (!c.stoup || !c.stoup->is(Connective::OrC)) mismatch(r, "conclusion " + show(c));
      return {c.stoup->lhs(), c.stoup->rhs()};
    default:
      return {};
  }
}

Judgment check_le(const Deriv& d) {
  visit_preorder(d, [](const Deriv& n, const NodePath& path) {
    try {
      if (n.is_leaf()) {
        if (!n.premises.empty() || !n.binders.empty()) mismatch(n.rule, "premises on a leaf");
        if (!n.conclusion.context.empty() || !n.conclusion.stoup) mismatch(n.rule, show(n.conclusion));
        return;
      }
      const StpC expected = infer(n.rule, conclusions(n.premises), n.binders, extras(n));
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
  for (const auto& [label, f] : open_leaves(d)) j.open_hyps.add(f);
  return j;
}

std::optional<Formula> le_theorem(const Deriv& d) {
  const Judgment j = check_le(d);
  if (!j.open_hyps.empty() || !j.conclusion.context.empty() || !j.conclusion.stoup) return std::nullopt;
  return j.conclusion.stoup;
}

std::string print_judgment(const Judgment& j) {
  const FormulaBag gamma = j.open_hyps.support();
  std::string out;
  if (!gamma.empty()) out = print_bag(gamma) + " ";
  return out + "⊢ " + print_stpc(j.conclusion);
}

Deriv hyp(std::string label, Formula f) {
  return Deriv{Rule::Hyp, StpC{{}, std::move(f)}, {}, {}, std::move(label)};
}
Deriv der(Deriv p) { return build(Rule::Der, {std::move(p)}, {}); }
Deriv wi(Formula a, Deriv p) { return build(Rule::Wi, {std::move(p)}, {}, {std::move(a)}); }
Deriv wc(Formula a, Deriv p) { return build(Rule::Wc, {std::move(p)}, {}, {std::move(a)}); }
Deriv cc(Formula a, Deriv p) { return build(Rule::Cc, {std::move(p)}, {}, {std::move(a)}); }
Deriv and_i(Deriv a, Deriv b) { return build(Rule::AndI, {std::move(a), std::move(b)}, {}); }
Deriv and_e1(Deriv p) { return build(Rule::AndE1, {std::move(p)}, {}); }
Deriv and_e2(Deriv p) { return build(Rule::AndE2, {std::move(p)}, {}); }
Deriv impi_i(Binder x, Deriv body) { return build(Rule::ImpiI, {std::move(body)}, {std::move(x)}); }
Deriv impi_e(Deriv major, Deriv minor) { return build(Rule::ImpiE, {std::move(major), std::move(minor)}, {}); }
Deriv ori_i1(Formula disjunction, Deriv p) { return build(Rule::OriI1, {std::move(p)}, {}, {std::move(disjunction)}); }
Deriv ori_i2(Formula disjunction, Deriv p) { return build(Rule::OriI2, {std::move(p)}, {}, {std::move(disjunction)}); }
Deriv ori_e(Deriv major, Binder x, Deriv left, Binder y, Deriv right) {
  return build(Rule::OriE, {std::move(major), std::move(left), std::move(right)}, {std::move(x), std::move(y)});
}
Deriv neg_i(Binder x, Deriv body) { return build(Rule::NegI, {std::move(body)}, {std::move(x)}); }
Deriv neg_e(Deriv a, Deriv neg_a) { return build(Rule::NegE, {std::move(a), std::move(neg_a)}, {}); }
Deriv impc_i(Binder x, Formula removed, Deriv body) {
  return build(Rule::ImpcI, {std::move(body)}, {std::move(x)}, {std::move(removed)});
}
Deriv impc_e(Deriv major, Deriv antecedent, Binder y, Deriv body) {
  return build(Rule::ImpcE, {std::move(major), std::move(antecedent), std::move(body)}, {std::move(y)});
}
Deriv orc_i(Formula left, Formula right, Deriv body) {
  return build(Rule::OrcI, {std::move(body)}, {}, {std::move(left), std::move(right)});
}
Deriv orc_e(Deriv major, Binder x, Deriv left, Binder y, Deriv right) {
  return build(Rule::OrcE, {std::move(major), std::move(left), std::move(right)}, {std::move(x), std::move(y)});
}

Deriv make_node(Rule r, std::vector<Deriv> premises, std::vector<Binder> binders, std::vector<Formula> extra) {
  if (r == Rule::Hyp) mismatch(r, "hypothesis built as a rule node");
  return build(r, std::move(premises), std::move(binders), std::move(extra));
}

Deriv rebuild(const Deriv& node, std::vector<Deriv> premises) {
  if (node.is_leaf()) return node;
  return build(node.rule, std::move(premises), node.binders, extras(node));
}

Deriv weaken(Deriv d, const FormulaBag& extra) {
  for (const auto& f : extra) d = wc(f, std::move(d));
  return d;
}

Deriv contract(Deriv d, const FormulaBag& dup) {
  for (const auto& f : dup) d = cc(f, std::move(d));
  return d;
}

Deriv fit_context(Deriv d, const FormulaBag& target) {
  const FormulaBag have = d.conclusion.context;
  for (const auto& f : have.support()) {
    const auto want = target.count(f);
    if (want == 0) {
      throw Error("context formula " + print_formula(f) + " cannot be removed to reach " + print_bag(target));
    }
    for (auto n = have.count(f); n > want; --n) d = cc(f, std::move(d));
  }
  return weaken(std::move(d), target.minus(d.conclusion.context));
}

}  // namespace le
}  // namespace lep
