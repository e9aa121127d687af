#include "lep/bridge.hpp"

#include <map>

namespace lep {

FormulaBag negate_all(const FormulaBag& bag) {
  FormulaBag out;
  for (const auto& f : bag) out.add(Formula::neg(f));
  return out;
}

namespace {

using Env = std::map<Formula, std::string>;

class LeToNe {
 public:
  explicit LeToNe(const le::Deriv& d) { supply_.reserve_all(d); }

  ne::Deriv run(const le::Deriv& d) {
    Env env;
    for (const auto& f : d.conclusion.context.support()) env.insert_or_assign(f, supply_.fresh("n"));
    return go(d, env);
  }

 private:
  const std::string& label_for(Env& env, const Formula& f) {
    auto it = env.find(f);
    if (it == env.end()) it = env.emplace(f, supply_.fresh("n")).first;
    return it->second;
  }

  ne::Deriv go(const le::Deriv& d, Env& env) {
    using R = le::Rule;
    const auto& p = d.premises;
    switch (d.rule) {
      case R::Hyp:
        return ne::hyp(d.label, d.leaf_formula());
      case R::Der: {
        const Formula a = *p[0].conclusion.stoup;
        ne::Deriv body = go(p[0], env);
        return ne::neg_e(std::move(body), ne::hyp(label_for(env, a), Formula::neg(a)));
      }
      case R::Wi:
        return ne::bot_e(*d.conclusion.stoup, go(p[0], env));
      case R::Wc:
      case R::Cc:
        return go(p[0], env);
      case R::AndI:
        return ne::and_i(go(p[0], env), go(p[1], env));
      case R::AndE1:
        return ne::and_e1(go(p[0], env));
      case R::AndE2:
        return ne::and_e2(go(p[0], env));
      case R::ImpiI:
        return ne::impi_i(d.binders[0], go(p[0], env));
      case R::ImpiE:
        return ne::impi_e(go(p[0], env), go(p[1], env));
      case R::OriI1:
        return ne::ori_i1(*d.conclusion.stoup, go(p[0], env));
      case R::OriI2:
        return ne::ori_i2(*d.conclusion.stoup, go(p[0], env));
      case R::OriE:
        return ne::ori_e(go(p[0], env), d.binders[0], go(p[1], env), d.binders[1], go(p[2], env));
      case R::NegI:
        return ne::neg_i(d.binders[0], go(p[0], env));
      case R::NegE:
        return ne::neg_e(go(p[0], env), go(p[1], env));
      case R::ImpcI: {
        const Formula b = d.conclusion.stoup->rhs();
        Env inner = env;
        const std::string l = supply_.fresh("n");
        inner.insert_or_assign(b, l);
        return ne::impc_i(d.binders[0], Binder{l, Formula::neg(b)}, go(p[0], inner));
      }
      case R::ImpcE: {
        ne::Deriv major = go(p[0], env);
        ne::Deriv antecedent = go(p[1], env);
        return ne::impc_e(std::move(major), std::move(antecedent), ne::neg_i(d.binders[0], go(p[2], env)));
      }
      case R::OrcI: {
        const Formula a = d.conclusion.stoup->lhs();
        const Formula b = d.conclusion.stoup->rhs();
        Env inner = env;
        const std::string la = supply_.fresh("n");
        const std::string lb = supply_.fresh("n");
        inner.insert_or_assign(a, la);
        if (!(a == b)) inner.insert_or_assign(b, lb);
        return ne::orc_i(Binder{la, Formula::neg(a)}, Binder{lb, Formula::neg(b)}, go(p[0], inner));
      }
      case R::OrcE: {
        ne::Deriv major = go(p[0], env);
        ne::Deriv left = ne::neg_i(d.binders[0], go(p[1], env));
        return ne::orc_e(std::move(major), std::move(left), ne::neg_i(d.binders[1], go(p[2], env)));
      }
    }
    throw Error("unknown LE rule");
  }

  LabelSupply supply_;
};

class NeToLe {
 public:
  NeToLe(const ne::Deriv& d, const FormulaBag& split) {
    supply_.reserve_all(d);
    std::set<Formula> negs;
    for (const auto& f : split) {
      if (!f.is(Connective::Neg)) throw SplitError("split formula " + print_formula(f) + " is not a negation");
      negs.insert(f);
    }
    for (const auto& [label, f] : open_leaves(d)) {
      if (negs.count(f) != 0) classical_.insert_or_assign(label, f.lhs());
    }
  }

  le::Deriv go(const ne::Deriv& n) {
    using R = ne::Rule;
    const auto& p = n.premises;
    switch (n.rule) {
      case R::Hyp: {
        const auto it = classical_.find(n.label);
        if (it == classical_.end()) return le::hyp(n.label, n.conclusion);
        const std::string z = supply_.fresh("z");
        return le::neg_i(Binder{z, it->second}, le::der(le::hyp(z, it->second)));
      }
      case R::NegE: {
        if (classical_leaf(p[1])) return fit(n, le::der(formula_stoup(go(p[0]))));
        le::Deriv a = formula_stoup(go(p[0]));
        return fit(n, le::neg_e(std::move(a), formula_stoup(go(p[1]))));
      }
      case R::BotE:
        if (n.conclusion.is(Connective::Bot)) return go(p[0]);
        return le::wi(n.conclusion, empty_stoup(go(p[0])));
      case R::NegI:
        return le::neg_i(n.binders[0], empty_stoup(go(p[0])));
      case R::ImpiI:
        return le::impi_i(n.binders[0], formula_stoup(go(p[0])));
      case R::ImpiE: {
        le::Deriv major = formula_stoup(go(p[0]));
        return fit(n, le::impi_e(std::move(major), formula_stoup(go(p[1]))));
      }
      case R::AndI: {
        le::Deriv a = formula_stoup(go(p[0]));
        return fit(n, le::and_i(std::move(a), formula_stoup(go(p[1]))));
      }
      case R::AndE1:
        return le::and_e1(formula_stoup(go(p[0])));
      case R::AndE2:
        return le::and_e2(formula_stoup(go(p[0])));
      case R::OriI1:
        return le::ori_i1(n.conclusion, formula_stoup(go(p[0])));
      case R::OriI2:
        return le::ori_i2(n.conclusion, formula_stoup(go(p[0])));
      case R::OriE: {
        le::Deriv major = formula_stoup(go(p[0]));
        le::Deriv left = go(p[1]);
        le::Deriv right = go(p[2]);
        if (left.conclusion.stoup || right.conclusion.stoup) {
          left = formula_stoup(std::move(left));
          right = formula_stoup(std::move(right));
        }
        return fit(n, le::ori_e(std::move(major), n.binders[0], std::move(left), n.binders[1], std::move(right)));
      }
      case R::ImpcI: {
        const Formula b = n.binders[1].formula.lhs();
        classical_.insert_or_assign(n.binders[1].label, b);
        le::Deriv body = empty_stoup(go(p[0]));
        FormulaBag target = classical_open(n);
        target.add(b);
        return le::impc_i(n.binders[0], b, le::fit_context(std::move(body), target));
      }
      case R::OrcI: {
        const Formula a = n.binders[0].formula.lhs();
        const Formula b = n.binders[1].formula.lhs();
        classical_.insert_or_assign(n.binders[0].label, a);
        classical_.insert_or_assign(n.binders[1].label, b);
        le::Deriv body = empty_stoup(go(p[0]));
        FormulaBag target = classical_open(n);
        target.add(a);
        target.add(b);
        return le::orc_i(a, b, le::fit_context(std::move(body), target));
      }
      case R::ImpcE: {
        le::Deriv major = formula_stoup(go(p[0]));
        le::Deriv antecedent = formula_stoup(go(p[1]));
        auto [y, body] = negation_minor(p[2]);
        return fit(n, le::impc_e(std::move(major), std::move(antecedent), y, std::move(body)));
      }
      case R::OrcE: {
        le::Deriv major = formula_stoup(go(p[0]));
        auto [x, left] = negation_minor(p[1]);
        auto [y, right] = negation_minor(p[2]);
        return fit(n, le::orc_e(std::move(major), x, std::move(left), y, std::move(right)));
      }
      case R::PcI:
      case R::PcE:
        throw SplitError("classical-atom rule " + std::string(ne::rule_name(n.rule)) + " has no LE_p counterpart");
    }
    throw Error("unknown NE rule");
  }

 private:
  std::optional<Formula> classical_leaf(const ne::Deriv& n) const {
    if (!n.is_leaf()) return std::nullopt;
    const auto it = classical_.find(n.label);
    if (it == classical_.end()) return std::nullopt;
    return it->second;
  }

  FormulaBag classical_open(const ne::Deriv& n) const {
    FormulaBag out;
    for (const auto& [label, f] : open_leaves(n)) {
      const auto it = classical_.find(label);
      if (it != classical_.end() && !out.contains(it->second)) out.add(it->second);
    }
    return out;
  }

  le::Deriv fit(const ne::Deriv& n, le::Deriv d) const { return le::fit_context(std::move(d), classical_open(n)); }

  static le::Deriv formula_stoup(le::Deriv d) {
    if (d.conclusion.stoup) return d;
    return le::wi(Formula::bot(), std::move(d));
  }

  static le::Deriv empty_stoup(le::Deriv d) {
    if (!d.conclusion.stoup) return d;
    throw SplitError("stoup " + print_formula(*d.conclusion.stoup) +
                     " would have to become an empty stoup; LE_p has no rule for that");
  }

  // Third premise ¬B of impc_e (or ¬A, ¬B of orc_e) as a discharge of ·;B
  // over an empty stoup.
  std::pair<Binder, le::Deriv> negation_minor(const ne::Deriv& r) {
    const Formula b = r.conclusion.lhs();
    if (r.rule == ne::Rule::NegI) return {r.binders[0], empty_stoup(go(r.premises[0]))};
    const std::string z = supply_.fresh("z");
    if (classical_leaf(r)) return {Binder{z, b}, le::der(le::hyp(z, b))};
    return {Binder{z, b}, le::neg_e(le::hyp(z, b), formula_stoup(go(r)))};
  }

  LabelSupply supply_;
  std::map<std::string, Formula> classical_;
};

}  // namespace

ne::Deriv le_to_ne(const le::Deriv& d) { return LeToNe(d).run(d); }

le::Deriv ne_to_le(const ne::Deriv& d, const FormulaBag& split, RootStoup root) {
  ne::check_ne(d);
  NeToLe t(d, split);
  le::Deriv out = t.go(d);
  if (root == RootStoup::Formula && !out.conclusion.stoup) out = le::wi(Formula::bot(), std::move(out));
  if (root == RootStoup::Empty && out.conclusion.stoup) {
    throw SplitError("root stoup " + print_formula(*out.conclusion.stoup) + " cannot be emptied");
  }
  FormulaBag delta;
  for (const auto& f : split) delta.add(f.lhs());
  return le::fit_context(std::move(out), delta);
}

}  // namespace lep
