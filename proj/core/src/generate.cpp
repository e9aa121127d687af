#include "lep/generate.hpp"

#include <algorithm>

namespace lep {

Generator::Generator(std::uint64_t seed, GenOptions options) : rng_(seed), options_(std::move(options)) {}

bool Generator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

std::size_t Generator::pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

Formula Generator::formula(unsigned depth) {
  if (depth == 0 || coin(0.3)) {
    if (coin(0.08)) return Formula::bot();
    return Formula::atom(options_.atoms[pick(options_.atoms.size())]);
  }
  return compound(depth);
}

Formula Generator::compound(unsigned depth) {
  static const Connective kinds[] = {Connective::Neg, Connective::And,  Connective::ImpI,
                                     Connective::ImpC, Connective::OrI, Connective::OrC};
  return with_connective(kinds[pick(6)], std::max(depth, 1u));
}

Formula Generator::with_connective(Connective c, unsigned depth) {
  const unsigned sub = depth > 0 ? depth - 1 : 0;
  if (c == Connective::Neg) return Formula::neg(formula(sub));
  return Formula::binary(c, formula(sub), formula(sub));
}

Binder Generator::bind(const Formula& f) { return Binder{"x" + std::to_string(++counter_), f}; }

le::Deriv Generator::leaf(const Formula& goal) {
  std::vector<const Binder*> matches;
  for (const auto& b : scope_) {
    if (b.formula == goal) matches.push_back(&b);
  }
  if (!matches.empty() && coin(0.85)) {
    const Binder* b = matches[pick(matches.size())];
    return le::hyp(b->label, goal);
  }
  for (const auto& [f, label] : open_) {
    if (f == goal) return le::hyp(label, goal);
  }
  open_.emplace_back(goal, "h" + std::to_string(open_.size() + 1));
  return le::hyp(open_.back().second, goal);
}

le::Deriv Generator::ensure(le::Deriv d, const FormulaBag& need) {
  for (const auto& f : need.support()) {
    for (auto have = d.conclusion.context.count(f); have < need.count(f); ++have) d = le::wc(f, std::move(d));
  }
  return d;
}

le::Deriv Generator::structural(le::Deriv d, unsigned height) {
  if (lep::height(d) >= height) return d;
  const auto& ctx = d.conclusion.context;
  for (const auto& f : ctx.support()) {
    if (ctx.count(f) > 1 && coin(0.5)) return le::cc(f, std::move(d));
  }
  if (coin(0.04)) return le::wc(formula(1), std::move(d));
  return d;
}

le::Deriv Generator::intro(const Formula& goal, unsigned height, const FormulaBag& extra) {
  const unsigned h = height > 0 ? height - 1 : 0;
  auto premise = [&](le::Deriv p) { return le::weaken(std::move(p), extra); };
  switch (goal.kind()) {
    case Connective::And: {
      le::Deriv a = premise(stoup(goal.lhs(), h));
      return le::and_i(std::move(a), stoup(goal.rhs(), h));
    }
    case Connective::ImpI: {
      const Binder x = bind(goal.lhs());
      scope_.push_back(x);
      le::Deriv body = premise(stoup(goal.rhs(), h));
      scope_.pop_back();
      return le::impi_i(x, std::move(body));
    }
    case Connective::OrI:
      if (coin(0.5)) return le::ori_i1(goal, premise(stoup(goal.lhs(), h)));
      return le::ori_i2(goal, premise(stoup(goal.rhs(), h)));
    case Connective::Neg: {
      const Binder x = bind(goal.lhs());
      scope_.push_back(x);
      le::Deriv body = premise(empty(std::max(h, 2u)));
      scope_.pop_back();
      return le::neg_i(x, std::move(body));
    }
    case Connective::ImpC: {
      const Binder x = bind(goal.lhs());
      scope_.push_back(x);
      le::Deriv body = empty(std::max(h > 1 ? h - 1 : 0, 2u));
      scope_.pop_back();
      return le::impc_i(x, goal.rhs(), premise(ensure(std::move(body), FormulaBag{goal.rhs()})));
    }
    case Connective::OrC: {
      le::Deriv body = empty(std::max(h > 2 ? h - 2 : 0, 2u));
      return le::orc_i(goal.lhs(), goal.rhs(), premise(ensure(std::move(body), FormulaBag{goal.lhs(), goal.rhs()})));
    }
    case Connective::Atom:
    case Connective::Bot:
      break;
  }
  return le::wi(goal, empty(std::max(h, 2u)));
}

le::Deriv Generator::elim_over(const Formula& c, le::Deriv major, unsigned height) {
  const unsigned h = std::max(height > 0 ? height - 1 : 0, 1u);
  const unsigned he = std::max(h, 2u);
  switch (c.kind()) {
    case Connective::And:
      return coin(0.5) ? le::and_e1(std::move(major)) : le::and_e2(std::move(major));
    case Connective::ImpI:
      return le::impi_e(std::move(major), stoup(c.lhs(), h));
    case Connective::Neg:
      return le::neg_e(stoup(c.lhs(), h), std::move(major));
    case Connective::OrI: {
      const Formula goal = formula(1);
      const Binder x = bind(c.lhs());
      const Binder y = bind(c.rhs());
      scope_.push_back(x);
      le::Deriv left = stoup(goal, h);
      scope_.back() = y;
      le::Deriv right = stoup(goal, h);
      scope_.pop_back();
      return le::ori_e(std::move(major), x, std::move(left), y, std::move(right));
    }
    case Connective::ImpC: {
      le::Deriv antecedent = stoup(c.lhs(), h);
      const Binder y = bind(c.rhs());
      scope_.push_back(y);
      le::Deriv body = empty(he);
      scope_.pop_back();
      return le::impc_e(std::move(major), std::move(antecedent), y, std::move(body));
    }
    case Connective::OrC: {
      const Binder x = bind(c.lhs());
      const Binder y = bind(c.rhs());
      scope_.push_back(x);
      le::Deriv left = empty(he);
      scope_.back() = y;
      le::Deriv right = empty(he);
      scope_.pop_back();
      return le::orc_e(std::move(major), x, std::move(left), y, std::move(right));
    }
    case Connective::Atom:
    case Connective::Bot:
      break;
  }
  throw Error("no elimination for " + print_formula(c));
}

le::Deriv Generator::elim_into(const Formula& goal, unsigned height) {
  const unsigned h = height - 1;
  const Formula r = formula(1);
  switch (pick(4)) {
    case 0:
      return coin(0.5) ? le::and_e1(stoup(Formula::conj(goal, r), h)) : le::and_e2(stoup(Formula::conj(r, goal), h));
    case 1: {
      le::Deriv major = stoup(Formula::imp_i(r, goal), h);
      return le::impi_e(std::move(major), stoup(r, h));
    }
    case 2: {
      const Formula s = formula(1);
      le::Deriv major = stoup(Formula::or_i(r, s), h);
      const Binder x = bind(r);
      const Binder y = bind(s);
      scope_.push_back(x);
      le::Deriv left = stoup(goal, h);
      scope_.back() = y;
      le::Deriv right = stoup(goal, h);
      scope_.pop_back();
      return le::ori_e(std::move(major), x, std::move(left), y, std::move(right));
    }
    default: {
      // Use a hypothesis in scope as the major premise when one fits.
      std::vector<const Binder*> usable;
      for (const auto& b : scope_) {
        if (!b.formula.is_atomic()) usable.push_back(&b);
      }
      if (usable.empty()) return le::and_e1(stoup(Formula::conj(goal, r), h));
      const Binder b = *usable[pick(usable.size())];
      if (b.formula.is(Connective::ImpI) && b.formula.rhs() == goal) {
        return le::impi_e(le::hyp(b.label, b.formula), stoup(b.formula.lhs(), h));
      }
      if (b.formula.is(Connective::And) && b.formula.lhs() == goal) return le::and_e1(le::hyp(b.label, b.formula));
      if (b.formula.is(Connective::And) && b.formula.rhs() == goal) return le::and_e2(le::hyp(b.label, b.formula));
      return le::impi_e(stoup(Formula::imp_i(r, goal), h), stoup(r, h));
    }
  }
}

le::Deriv Generator::stoup(const Formula& goal, unsigned height) {
  if (height <= 1) return leaf(goal);
  bool in_scope = false;
  for (const auto& b : scope_) in_scope = in_scope || b.formula == goal;
  const double leaf_p = in_scope ? 0.45 : 0.2;
  if (coin(leaf_p)) return leaf(goal);
  const double roll = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
  // Smallest height at which intro() stays within bounds.
  unsigned intro_height = 2;
  if (goal.is(Connective::Neg)) intro_height = 3;
  if (goal.is(Connective::ImpC)) intro_height = 4;
  if (goal.is(Connective::OrC)) intro_height = 5;
  le::Deriv out = [&] {
    if (roll < 0.05 && height >= 3) return le::wi(goal, empty(height - 1));
    if (roll < 0.55 && !goal.is_atomic() && height >= intro_height) return intro(goal, height);
    return elim_into(goal, height);
  }();
  return structural(std::move(out), height);
}

le::Deriv Generator::empty(unsigned height) {
  if (height < 2) throw Error("an empty-stoup derivation needs height 2");
  const unsigned h = height - 1;
  auto scoped_formula = [&] {
    if (!scope_.empty() && coin(0.6)) return scope_[pick(scope_.size())].formula;
    return formula(1);
  };
  const std::size_t choice = height >= 3 ? pick(7) : 0;
  le::Deriv out = [&]() -> le::Deriv {
    switch (choice) {
      case 1: {
        const Formula f = scoped_formula();
        le::Deriv a = stoup(f, h);
        return le::neg_e(std::move(a), stoup(Formula::neg(f), h));
      }
      case 2: {
        const Formula p = formula(1), q = formula(1);
        le::Deriv major = stoup(Formula::imp_c(p, q), h);
        le::Deriv antecedent = stoup(p, h);
        const Binder y = bind(q);
        scope_.push_back(y);
        le::Deriv body = empty(h);
        scope_.pop_back();
        return le::impc_e(std::move(major), std::move(antecedent), y, std::move(body));
      }
      case 3: {
        const Formula p = formula(1), q = formula(1);
        le::Deriv major = stoup(Formula::or_c(p, q), h);
        const Binder x = bind(p), y = bind(q);
        scope_.push_back(x);
        le::Deriv left = empty(h);
        scope_.back() = y;
        le::Deriv right = empty(h);
        scope_.pop_back();
        return le::orc_e(std::move(major), x, std::move(left), y, std::move(right));
      }
      case 4: {
        const Formula p = formula(1), q = formula(1);
        le::Deriv major = stoup(Formula::or_i(p, q), h);
        const Binder x = bind(p), y = bind(q);
        scope_.push_back(x);
        le::Deriv left = empty(h);
        scope_.back() = y;
        le::Deriv right = empty(h);
        scope_.pop_back();
        return le::ori_e(std::move(major), x, std::move(left), y, std::move(right));
      }
      default:
        return le::der(stoup(scoped_formula(), h));
    }
  }();
  return structural(std::move(out), height);
}

le::Deriv Generator::derivation() {
  scope_.clear();
  const unsigned h = std::max(options_.max_height, 2u);
  if (coin(0.25)) return empty(h);
  return stoup(formula(), h);
}

le::Deriv Generator::redex(Reduction kind) {
  scope_.clear();
  const unsigned h = 3;
  Formula c = compound(options_.formula_depth);
  auto shaped = [&](Connective k) {
    c = with_connective(k, std::max(options_.formula_depth, 1u));
    return intro(c, h);
  };
  le::Deriv major = [&]() -> le::Deriv {
    switch (kind) {
      case Reduction::And:
        return shaped(Connective::And);
      case Reduction::ImpI:
        return shaped(Connective::ImpI);
      case Reduction::Neg:
        return shaped(Connective::Neg);
      case Reduction::OrI:
        return shaped(Connective::OrI);
      case Reduction::ImpC:
        return shaped(Connective::ImpC);
      case Reduction::OrC:
        return shaped(Connective::OrC);
      case Reduction::Wi:
        return le::wi(c, empty(h));
      case Reduction::PermuteOrI: {
        const Formula p = formula(1), q = formula(1);
        le::Deriv disj = stoup(Formula::or_i(p, q), h);
        const Binder x = bind(p), y = bind(q);
        scope_.push_back(x);
        le::Deriv left = intro(c, h);
        scope_.back() = y;
        le::Deriv right = coin(0.2) ? le::wi(c, empty(h)) : intro(c, h);
        scope_.pop_back();
        return le::ori_e(std::move(disj), x, std::move(left), y, std::move(right));
      }
      case Reduction::PermuteCc: {
        const Formula x = formula(1);
        return le::cc(x, intro(c, h, FormulaBag{x, x}));
      }
    }
    throw Error("unknown reduction");
  }();
  return elim_over(c, std::move(major), h);
}

le::Deriv Generator::wrap(le::Deriv d, unsigned times) {
  for (unsigned i = 0; i < times; ++i) {
    const Formula r = formula(1);
    if (d.conclusion.stoup) {
      const Formula s = *d.conclusion.stoup;
      switch (pick(5)) {
        case 0:
          d = le::and_i(std::move(d), stoup(r, 2));
          break;
        case 1:
          d = le::and_i(stoup(r, 2), std::move(d));
          break;
        case 2:
          d = le::impi_i(bind(r), std::move(d));
          break;
        case 3:
          d = le::ori_i1(Formula::or_i(s, r), std::move(d));
          break;
        default:
          d = le::der(std::move(d));
          break;
      }
    } else {
      switch (pick(3)) {
        case 0:
          d = le::neg_i(bind(r), std::move(d));
          break;
        case 1:
          d = le::wi(r, std::move(d));
          break;
        default:
          d = le::wc(r, std::move(d));
          break;
      }
    }
  }
  return d;
}

Generator::Junction Generator::junction() {
  scope_.clear();
  const Formula a = compound(options_.formula_depth);
  le::Deriv p1 = coin(0.8) ? intro(a, 3) : le::wi(a, empty(3));
  const std::string label = "j" + std::to_string(++counter_);
  scope_.push_back(Binder{label, a});
  le::Deriv core = elim_over(a, le::hyp(label, a), 3);
  le::Deriv p2 = wrap(std::move(core), static_cast<unsigned>(pick(4)));
  scope_.clear();
  return {std::move(p1), label, std::move(p2)};
}

}  // namespace lep
