#include "lep/compose.hpp"

namespace lep {

namespace {

using le::Deriv;
using le::Rule;

std::set<std::string> labels_of(const Deriv& d) {
  std::set<std::string> out;
  collect_labels(d, out);
  return out;
}

// Renames the labels bound in `d` that also occur in `forbidden`.
void rename_clashing(Deriv& d, const std::set<std::string>& forbidden, LabelSupply& supply) {
  for (std::size_t b = 0; b < d.binders.size(); ++b) {
    if (forbidden.count(d.binders[b].label) == 0) continue;
    const std::string old = d.binders[b].label;
    const std::string neu = supply.fresh();
    d.binders[b].label = neu;
    detail::rename_free(d.premises[le::Traits::binder_target(d.rule, b)], old, neu);
  }
  for (auto& p : d.premises) rename_clashing(p, forbidden, supply);
}

void check_leaf_formulas(const Deriv& d, const std::string& label, const Formula& a) {
  for (const auto& [l, f] : open_leaves(d)) {
    if (l == label && !(f == a)) {
      throw ComposeError("hypothesis '" + label + "' carries " + print_formula(f) + ", expected " + print_formula(a));
    }
  }
}

class Composer {
 public:
  Composer(const Deriv& p1, const Deriv& p2) {
    supply_.reserve_all(p1);
    supply_.reserve_all(p2);
  }

  Deriv stoup(Deriv p1, const std::string& label, Deriv p2) {
    if (!p1.conclusion.stoup) throw ComposeError("composition in the stoup needs a derivation with a stoup formula");
    check_leaf_formulas(p2, label, *p1.conclusion.stoup);
    if (!has_open_label(p2, label)) return le::weaken(std::move(p2), p1.conclusion.context);
    // p1 is grafted under p2's binders: none of them may capture a label of p1.
    rename_clashing(p2, labels_of(p1), supply_);
    graft_ = &p1;
    copies_ = 0;
    host_labels_ = labels_of(p2);
    return substitute(p2, label).first;
  }

  Deriv context(Deriv p1, const Formula& a, const std::string& label, Deriv p2) {
    check_leaf_formulas(p2, label, a);
    rename_clashing(p1, labels_of(p2), supply_);
    p2_ = &p2;
    a_ = a;
    label_ = label;
    extra_ = p2.conclusion.context;
    if (p2.conclusion.stoup) extra_.add(*p2.conclusion.stoup);
    return remove(p1);
  }

 private:
  std::pair<Deriv, bool> substitute(const Deriv& node, const std::string& label) {
    if (node.is_leaf()) {
      if (node.label != label) return {node, false};
      Deriv copy = *graft_;
      if (copies_++ == 0) {
        rename_clashing(copy, host_labels_, supply_);
      } else {
        freshen_bound(copy, supply_);
      }
      return {std::move(copy), true};
    }
    std::vector<Deriv> premises;
    std::size_t hits = 0;
    for (const auto& p : node.premises) {
      auto [q, found] = substitute(p, label);
      hits += found ? 1 : 0;
      premises.push_back(std::move(q));
    }
    if (hits == 0) return {node, false};
    Deriv out = le::rebuild(node, std::move(premises));
    for (std::size_t i = 1; i < hits; ++i) out = le::contract(std::move(out), graft_->conclusion.context);
    return {std::move(out), true};
  }

  Deriv fresh_p2() {
    Deriv copy = *p2_;
    if (p2_uses_++ > 0) freshen_bound(copy, supply_);
    return copy;
  }

  // Requires a_ in the context of `node`; returns node with every a_ removed
  // from its context and extra_ added once.
  Deriv remove(const Deriv& node) {
    const auto& p = node.premises;
    auto has_a = [&](const Deriv& d) { return d.conclusion.context.contains(a_); };
    switch (node.rule) {
      case Rule::Hyp:
        throw ComposeError("hypothesis with a nonempty context");
      case Rule::Der: {
        const Formula x = *p[0].conclusion.stoup;
        if (!(x == a_)) return le::der(remove(p[0]));
        const bool inner = has_a(p[0]);
        Deriv base = inner ? remove(p[0]) : p[0];
        Composer sub(base, *p2_);
        sub.supply_ = supply_;
        Deriv joined = sub.stoup(std::move(base), label_, fresh_p2());
        supply_ = sub.supply_;
        if (joined.conclusion.stoup) joined = le::der(std::move(joined));
        if (inner) joined = le::contract(std::move(joined), extra_);
        return joined;
      }
      case Rule::Wc: {
        const Formula x = le::extras(node)[0];
        if (x == a_) return has_a(p[0]) ? remove(p[0]) : le::weaken(p[0], extra_);
        return le::wc(x, remove(p[0]));
      }
      case Rule::Cc: {
        const Formula x = le::extras(node)[0];
        if (x == a_) return remove(p[0]);
        return le::cc(x, remove(p[0]));
      }
      case Rule::ImpcI: {
        const Formula b = le::extras(node)[0];
        Deriv body = remove(p[0]);
        if (b == a_) body = le::wc(a_, std::move(body));
        return le::rebuild(node, {std::move(body)});
      }
      case Rule::OrcI: {
        const auto x = le::extras(node);
        Deriv body = remove(p[0]);
        if (x[0] == a_) body = le::wc(a_, std::move(body));
        if (x[1] == a_) body = le::wc(a_, std::move(body));
        return le::rebuild(node, {std::move(body)});
      }
      default:
        break;
    }
    std::vector<Deriv> premises;
    std::size_t hits = 0;
    for (const auto& q : p) {
      if (has_a(q)) {
        premises.push_back(remove(q));
        ++hits;
      } else {
        premises.push_back(q);
      }
    }
    Deriv out = le::rebuild(node, std::move(premises));
    for (std::size_t i = 1; i < hits; ++i) out = le::contract(std::move(out), extra_);
    return out;
  }

  LabelSupply supply_;
  const Deriv* graft_ = nullptr;
  std::size_t copies_ = 0;
  std::set<std::string> host_labels_;

  const Deriv* p2_ = nullptr;
  std::size_t p2_uses_ = 0;
  Formula a_ = Formula::bot();
  std::string label_;
  FormulaBag extra_;
};

}  // namespace

le::Deriv compose_stoup(const le::Deriv& p1, const std::string& label, const le::Deriv& p2) {
  return Composer(p1, p2).stoup(p1, label, p2);
}

le::Deriv compose_context(const le::Deriv& p1, const Formula& a, const std::string& label, const le::Deriv& p2) {
  if (!p1.conclusion.context.contains(a)) {
    throw ComposeError(print_formula(a) + " does not occur in the context " + print_bag(p1.conclusion.context));
  }
  return Composer(p1, p2).context(p1, a, label, p2);
}

}  // namespace lep
