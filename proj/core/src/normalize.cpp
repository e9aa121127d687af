#include "lep/normalize.hpp"

#include <cstdlib>
#include <string>

#include "lep/compose.hpp"

namespace lep {

namespace {

using le::Deriv;
using le::Rule;

struct Flat {
  const Deriv* node;
  NodePath path;
  std::ptrdiff_t parent;
  std::size_t index;  // position among the parent's premises
};

void flatten(const Deriv& d, std::vector<Flat>& out, NodePath& path, std::ptrdiff_t parent, std::size_t index) {
  const auto self = static_cast<std::ptrdiff_t>(out.size());
  out.push_back({&d, path, parent, index});
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(i);
    flatten(d.premises[i], out, path, self, i);
    path.pop_back();
  }
}

bool continues(const Flat& parent, std::size_t index) {
  const Rule r = parent.node->rule;
  return (r == Rule::OriE && index > 0) || r == Rule::Cc;
}

struct RawSegment {
  std::vector<std::size_t> nodes;
};

std::vector<RawSegment> raw_segments(const std::vector<Flat>& flat) {
  std::vector<RawSegment> out;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const Deriv& n = *flat[i].node;
    if (n.is_leaf() || !n.conclusion.stoup) continue;
    if (n.rule == Rule::OriE || n.rule == Rule::Cc) continue;
    RawSegment s{{i}};
    std::size_t cur = i;
    while (flat[cur].parent >= 0 && continues(flat[static_cast<std::size_t>(flat[cur].parent)], flat[cur].index)) {
      cur = static_cast<std::size_t>(flat[cur].parent);
      s.nodes.push_back(cur);
    }
    if (flat[cur].parent < 0) continue;
    out.push_back(std::move(s));
  }
  return out;
}

Segment to_segment(const std::vector<Flat>& flat, const RawSegment& raw) {
  Segment s{{}, *flat[raw.nodes.front()].node->conclusion.stoup};
  for (auto i : raw.nodes) s.path.push_back(flat[i].path);
  return s;
}

bool is_prefix(const NodePath& a, const NodePath& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// Position in post-order: descendants first, then left to right.
bool post_order_before(const NodePath& a, const NodePath& b) {
  if (is_prefix(b, a)) return a.size() > b.size();
  if (is_prefix(a, b)) return false;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Deriv fit(Deriv d, const Deriv& elim) { return le::fit_context(std::move(d), elim.conclusion.context); }

Deriv reduce_and(const Deriv& e) {
  const Deriv& intro = e.premises[0];
  return fit(intro.premises[e.rule == Rule::AndE1 ? 0 : 1], e);
}

Deriv reduce_impi(const Deriv& e) {
  const Deriv& intro = e.premises[0];
  return fit(compose_stoup(e.premises[1], intro.binders[0].label, intro.premises[0]), e);
}

Deriv reduce_neg(const Deriv& e) {
  const Deriv& intro = e.premises[1];
  return fit(compose_stoup(e.premises[0], intro.binders[0].label, intro.premises[0]), e);
}

Deriv reduce_ori(const Deriv& e) {
  const Deriv& intro = e.premises[0];
  const std::size_t j = intro.rule == Rule::OriI1 ? 0 : 1;
  return fit(compose_stoup(intro.premises[0], e.binders[j].label, e.premises[j + 1]), e);
}

Deriv reduce_impc(const Deriv& e) {
  const Deriv& intro = e.premises[0];
  const Formula b = le::extras(intro)[0];
  Deriv q = compose_stoup(e.premises[1], intro.binders[0].label, intro.premises[0]);
  return fit(compose_context(q, b, e.binders[0].label, e.premises[2]), e);
}

Deriv reduce_orc(const Deriv& e) {
  const Deriv& intro = e.premises[0];
  const auto x = le::extras(intro);
  Deriv q = compose_context(intro.premises[0], x[0], e.binders[0].label, e.premises[1]);
  if (q.conclusion.context.contains(x[1])) q = compose_context(q, x[1], e.binders[1].label, e.premises[2]);
  return fit(std::move(q), e);
}

Deriv reduce_wi(const Deriv& e) {
  const std::size_t mj = le::major_index(e.rule);
  const Deriv& weak = e.premises[mj];
  const Deriv& p0 = weak.premises[0];
  if (e.rule == Rule::OriE) {
    const Formula a = weak.conclusion.stoup->lhs();
    return fit(compose_stoup(le::wi(a, p0), e.binders[0].label, e.premises[1]), e);
  }
  Deriv out = e.conclusion.stoup ? le::wi(*e.conclusion.stoup, p0) : p0;
  return fit(std::move(out), e);
}

FormulaBag minor_context(const Deriv& e) {
  FormulaBag out;
  const std::size_t mj = le::major_index(e.rule);
  for (std::size_t i = 0; i < e.premises.size(); ++i) {
    if (i != mj) out.add_all(e.premises[i].conclusion.context);
  }
  return out;
}

Deriv with_major(const Deriv& e, Deriv major) {
  std::vector<Deriv> premises = e.premises;
  premises[le::major_index(e.rule)] = std::move(major);
  return le::rebuild(e, std::move(premises));
}

Deriv permute_ori(const Deriv& e) {
  const Deriv& m = e.premises[le::major_index(e.rule)];
  Deriv left = with_major(e, m.premises[1]);
  Deriv right = with_major(e, m.premises[2]);
  LabelSupply supply;
  supply.reserve_all(e);
  freshen_bound(right, supply);
  Deriv out = le::ori_e(m.premises[0], m.binders[0], std::move(left), m.binders[1], std::move(right));
  return fit(le::contract(std::move(out), minor_context(e)), e);
}

Deriv permute_cc(const Deriv& e) {
  const Deriv& m = e.premises[le::major_index(e.rule)];
  const Formula x = le::extras(m)[0];
  return fit(le::cc(x, with_major(e, m.premises[0])), e);
}

}  // namespace

std::vector<Segment> segments(const le::Deriv& d) {
  std::vector<Flat> flat;
  NodePath path;
  flatten(d, flat, path, -1, 0);
  std::vector<Segment> out;
  for (const auto& raw : raw_segments(flat)) out.push_back(to_segment(flat, raw));
  return out;
}

std::vector<MaximalSegment> maximal_segments(const le::Deriv& d) {
  std::vector<Flat> flat;
  NodePath path;
  flatten(d, flat, path, -1, 0);
  std::vector<MaximalSegment> out;
  for (const auto& raw : raw_segments(flat)) {
    const Flat& first = flat[raw.nodes.front()];
    const Flat& last = flat[raw.nodes.back()];
    const Rule start = first.node->rule;
    if (!le::is_intro(start) && start != Rule::Wi) continue;
    const Flat& below = flat[static_cast<std::size_t>(last.parent)];
    if (!le::is_elim(below.node->rule) || le::major_index(below.node->rule) != last.index) continue;
    out.push_back({to_segment(flat, raw), first.path, below.path});
  }
  return out;
}

unsigned degree(const le::Deriv& d) {
  unsigned best = 0;
  for (const auto& m : maximal_segments(d)) best = std::max(best, weight(m.segment.formula));
  return best;
}

const char* reduction_name(Reduction r) {
  switch (r) {
    case Reduction::And: return "and";
    case Reduction::ImpI: return "impi";
    case Reduction::Neg: return "neg";
    case Reduction::OrI: return "ori";
    case Reduction::ImpC: return "impc";
    case Reduction::OrC: return "orc";
    case Reduction::PermuteOrI: return "perm_ori";
    case Reduction::PermuteCc: return "perm_cc";
    case Reduction::Wi: return "wi";
  }
  return "?";
}

std::vector<Reduction> all_reductions() {
  return {Reduction::And,  Reduction::ImpI, Reduction::Neg,        Reduction::OrI,      Reduction::ImpC,
          Reduction::OrC, Reduction::PermuteOrI, Reduction::PermuteCc, Reduction::Wi};
}

Reduction classify(const le::Deriv& d, const MaximalSegment& target) {
  const Deriv& e = node_at(d, target.elim_node);
  if (!le::is_elim(e.rule)) throw NoRedex("no elimination at " + format_path(target.elim_node));
  const Deriv& m = e.premises[le::major_index(e.rule)];
  if (target.segment.path.size() > 1) {
    if (m.rule == Rule::OriE) return Reduction::PermuteOrI;
    if (m.rule == Rule::Cc) return Reduction::PermuteCc;
    throw NoRedex("segment above " + format_path(target.elim_node) + " does not pass ∨i-elim or C_c");
  }
  switch (m.rule) {
    case Rule::Wi: return Reduction::Wi;
    case Rule::AndI: return Reduction::And;
    case Rule::ImpiI: return Reduction::ImpI;
    case Rule::NegI: return Reduction::Neg;
    case Rule::OriI1:
    case Rule::OriI2: return Reduction::OrI;
    case Rule::ImpcI: return Reduction::ImpC;
    case Rule::OrcI: return Reduction::OrC;
    default: break;
  }
  throw NoRedex("major premise at " + format_path(target.elim_node) + " is not an introduction or W_i");
}

le::Deriv reduce_at(const le::Deriv& d, const MaximalSegment& target) {
  const Reduction kind = classify(d, target);
  const Deriv& e = node_at(d, target.elim_node);
  Deriv contractum = [&] {
    switch (kind) {
      case Reduction::And: return reduce_and(e);
      case Reduction::ImpI: return reduce_impi(e);
      case Reduction::Neg: return reduce_neg(e);
      case Reduction::OrI: return reduce_ori(e);
      case Reduction::ImpC: return reduce_impc(e);
      case Reduction::OrC: return reduce_orc(e);
      case Reduction::PermuteOrI: return permute_ori(e);
      case Reduction::PermuteCc: return permute_cc(e);
      case Reduction::Wi: return reduce_wi(e);
    }
    throw NoRedex("unknown reduction");
  }();
  // Labels introduced by the contractum must stay unique in the whole tree.
  std::set<std::string> outside;
  Deriv hole = replace_at(d, target.elim_node, le::hyp("_", Formula::bot()));
  collect_labels(hole, outside);
  std::set<std::string> inside;
  collect_labels(e, inside);
  for (const auto& l : inside) outside.erase(l);
  LabelSupply supply(outside);
  supply.reserve_all(contractum);
  bool clash = false;
  visit_preorder(contractum, [&](const Deriv& n, const NodePath&) {
    for (const auto& b : n.binders) clash = clash || outside.count(b.label) != 0;
  });
  if (clash) freshen_bound(contractum, supply);
  return replace_at(d, target.elim_node, std::move(contractum));
}

std::size_t default_step_ceiling() {
  if (const char* env = std::getenv("LEP_STEP_CEILING")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1000000;
}

Normalized normalize(const le::Deriv& d, std::size_t step_ceiling) {
  Normalized out{d, {}};
  unsigned deg = degree(out.derivation);
  while (deg > 0) {
    if (out.trace.size() >= step_ceiling) {
      throw LoopGuard("normalization exceeded " + std::to_string(step_ceiling) + " steps");
    }
    const auto maximal = maximal_segments(out.derivation);
    const MaximalSegment* pick = nullptr;
    for (const auto& m : maximal) {
      if (weight(m.segment.formula) != deg) continue;
      if (pick == nullptr || post_order_before(m.elim_node, pick->elim_node)) pick = &m;
    }
    const Reduction kind = classify(out.derivation, *pick);
    out.derivation = reduce_at(out.derivation, *pick);
    const unsigned after = degree(out.derivation);
    out.trace.push_back({out.trace.size() + 1, kind, pick->elim_node, deg, after});
    deg = after;
  }
  return out;
}

}  // namespace lep
