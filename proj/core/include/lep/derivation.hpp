#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lep/errors.hpp"
#include "lep/formula.hpp"

namespace lep {

// Discharge annotation: the node binds every hypothesis leaf labelled
// `label` in one designated premise. Leaves bound by one binder carry `formula`.
struct Binder {
  std::string label;
  Formula formula;

  friend bool operator==(const Binder&, const Binder&) = default;
};

// A derivation tree for one proof system. `Traits` supplies the rule enum,
// the conclusion type, and which premise each binder discharges in.
template <class Traits>
struct Derivation {
  using Rule = typename Traits::Rule;
  using Conclusion = typename Traits::Conclusion;

  Rule rule;
  Conclusion conclusion;
  std::vector<Derivation> premises;
  std::vector<Binder> binders;
  std::string label;  // hypothesis leaves only

  bool is_leaf() const { return rule == Traits::hyp; }
  Formula leaf_formula() const { return Traits::leaf_formula(conclusion); }

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

// Labels are `[A-Za-z0-9_]+`.
inline bool is_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

// Hands out labels that do not collide with any label already in use.
class LabelSupply {
 public:
  LabelSupply() = default;
  explicit LabelSupply(std::set<std::string> used) : used_(std::move(used)) {}

  void reserve(const std::string& label) { used_.insert(label); }
  template <class Traits>
  void reserve_all(const Derivation<Traits>& d);

  std::string fresh(const std::string& stem = "u");

 private:
  std::set<std::string> used_;
  std::size_t next_ = 1;
};

inline std::string LabelSupply::fresh(const std::string& stem) {
  for (;;) {
    std::string candidate = stem + std::to_string(next_++);
    if (used_.insert(candidate).second) return candidate;
  }
}

template <class Traits>
std::size_t node_count(const Derivation<Traits>& d) {
  std::size_t n = 1;
  for (const auto& p : d.premises) n += node_count(p);
  return n;
}

template <class Traits>
std::size_t height(const Derivation<Traits>& d) {
  std::size_t h = 0;
  for (const auto& p : d.premises) h = std::max(h, height(p));
  return h + 1;
}

template <class Traits>
void collect_labels(const Derivation<Traits>& d, std::set<std::string>& out) {
  if (d.is_leaf()) out.insert(d.label);
  for (const auto& b : d.binders) out.insert(b.label);
  for (const auto& p : d.premises) collect_labels(p, out);
}

template <class Traits>
void LabelSupply::reserve_all(const Derivation<Traits>& d) {
  collect_labels(d, used_);
}

template <class Traits>
const Derivation<Traits>& node_at(const Derivation<Traits>& d, const NodePath& path) {
  const Derivation<Traits>* cur = &d;
  for (auto i : path) {
    if (i >= cur->premises.size()) throw Error("node path " + format_path(path) + " out of range");
    cur = &cur->premises[i];
  }
  return *cur;
}

template <class Traits>
Derivation<Traits> replace_at(Derivation<Traits> d, const NodePath& path, Derivation<Traits> replacement,
                              std::size_t depth = 0) {
  if (depth == path.size()) return replacement;
  const auto i = path[depth];
  if (i >= d.premises.size()) throw Error("node path " + format_path(path) + " out of range");
  d.premises[i] = replace_at(std::move(d.premises[i]), path, std::move(replacement), depth + 1);
  return d;
}

// Visits nodes in pre-order together with their paths.
template <class Traits, class Fn>
void visit_preorder(const Derivation<Traits>& d, Fn&& fn, NodePath& path) {
  fn(d, path);
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(i);
    visit_preorder(d.premises[i], fn, path);
    path.pop_back();
  }
}

template <class Traits, class Fn>
void visit_preorder(const Derivation<Traits>& d, Fn&& fn) {
  NodePath path;
  visit_preorder(d, fn, path);
}

// Labels bound at `d` whose scope covers premise `premise`.
template <class Traits>
std::vector<const Binder*> binders_over(const Derivation<Traits>& d, std::size_t premise) {
  std::vector<const Binder*> out;
  for (std::size_t b = 0; b < d.binders.size(); ++b) {
    if (Traits::binder_target(d.rule, b) == premise) out.push_back(&d.binders[b]);
  }
  return out;
}

// Open hypothesis leaves (label, formula), in pre-order.
template <class Traits>
void collect_open(const Derivation<Traits>& d, std::vector<std::pair<std::string, Formula>>& out,
                  std::vector<std::string>& scope) {
  if (d.is_leaf()) {
    if (std::find(scope.begin(), scope.end(), d.label) == scope.end()) {
      out.emplace_back(d.label, d.leaf_formula());
    }
    return;
  }
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    const auto bound = binders_over(d, i);
    for (const auto* b : bound) scope.push_back(b->label);
    collect_open(d.premises[i], out, scope);
    scope.resize(scope.size() - bound.size());
  }
}

template <class Traits>
std::vector<std::pair<std::string, Formula>> open_leaves(const Derivation<Traits>& d) {
  std::vector<std::pair<std::string, Formula>> out;
  std::vector<std::string> scope;
  collect_open(d, out, scope);
  return out;
}

template <class Traits>
bool has_open_label(const Derivation<Traits>& d, const std::string& label) {
  for (const auto& [l, f] : open_leaves(d)) {
    if (l == label) return true;
  }
  return false;
}

namespace detail {

template <class Traits>
void rename_free(Derivation<Traits>& d, const std::string& from, const std::string& to) {
  if (d.is_leaf()) {
    if (d.label == from) d.label = to;
    return;
  }
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    bool shadowed = false;
    for (const auto* b : binders_over(d, i)) shadowed = shadowed || b->label == from;
    if (!shadowed) rename_free(d.premises[i], from, to);
  }
}

}  // namespace detail

// Renames every label bound inside `d` (including at its root) to a fresh one.
// Free leaves are untouched, so copies of a subtree can coexist in one tree.
template <class Traits>
void freshen_bound(Derivation<Traits>& d, LabelSupply& supply) {
  for (std::size_t b = 0; b < d.binders.size(); ++b) {
    const std::string old = d.binders[b].label;
    const std::string neu = supply.fresh();
    d.binders[b].label = neu;
    detail::rename_free(d.premises[Traits::binder_target(d.rule, b)], old, neu);
  }
  for (auto& p : d.premises) freshen_bound(p, supply);
}

// Label discipline shared by both kernels: a label is bound by at most one
// node, a bound label never occurs outside its binder's scope, and all leaves
// sharing a label carry the same formula as each other and as their binder.
template <class Traits>
void check_label_discipline(const Derivation<Traits>& root) {
  std::map<std::string, NodePath> binder_sites;
  visit_preorder(root, [&](const Derivation<Traits>& n, const NodePath& path) {
    for (const auto& b : n.binders) {
      if (!is_label(b.label)) throw CheckError(path, "binder label", "'" + b.label + "'");
      auto [it, inserted] = binder_sites.emplace(b.label, path);
      if (!inserted) {
        throw CheckError(path, "label bound by at most one rule",
                         "'" + b.label + "' already bound at " + format_path(it->second));
      }
    }
  });

  std::map<std::string, Formula> free_formula;
  struct Frame {
    const Binder* binder;
  };
  std::vector<Frame> scope;
  NodePath path;
  std::function<void(const Derivation<Traits>&)> walk = [&](const Derivation<Traits>& n) {
    if (n.is_leaf()) {
      if (!is_label(n.label)) throw CheckError(path, "hypothesis label", "'" + n.label + "'");
      const Formula f = n.leaf_formula();
      for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
        if (it->binder->label == n.label) {
          if (!(it->binder->formula == f)) {
            throw CheckError(path, "leaf '" + n.label + "' : " + print_formula(it->binder->formula),
                             print_formula(f));
          }
          return;
        }
      }
      if (binder_sites.count(n.label) != 0) {
        throw CheckError(path, "leaf inside the scope of its binder",
                         "'" + n.label + "' is bound at " + format_path(binder_sites[n.label]));
      }
      auto [it, inserted] = free_formula.emplace(n.label, f);
      if (!inserted && !(it->second == f)) {
        throw CheckError(path, "open leaf '" + n.label + "' : " + print_formula(it->second), print_formula(f));
      }
      return;
    }
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      const auto bound = binders_over(n, i);
      for (const auto* b : bound) scope.push_back({b});
      path.push_back(i);
      walk(n.premises[i]);
      path.pop_back();
      scope.resize(scope.size() - bound.size());
    }
  };
  walk(root);
}

}  // namespace lep
