#pragma once

#include <algorithm>
#include <iterator>
#include <initializer_list>
#include <string>
#include <vector>

#include "lep/formula.hpp"

namespace lep {

// Finite multiset of formulas kept in sorted order. Multiplicity matters:
// contraction and weakening in the classical context are explicit rules.
class FormulaBag {
 public:
  FormulaBag() = default;
  FormulaBag(std::initializer_list<Formula> items) {
    for (const auto& f : items) add(f);
  }

  void add(const Formula& f) { items_.insert(std::upper_bound(items_.begin(), items_.end(), f), f); }
  void add_all(const FormulaBag& other) {
    for (const auto& f : other) add(f);
  }
  void add_n(const Formula& f, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) add(f);
  }

  // Removes one copy; false if absent.
  bool remove_one(const Formula& f) {
    auto it = std::lower_bound(items_.begin(), items_.end(), f);
    if (it == items_.end() || !(*it == f)) return false;
    items_.erase(it);
    return true;
  }
  // Removes every copy; returns how many were removed.
  std::size_t remove_all(const Formula& f) {
    auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), f);
    const auto n = static_cast<std::size_t>(hi - lo);
    items_.erase(lo, hi);
    return n;
  }

  std::size_t count(const Formula& f) const {
    auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), f);
    return static_cast<std::size_t>(hi - lo);
  }
  bool contains(const Formula& f) const { return std::binary_search(items_.begin(), items_.end(), f); }
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }

  // Multiset inclusion.
  bool subset_of(const FormulaBag& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
  }
  // Each distinct element once.
  FormulaBag support() const {
    FormulaBag out;
    out.items_ = items_;
    out.items_.erase(std::unique(out.items_.begin(), out.items_.end()), out.items_.end());
    return out;
  }
  // Multiset difference: copies of this not matched in `other`.
  FormulaBag minus(const FormulaBag& other) const {
    FormulaBag out;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out.items_));
    return out;
  }

  std::vector<Formula>::const_iterator begin() const { return items_.begin(); }
  std::vector<Formula>::const_iterator end() const { return items_.end(); }
  const std::vector<Formula>& items() const { return items_; }

  friend FormulaBag operator+(FormulaBag a, const FormulaBag& b) {
    a.add_all(b);
    return a;
  }
  friend bool operator==(const FormulaBag&, const FormulaBag&) = default;

 private:
  std::vector<Formula> items_;
};

// "A, B, C" or "·" when empty.
std::string print_bag(const FormulaBag& bag, const char* empty_mark = "·");

}  // namespace lep
