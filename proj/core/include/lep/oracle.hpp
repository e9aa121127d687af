#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lep/errors.hpp"
#include "lep/multiset.hpp"

namespace lep {

// Classical connectives unfolded into intuitionistic ones:
// A ->c B ↦ ~(A & ~B), A \/c B ↦ ~(~A & ~B), c:p ↦ ~~p.
Formula neg_translate(const Formula& f);

// Intuitionistic provability of a formula without classical connectives,
// by a contraction-free sequent search.
bool provable_intuitionistic(const Formula& f);

// A finite rooted Kripke model. World 0 is the root; `order_pairs` lists
// every (v, w) with v ≤ w, reflexive pairs included.
struct KripkeModel {
  std::size_t worlds = 0;
  std::vector<std::pair<std::size_t, std::size_t>> order_pairs;
  std::map<std::string, std::vector<std::size_t>> forcing;
};

// Checks that the order is a partial order with least element 0, that the
// valuation is monotone, and that world 0 does not force neg_translate(f).
bool verify_countermodel(const KripkeModel& m, const Formula& f);

struct DecideOptions {
  std::size_t max_worlds = 8;
  bool countermodel = true;
};

struct Verdict {
  bool provable = false;
  std::optional<KripkeModel> countermodel;
};

// Decides neg_translate(f). When unprovable and a countermodel is requested,
// searches rooted trees up to `max_worlds` worlds; throws SearchBound if none
// is found within the bound.
Verdict decide(const Formula& f, const DecideOptions& options = {});

// ⋀Γ ∧ ⋀¬Δ ->i Σ, with ⊥ for an empty stoup.
Formula judgment_formula(const FormulaBag& gamma, const FormulaBag& delta, const std::optional<Formula>& stoup);

}  // namespace lep
