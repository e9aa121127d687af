#pragma once

#include "lep/le_kernel.hpp"
#include "lep/ne_kernel.hpp"

namespace lep {

// Γ ⊢ Δ;Σ in LE_p becomes Γ,¬Δ ⊢ Σ in NE_p (⊥ for an empty stoup).
// Dereliction becomes ¬-elimination against the assumption ¬A; weakening
// and contraction in the context leave no trace.
ne::Deriv le_to_ne(const le::Deriv& d);

// Stoup shape of the LE_p root when the NE_p conclusion is ⊥.
enum class RootStoup { Auto, Formula, Empty };

// Γ,¬Δ ⊢ C in NE_p becomes Γ ⊢ Δ;C in LE_p, where `split` lists the
// assumptions ¬Δ that move into the classical context. Throws SplitError for
// non-negations in `split`, for the classical-atom rules, and for a stoup ⊥
// that would have to become an empty stoup.
le::Deriv ne_to_le(const ne::Deriv& d, const FormulaBag& split, RootStoup root = RootStoup::Auto);

// ¬X for every X.
FormulaBag negate_all(const FormulaBag& bag);

}  // namespace lep
