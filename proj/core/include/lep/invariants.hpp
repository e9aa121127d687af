#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "lep/generate.hpp"
#include "lep/normalize.hpp"

namespace lep::invariants {

// Each check returns a description of the first violation, or nothing.
using Violation = std::optional<std::string>;

// le_to_ne checks in NE_p with conclusion Σ (⊥ for an empty stoup) and
// assumptions within Γ ∪ ¬Δ; ne_to_le of that gives back Δ;Σ over Γ' ⊆ Γ.
Violation round_trip(const le::Deriv& d);

// Composition at a junction has degree max{d[p1], d[p2], w(A)}.
Violation junction_law(const Generator::Junction& j);

// reduce_at keeps the conclusion, does not open new hypotheses and does not
// raise the degree.
Violation reduction_safe(const le::Deriv& d, const MaximalSegment& target);

// normalize reaches degree 0 with the same conclusion and Γ' ⊆ Γ.
Violation normalizes(const le::Deriv& d, std::size_t step_ceiling = default_step_ceiling());

// The judgment's implication is provable by the oracle.
Violation oracle_agrees(const le::Deriv& d);

Violation formula_round_trip(const Formula& f);
// Both the LE_p script and the NE_p script of its translation re-read to the
// same tree and judgment.
Violation script_round_trip(const le::Deriv& d);

// Hypothesis formulas as a set; Γ is read set-wise.
FormulaBag hypothesis_set(const FormulaBag& bag);

}  // namespace lep::invariants
