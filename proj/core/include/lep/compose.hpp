#pragma once

#include <string>

#include "lep/le_kernel.hpp"

namespace lep {

// Replaces the hypotheses ·;A labelled `label` in `p2` by `p1` (which ends in
// Δ1;A). The result ends in Δ1,Δ2;B; where several premises of one node carry
// Δ1, contractions directly below that node keep a single copy. When `label`
// does not occur in `p2`, Δ1 is weakened in instead. Throws ComposeError when
// p1 has an empty stoup or a leaf formula differs from A.
le::Deriv compose_stoup(const le::Deriv& p1, const std::string& label, const le::Deriv& p2);

// Removes every occurrence of `a` from the context of `p1` by composing with
// `p2` (which discharges ·;a at `label` and ends in Δ2;B). The result ends in
// Δ1*,Δ2,B;C where Δ1* is Δ1 without `a`, or Δ1*,Δ2;C when p2 has an empty
// stoup. Throws ComposeError when `a` is not in the context of p1.
le::Deriv compose_context(const le::Deriv& p1, const Formula& a, const std::string& label, const le::Deriv& p2);

}  // namespace lep
