#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lep/le_kernel.hpp"

namespace lep {

// Occurrences of one formula, top to bottom, threaded through the minor
// premises of ∨i-elim and through C_c.
struct Segment {
  std::vector<NodePath> path;
  Formula formula;
};

// A segment starting at an introduction or W_i and ending as the major
// premise of an elimination.
struct MaximalSegment {
  Segment segment;
  NodePath intro_node;
  NodePath elim_node;
};

// Segments that start at a rule application and end in a premise, in
// pre-order of their first node.
std::vector<Segment> segments(const le::Deriv& d);
std::vector<MaximalSegment> maximal_segments(const le::Deriv& d);

// Largest weight of a maximal segment; 0 for normal derivations.
unsigned degree(const le::Deriv& d);

enum class Reduction { And, ImpI, Neg, OrI, ImpC, OrC, PermuteOrI, PermuteCc, Wi };

const char* reduction_name(Reduction r);
std::vector<Reduction> all_reductions();

// Which catalogue entry applies to `target`. Throws NoRedex otherwise.
Reduction classify(const le::Deriv& d, const MaximalSegment& target);

// Rewrites the elimination at the end of `target` and returns the whole
// derivation. The end judgment is unchanged.
le::Deriv reduce_at(const le::Deriv& d, const MaximalSegment& target);

struct ReductionStep {
  std::size_t step;
  Reduction rule;
  NodePath node_path;
  unsigned degree_before;
  unsigned degree_after;
};

struct Normalized {
  le::Deriv derivation;
  std::vector<ReductionStep> trace;
};

// 10^6 unless LEP_STEP_CEILING holds a positive integer.
std::size_t default_step_ceiling();

// Reduces the deepest-leftmost critical redex until the degree is 0. Throws
// LoopGuard after `step_ceiling` steps.
Normalized normalize(const le::Deriv& d, std::size_t step_ceiling = default_step_ceiling());

}  // namespace lep
