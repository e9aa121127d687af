#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lep/le_kernel.hpp"
#include "lep/normalize.hpp"

namespace lep {

struct GenOptions {
  std::vector<std::string> atoms{"A", "B", "C"};
  unsigned formula_depth = 2;
  unsigned max_height = 8;
};

// Random formulas and random checked LE_p derivations. Every derivation it
// returns passes check_le; detours appear because eliminations often pick an
// introduction for their major premise.
class Generator {
 public:
  explicit Generator(std::uint64_t seed, GenOptions options = {});

  Formula formula(unsigned depth);
  Formula formula() { return formula(options_.formula_depth); }

  // A derivation of height at most options.max_height.
  le::Deriv derivation();
  // Derivations ending in Δ;goal, or in Δ;·, of height at most `height`.
  le::Deriv stoup(const Formula& goal, unsigned height);
  le::Deriv empty(unsigned height);

  // Root is an elimination whose major premise ends a maximal segment of the
  // given kind.
  le::Deriv redex(Reduction kind);

  struct Junction {
    le::Deriv p1;
    std::string label;
    le::Deriv p2;
  };
  // p1 ends in an introduction or W_i for A; p2 uses ·;A at `label` as the
  // major premise of an elimination at least once.
  Junction junction();

  std::mt19937_64& rng() { return rng_; }

 private:
  bool coin(double p);
  std::size_t pick(std::size_t n);
  Formula compound(unsigned depth);
  Formula with_connective(Connective c, unsigned depth);

  le::Deriv leaf(const Formula& goal);
  le::Deriv intro(const Formula& goal, unsigned height, const FormulaBag& extra = {});
  le::Deriv elim_into(const Formula& goal, unsigned height);
  le::Deriv elim_over(const Formula& c, le::Deriv major, unsigned height);
  le::Deriv structural(le::Deriv d, unsigned height);
  le::Deriv ensure(le::Deriv d, const FormulaBag& need);
  le::Deriv wrap(le::Deriv d, unsigned times);
  Binder bind(const Formula& f);

  std::mt19937_64 rng_;
  GenOptions options_;
  std::vector<Binder> scope_;
  std::vector<std::pair<Formula, std::string>> open_;
  std::size_t counter_ = 0;
};

}  // namespace lep
