#pragma once

#include <string>
#include <vector>

namespace lep {

enum class System { LE, NE };

struct GoldenProof {
  std::string name;
  System system;
  std::string script;
  // Printed end judgment and, for LE_p proofs, the degree.
  std::string judgment;
  unsigned degree;
};

// Peirce's law, excluded middle and Dummett's linearity axiom in LE_p, a
// one-step ∧ detour, and NE_p versions of the first two.
const std::vector<GoldenProof>& golden_proofs();

}  // namespace lep
