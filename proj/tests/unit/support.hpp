#pragma once

#include <doctest.h>

#include <string>

#include "lep/corpus.hpp"
#include "lep/formula.hpp"
#include "lep/le_kernel.hpp"
#include "lep/script.hpp"

namespace lep::test {

inline Formula F(const std::string& s) { return parse_formula(s); }

inline const GoldenProof& golden(const std::string& name, System s = System::LE) {
  for (const auto& p : golden_proofs()) {
    if (p.name == name && p.system == s) return p;
  }
  throw Error("no golden proof " + name);
}

inline le::Deriv golden_le(const std::string& name) { return read_le_script(golden(name).script); }

}  // namespace lep::test
