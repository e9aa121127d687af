#include "lep/multiset.hpp"

namespace lep {

std::string print_bag(const FormulaBag& bag, const char* empty_mark) {
  if (bag.empty()) return empty_mark;
  std::string out;
  for (const auto& f : bag) {
    if (!out.empty()) out += ", ";
    out += print_formula(f);
  }
  return out;
}

}  // namespace lep
