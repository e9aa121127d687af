#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lep/le_kernel.hpp"
#include "lep/ne_kernel.hpp"

namespace lep {

// Minimal s-expression tree: symbols, double-quoted strings (no escapes) and
// lists. `;` starts a comment that runs to the end of the line.
struct SExpr {
  enum class Kind { Symbol, String, List };
  Kind kind = Kind::List;
  std::string text;
  std::vector<SExpr> items;
  std::size_t offset = 0;

  bool is_symbol() const { return kind == Kind::Symbol; }
  bool is_string() const { return kind == Kind::String; }
  bool is_list() const { return kind == Kind::List; }
};

std::vector<SExpr> parse_sexprs(std::string_view text);

// Proof scripts hold exactly one derivation. Structural problems raise
// ParseError; a node that does not fit its rule raises CheckError.
le::Deriv read_le_script(std::string_view text);
ne::Deriv read_ne_script(std::string_view text);

std::string write_le_script(const le::Deriv& d);
std::string write_ne_script(const ne::Deriv& d);

}  // namespace lep
