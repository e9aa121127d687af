#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace lep {

// Propositional ecumenical formulas. Classical and intuitionistic
// implication/disjunction are separate connectives; ⊥, ¬ and ∧ are shared.
enum class Connective { Atom, Bot, Neg, And, ImpI, ImpC, OrI, OrC };

class Formula {
 public:
  static Formula atom(std::string name);
  static Formula bot();
  static Formula neg(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula imp_i(Formula a, Formula b);
  static Formula imp_c(Formula a, Formula b);
  static Formula or_i(Formula a, Formula b);
  static Formula or_c(Formula a, Formula b);
  static Formula binary(Connective c, Formula a, Formula b);

  Connective kind() const { return node_->kind; }
  bool is(Connective c) const { return node_->kind == c; }
  bool is_atomic() const { return is(Connective::Atom) || is(Connective::Bot); }
  bool is_binary() const;

  // Atom name; includes the `c:` marker for classical atoms.
  const std::string& name() const { return node_->name; }
  // `c:p` atoms are only meaningful to the NE_p checker and the oracle.
  bool is_classical_atom() const;
  // Name of the underlying neutral atom (`p` for `c:p`).
  std::string base_name() const;

  // Operand of ¬, or left operand of a binary connective.
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    Connective kind;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    std::size_t hash = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Connective c, std::string name, const Formula* a, const Formula* b);

  std::shared_ptr<const Node> node_;
};

bool is_identifier(std::string_view s);

// Minimal-parenthesis ASCII rendering; the inverse of parse_formula.
std::string print_formula(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

// Accepts the ASCII grammar plus Unicode aliases. Throws ParseError.
Formula parse_formula(std::string_view text);

// d[⊥] = d[p] = 0, d[¬A] = d[A] + 1, d[A ∘ B] = d[A] + d[B] + 1.
unsigned weight(const Formula& f);

}  // namespace lep

template <>
struct std::hash<lep::Formula> {
  std::size_t operator()(const lep::Formula& f) const noexcept { return f.hash(); }
};
