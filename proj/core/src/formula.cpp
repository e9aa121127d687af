#include "lep/formula.hpp"

#include <functional>
#include <sstream>

#include "lep/errors.hpp"

namespace lep {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Connective c, std::string name, const Formula* a, const Formula* b) {
  auto n = std::make_shared<Node>();
  n->kind = c;
  n->name = std::move(name);
  std::size_t h = mix(std::hash<int>{}(static_cast<int>(c)), std::hash<std::string>{}(n->name));
  if (a != nullptr) {
    n->lhs = a->node_;
    h = mix(h, a->hash());
  }
  if (b != nullptr) {
    n->rhs = b->node_;
    h = mix(h, b->hash());
  }
  n->hash = h;
  return Formula(std::move(n));
}

Formula Formula::atom(std::string name) {
  return make(Connective::Atom, std::move(name), nullptr, nullptr);
}
Formula Formula::bot() {
  static const Formula b = make(Connective::Bot, {}, nullptr, nullptr);
  return b;
}
Formula Formula::neg(Formula a) { return make(Connective::Neg, {}, &a, nullptr); }
Formula Formula::conj(Formula a, Formula b) { return make(Connective::And, {}, &a, &b); }
Formula Formula::imp_i(Formula a, Formula b) { return make(Connective::ImpI, {}, &a, &b); }
Formula Formula::imp_c(Formula a, Formula b) { return make(Connective::ImpC, {}, &a, &b); }
Formula Formula::or_i(Formula a, Formula b) { return make(Connective::OrI, {}, &a, &b); }
Formula Formula::or_c(Formula a, Formula b) { return make(Connective::OrC, {}, &a, &b); }

Formula Formula::binary(Connective c, Formula a, Formula b) {
  if (c == Connective::Atom || c == Connective::Bot || c == Connective::Neg) {
    throw Error("Formula::binary: not a binary connective");
  }
  return make(c, {}, &a, &b);
}

bool Formula::is_binary() const {
  switch (kind()) {
    case Connective::And:
    case Connective::ImpI:
    case Connective::ImpC:
    case Connective::OrI:
    case Connective::OrC:
      return true;
    default:
      return false;
  }
}

bool Formula::is_classical_atom() const {
  return is(Connective::Atom) && name().size() > 2 && name().compare(0, 2, "c:") == 0;
}

std::string Formula::base_name() const {
  return is_classical_atom() ? name().substr(2) : name();
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Connective::Atom:
      return a.name() <=> b.name();
    case Connective::Bot:
      return std::strong_ordering::equal;
    case Connective::Neg:
      return a.lhs() <=> b.lhs();
    default:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  for (char c : s.substr(1)) {
    if (!alpha(c) && !digit(c) && c != '_') return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Connective::ImpI:
    case Connective::ImpC:
      return 1;
    case Connective::OrI:
    case Connective::OrC:
      return 2;
    case Connective::And:
      return 3;
    case Connective::Neg:
      return 4;
    default:
      return 5;
  }
}

const char* symbol(Connective c) {
  switch (c) {
    case Connective::And: return " & ";
    case Connective::ImpI: return " ->i ";
    case Connective::ImpC: return " ->c ";
    case Connective::OrI: return " \\/i ";
    case Connective::OrC: return " \\/c ";
    default: return "";
  }
}

void render(std::string& out, const Formula& f, int min_prec) {
  const int p = precedence(f);
  const bool parens = p < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Connective::Atom:
      out += f.name();
      break;
    case Connective::Bot:
      out += "bot";
      break;
    case Connective::Neg:
      out += '~';
      render(out, f.lhs(), 4);
      break;
    case Connective::ImpI:
    case Connective::ImpC:
      // right associative
      render(out, f.lhs(), p + 1);
      out += symbol(f.kind());
      render(out, f.rhs(), p);
      break;
    default:
      // left associative
      render(out, f.lhs(), p);
      out += symbol(f.kind());
      render(out, f.rhs(), p + 1);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  render(out, f, 0);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << print_formula(f); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { End, Ident, Bot, Not, And, OrI, OrC, ImpI, ImpC, LParen, RParen, Error };

struct Token {
  Tok kind = Tok::End;
  std::size_t offset = 0;
  std::string text;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "atom";
    case Tok::Bot: return "bot";
    case Tok::Not: return "~";
    case Tok::And: return "&";
    case Tok::OrI: return "\\/i";
    case Tok::OrC: return "\\/c";
    case Tok::ImpI: return "->i";
    case Tok::ImpC: return "->c";
    case Tok::LParen: return "(";
    case Tok::RParen: return ")";
    default: return "?";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && is_space(src_[pos_])) ++pos_;
    Token t;
    t.offset = pos_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (is_alpha(c)) {
      std::size_t end = pos_;
      while (end < src_.size() && (is_alpha(src_[end]) || is_digit(src_[end]) || src_[end] == '_')) ++end;
      std::string word(src_.substr(pos_, end - pos_));
      // classical atom marker `c:p`
      if (word == "c" && end + 1 < src_.size() && src_[end] == ':' && is_alpha(src_[end + 1])) {
        std::size_t e2 = end + 1;
        while (e2 < src_.size() && (is_alpha(src_[e2]) || is_digit(src_[e2]) || src_[e2] == '_')) ++e2;
        word = std::string(src_.substr(pos_, e2 - pos_));
        end = e2;
      }
      pos_ = end;
      t.kind = word == "bot" ? Tok::Bot : Tok::Ident;
      t.text = std::move(word);
      return t;
    }
    switch (c) {
      case '~': ++pos_; t.kind = Tok::Not; return t;
      case '&': ++pos_; t.kind = Tok::And; return t;
      case '(': ++pos_; t.kind = Tok::LParen; return t;
      case ')': ++pos_; t.kind = Tok::RParen; return t;
      default: break;
    }
    if (starts("\\/i")) return take(t, 3, Tok::OrI);
    if (starts("\\/c")) return take(t, 3, Tok::OrC);
    if (starts("->i")) return take(t, 3, Tok::ImpI);
    if (starts("->c")) return take(t, 3, Tok::ImpC);
    if (starts("¬")) return take(t, 2, Tok::Not);
    if (starts("∧")) return take(t, 3, Tok::And);
    if (starts("⊥")) return take(t, 3, Tok::Bot);
    if (starts("∨")) return flavoured(t, 3, Tok::OrI, Tok::OrC);
    if (starts("→")) return flavoured(t, 3, Tok::ImpI, Tok::ImpC);
    t.kind = Tok::Error;
    t.text = std::string(1, c);
    return t;
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  static bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  bool starts(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  Token take(Token t, std::size_t n, Tok k) {
    pos_ += n;
    t.kind = k;
    return t;
  }

  // `∨` / `→` followed by a flavour marker: i, c, _i, _c, ᵢ (U+1D62), ᶜ (U+1D9C).
  Token flavoured(Token t, std::size_t n, Tok intuitionistic, Tok classical) {
    pos_ += n;
    if (starts("_")) ++pos_;
    if (starts("i")) return take(t, 1, intuitionistic);
    if (starts("c")) return take(t, 1, classical);
    if (starts("ᵢ")) return take(t, 3, intuitionistic);
    if (starts("ᶜ")) return take(t, 3, classical);
    t.kind = Tok::Error;
    t.text = "missing i/c flavour";
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view src) : lex_(src) { advance(); }

  Formula parse() {
    Formula f = implication();
    expect_end();
    return f;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  [[noreturn]] void fail(std::set<std::string> expected) {
    std::string found = cur_.kind == Tok::Error ? "'" + cur_.text + "'" : describe(cur_.kind);
    if (cur_.kind == Tok::Ident) found = "atom '" + cur_.text + "'";
    throw ParseError(cur_.offset, std::move(expected), "unexpected " + found);
  }

  void expect_end() {
    if (cur_.kind != Tok::End) {
      fail({"&", "\\/i", "\\/c", "->i", "->c", "end of input"});
    }
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (cur_.kind == Tok::ImpI || cur_.kind == Tok::ImpC) {
      const Tok op = cur_.kind;
      advance();
      Formula rhs = implication();
      return op == Tok::ImpI ? Formula::imp_i(lhs, rhs) : Formula::imp_c(lhs, rhs);
    }
    return lhs;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (cur_.kind == Tok::OrI || cur_.kind == Tok::OrC) {
      const Tok op = cur_.kind;
      advance();
      Formula rhs = conjunction();
      acc = op == Tok::OrI ? Formula::or_i(acc, rhs) : Formula::or_c(acc, rhs);
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (cur_.kind == Tok::And) {
      advance();
      acc = Formula::conj(acc, unary());
    }
    return acc;
  }

  Formula unary() {
    switch (cur_.kind) {
      case Tok::Not:
        advance();
        return Formula::neg(unary());
      case Tok::Bot:
        advance();
        return Formula::bot();
      case Tok::Ident: {
        Formula a = Formula::atom(cur_.text);
        advance();
        return a;
      }
      case Tok::LParen: {
        advance();
        Formula inner = implication();
        if (cur_.kind != Tok::RParen) fail({")", "&", "\\/i", "\\/c", "->i", "->c"});
        advance();
        return inner;
      }
      default:
        fail({"atom", "bot", "~", "("});
    }
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

unsigned weight(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::Bot:
      return 0;
    case Connective::Neg:
      return weight(f.lhs()) + 1;
    default:
      return weight(f.lhs()) + weight(f.rhs()) + 1;
  }
}

}  // namespace lep
