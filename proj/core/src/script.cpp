#include "lep/script.hpp"

#include <map>

namespace lep {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class SExprParser {
 public:
  explicit SExprParser(std::string_view text) : text_(text) {}

  std::vector<SExpr> parse_all() {
    std::vector<SExpr> out;
    for (skip(); pos_ < text_.size(); skip()) out.push_back(parse_one());
    return out;
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      if (is_space(text_[pos_])) {
        ++pos_;
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  SExpr parse_one() {
    SExpr e;
    e.offset = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      e.kind = SExpr::Kind::List;
      for (skip(); pos_ < text_.size() && text_[pos_] != ')'; skip()) e.items.push_back(parse_one());
      if (pos_ >= text_.size()) throw ParseError(pos_, {"')'"}, "unterminated list");
      ++pos_;
    } else if (c == ')') {
      throw ParseError(pos_, {"'('", "symbol", "string"}, "unexpected ')'");
    } else if (c == '"') {
      const auto close = text_.find('"', pos_ + 1);
      if (close == std::string_view::npos) throw ParseError(text_.size(), {"'\"'"}, "unterminated string");
      e.kind = SExpr::Kind::String;
      e.text = std::string(text_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
    } else {
      const auto start = pos_;
      while (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '(' && text_[pos_] != ')' &&
             text_[pos_] != '"' && text_[pos_] != ';') {
        ++pos_;
      }
      e.kind = SExpr::Kind::Symbol;
      e.text = std::string(text_.substr(start, pos_ - start));
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Argument layout of each rule after its name: P premise, B binder
// `(label "F")`, F formula string.
const std::map<std::string, std::string>& le_patterns() {
  static const std::map<std::string, std::string> m{
      {"der", "P"},       {"wi", "FP"},        {"wc", "FP"},     {"cc", "FP"},        {"and_i", "PP"},
      {"and_e1", "P"},    {"and_e2", "P"},     {"impi_i", "BP"}, {"impi_e", "PP"},    {"ori_i1", "FP"},
      {"ori_i2", "FP"},   {"ori_e", "PBPBP"},  {"neg_i", "BP"},  {"neg_e", "PP"},     {"impc_i", "BFP"},
      {"impc_e", "PPBP"}, {"orc_i", "FFP"},    {"orc_e", "PBPBP"},
  };
  return m;
}

const std::map<std::string, std::string>& ne_patterns() {
  static const std::map<std::string, std::string> m{
      {"impi_i", "BP"},  {"impi_e", "PP"},  {"ori_i1", "FP"},   {"ori_i2", "FP"},  {"ori_e", "PBPBP"},
      {"impc_i", "BBP"}, {"impc_e", "PPP"}, {"orc_i", "BBP"},   {"orc_e", "PPP"},  {"and_i", "PP"},
      {"and_e1", "P"},   {"and_e2", "P"},   {"neg_i", "BP"},    {"neg_e", "PP"},   {"bot_e", "FP"},
      {"pc_i", "BP"},    {"pc_e", "PP"},
  };
  return m;
}

Formula formula_at(const SExpr& e) {
  try {
    return parse_formula(e.text);
  } catch (const ParseError& err) {
    throw ParseError(e.offset + 1 + err.offset(), err.expected(), "malformed formula \"" + e.text + "\"");
  }
}

bool is_binder_shape(const SExpr& e) {
  return e.is_list() && e.items.size() == 2 && e.items[0].is_symbol() && e.items[1].is_string();
}

template <class D>
struct Parts {
  std::vector<D> premises;
  std::vector<Binder> binders;
  std::vector<Formula> formulas;
};

// Shared reader; `Sys` supplies the rule table and node constructor.
template <class Sys>
typename Sys::Deriv read_node(const SExpr& e, NodePath& path) {
  using D = typename Sys::Deriv;
  if (!e.is_list() || e.items.empty() || !e.items[0].is_symbol()) {
    throw ParseError(e.offset, {"(rule ...)"}, "expected a proof node");
  }
  const std::string& head = e.items[0].text;
  if (head == "hyp") {
    if (e.items.size() != 3 || !e.items[1].is_symbol() || !e.items[2].is_string()) {
      throw ParseError(e.offset, {"(hyp <label> \"<formula>\")"}, "malformed hypothesis");
    }
    if (!is_label(e.items[1].text)) throw ParseError(e.items[1].offset, {"label"}, "bad label '" + e.items[1].text + "'");
    return Sys::hyp(e.items[1].text, formula_at(e.items[2]));
  }
  const auto& patterns = Sys::patterns();
  const auto it = patterns.find(head);
  if (it == patterns.end()) {
    std::set<std::string> names{"hyp"};
    for (const auto& [name, p] : patterns) names.insert(name);
    throw ParseError(e.items[0].offset, names, "unknown rule '" + head + "'");
  }
  const std::string& pattern = it->second;
  if (e.items.size() != pattern.size() + 1) {
    throw ParseError(e.offset, {head + " with " + std::to_string(pattern.size()) + " arguments"},
                     "wrong number of arguments to " + head);
  }
  Parts<D> parts;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const SExpr& arg = e.items[i + 1];
    switch (pattern[i]) {
      case 'P':
        if (!arg.is_list() || is_binder_shape(arg)) throw ParseError(arg.offset, {"proof node"}, "expected a premise");
        path.push_back(parts.premises.size());
        parts.premises.push_back(read_node<Sys>(arg, path));
        path.pop_back();
        break;
      case 'B':
        if (!is_binder_shape(arg)) throw ParseError(arg.offset, {"(<label> \"<formula>\")"}, "expected a binder");
        if (!is_label(arg.items[0].text)) {
          throw ParseError(arg.items[0].offset, {"label"}, "bad label '" + arg.items[0].text + "'");
        }
        parts.binders.push_back(Binder{arg.items[0].text, formula_at(arg.items[1])});
        break;
      case 'F':
        if (!arg.is_string()) throw ParseError(arg.offset, {"\"<formula>\""}, "expected a formula string");
        parts.formulas.push_back(formula_at(arg));
        break;
    }
  }
  try {
    return Sys::make(head, std::move(parts));
  } catch (const CheckError& err) {
    if (!err.path().empty()) throw;
    throw CheckError(path, err.schema(), err.found());
  }
}

struct LeSys {
  using Deriv = le::Deriv;
  static const std::map<std::string, std::string>& patterns() { return le_patterns(); }
  static Deriv hyp(const std::string& l, Formula f) { return le::hyp(l, std::move(f)); }
  static Deriv make(const std::string& head, Parts<Deriv> p) {
    return le::make_node(*le::rule_from_name(head), std::move(p.premises), std::move(p.binders), std::move(p.formulas));
  }
};

struct NeSys {
  using Deriv = ne::Deriv;
  static const std::map<std::string, std::string>& patterns() { return ne_patterns(); }
  static Deriv hyp(const std::string& l, Formula f) { return ne::hyp(l, std::move(f)); }
  static Deriv make(const std::string& head, Parts<Deriv> p) {
    std::optional<Formula> annotation;
    if (!p.formulas.empty()) annotation = p.formulas.front();
    return ne::make_node(*ne::rule_from_name(head), std::move(p.premises), std::move(p.binders), annotation);
  }
};

template <class Sys>
typename Sys::Deriv read_script(std::string_view text) {
  const auto top = parse_sexprs(text);
  if (top.size() != 1) {
    throw ParseError(top.empty() ? text.size() : top[1].offset, {"exactly one proof"},
                     "a script holds one derivation, found " + std::to_string(top.size()));
  }
  NodePath path;
  return read_node<Sys>(top.front(), path);
}

std::string quote(const Formula& f) { return "\"" + print_formula(f) + "\""; }
std::string binder_text(const Binder& b) { return "(" + b.label + " " + quote(b.formula) + ")"; }

template <class D, class Fn>
void write_node(std::string& out, const D& d, std::size_t indent, const std::string& name, const std::string& pattern,
                const std::vector<Formula>& formulas, Fn&& recurse) {
  if (d.is_leaf()) {
    out += "(hyp " + d.label + " " + quote(d.leaf_formula()) + ")";
    return;
  }
  out += "(" + name;
  std::size_t p = 0, b = 0, f = 0;
  bool broken = false;
  const std::string pad(indent + 2, ' ');
  for (char c : pattern) {
    if (c == 'P') {
      out += "\n" + pad;
      recurse(out, d.premises[p++], indent + 2);
      broken = true;
      continue;
    }
    const std::string item = c == 'B' ? binder_text(d.binders[b++]) : quote(formulas[f++]);
    out += broken ? "\n" + pad + item : " " + item;
  }
  out += ")";
}

void write_le(std::string& out, const le::Deriv& d, std::size_t indent) {
  const std::string name(le::rule_name(d.rule));
  const std::string pattern = d.is_leaf() ? "" : le_patterns().at(name);
  write_node(out, d, indent, name, pattern, d.is_leaf() ? std::vector<Formula>{} : le::extras(d), write_le);
}

void write_ne(std::string& out, const ne::Deriv& d, std::size_t indent) {
  const std::string name(ne::rule_name(d.rule));
  const std::string pattern = d.is_leaf() ? "" : ne_patterns().at(name);
  std::vector<Formula> formulas;
  if (pattern.find('F') != std::string::npos) formulas.push_back(d.conclusion);
  write_node(out, d, indent, name, pattern, formulas, write_ne);
}

}  // namespace

std::vector<SExpr> parse_sexprs(std::string_view text) { return SExprParser(text).parse_all(); }

le::Deriv read_le_script(std::string_view text) { return read_script<LeSys>(text); }
ne::Deriv read_ne_script(std::string_view text) { return read_script<NeSys>(text); }

std::string write_le_script(const le::Deriv& d) {
  std::string out;
  write_le(out, d, 0);
  return out + "\n";
}

std::string write_ne_script(const ne::Deriv& d) {
  std::string out;
  write_ne(out, d, 0);
  return out + "\n";
}

}  // namespace lep
