#include "lep/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <unordered_map>

namespace lep {

Formula neg_translate(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
      if (f.is_classical_atom()) return Formula::neg(Formula::neg(Formula::atom(f.base_name())));
      return f;
    case Connective::Bot:
      return f;
    case Connective::Neg:
      return Formula::neg(neg_translate(f.lhs()));
    case Connective::ImpC:
      return Formula::neg(Formula::conj(neg_translate(f.lhs()), Formula::neg(neg_translate(f.rhs()))));
    case Connective::OrC:
      return Formula::neg(Formula::conj(Formula::neg(neg_translate(f.lhs())), Formula::neg(neg_translate(f.rhs()))));
    case Connective::And:
    case Connective::ImpI:
    case Connective::OrI:
      return Formula::binary(f.kind(), neg_translate(f.lhs()), neg_translate(f.rhs()));
  }
  return f;
}

namespace {

// Hash-consed intuitionistic formulas; ¬A is stored as A -> ⊥.
enum class K : std::uint8_t { Atom, Bot, And, Or, Imp };

struct Cell {
  K kind;
  int a = -1;
  int b = -1;
  std::string name;
};

class Table {
 public:
  int bot() { return intern({K::Bot, -1, -1, {}}); }

  int from(const Formula& f) {
    switch (f.kind()) {
      case Connective::Atom:
        return intern({K::Atom, -1, -1, f.name()});
      case Connective::Bot:
        return bot();
      case Connective::Neg:
        return imp(from(f.lhs()), bot());
      case Connective::And:
        return intern({K::And, from(f.lhs()), from(f.rhs()), {}});
      case Connective::OrI:
        return intern({K::Or, from(f.lhs()), from(f.rhs()), {}});
      case Connective::ImpI:
        return imp(from(f.lhs()), from(f.rhs()));
      case Connective::ImpC:
      case Connective::OrC:
        throw Error("classical connective in an intuitionistic formula: " + print_formula(f));
    }
    return bot();
  }

  int imp(int a, int b) { return intern({K::Imp, a, b, {}}); }
  const Cell& at(int i) const { return cells_[static_cast<std::size_t>(i)]; }

 private:
  int intern(Cell c) {
    const std::string key = std::to_string(static_cast<int>(c.kind)) + ":" + std::to_string(c.a) + ":" +
                            std::to_string(c.b) + ":" + c.name;
    const auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    const int id = static_cast<int>(cells_.size());
    cells_.push_back(std::move(c));
    ids_.emplace(key, id);
    return id;
  }

  std::vector<Cell> cells_;
  std::unordered_map<std::string, int> ids_;
};

using Ctx = std::vector<int>;  // sorted, duplicate-free

Ctx with(Ctx g, std::initializer_list<int> add, int drop = -1) {
  if (drop >= 0) g.erase(std::find(g.begin(), g.end(), drop));
  for (int x : add) {
    auto it = std::lower_bound(g.begin(), g.end(), x);
    if (it == g.end() || *it != x) g.insert(it, x);
  }
  return g;
}

bool has(const Ctx& g, int x) { return std::binary_search(g.begin(), g.end(), x); }

class G4ip {
 public:
  explicit G4ip(Table& t) : t_(t), bot_(t.bot()) {}

  bool prove(const Ctx& g, int goal) {
    std::string key;
    key.reserve(g.size() * 4 + 8);
    for (int x : g) key += std::to_string(x) + ",";
    key += "|" + std::to_string(goal);
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const bool r = search(g, goal);
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  bool search(const Ctx& g, int goal) {
    if (has(g, bot_) || has(g, goal)) return true;
    for (int h : g) {
      const Cell& c = t_.at(h);
      if (c.kind == K::And) return prove(with(g, {c.a, c.b}, h), goal);
      if (c.kind == K::Or) return prove(with(g, {c.a}, h), goal) && prove(with(g, {c.b}, h), goal);
      if (c.kind != K::Imp) continue;
      const Cell& ante = t_.at(c.a);
      if (ante.kind == K::Atom && has(g, c.a)) return prove(with(g, {c.b}, h), goal);
      if (ante.kind == K::Bot) return prove(with(g, {}, h), goal);
      if (ante.kind == K::And) return prove(with(g, {t_.imp(ante.a, t_.imp(ante.b, c.b))}, h), goal);
      if (ante.kind == K::Or) return prove(with(g, {t_.imp(ante.a, c.b), t_.imp(ante.b, c.b)}, h), goal);
    }
    const Cell& gc = t_.at(goal);
    if (gc.kind == K::And) return prove(g, gc.a) && prove(g, gc.b);
    if (gc.kind == K::Imp) return prove(with(g, {gc.a}), gc.b);
    if (gc.kind == K::Or && (prove(g, gc.a) || prove(g, gc.b))) return true;
    for (int h : g) {
      const Cell& c = t_.at(h);
      if (c.kind != K::Imp) continue;
      const Cell& ante = t_.at(c.a);
      if (ante.kind != K::Imp) continue;
      // (C -> D) -> B  with  C = ante.a, D = ante.b
      if (prove(with(g, {t_.imp(ante.b, c.b)}, h), c.a) && prove(with(g, {c.b}, h), goal)) return true;
    }
    return false;
  }

  Table& t_;
  int bot_;
  std::unordered_map<std::string, bool> memo_;
};

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.is(Connective::Atom)) {
    out.insert(f.name());
  } else if (f.is(Connective::Neg)) {
    collect_atoms(f.lhs(), out);
  } else if (f.is_binary()) {
    collect_atoms(f.lhs(), out);
    collect_atoms(f.rhs(), out);
  }
}

using Mask = std::uint32_t;

struct Frame {
  std::size_t n;
  std::vector<Mask> up;  // worlds above each world, itself included
};

// Forcing masks by structural recursion on an intuitionistic formula.
Mask force_mask(const Formula& f, const Frame& fr, const std::map<std::string, Mask>& val) {
  switch (f.kind()) {
    case Connective::Atom:
      return val.at(f.name());
    case Connective::Bot:
      return 0;
    case Connective::And:
      return force_mask(f.lhs(), fr, val) & force_mask(f.rhs(), fr, val);
    case Connective::OrI:
      return force_mask(f.lhs(), fr, val) | force_mask(f.rhs(), fr, val);
    case Connective::Neg:
    case Connective::ImpI: {
      const Mask a = force_mask(f.lhs(), fr, val);
      const Mask b = f.is(Connective::Neg) ? 0 : force_mask(f.rhs(), fr, val);
      Mask out = 0;
      for (std::size_t w = 0; w < fr.n; ++w) {
        if ((fr.up[w] & a & ~b) == 0) out |= Mask{1} << w;
      }
      return out;
    }
    default:
      throw Error("classical connective in an intuitionistic formula");
  }
}

std::vector<Mask> upsets(const Frame& fr) {
  std::vector<Mask> out;
  const Mask all = (Mask{1} << fr.n) - 1;
  for (Mask m = 0; m <= all; ++m) {
    bool closed = true;
    for (std::size_t w = 0; w < fr.n && closed; ++w) {
      if ((m >> w & 1) && (fr.up[w] & ~m) != 0) closed = false;
    }
    if (closed) out.push_back(m);
  }
  return out;
}

// Rooted trees in breadth-first numbering: parent[i] < i, nondecreasing.
void for_each_tree(std::size_t n, const std::function<bool(const Frame&)>& fn) {
  std::vector<std::size_t> parent(n, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == n) {
      Frame fr{n, std::vector<Mask>(n, 0)};
      for (std::size_t w = n; w-- > 0;) {
        fr.up[w] |= Mask{1} << w;
        if (w > 0) fr.up[parent[w]] |= fr.up[w];
      }
      return fn(fr);
    }
    const std::size_t lo = i > 1 ? parent[i - 1] : 0;
    for (std::size_t p = lo; p < i; ++p) {
      parent[i] = p;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  rec(1);
}

KripkeModel to_model(const Frame& fr, const std::vector<std::string>& atoms, const std::vector<Mask>& val) {
  KripkeModel m;
  m.worlds = fr.n;
  for (std::size_t v = 0; v < fr.n; ++v) {
    for (std::size_t w = 0; w < fr.n; ++w) {
      if (fr.up[v] >> w & 1) m.order_pairs.emplace_back(v, w);
    }
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    auto& worlds = m.forcing[atoms[i]];
    for (std::size_t w = 0; w < fr.n; ++w) {
      if (val[i] >> w & 1) worlds.push_back(w);
    }
  }
  return m;
}

std::optional<KripkeModel> search_countermodel(const Formula& t, std::size_t max_worlds) {
  std::set<std::string> atom_set;
  collect_atoms(t, atom_set);
  const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  std::optional<KripkeModel> found;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_worlds, 31) && !found; ++n) {
    for_each_tree(n, [&](const Frame& fr) {
      const auto ups = upsets(fr);
      std::vector<Mask> val(atoms.size(), 0);
      std::map<std::string, Mask> named;
      std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == atoms.size()) {
          for (std::size_t k = 0; k < atoms.size(); ++k) named[atoms[k]] = val[k];
          if ((force_mask(t, fr, named) & 1) == 0) {
            found = to_model(fr, atoms, val);
            return true;
          }
          return false;
        }
        for (Mask u : ups) {
          val[i] = u;
          if (assign(i + 1)) return true;
        }
        return false;
      };
      return assign(0);
    });
  }
  return found;
}

// Direct forcing clause evaluation, independent of the mask evaluator.
bool forces(const KripkeModel& m, const std::vector<std::set<std::size_t>>& above, std::size_t w, const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom: {
      const auto it = m.forcing.find(f.name());
      if (it == m.forcing.end()) return false;
      return std::find(it->second.begin(), it->second.end(), w) != it->second.end();
    }
    case Connective::Bot:
      return false;
    case Connective::And:
      return forces(m, above, w, f.lhs()) && forces(m, above, w, f.rhs());
    case Connective::OrI:
      return forces(m, above, w, f.lhs()) || forces(m, above, w, f.rhs());
    case Connective::Neg:
      for (auto v : above[w]) {
        if (forces(m, above, v, f.lhs())) return false;
      }
      return true;
    case Connective::ImpI:
      for (auto v : above[w]) {
        if (forces(m, above, v, f.lhs()) && !forces(m, above, v, f.rhs())) return false;
      }
      return true;
    default:
      return false;
  }
}

}  // namespace

bool provable_intuitionistic(const Formula& f) {
  Table t;
  const int goal = t.from(f);
  G4ip prover(t);
  return prover.prove({}, goal);
}

bool verify_countermodel(const KripkeModel& m, const Formula& f) {
  const std::size_t n = m.worlds;
  if (n == 0) return false;
  std::vector<std::set<std::size_t>> above(n);
  for (const auto& [v, w] : m.order_pairs) {
    if (v >= n || w >= n) return false;
    above[v].insert(w);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (above[v].count(v) == 0 || above[0].count(v) == 0) return false;
    for (auto w : above[v]) {
      if (w != v && above[w].count(v) != 0) return false;
      for (auto u : above[w]) {
        if (above[v].count(u) == 0) return false;
      }
    }
  }
  for (const auto& [atom, worlds] : m.forcing) {
    for (auto w : worlds) {
      if (w >= n) return false;
      for (auto u : above[w]) {
        if (std::find(worlds.begin(), worlds.end(), u) == worlds.end()) return false;
      }
    }
  }
  return !forces(m, above, 0, neg_translate(f));
}

Verdict decide(const Formula& f, const DecideOptions& options) {
  const Formula t = neg_translate(f);
  Verdict v;
  v.provable = provable_intuitionistic(t);
  if (v.provable || !options.countermodel) return v;
  v.countermodel = search_countermodel(t, options.max_worlds);
  if (!v.countermodel) {
    throw SearchBound("no countermodel within " + std::to_string(options.max_worlds) + " worlds");
  }
  if (!verify_countermodel(*v.countermodel, f)) throw Error("countermodel failed verification");
  return v;
}

Formula judgment_formula(const FormulaBag& gamma, const FormulaBag& delta, const std::optional<Formula>& stoup) {
  std::optional<Formula> ante;
  auto push = [&](const Formula& f) { ante = ante ? Formula::conj(*ante, f) : f; };
  for (const auto& g : gamma) push(g);
  for (const auto& d : delta) push(Formula::neg(d));
  const Formula concl = stoup ? *stoup : Formula::bot();
  return ante ? Formula::imp_i(*ante, concl) : concl;
}

}  // namespace lep
