#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lep/bridge.hpp"
#include "lep/corpus.hpp"
#include "lep/generate.hpp"
#include "lep/invariants.hpp"
#include "lep/normalize.hpp"
#include "lep/oracle.hpp"
#include "lep/script.hpp"

namespace lep::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "lep-report/1";

// Carries an exit code and a report error object up to run().
struct Failure {
  int code;
  std::string kind;
  std::string message;
  json extra = json::object();
};

struct Options {
  bool json = false;
  std::string system;
  std::string file;
  std::string output;
  std::string trace;
  std::string to;
  std::string split;
  std::string stoup = "auto";
  std::string formula;
  std::string countermodel;
  std::size_t max_worlds = 8;
  std::uint64_t seed = 1;
  std::size_t count = 100;
};

struct Context {
  const Options& opt;
  std::ostream& out;
  json report;
  std::vector<std::string> lines;

  void say(std::string line) { lines.push_back(std::move(line)); }
};

json path_json(const NodePath& p) { return json(p); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{Usage, "io", "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{Usage, "io", "cannot write " + path};
}

System system_of(const Options& opt) {
  if (opt.system == "le") return System::LE;
  if (opt.system == "ne") return System::NE;
  const auto dot = opt.file.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : opt.file.substr(dot);
  if (ext == ".lep") return System::LE;
  if (ext == ".nep") return System::NE;
  throw Failure{Usage, "usage", "cannot tell the proof system of " + opt.file + "; use --system le|ne"};
}

const char* system_name(System s) { return s == System::LE ? "le" : "ne"; }

Failure from_parse(const ParseError& e) {
  return Failure{Usage, "parse", e.what(),
                 json{{"offset", e.offset()}, {"expected", std::vector<std::string>(e.expected().begin(), e.expected().end())}}};
}

Failure from_check(const CheckError& e) {
  return Failure{Negative, "check", e.what(),
                 json{{"node_path", path_json(e.path())}, {"schema", e.schema()}, {"found", e.found()}}};
}

// Reads and checks the file named on the command line.
template <class Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw from_parse(e);
  } catch (const CheckError& e) {
    throw from_check(e);
  } catch (const StoupOverflow& e) {
    throw Failure{Usage, "parse", e.what()};
  }
}

le::Deriv load_le(const Options& opt) {
  if (system_of(opt) != System::LE) throw Failure{Usage, "usage", "expected an LE_p script (.lep)"};
  const std::string text = read_file(opt.file);
  return guarded([&] {
    le::Deriv d = read_le_script(text);
    le::check_le(d);
    return d;
  });
}

ne::Deriv load_ne(const Options& opt) {
  const std::string text = read_file(opt.file);
  return guarded([&] {
    ne::Deriv d = read_ne_script(text);
    ne::check_ne(d);
    return d;
  });
}

std::vector<std::string> bag_json(const FormulaBag& bag) {
  std::vector<std::string> out;
  for (const auto& f : bag) out.push_back(print_formula(f));
  return out;
}

json le_judgment_json(const le::Judgment& j) {
  return json{{"judgment", le::print_judgment(j)},
              {"open_hypotheses", bag_json(invariants::hypothesis_set(j.open_hyps))},
              {"context", bag_json(j.conclusion.context)},
              {"stoup", j.conclusion.stoup ? json(print_formula(*j.conclusion.stoup)) : json(nullptr)}};
}

json ne_judgment_json(const ne::Judgment& j) {
  return json{{"judgment", ne::print_judgment(j)},
              {"open_assumptions", bag_json(invariants::hypothesis_set(j.open_assumptions))},
              {"conclusion", print_formula(j.conclusion)}};
}

int cmd_check(Context& c) {
  const System s = system_of(c.opt);
  c.report["system"] = system_name(s);
  if (s == System::LE) {
    const le::Deriv d = load_le(c.opt);
    const le::Judgment j = le::check_le(d);
    c.report.update(le_judgment_json(j));
    c.report["degree"] = degree(d);
    c.say(le::print_judgment(j));
  } else {
    const ne::Judgment j = ne::check_ne(load_ne(c.opt));
    c.report.update(ne_judgment_json(j));
    c.say(ne::print_judgment(j));
  }
  return Ok;
}

int cmd_degree(Context& c) {
  const le::Deriv d = load_le(c.opt);
  const auto segs = maximal_segments(d);
  c.report["degree"] = degree(d);
  c.report["maximal_segments"] = json::array();
  c.say("degree " + std::to_string(degree(d)));
  c.say(std::to_string(segs.size()) + " maximal segment" + (segs.size() == 1 ? "" : "s"));
  for (const auto& m : segs) {
    const std::string f = print_formula(m.segment.formula);
    c.report["maximal_segments"].push_back(json{{"formula", f},
                                                {"weight", weight(m.segment.formula)},
                                                {"length", m.segment.path.size()},
                                                {"intro_node", path_json(m.intro_node)},
                                                {"elim_node", path_json(m.elim_node)}});
    c.say("  " + f + "  weight " + std::to_string(weight(m.segment.formula)) + ", length " +
          std::to_string(m.segment.path.size()) + ", from " + format_path(m.intro_node) + " into " +
          format_path(m.elim_node));
  }
  return Ok;
}

json trace_json(const std::vector<ReductionStep>& trace) {
  json out = json::array();
  for (const auto& s : trace) {
    out.push_back(json{{"step", s.step},
                       {"rule", reduction_name(s.rule)},
                       {"node_path", path_json(s.node_path)},
                       {"degree_before", s.degree_before},
                       {"degree_after", s.degree_after}});
  }
  return out;
}

int cmd_normalize(Context& c) {
  const le::Deriv d = load_le(c.opt);
  Normalized n = [&] {
    try {
      return normalize(d);
    } catch (const LoopGuard& e) {
      throw Failure{Negative, "loop_guard", e.what()};
    }
  }();
  const std::string script = write_le_script(n.derivation);
  c.report["degree_before"] = degree(d);
  c.report["degree_after"] = degree(n.derivation);
  c.report["trace"] = trace_json(n.trace);
  c.report.update(le_judgment_json(le::check_le(n.derivation)));
  c.say("degree " + std::to_string(degree(d)) + " -> " + std::to_string(degree(n.derivation)) + " in " +
        std::to_string(n.trace.size()) + " step" + (n.trace.size() == 1 ? "" : "s"));
  for (const auto& s : n.trace) {
    c.say("  " + std::to_string(s.step) + ". " + reduction_name(s.rule) + " at " + format_path(s.node_path) +
          " (degree " + std::to_string(s.degree_before) + " -> " + std::to_string(s.degree_after) + ")");
  }
  if (!c.opt.trace.empty()) {
    write_file(c.opt.trace, json{{"schema", kSchema}, {"command", "normalize"}, {"trace", c.report["trace"]}}.dump(2) + "\n");
  }
  if (!c.opt.output.empty()) {
    write_file(c.opt.output, script);
    c.report["output"] = c.opt.output;
  } else {
    c.report["derivation"] = script;
    c.say(script.substr(0, script.size() - 1));
  }
  return Ok;
}

FormulaBag parse_split(const std::string& text) {
  FormulaBag out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      out.add(parse_formula(item));
    } catch (const ParseError& e) {
      throw from_parse(e);
    }
  }
  return out;
}

int cmd_translate(Context& c) {
  const System from = system_of(c.opt);
  const System to = c.opt.to == "le" ? System::LE : System::NE;
  if (from == to) throw Failure{Usage, "usage", std::string("the proof is already in ") + (to == System::LE ? "LE_p" : "NE_p")};
  std::string script;
  if (to == System::NE) {
    if (!c.opt.split.empty()) throw Failure{Usage, "usage", "--split applies to --to le"};
    const ne::Deriv n = le_to_ne(load_le(c.opt));
    script = write_ne_script(n);
    const ne::Judgment j = ne::check_ne(n);
    c.report.update(ne_judgment_json(j));
    c.say(ne::print_judgment(j));
  } else {
    const ne::Deriv n = load_ne(c.opt);
    const RootStoup root = c.opt.stoup == "formula" ? RootStoup::Formula
                           : c.opt.stoup == "empty" ? RootStoup::Empty
                                                    : RootStoup::Auto;
    le::Deriv d = [&] {
      try {
        return ne_to_le(n, parse_split(c.opt.split), root);
      } catch (const SplitError& e) {
        throw Failure{Negative, "split", e.what()};
      }
    }();
    script = write_le_script(d);
    const le::Judgment j = le::check_le(d);
    c.report.update(le_judgment_json(j));
    c.say(le::print_judgment(j));
  }
  c.report["system"] = system_name(to);
  if (!c.opt.output.empty()) {
    write_file(c.opt.output, script);
    c.report["output"] = c.opt.output;
  } else {
    c.report["derivation"] = script;
    c.say(script.substr(0, script.size() - 1));
  }
  return Ok;
}

json model_json(const KripkeModel& m) {
  return json{{"worlds", m.worlds}, {"order_pairs", m.order_pairs}, {"forcing", m.forcing}};
}

int cmd_decide(Context& c) {
  const Formula f = [&] {
    try {
      return parse_formula(c.opt.formula);
    } catch (const ParseError& e) {
      throw from_parse(e);
    }
  }();
  c.report["formula"] = print_formula(f);
  c.report["translation"] = print_formula(neg_translate(f));
  Verdict v;
  try {
    v = decide(f, DecideOptions{c.opt.max_worlds, true});
  } catch (const SearchBound&) {
    c.report["verdict"] = "unprovable";
    c.say("Unprovable");
    c.say("no countermodel within " + std::to_string(c.opt.max_worlds) + " worlds");
    return Negative;
  }
  if (v.provable) {
    c.report["verdict"] = "provable";
    c.say("Provable");
    return Ok;
  }
  const KripkeModel& m = *v.countermodel;
  c.report["verdict"] = "countermodel";
  c.report["countermodel"] = model_json(m);
  c.say("Countermodel");
  c.say("  worlds " + std::to_string(m.worlds));
  std::string order;
  for (const auto& [a, b] : m.order_pairs) {
    if (a != b) order += (order.empty() ? "" : ", ") + std::to_string(a) + "<=" + std::to_string(b);
  }
  c.say("  order " + (order.empty() ? std::string("(discrete)") : order));
  for (const auto& [atom, ws] : m.forcing) {
    std::string list;
    for (auto w : ws) list += (list.empty() ? "" : " ") + std::to_string(w);
    c.say("  " + atom + " forced at {" + list + "}");
  }
  if (!c.opt.countermodel.empty()) write_file(c.opt.countermodel, model_json(m).dump(2) + "\n");
  return Negative;
}

int cmd_selftest(Context& c) {
  json results = json::array();
  bool all = true;
  auto record = [&](const std::string& name, std::size_t checked, const std::vector<std::string>& problems) {
    const bool ok = problems.empty();
    all = all && ok;
    results.push_back(json{{"name", name}, {"checked", checked}, {"ok", ok}, {"problems", problems}});
    c.say(std::string(ok ? "PASS " : "FAIL ") + name + " (" + std::to_string(checked) + ")");
    for (std::size_t i = 0; i < problems.size() && i < 3; ++i) c.say("    " + problems[i]);
  };

  std::vector<std::string> problems;
  std::vector<le::Deriv> golden;
  for (const auto& p : golden_proofs()) {
    try {
      if (p.system == System::LE) {
        le::Deriv d = read_le_script(p.script);
        const std::string j = le::print_judgment(le::check_le(d));
        if (j != p.judgment) problems.push_back(p.name + " concludes " + j);
        if (degree(d) != p.degree) problems.push_back(p.name + " has degree " + std::to_string(degree(d)));
        golden.push_back(std::move(d));
      } else {
        const std::string j = ne::print_judgment(ne::check_ne(read_ne_script(p.script)));
        if (j != p.judgment) problems.push_back(p.name + " (NE) concludes " + j);
      }
    } catch (const Error& e) {
      problems.push_back(p.name + ": " + e.what());
    }
  }
  record("golden proofs", golden_proofs().size(), problems);

  Generator g(c.opt.seed);
  std::vector<le::Deriv> corpus = golden;
  for (std::size_t i = 0; i < c.opt.count; ++i) corpus.push_back(g.derivation());

  auto sweep = [&](const std::string& name, auto&& check) {
    std::vector<std::string> found;
    for (const auto& d : corpus) {
      if (auto v = check(d)) found.push_back(*v);
    }
    record(name, corpus.size(), found);
  };
  sweep("round trip", [](const le::Deriv& d) { return invariants::round_trip(d); });
  sweep("normalization", [](const le::Deriv& d) { return invariants::normalizes(d); });
  sweep("oracle consistency", [](const le::Deriv& d) { return invariants::oracle_agrees(d); });
  sweep("script round trip", [](const le::Deriv& d) { return invariants::script_round_trip(d); });

  problems.clear();
  for (std::size_t i = 0; i < c.opt.count; ++i) {
    if (auto v = invariants::junction_law(g.junction())) problems.push_back(*v);
  }
  record("junction law", c.opt.count, problems);

  problems.clear();
  std::size_t applied = 0;
  for (Reduction kind : all_reductions()) {
    for (std::size_t i = 0; i * all_reductions().size() < c.opt.count; ++i) {
      const le::Deriv d = g.redex(kind);
      for (const auto& m : maximal_segments(d)) {
        if (!m.elim_node.empty()) continue;
        ++applied;
        if (auto v = invariants::reduction_safe(d, m)) problems.push_back(std::string(reduction_name(kind)) + ": " + *v);
      }
    }
  }
  record("reduction safety", applied, problems);

  c.report["seed"] = c.opt.seed;
  c.report["results"] = results;
  return all ? Ok : Negative;
}

void emit(Context& c, int code, const std::optional<Failure>& failure, std::ostream& err) {
  c.report["exit_code"] = code;
  if (c.opt.json) {
    if (failure) {
      json e{{"kind", failure->kind}, {"message", failure->message}};
      e.update(failure->extra);
      c.report["error"] = e;
    }
    c.out << c.report.dump(2) << "\n";
    return;
  }
  for (const auto& l : c.lines) c.out << l << "\n";
  if (failure) err << "lep: " << failure->message << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Checker, normalizer and translator for ecumenical natural deduction proofs", "lep"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Write a JSON report instead of text");
  app.add_option("--system", opt.system, "Proof system of the input, overriding the file extension")
      ->check(CLI::IsMember({"le", "ne"}));

  auto* check = app.add_subcommand("check", "Check a proof script and print its judgment");
  check->add_option("file", opt.file, "Proof script (.lep or .nep)")->required();

  auto* deg = app.add_subcommand("degree", "Print the degree and maximal segments of an LE_p proof");
  deg->add_option("file", opt.file, "LE_p proof script")->required();

  auto* norm = app.add_subcommand("normalize", "Normalize an LE_p proof");
  norm->add_option("file", opt.file, "LE_p proof script")->required();
  norm->add_option("-o,--output", opt.output, "Write the normal form here instead of standard output");
  norm->add_option("--trace", opt.trace, "Write the reduction trace as JSON");

  auto* tr = app.add_subcommand("translate", "Translate between LE_p and NE_p");
  tr->add_option("file", opt.file, "Proof script")->required();
  tr->add_option("--to", opt.to, "Target system")->required()->check(CLI::IsMember({"le", "ne"}));
  tr->add_option("--split", opt.split, "Comma-separated negated assumptions ~A that become classical context A");
  tr->add_option("--stoup", opt.stoup, "Root stoup when the NE_p conclusion is bot")
      ->check(CLI::IsMember({"auto", "formula", "empty"}));
  tr->add_option("-o,--output", opt.output, "Write the translation here instead of standard output");

  auto* dec = app.add_subcommand("decide", "Decide a formula and search for a Kripke countermodel");
  dec->add_option("formula", opt.formula, "Formula, e.g. \"A \\/i ~A\"")->required();
  dec->add_option("--countermodel", opt.countermodel, "Write the countermodel as JSON");
  dec->add_option("--max-worlds", opt.max_worlds, "Largest countermodel to search")->check(CLI::Range(1, 12));

  auto* self = app.add_subcommand("selftest", "Run the golden proofs and the invariant checks");
  self->add_option("--seed", opt.seed, "Random seed");
  self->add_option("--count", opt.count, "Random derivations per check");

  const bool json_requested = std::find(args.begin(), args.end(), "--json") != args.end();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    if (json_requested) {
      out << json{{"schema", kSchema}, {"exit_code", int(Usage)}, {"error", {{"kind", "usage"}, {"message", e.what()}}}}
                 .dump(2)
          << "\n";
    } else {
      err << "lep: " << e.what() << "\n" << "Run with --help for usage.\n";
    }
    return Usage;
  }

  Context c{opt, out, json{{"schema", kSchema}}, {}};
  const CLI::App* chosen = app.get_subcommands().front();
  c.report["command"] = chosen->get_name();
  int code = Ok;
  std::optional<Failure> failure;
  try {
    if (chosen == check) code = cmd_check(c);
    else if (chosen == deg) code = cmd_degree(c);
    else if (chosen == norm) code = cmd_normalize(c);
    else if (chosen == tr) code = cmd_translate(c);
    else if (chosen == dec) code = cmd_decide(c);
    else code = cmd_selftest(c);
  } catch (const Failure& f) {
    failure = f;
    code = f.code;
    c.lines.clear();
  } catch (const Error& e) {
    failure = Failure{Negative, "error", e.what()};
    code = Negative;
    c.lines.clear();
  }
  emit(c, code, failure, err);
  return code;
}

}  // namespace lep::cli
