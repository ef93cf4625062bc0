// casewise: argument generation, attacks, extensions and queries for
// argumentation theories with reasoning by cases.
//
// Exit status: 0 success, 1 query answered false, 2 input or usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "casewise/baselines.hpp"
#include "casewise/postulates.hpp"
#include "report.hpp"

using namespace casewise;
using report::ordered_json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string format = "text";
  std::optional<std::uint32_t> budget;
  std::uint32_t max_premises = GenConfig{}.max_strict_premises;
  bool no_minimal = false;
  bool no_rbc = false;
  std::string sem = "complete";
  std::string mode = "forall";
  std::string formula;
  std::string disjoint;
  std::size_t bound = 64;
};

constexpr std::uint32_t kGorBudget = 6;

GenConfig make_config(const Options& o, std::uint32_t fallback_budget) {
  GenConfig cfg;
  cfg.max_rule_applications = fallback_budget;
  if (const char* env = std::getenv("CASEWISE_BUDGET")) {
    try {
      cfg.max_rule_applications = static_cast<std::uint32_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw InputError("CASEWISE_BUDGET is not a number: '" + std::string(env) + "'");
    }
  }
  if (o.budget) cfg.max_rule_applications = *o.budget;
  cfg.max_strict_premises = o.max_premises;
  cfg.minimal_disjunctions = !o.no_minimal;
  cfg.rbc_enabled = !o.no_rbc;
  try {
    cfg.check();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return cfg;
}

ArgTheory read_theory(const std::string& path) {
  ArgTheory at = load_theory(path);
  ValidationReport v = validate(at);
  if (!v.valid) {
    std::string msg = path + ":";
    for (const auto& e : v.errors) msg += " " + e;
    throw InputError(msg);
  }
  for (const auto& w : v.warnings) std::cerr << "warning: " << path << ": " << w << "\n";
  return at;
}

Semantics semantics_of(const Options& o) {
  if (auto s = parse_semantics(o.sem)) return *s;
  throw InputError("unknown semantics '" + o.sem + "'");
}

Mode mode_of(const Options& o) {
  if (auto m = parse_mode(o.mode)) return *m;
  throw InputError("unknown mode '" + o.mode + "'");
}

Formula formula_of(const std::string& text) {
  try {
    return parse_formula(text);
  } catch (const std::exception& e) {
    throw InputError("bad formula '" + text + "': " + e.what());
  }
}

void diagnostics(const Saf& saf) {
  for (const auto& w : saf.warnings()) std::cerr << "warning: " << w << "\n";
}

ordered_json header(const char* command, const Options& o, const GenConfig& cfg) {
  return {{"command", command}, {"input", o.input}, {"config", report::config(cfg)}};
}

ordered_json nodes_json(const Saf& saf, bool base) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < saf.size(); ++i)
    if (saf.node(i).is_base() == base) out.push_back(report::node(saf, i));
  return out;
}

void emit(const Options& o, const ordered_json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// {{{ Commands

int cmd_arguments(const Options& o) {
  GenConfig cfg = make_config(o, GenConfig{}.max_rule_applications);
  Saf saf = build_saf(read_theory(o.input), cfg);
  diagnostics(saf);
  ordered_json j = header("arguments", o, cfg);
  j["arguments"] = nodes_json(saf, true);
  j["hypothetical"] = nodes_json(saf, false);
  j["budget_hit"] = saf.budget_hit();
  j["capped"] = saf.capped();
  std::string text, hyp;
  for (std::size_t i = 0; i < saf.size(); ++i)
    (saf.node(i).is_base() ? text : hyp) += report::node_text(saf, i) + "\n";
  emit(o, j, text + (hyp.empty() ? "" : "hypothetical:\n" + hyp));
  return 0;
}

int cmd_attacks(const Options& o) {
  GenConfig cfg = make_config(o, GenConfig{}.max_rule_applications);
  Saf saf = build_saf(read_theory(o.input), cfg);
  diagnostics(saf);
  ordered_json j = header("attacks", o, cfg);
  ordered_json nodes = ordered_json::array(), edges = ordered_json::array();
  for (std::size_t i = 0; i < saf.size(); ++i) nodes.push_back(report::node(saf, i));
  for (const auto& e : saf.edges())
    edges.push_back({{"attacker", saf.id(e.attacker)}, {"target", saf.id(e.target)}, {"direct", e.direct}});
  j["nodes"] = nodes;
  j["attacks"] = edges;
  emit(o, j, edge_list(saf));
  return 0;
}

int cmd_extensions(const Options& o) {
  GenConfig cfg = make_config(o, GenConfig{}.max_rule_applications);
  Semantics sem = semantics_of(o);
  Saf saf = build_saf(read_theory(o.input), cfg);
  diagnostics(saf);
  std::vector<Extension> exts = extensions(Af::from_saf(saf), sem);
  ordered_json j = header("extensions", o, cfg);
  j["semantics"] = to_string(sem);
  ordered_json list = ordered_json::array(), nodes = ordered_json::array();
  std::string text;
  for (const auto& e : exts) {
    list.push_back(report::extension(saf, e));
    text += report::extension_text(saf, e) + "\n";
  }
  for (std::size_t i = 0; i < saf.size(); ++i) nodes.push_back(report::node(saf, i));
  j["extensions"] = list;
  j["nodes"] = nodes;
  emit(o, j, text);
  return 0;
}

int cmd_query(const Options& o) {
  GenConfig cfg = make_config(o, GenConfig{}.max_rule_applications);
  Semantics sem = semantics_of(o);
  Mode mode = mode_of(o);
  Formula phi = formula_of(o.formula);
  Saf saf = build_saf(read_theory(o.input), cfg);
  diagnostics(saf);
  QueryResult r = entails_query(saf, sem, mode, phi);
  ordered_json j = header("query", o, cfg);
  j["semantics"] = to_string(sem);
  j["mode"] = to_string(mode);
  j["formula"] = phi.str();
  j["holds"] = r.holds;
  j["n_extensions"] = r.n_extensions;
  ordered_json w = ordered_json::array();
  std::string text = r.holds ? "true\n" : "false\n";
  for (std::size_t i : r.witnesses) {
    w.push_back(report::node(saf, i));
    text += "  " + report::node_text(saf, i) + "\n";
  }
  j["witnesses"] = w;
  emit(o, j, text);
  return r.holds ? 0 : 1;
}

int cmd_postulates(const Options& o) {
  GenConfig cfg = make_config(o, GenConfig{}.max_rule_applications);
  Semantics sem = semantics_of(o);
  ArgTheory at = read_theory(o.input);
  Saf saf = build_saf(at, cfg);
  diagnostics(saf);
  std::vector<Extension> exts = extensions(Af::from_saf(saf), sem);
  std::vector<PostulateReport> reports = check_postulates(saf, exts, cfg);
  if (!o.disjoint.empty()) {
    ArgTheory other = read_theory(o.disjoint);
    for (Semantics s : {Semantics::Grounded, Semantics::Complete, Semantics::Preferred})
      for (Mode m : {Mode::Forall, Mode::Intersect}) {
        try {
          reports.push_back(check_non_interference(at, other, s, m, cfg));
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
      }
  }
  ordered_json j = header("postulates", o, cfg);
  j["semantics"] = to_string(sem);
  j["n_extensions"] = exts.size();
  ordered_json list = ordered_json::array();
  std::size_t failures = 0, inconclusive = 0;
  std::string text;
  for (const auto& r : reports) {
    list.push_back(report::postulate(r));
    text += report::postulate_text(r) + "\n";
    failures += r.verdict == Verdict::Fail;
    inconclusive += r.verdict == Verdict::Inconclusive;
  }
  j["reports"] = list;
  j["failures"] = failures;
  j["inconclusive"] = inconclusive;
  text += std::to_string(failures) + " failed, " + std::to_string(inconclusive) + " inconclusive\n";
  emit(o, j, text);
  return failures ? 1 : 0;
}

int cmd_ddl(const Options& o) {
  DdlTheory t = load_ddl(o.input);
  std::vector<DdlExtension> exts = ddl_extensions(t);
  ordered_json j{{"command", "baseline-ddl"}, {"input", o.input}};
  ordered_json list = ordered_json::array();
  std::string text;
  for (const auto& e : exts) {
    list.push_back(report::ddl_extension(e));
    text += report::ddl_extension_text(e) + "\n";
  }
  j["extensions"] = list;
  j["skeptical"] = nullptr;
  if (!o.formula.empty()) {
    Formula phi = formula_of(o.formula);
    bool holds = ddl_skeptical(exts, phi);
    j["skeptical"] = {{"formula", phi.str()}, {"holds", holds}};
    text += "skeptical " + phi.str() + ": " + (holds ? "true" : "false") + "\n";
  }
  emit(o, j, text);
  return 0;
}

int cmd_gor(const Options& o) {
  GenConfig cfg = make_config(o, kGorBudget);
  cfg.rbc_enabled = false;
  ArgTheory at = read_theory(o.input);
  GorClosure closure = gor_closure(at.rules(), o.bound);
  for (const auto& w : closure.warnings) std::cerr << "warning: " << w << "\n";
  Saf saf = build_saf(ArgTheory(closure.rules, at.facts()), cfg);
  diagnostics(saf);
  ordered_json j = header("baseline-gor", o, cfg);
  j["bound"] = o.bound;
  j["truncated"] = closure.truncated;
  ordered_json added = ordered_json::array();
  std::string text;
  for (std::size_t k = at.rules().size(); k < closure.rules.size(); ++k) {
    added.push_back(report::rule(closure.rules[k]));
    text += closure.rules[k].str() + "\n";
  }
  j["added_rules"] = added;
  j["arguments"] = nodes_json(saf, true);
  j["query"] = nullptr;
  if (!o.formula.empty()) {
    Semantics sem = semantics_of(o);
    Mode mode = mode_of(o);
    Formula phi = formula_of(o.formula);
    QueryResult r = entails_query(saf, sem, mode, phi);
    ordered_json w = ordered_json::array();
    for (std::size_t i : r.witnesses) w.push_back(report::node(saf, i));
    j["query"] = {{"semantics", to_string(sem)}, {"mode", to_string(mode)}, {"formula", phi.str()},
                  {"holds", r.holds}, {"n_extensions", r.n_extensions}, {"witnesses", w}};
    text += std::string(to_string(sem)) + "/" + to_string(mode) + " " + phi.str() + ": " +
            (r.holds ? "true" : "false") + "\n";
  } else {
    for (std::size_t i = 0; i < saf.size(); ++i) text += report::node_text(saf, i) + "\n";
  }
  emit(o, j, text);
  return 0;
}

// }}}

void add_generation(CLI::App* sub, Options& o) {
  sub->add_option("--budget", o.budget, "maximum rule applications per argument");
  sub->add_option("--max-premises", o.max_premises, "maximum premises of a strict step");
  sub->add_flag("--no-minimal-disjunctions", o.no_minimal, "allow rbc triggers with non-minimal disjunctions");
  sub->add_flag("--no-rbc", o.no_rbc, "disable reasoning by cases");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "input file")->required();
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

void add_semantics(CLI::App* sub, Options& o) {
  sub->add_option("--sem", o.sem, "grounded, complete or preferred");
}

void add_mode(CLI::App* sub, Options& o) {
  sub->add_option("--mode", o.mode, "forall or intersect");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"casewise: structured argumentation with reasoning by cases"};
  app.require_subcommand(1);
  Options o;

  auto* arguments = app.add_subcommand("arguments", "list Arg(AT) and the hypothetical arguments");
  add_common(arguments, o);
  add_generation(arguments, o);

  auto* attacks = app.add_subcommand("attacks", "print the attack relation");
  add_common(attacks, o);
  add_generation(attacks, o);

  auto* exts = app.add_subcommand("extensions", "enumerate extensions");
  add_common(exts, o);
  add_generation(exts, o);
  add_semantics(exts, o);

  auto* query = app.add_subcommand("query", "decide a skeptical consequence");
  add_common(query, o);
  add_generation(query, o);
  add_semantics(query, o);
  add_mode(query, o);
  query->add_option("formula", o.formula, "query formula")->required();

  auto* post = app.add_subcommand("postulates", "check rationality postulates");
  add_common(post, o);
  add_generation(post, o);
  add_semantics(post, o);
  post->add_option("--disjoint", o.disjoint, "second theory for non-interference");

  auto* baseline = app.add_subcommand("baseline", "comparison formalisms");
  baseline->require_subcommand(1);
  auto* ddl = baseline->add_subcommand("ddl", "disjunctive default logic extensions");
  add_common(ddl, o);
  ddl->add_option("--query", o.formula, "formula to test skeptically");
  auto* gor = baseline->add_subcommand("gor", "arguments over the gOR-closed rules");
  add_common(gor, o);
  add_generation(gor, o);
  add_semantics(gor, o);
  add_mode(gor, o);
  gor->add_option("--query", o.formula, "formula to query");
  gor->add_option("--bound", o.bound, "maximum number of added rules");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*arguments) return cmd_arguments(o);
    if (*attacks) return cmd_attacks(o);
    if (*exts) return cmd_extensions(o);
    if (*query) return cmd_query(o);
    if (*post) return cmd_postulates(o);
    if (*ddl) return cmd_ddl(o);
    if (*gor) return cmd_gor(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TheoryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
