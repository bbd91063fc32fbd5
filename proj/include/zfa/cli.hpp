#pragma once

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zfa/equivariance.hpp"
#include "zfa/support.hpp"
#include "zfa/tagged_model.hpp"

namespace zfa {

// Batch front end. Every check the test suites run is reachable from here,
// invocations are deterministic, and reports print either as plain text or
// as JSON that mirrors the text grammar (elements as literals, permutations
// in cycle notation).
//
// Exit codes: 0 success / holds, 1 a genuine failed check (including a
// formula evaluating to false), 2 usage or parse errors.

namespace cli_detail {

using nlohmann::json;

struct Options {
  int atoms = 3;
  int rank = 2;
  int subset_cap = 3;
  std::string group = "full";
  std::string format = "text";

  bool json_out() const { return format != "text"; }
  AtomPool pool() const { return AtomPool(atoms); }
  UniverseConfig universe_config() const {
    UniverseConfig cfg;
    cfg.rank_bound = rank;
    cfg.subset_cap = subset_cap;
    return cfg;
  }
  Universe universe() const { return generate_universe(pool(), universe_config()); }
  PermGroupSpec group_spec() const { return parse_group_spec(group, pool()); }
};

inline json params_json(const Options& opt) {
  return json{{"pool", opt.atoms},
              {"rank", opt.rank},
              {"subset_cap", opt.subset_cap}};
}

inline std::string params_text(const Options& opt) {
  return "pool=" + std::to_string(opt.atoms) +
         " rank=" + std::to_string(opt.rank) +
         " subset-cap=" + std::to_string(opt.subset_cap);
}

inline std::string strip_hash(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t");
  if (i != std::string::npos && text[i] == '#') return text.substr(i + 1);
  return text;
}

inline json axiom_json(const AxiomReport& r) {
  json j{{"axiom", r.axiom},
         {"status", to_string(r.status)},
         {"instances", r.instances_checked},
         {"escaped", r.escapes}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

inline json suite_json(const SuiteReport& r) {
  json rows = json::array();
  for (const SuiteRow& row : r.rows) {
    json jr{{"input", row.input}, {"perm", row.perm}, {"holds", row.holds}};
    if (!row.note.empty()) jr["note"] = row.note;
    rows.push_back(std::move(jr));
  }
  return json{{"rows", std::move(rows)},
              {"checks", r.checks},
              {"failures", r.failures}};
}

inline void print_suite_text(std::ostream& out, const SuiteReport& r) {
  for (const SuiteRow& row : r.rows) {
    out << (row.holds ? "ok   " : "FAIL ") << row.input << "  under  "
        << row.perm;
    if (!row.note.empty()) out << "  (" << row.note << ")";
    out << "\n";
  }
  out << (r.checks - r.failures) << "/" << r.checks << " hold\n";
}

inline int run_eval(const Options& opt, const std::string& src,
                    std::ostream& out) {
  Universe u = opt.universe();
  Element e = denote(parse_term(src, opt.pool()), u);
  if (opt.json_out())
    out << json{{"params", params_json(opt)}, {"value", to_string(e)}}.dump(2)
        << "\n";
  else
    out << to_string(e) << "\n";
  return 0;
}

inline int run_sat(const Options& opt, const std::string& src,
                   std::ostream& out) {
  Universe u = opt.universe();
  bool value = satisfies(u, parse_formula(src, opt.pool()));
  if (opt.json_out())
    out << json{{"params", params_json(opt)}, {"satisfied", value}}.dump(2)
        << "\n";
  else
    out << (value ? "true" : "false") << "\n";
  return value ? 0 : 1;
}

inline int run_supp(const Options& opt, const std::string& src,
                    std::ostream& out) {
  Element e = parse_element(strip_hash(src), opt.pool());
  SupportReport report = support_report(e, opt.pool());
  if (opt.json_out()) {
    json minimal = json::array();
    for (const AtomSet& K : report.minimal_supports)
      minimal.push_back(to_string(K));
    json j{{"subject", to_string(e)},
           {"pool", opt.atoms},
           {"minimal_supports", std::move(minimal)},
           {"pool_adequate", report.pool_adequate}};
    j["least"] = report.has_least ? json(to_string(report.least)) : json();
    out << j.dump(2) << "\n";
  } else {
    if (report.has_least)
      out << to_string(report.least) << "\n";
    else
      out << "none (" << report.minimal_supports.size()
          << " incomparable minimal supports; pool adequate: "
          << (report.pool_adequate ? "yes" : "no") << ")\n";
  }
  return report.has_least ? 0 : 1;
}

inline int run_fresh(const Options& opt, const std::string& atoms_src,
                     const std::string& elem_src, std::ostream& out) {
  AtomSet K = parse_atom_set(atoms_src, opt.pool());
  Element e = parse_element(strip_hash(elem_src), opt.pool());
  bool value = fresh(K, e, opt.pool());
  if (opt.json_out())
    out << json{{"atoms", to_string(K)},
                {"subject", to_string(e)},
                {"fresh", value}}
               .dump(2)
        << "\n";
  else
    out << (value ? "true" : "false") << "\n";
  return value ? 0 : 1;
}

inline int run_orbit(const Options& opt, const std::string& src,
                     std::ostream& out) {
  Element e = parse_element(strip_hash(src), opt.pool());
  std::vector<Element> orb = orbit(e, opt.group_spec(), opt.pool());
  if (opt.json_out()) {
    json members = json::array();
    for (const Element& x : orb) members.push_back(to_string(x));
    out << json{{"subject", to_string(e)},
                {"group", opt.group},
                {"orbit", std::move(members)},
                {"size", orb.size()}}
               .dump(2)
        << "\n";
  } else {
    for (const Element& x : orb) out << to_string(x) << "\n";
    out << "orbit size: " << orb.size() << "\n";
  }
  return 0;
}

inline int run_equivar(const Options& opt, const std::string& corpus_path,
                       const std::string& term_corpus_path,
                       std::ostream& out) {
  Universe u = opt.universe();
  auto corpus = load_formula_corpus(corpus_path, opt.pool());
  SuiteReport formulas = exhaustive_equivar_suite(u, corpus);
  SuiteReport terms;
  bool have_terms = !term_corpus_path.empty();
  if (have_terms)
    terms = exhaustive_term_equivar_suite(
        u, load_term_corpus(term_corpus_path, opt.pool()));
  if (opt.json_out()) {
    json j{{"params", params_json(opt)}, {"formulas", suite_json(formulas)}};
    if (have_terms) j["terms"] = suite_json(terms);
    out << j.dump(2) << "\n";
  } else {
    out << "# formula equivariance (" << params_text(opt) << ")\n";
    print_suite_text(out, formulas);
    if (have_terms) {
      out << "# term equivariance\n";
      print_suite_text(out, terms);
    }
  }
  return formulas.failures == 0 && terms.failures == 0 ? 0 : 1;
}

inline int run_axioms(const Options& opt, std::ostream& out) {
  Universe u = opt.universe();
  std::vector<AxiomReport> reports = audit_axioms(u);
  bool failed = false;
  for (const AxiomReport& r : reports)
    if (r.status == AxiomStatus::fails) failed = true;
  if (opt.json_out()) {
    json rows = json::array();
    for (const AxiomReport& r : reports) rows.push_back(axiom_json(r));
    out << json{{"params", params_json(opt)}, {"axioms", std::move(rows)}}
               .dump(2)
        << "\n";
  } else {
    out << "# axiom audit (" << params_text(opt) << ")\n";
    for (const AxiomReport& r : reports) out << to_string(r) << "\n";
  }
  return failed ? 1 : 0;
}

inline int run_tagged(const Options& opt, std::ostream& out) {
  Universe u = opt.universe();
  TaggedStages stages = build_N(opt.atoms, opt.universe_config());
  std::vector<AxiomReport> native = audit_axioms(u);
  std::vector<AxiomReport> tagged = audit_N(stages);
  std::vector<std::string> mismatches =
      audit_verdict_mismatches(native, tagged);
  IsoReport iso = iso_check(stages, u);
  bool failed = !mismatches.empty() || !iso.ok();
  for (const AxiomReport& r : tagged)
    if (r.status == AxiomStatus::fails) failed = true;
  if (opt.json_out()) {
    json jnative = json::array(), jtagged = json::array();
    for (const AxiomReport& r : native) jnative.push_back(axiom_json(r));
    for (const AxiomReport& r : tagged) jtagged.push_back(axiom_json(r));
    json j{{"params", params_json(opt)},
           {"native_audit", std::move(jnative)},
           {"tagged_audit", std::move(jtagged)},
           {"verdict_mismatches", mismatches},
           {"iso",
            json{{"ok", iso.ok()},
                 {"elements_mapped", iso.elements_mapped},
                 {"membership_pairs_checked", iso.membership_pairs_checked},
                 {"membership_mismatches", iso.membership_mismatches},
                 {"first_mismatch", iso.first_mismatch}}}};
    out << j.dump(2) << "\n";
  } else {
    out << "# tagged-model audit (" << params_text(opt) << ", "
        << stages.size() << " stage elements)\n";
    for (const AxiomReport& r : tagged) out << to_string(r) << "\n";
    out << "# verdict comparison against the native audit\n";
    if (mismatches.empty())
      out << "verdicts match axiom for axiom\n";
    else
      for (const std::string& m : mismatches) out << "MISMATCH " << m << "\n";
    out << "# isomorphism check\n" << to_string(iso) << "\n";
  }
  return failed ? 1 : 0;
}

inline int run_counterexample(const Options& opt, const std::string& kind,
                              std::ostream& out) {
  Universe u = opt.universe();
  if (kind == "naive-const") {
    NaiveConstantWitness w = find_naive_constant_counterexample(u);
    bool verified = verify_naive_witness(u, w);
    if (opt.json_out()) {
      out << json{{"kind", kind},
                  {"constant", to_string(w.constant)},
                  {"perm", to_string(w.perm)},
                  {"original", print_formula(w.original)},
                  {"original_sat", w.original_sat},
                  {"naive", print_formula(w.naive)},
                  {"naive_sat", w.naive_sat},
                  {"repaired", print_formula(w.repaired)},
                  {"repaired_sat", w.repaired_sat},
                  {"verified", verified}}
                 .dump(2)
          << "\n";
    } else {
      out << "rigid constant: " << to_string(w.constant) << "\n";
      out << "permutation:    " << to_string(w.perm) << "\n";
      out << "original:       " << print_formula(w.original) << "  ~> "
          << (w.original_sat ? "true" : "false") << "\n";
      out << "naive:          " << print_formula(w.naive) << "  ~> "
          << (w.naive_sat ? "true" : "false") << "\n";
      out << "repaired:       " << print_formula(w.repaired) << "  ~> "
          << (w.repaired_sat ? "true" : "false") << "\n";
      out << (verified ? "witness verified\n" : "WITNESS FAILED TO VERIFY\n");
    }
    return verified ? 0 : 1;
  }
  if (kind == "partial-permute") {
    PartialPermuteWitness w = find_partial_permute_counterexample(u);
    bool verified = verify_partial_witness(w);
    if (opt.json_out()) {
      out << json{{"kind", kind},
                  {"x", to_string(w.x)},
                  {"y", to_string(w.y)},
                  {"perm", to_string(w.perm)},
                  {"x_equals_y", w.x == w.y},
                  {"px_equals_y", act(w.perm, w.x) == w.y},
                  {"px_equals_py", act(w.perm, w.x) == act(w.perm, w.y)},
                  {"verified", verified}}
                 .dump(2)
          << "\n";
    } else {
      out << "x = " << to_string(w.x) << ", y = " << to_string(w.y)
          << ", perm = " << to_string(w.perm) << "\n";
      out << "x = y holds; act(perm, x) = y "
          << (act(w.perm, w.x) == w.y ? "holds" : "fails")
          << "; act(perm, x) = act(perm, y) "
          << (act(w.perm, w.x) == act(w.perm, w.y) ? "holds" : "fails")
          << "\n";
      out << (verified ? "witness verified\n" : "WITNESS FAILED TO VERIFY\n");
    }
    return verified ? 0 : 1;
  }
  throw Error("unknown counterexample kind: " + kind);
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  using cli_detail::Options;
  Options opt;

  CLI::App app{"desk-scale sets-with-atoms workbench"};
  app.option_defaults()->always_capture_default();
  app.add_option("--atoms", opt.atoms, "atom pool size")
      ->check(CLI::Range(1, 16));
  app.add_option("--rank", opt.rank, "universe rank bound")
      ->check(CLI::Range(0, 8));
  app.add_option("--subset-cap", opt.subset_cap,
                 "subset size cap for capped stages")
      ->check(CLI::Range(0, 32));
  app.add_option("--group", opt.group,
                 "permutation group: full | finitary:k | order[:a0<a1<...] | "
                 "permissive:lower:upper:k | shift:s0;s1;...");
  app.add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"text", "json", "json-like-structured"}));
  app.require_subcommand(1);

  std::string term_src, formula_src, elem_src, atoms_src, corpus_path,
      term_corpus_path, kind;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a closed term");
  eval->add_option("term", term_src, "term in the formula grammar")
      ->required();

  CLI::App* sat = app.add_subcommand("sat", "decide a closed formula");
  sat->add_option("formula", formula_src, "closed formula")->required();

  CLI::App* supp_cmd =
      app.add_subcommand("supp", "least support of an element");
  supp_cmd->add_option("element", elem_src, "element literal")->required();

  CLI::App* fresh_cmd =
      app.add_subcommand("fresh", "is an atom set fresh for an element");
  fresh_cmd->add_option("atoms", atoms_src, "atom set, e.g. \"{a0, a2}\"")
      ->required();
  fresh_cmd->add_option("element", elem_src, "element literal")->required();

  CLI::App* orbit_cmd =
      app.add_subcommand("orbit", "orbit of an element under the group");
  orbit_cmd->add_option("element", elem_src, "element literal")->required();

  CLI::App* equivar =
      app.add_subcommand("equivar", "equivariance suite over a corpus");
  equivar->add_option("--corpus", corpus_path, "formula corpus file")
      ->required();
  equivar->add_option("--terms", term_corpus_path, "term corpus file");

  app.add_subcommand("axioms", "audit the axioms over the universe");

  CLI::App* tagged = app.add_subcommand(
      "tagged", "build the tagged model, audit it, check the isomorphism");
  bool tagged_audit = false;
  tagged->add_flag("--audit", tagged_audit,
                   "run the audit and isomorphism check");

  CLI::App* counterexample = app.add_subcommand(
      "counterexample", "search for an equivariance misuse witness");
  counterexample
      ->add_option("kind", kind, "naive-const | partial-permute")
      ->required()
      ->check(CLI::IsMember({"naive-const", "partial-permute"}));

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("zfa");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    using namespace cli_detail;
    if (eval->parsed()) return run_eval(opt, term_src, out);
    if (sat->parsed()) return run_sat(opt, formula_src, out);
    if (supp_cmd->parsed()) return run_supp(opt, elem_src, out);
    if (fresh_cmd->parsed()) return run_fresh(opt, atoms_src, elem_src, out);
    if (orbit_cmd->parsed()) return run_orbit(opt, elem_src, out);
    if (equivar->parsed())
      return run_equivar(opt, corpus_path, term_corpus_path, out);
    if (app.get_subcommand("axioms")->parsed()) return run_axioms(opt, out);
    if (tagged->parsed()) {
      if (!tagged_audit) {
        err << "tagged: nothing to do; pass --audit\n";
        return 2;
      }
      return run_tagged(opt, out);
    }
    if (counterexample->parsed())
      return run_counterexample(opt, kind, out);
    err << "no subcommand given\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "infeasible parameters: " << e.what() << "\n";
    return 2;
  } catch (const EnumerationCapError& e) {
    err << "infeasible parameters: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace zfa
