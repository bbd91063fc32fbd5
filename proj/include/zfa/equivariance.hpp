#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zfa/parser.hpp"
#include "zfa/semantics.hpp"

namespace zfa {

// Executable equivariance: permuting atoms uniformly in all embedded
// constants changes neither satisfaction nor denotation. The suites run the
// checks over a corpus and every pool permutation; the counterexample
// searches exhibit what goes wrong when the permutation is applied to only
// some of the parameters.

struct FormulaEquivarCheck {
  bool holds = false;
  bool original_sat = false;
  bool permuted_sat = false;
};

inline FormulaEquivarCheck check_formula_equivariance(const Universe& u,
                                                      const Perm& p,
                                                      const FormulaPtr& f) {
  FormulaEquivarCheck out;
  out.original_sat = satisfies(u, f);
  out.permuted_sat = satisfies(u, meta_act(p, f));
  out.holds = out.original_sat == out.permuted_sat;
  return out;
}

struct TermEquivarCheck {
  bool holds = false;
  Element via_action = Element::empty_set();  // act(p, denote(s))
  Element via_syntax = Element::empty_set();  // denote(meta_act(p, s))
};

inline TermEquivarCheck check_term_equivariance(const Universe& u,
                                                const Perm& p,
                                                const TermPtr& s) {
  TermEquivarCheck out;
  out.via_action = act(p, denote(s, u));
  out.via_syntax = denote(meta_act(p, s), u);
  out.holds = out.via_action == out.via_syntax;
  return out;
}

struct SuiteRow {
  std::string input;
  std::string perm;
  bool holds = false;
  std::string note;  // failure detail or error text
};

struct SuiteReport {
  std::vector<SuiteRow> rows;
  std::size_t checks = 0;
  std::size_t failures = 0;
};

// Every corpus formula against every pool permutation. Evaluation errors
// count as failures; the expected outcome is zero of either.
inline SuiteReport exhaustive_equivar_suite(
    const Universe& u,
    const std::vector<std::pair<std::string, FormulaPtr>>& corpus) {
  SuiteReport report;
  std::vector<Perm> perms = enumerate_perms(u.pool());
  for (const auto& [source, formula] : corpus) {
    for (const Perm& p : perms) {
      SuiteRow row{source, to_string(p), false, ""};
      ++report.checks;
      try {
        FormulaEquivarCheck check = check_formula_equivariance(u, p, formula);
        row.holds = check.holds;
        if (!check.holds)
          row.note = std::string("satisfaction changed: ") +
                     (check.original_sat ? "true" : "false") + " vs " +
                     (check.permuted_sat ? "true" : "false");
      } catch (const Error& e) {
        row.holds = false;
        row.note = e.what();
      }
      if (!row.holds) ++report.failures;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

inline SuiteReport exhaustive_term_equivar_suite(
    const Universe& u,
    const std::vector<std::pair<std::string, TermPtr>>& corpus) {
  SuiteReport report;
  std::vector<Perm> perms = enumerate_perms(u.pool());
  for (const auto& [source, term] : corpus) {
    for (const Perm& p : perms) {
      SuiteRow row{source, to_string(p), false, ""};
      ++report.checks;
      try {
        TermEquivarCheck check = check_term_equivariance(u, p, term);
        row.holds = check.holds;
        if (!check.holds)
          row.note = "denotations differ: " + to_string(check.via_action) +
                     " vs " + to_string(check.via_syntax);
      } catch (const Error& e) {
        row.holds = false;
        row.note = e.what();
      }
      if (!row.holds) ++report.failures;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

// --- misuse counterexamples ---------------------------------------------------

// Witness that keeping a rigid atom constant fixed while permuting the other
// parameters breaks the equivalence, and that permuting everything restores
// it.
struct NaiveConstantWitness {
  FormulaPtr original;   // closed, mentions the rigid constant
  FormulaPtr naive;      // filled values permuted, constant left fixed
  FormulaPtr repaired;   // everything permuted
  Perm perm{AtomPool(1)};
  Atom constant;
  bool original_sat = false;
  bool naive_sat = false;
  bool repaired_sat = false;
};

inline bool verify_naive_witness(const Universe& u,
                                 const NaiveConstantWitness& w) {
  bool orig = satisfies(u, w.original);
  bool naive = satisfies(u, w.naive);
  bool repaired = satisfies(u, w.repaired);
  return orig != naive && repaired == orig;
}

// Bounded search over (template, constant, filling, permutation). Pure
// templates mention a varying slot v and a rigid slot c; the naive transform
// permutes only v's filling.
inline NaiveConstantWitness find_naive_constant_counterexample(
    const Universe& u, std::size_t budget = 100000) {
  if (u.pool().size() < 2)
    throw SearchExhaustedError(
        "naive-constant counterexamples need a pool of at least 2 atoms");
  std::vector<FormulaPtr> templates = {
      // v = c
      mk_eq(mk_var("v"), mk_var("c")),
      // v in {c, c}
      mk_mem(mk_var("v"), mk_pairset(mk_var("c"), mk_var("c"))),
      // c in {v, v}
      mk_mem(mk_var("c"), mk_pairset(mk_var("v"), mk_var("v"))),
      // ~(v = c)
      mk_not(mk_eq(mk_var("v"), mk_var("c"))),
  };
  std::vector<Perm> perms = enumerate_perms(u.pool());
  std::size_t nodes = 0;
  for (const FormulaPtr& tpl : templates) {
    for (Atom c : u.pool().atoms()) {
      Element c_elem = Element::atom(c);
      FormulaPtr with_c = substitute(tpl, "c", c_elem);
      for (const Element& x : u.elements()) {
        FormulaPtr original = substitute(with_c, "v", x);
        for (const Perm& p : perms) {
          if (++nodes > budget)
            throw SearchExhaustedError(
                "naive-constant search budget exhausted after " +
                std::to_string(budget) + " nodes");
          if (p.is_identity()) continue;
          FormulaPtr naive = substitute(with_c, "v", act(p, x));
          bool orig_sat = satisfies(u, original);
          bool naive_sat = satisfies(u, naive);
          if (orig_sat != naive_sat) {
            NaiveConstantWitness w;
            w.original = original;
            w.naive = naive;
            w.repaired = meta_act(p, original);
            w.perm = p;
            w.constant = c;
            w.original_sat = orig_sat;
            w.naive_sat = naive_sat;
            w.repaired_sat = satisfies(u, w.repaired);
            return w;
          }
        }
      }
    }
  }
  throw SearchExhaustedError("no naive-constant counterexample found");
}

// Witness that permuting only one side of a true equation breaks it, while
// permuting both sides preserves it.
struct PartialPermuteWitness {
  Element x = Element::empty_set();
  Element y = Element::empty_set();
  Perm perm{AtomPool(1)};
};

inline bool verify_partial_witness(const PartialPermuteWitness& w) {
  return w.x == w.y && act(w.perm, w.x) != w.y &&
         act(w.perm, w.x) == act(w.perm, w.y);
}

inline PartialPermuteWitness find_partial_permute_counterexample(
    const Universe& u, std::size_t budget = 100000) {
  if (u.pool().size() < 2)
    throw SearchExhaustedError(
        "partial-permute counterexamples need a pool of at least 2 atoms");
  std::vector<Perm> perms = enumerate_perms(u.pool());
  std::size_t nodes = 0;
  for (const Element& x : u.elements()) {
    for (const Perm& p : perms) {
      if (++nodes > budget)
        throw SearchExhaustedError(
            "partial-permute search budget exhausted after " +
            std::to_string(budget) + " nodes");
      if (act(p, x) != x) {
        PartialPermuteWitness w;
        w.x = x;
        w.y = x;
        w.perm = p;
        return w;
      }
    }
  }
  throw SearchExhaustedError("no partial-permute counterexample found");
}

}  // namespace zfa
