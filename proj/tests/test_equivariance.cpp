#include <catch2/catch_amalgamated.hpp>

#include "zfa/equivariance.hpp"

using namespace zfa;

namespace {

const AtomPool kPool(3);

}  // namespace

TEST_CASE("formula equivariance checks") {
  Universe u = generate_universe(kPool, 1, 3);
  Perm s01 = swapping(kPool, Atom{0}, Atom{1});

  // A pure closed formula is untouched by the meta action.
  FormulaPtr pure = parse_formula("forall x. x = x", kPool);
  FormulaEquivarCheck c = check_formula_equivariance(u, s01, pure);
  CHECK(c.holds);
  CHECK(c.original_sat);

  c = check_formula_equivariance(u, s01, parse_formula("#a0 = #a0", kPool));
  CHECK(c.holds);
  CHECK(c.original_sat);
  CHECK(c.permuted_sat);

  for (const Perm& p : enumerate_perms(kPool)) {
    c = check_formula_equivariance(
        u, p, parse_formula("#a0 in #{a0, a1}", kPool));
    CHECK(c.holds);
  }

  CHECK_THROWS_AS(
      check_formula_equivariance(u, s01, parse_formula("x = x", kPool)),
      OpenTermError);
}

TEST_CASE("term equivariance checks") {
  Universe u = generate_universe(kPool, 2, 3);
  for (const Perm& p : enumerate_perms(kPool)) {
    CHECK(check_term_equivariance(u, p, parse_term("empty", kPool)).holds);
    CHECK(check_term_equivariance(u, p, parse_term("Atoms", kPool)).holds);
  }
  Perm s01 = swapping(kPool, Atom{0}, Atom{1});
  TermEquivarCheck t =
      check_term_equivariance(u, s01, parse_term("pow(#{a0})", kPool));
  CHECK(t.holds);
  CHECK(t.via_action == powerset(Element::set({Element::atom(Atom{1})})));
}

TEST_CASE("the suite over an empty corpus is empty") {
  Universe u = generate_universe(kPool, 1, 3);
  SuiteReport r = exhaustive_equivar_suite(u, {});
  CHECK(r.checks == 0);
  CHECK(r.failures == 0);
  CHECK(r.rows.empty());
}

TEST_CASE("the suite runs the shipped corpus without failures") {
  Universe u = generate_universe(kPool, 2, 3);
  auto corpus = load_formula_corpus(
      std::string(ZFA_CORPUS_DIR) + "/formulas.zfa", kPool);
  SuiteReport r = exhaustive_equivar_suite(u, corpus);
  CHECK(r.checks == corpus.size() * 6);
  CHECK(r.failures == 0);

  auto terms =
      load_term_corpus(std::string(ZFA_CORPUS_DIR) + "/terms.zfa", kPool);
  SuiteReport tr = exhaustive_term_equivar_suite(u, terms);
  CHECK(tr.checks == terms.size() * 6);
  CHECK(tr.failures == 0);
}

TEST_CASE("the suite reports rather than hides evaluation errors") {
  Universe u = generate_universe(kPool, 1, 3);
  std::vector<std::pair<std::string, FormulaPtr>> corpus = {
      {"pow(Atoms) = pow(Atoms)",
       parse_formula("pow(Atoms) = pow(Atoms)", kPool)}};
  SuiteReport r = exhaustive_equivar_suite(u, corpus);
  CHECK(r.failures == 6);
  CHECK_FALSE(r.rows.front().note.empty());
}

TEST_CASE("naive constant counterexample") {
  Universe u = generate_universe(kPool, 1, 3);
  NaiveConstantWitness w = find_naive_constant_counterexample(u);
  CHECK(verify_naive_witness(u, w));
  CHECK(w.original_sat != w.naive_sat);
  CHECK(w.repaired_sat == w.original_sat);
  // The first witness found is the classic one: a0 = a0 becomes a1 = a0
  // when the swap is applied to only one side.
  CHECK(print_formula(w.original) == "#a0 = #a0");
  CHECK(print_formula(w.naive) == "#a1 = #a0");
  CHECK(to_string(w.perm) == "(a0 a1)");
  CHECK(w.constant == Atom{0});
}

TEST_CASE("partial permute counterexample") {
  Universe u = generate_universe(kPool, 1, 3);
  PartialPermuteWitness w = find_partial_permute_counterexample(u);
  CHECK(verify_partial_witness(w));
  CHECK(w.x == w.y);
  CHECK(act(w.perm, w.x) != w.y);
  CHECK(act(w.perm, w.x) == act(w.perm, w.y));
}

TEST_CASE("searches need at least two atoms") {
  Universe u = generate_universe(AtomPool(1), 1, 3);
  CHECK_THROWS_AS(find_naive_constant_counterexample(u),
                  SearchExhaustedError);
  CHECK_THROWS_AS(find_partial_permute_counterexample(u),
                  SearchExhaustedError);
}

TEST_CASE("searches respect their budget") {
  Universe u = generate_universe(kPool, 1, 3);
  CHECK_THROWS_AS(find_naive_constant_counterexample(u, 1),
                  SearchExhaustedError);
}

TEST_CASE("counterexamples exist on a two-atom pool") {
  Universe u = generate_universe(AtomPool(2), 1, 3);
  CHECK(verify_naive_witness(u, find_naive_constant_counterexample(u)));
  CHECK(verify_partial_witness(find_partial_permute_counterexample(u)));
}
