// Acceptance suite: every check the library promises, run end to end at the
// stated scales, one pass/fail line per criterion. Exit code is the number
// of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zfa/cli.hpp"
#include "zfa/zfa.hpp"

using namespace zfa;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t checks = 0;
  std::string note;

  void expect(bool condition, const std::string& detail) {
    ++checks;
    if (!condition && ok) {
      ok = false;
      note = detail;
    }
  }
};

Element atom(int i) { return Element::atom(Atom{i}); }

std::vector<Element> stride_sample(const std::vector<Element>& pool_elems,
                                   std::size_t want,
                                   const std::function<bool(const Element&)>&
                                       keep = nullptr) {
  std::vector<Element> filtered;
  for (const Element& e : pool_elems)
    if (!keep || keep(e)) filtered.push_back(e);
  std::vector<Element> out;
  if (filtered.empty()) return out;
  std::size_t step = std::max<std::size_t>(1, filtered.size() / want);
  for (std::size_t i = 0; i < filtered.size() && out.size() < want; i += step)
    out.push_back(filtered[i]);
  return out;
}

// ---------------------------------------------------------------------------

// 1. Group-action laws over a 4-atom pool: identity and composition, all
//    24 x 24 permutation pairs on 100 sampled elements of rank <= 2.
Outcome group_action_laws() {
  Outcome o;
  AtomPool pool(4);
  Universe u = generate_universe(pool, 2, 3);
  std::vector<Element> sample = stride_sample(u.elements(), 100);
  o.expect(sample.size() == 100, "expected 100 sampled elements");
  std::vector<Perm> perms = enumerate_perms(pool);
  o.expect(perms.size() == 24, "expected 24 permutations");
  for (const Element& x : sample)
    o.expect(act(Perm(pool), x) == x, "identity law failed on " + to_string(x));
  for (const Perm& p : perms) {
    for (const Perm& q : perms) {
      Perm pq = compose(p, q);
      for (const Element& x : sample)
        o.expect(act(p, act(q, x)) == act(pq, x),
                 "composition law failed on " + to_string(x) + " with " +
                     to_string(p) + ", " + to_string(q));
    }
  }
  return o;
}

// 2. Each permutation acts as a bijection of the 19-element rank-1 universe.
Outcome action_is_bijection() {
  Outcome o;
  AtomPool pool(3);
  Universe u = generate_universe(pool, 1, 3);
  o.expect(u.size() == 19, "expected 19 elements");
  std::set<Element> original(u.elements().begin(), u.elements().end());
  for (const Perm& p : enumerate_perms(pool)) {
    std::set<Element> image;
    for (const Element& x : u.elements()) image.insert(act(p, x));
    o.expect(image == original,
             "action of " + to_string(p) + " is not a bijection");
  }
  return o;
}

// 3. Membership, equality and subset equivalences, exhaustively.
Outcome base_equivariance() {
  Outcome o;
  AtomPool pool(3);
  Universe u = generate_universe(pool, 1, 3);
  for (const Perm& p : enumerate_perms(pool))
    for (const Element& x : u.elements())
      for (const Element& y : u.elements()) {
        Element px = act(p, x), py = act(p, y);
        o.expect(x.contains(y) == px.contains(py),
                 "membership equivalence failed");
        o.expect((x == y) == (px == py), "equality equivalence failed");
        o.expect(subset_of(x, y) == subset_of(px, py),
                 "subset equivalence failed");
      }
  return o;
}

// 4. Transport of pairs, powersets and injective function-sets.
Outcome transport() {
  Outcome o;
  AtomPool pool(3);
  Universe u = generate_universe(pool, 1, 3);
  std::vector<Perm> perms = enumerate_perms(pool);
  for (const Perm& p : perms) {
    for (const Element& x : u.elements())
      for (const Element& y : u.elements())
        o.expect(act(p, kuratowski_pair(x, y)) ==
                     kuratowski_pair(act(p, x), act(p, y)),
                 "pair transport failed");
    for (const Element& x : u.elements()) {
      if (x.is_atom()) continue;
      o.expect(act(p, powerset(x)) == powerset(act(p, x)),
               "powerset transport failed on " + to_string(x));
    }
  }
  // Injective function-sets inside the universe (exhaustive over set
  // triples), plus every function graph over atom subsets.
  for (const Element& f : u.elements()) {
    if (f.is_atom()) continue;
    for (const Element& X : u.elements()) {
      if (X.is_atom()) continue;
      for (const Element& Y : u.elements()) {
        if (Y.is_atom()) continue;
        if (!is_injective_function_set(f, X, Y)) continue;
        for (const Perm& p : perms)
          o.expect(is_injective_function_set(act(p, f), act(p, X), act(p, Y)),
                   "in-universe injection transport failed");
      }
    }
  }
  std::vector<Element> subsets =
      powerset(Element::set({atom(0), atom(1), atom(2)})).children();
  for (const Element& X : subsets) {
    for (const Element& Y : subsets) {
      std::size_t nx = X.children().size(), ny = Y.children().size();
      std::vector<std::vector<int>> graphs(1);
      for (std::size_t i = 0; i < nx; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& g : graphs)
          for (std::size_t j = 0; j < ny; ++j) {
            next.push_back(g);
            next.back().push_back(static_cast<int>(j));
          }
        graphs = std::move(next);
      }
      for (const auto& g : graphs) {
        std::vector<Element> entries;
        for (std::size_t i = 0; i < nx; ++i)
          entries.push_back(kuratowski_pair(
              X.children()[i], Y.children()[static_cast<std::size_t>(g[i])]));
        Element graph = Element::set(std::move(entries));
        for (const Perm& p : perms)
          o.expect(is_injective_function_set(graph, X, Y) ==
                       is_injective_function_set(act(p, graph), act(p, X),
                                                 act(p, Y)),
                   "constructed-graph injection transport failed");
      }
    }
  }
  return o;
}

// 5. The shipped corpora hold under every permutation at default caps.
Outcome corpus_suites() {
  Outcome o;
  AtomPool pool(3);
  Universe u = generate_universe(pool, 2, 3);
  auto formulas = load_formula_corpus(
      std::string(ZFA_CORPUS_DIR) + "/formulas.zfa", pool);
  o.expect(formulas.size() >= 30, "corpus must hold at least 30 formulas");
  SuiteReport fr = exhaustive_equivar_suite(u, formulas);
  o.expect(fr.checks >= 180, "expected at least 180 formula checks");
  o.expect(fr.failures == 0, "formula suite reported failures");
  o.checks += fr.checks;

  auto terms =
      load_term_corpus(std::string(ZFA_CORPUS_DIR) + "/terms.zfa", pool);
  o.expect(!terms.empty(), "term corpus is empty");
  SuiteReport tr = exhaustive_term_equivar_suite(u, terms);
  o.expect(tr.failures == 0, "term suite reported failures");
  o.checks += tr.checks;
  return o;
}

// 6. Permuting after closing equals closing with permuted values, for pure
//    open formulas closed with every element of the rank-1 universe.
Outcome compact_form() {
  Outcome o;
  AtomPool pool(3);
  Universe u = generate_universe(pool, 1, 3);
  auto corpus = load_formula_corpus(
      std::string(ZFA_CORPUS_DIR) + "/open_formulas.zfa", pool);
  std::size_t usable = 0;
  std::vector<Perm> perms = enumerate_perms(pool);
  for (const auto& [src, f] : corpus) {
    NameSet names = fv(f);
    if (names.empty() || names.size() > 2 || !is_pure(*f)) continue;
    ++usable;
    std::vector<std::string> vars(names.begin(), names.end());
    auto close = [&](const std::vector<Element>& values) {
      FormulaPtr closed = f;
      for (std::size_t i = 0; i < vars.size(); ++i)
        closed = substitute(closed, vars[i], values[i]);
      return closed;
    };
    auto check_closing = [&](const std::vector<Element>& values) {
      for (const Perm& p : perms) {
        std::vector<Element> permuted;
        for (const Element& v : values) permuted.push_back(act(p, v));
        o.expect(equal(meta_act(p, close(values)), close(permuted)),
                 "compact form failed on " + src);
      }
    };
    if (vars.size() == 1) {
      for (const Element& x : u.elements()) check_closing({x});
    } else {
      for (const Element& x : u.elements())
        for (const Element& y : u.elements()) check_closing({x, y});
    }
  }
  o.expect(usable >= 10, "need at least 10 pure open formulas");
  return o;
}

// 7. Fast support equals the subset-scan least on adequate samples, and
//    supporting sets intersect to supporting sets.
Outcome support_oracle() {
  Outcome o;
  AtomPool pool(4);
  Universe u = generate_universe(pool, 2, 3);
  std::vector<Element> sample =
      stride_sample(u.elements(), 200, [](const Element& e) {
        return atoms_of(e).size() <= 2;
      });
  o.expect(sample.size() == 200, "expected 200 sampled elements");
  for (const Element& x : sample) {
    o.expect(pool_adequate(x, pool), "sample not adequate");
    std::vector<AtomSet> minimal = minimal_supports(x, pool);
    o.expect(minimal.size() == 1,
             "scan found no unique least for " + to_string(x));
    if (minimal.size() == 1)
      o.expect(supp(x, pool) == minimal.front(),
               "fast support disagrees with the scan on " + to_string(x));
    std::vector<AtomSet> supporting;
    for (const AtomSet& K : support_candidates(x, pool))
      if (supports(K, x, pool)) supporting.push_back(K);
    for (const AtomSet& C : supporting)
      for (const AtomSet& D : supporting)
        o.expect(supports(set_intersection(C, D), x, pool),
                 "intersection property failed on " + to_string(x));
  }
  return o;
}

// 8. Support, supports and freshness all transport along permutations.
Outcome support_equivariance() {
  Outcome o;
  AtomPool pool(4);
  Universe u = generate_universe(pool, 2, 3);
  std::vector<Element> sample =
      stride_sample(u.elements(), 200, [](const Element& e) {
        return atoms_of(e).size() <= 2;
      });
  std::vector<AtomSet> subsets = detail::all_subsets(pool);
  for (const Element& x : sample) {
    AtomSet sx = supp(x, pool);
    for (const Perm& p : enumerate_perms(pool)) {
      Element px = act(p, x);
      AtomSet image;
      for (Atom a : sx) image.insert(p(a));
      o.expect(image == supp(px, pool),
               "support transport failed on " + to_string(x));
      for (const AtomSet& K : subsets) {
        AtomSet pk;
        for (Atom a : K) pk.insert(p(a));
        o.expect(supports(K, x, pool) == supports(pk, px, pool),
                 "supports transport failed");
        o.expect(fresh(K, x, pool) == fresh(pk, px, pool),
                 "freshness transport failed");
      }
    }
  }
  return o;
}

// 9. The full atom set is equivariant; no single atom is.
Outcome atom_set_equivariance() {
  Outcome o;
  for (int n : {2, 3, 4}) {
    AtomPool pool(n);
    std::vector<Element> atoms;
    for (Atom a : pool.atoms()) atoms.push_back(Element::atom(a));
    o.expect(is_equivariant(Element::set(atoms), pool),
             "atom set not equivariant at pool " + std::to_string(n));
    for (Atom a : pool.atoms())
      o.expect(!is_equivariant(Element::atom(a), pool),
               "atom " + to_string(a) + " equivariant at pool " +
                   std::to_string(n));
  }
  return o;
}

// 10. Orbit counts, validated against an independent partition oracle.
Outcome orbit_counts() {
  Outcome o;
  AtomPool pool(3);
  std::vector<Perm> full = enumerate_perms(pool);
  auto oracle = [&](const std::vector<Element>& X) {
    std::set<Element> remaining(X.begin(), X.end());
    std::size_t classes = 0;
    while (!remaining.empty()) {
      ++classes;
      std::set<Element> orbit{*remaining.begin()};
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Element> snapshot(orbit.begin(), orbit.end());
        for (const Element& x : snapshot)
          for (const Perm& p : full)
            if (orbit.insert(act(p, x)).second) grew = true;
      }
      for (const Element& x : orbit) remaining.erase(x);
    }
    return classes;
  };

  std::vector<Element> atoms = {atom(0), atom(1), atom(2)};
  std::vector<Element> pairs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      pairs.push_back(kuratowski_pair(atom(i), atom(j)));
  std::vector<Element> subsets =
      powerset(Element::set({atom(0), atom(1), atom(2)})).children();

  struct Case {
    const char* name;
    const std::vector<Element>* family;
    std::size_t expected;
  } cases[] = {{"atoms", &atoms, 1},
               {"ordered pairs", &pairs, 2},
               {"powerset", &subsets, 4}};
  for (const Case& c : cases) {
    std::size_t counted = orbit_count(*c.family, FullGroup{}, pool);
    o.expect(counted == c.expected,
             std::string(c.name) + ": expected " +
                 std::to_string(c.expected) + " orbits, got " +
                 std::to_string(counted));
    o.expect(counted == oracle(*c.family),
             std::string(c.name) + ": disagrees with the partition oracle");
  }
  return o;
}

// 11. The axiom audit at pool 3, rank 1.
Outcome axiom_audit() {
  Outcome o;
  Universe u = generate_universe(AtomPool(3), 1, 3);
  std::vector<AxiomReport> reports = audit_axioms(u);
  auto status_of = [&](const std::string& name) {
    for (const AxiomReport& r : reports)
      if (r.axiom == name) return r.status;
    return AxiomStatus::fails;
  };
  for (const char* name :
       {"AtmEmpty", "EmptySet", "Extensionality", "Pair", "Union", "Powerset",
        "Comprehension", "Induction", "Choice"})
    o.expect(status_of(name) == AxiomStatus::holds,
             std::string(name) + " did not hold");
  for (const char* name : {"Infinity", "AtmInf", "Replacement"}) {
    o.expect(status_of(name) == AxiomStatus::skipped,
             std::string(name) + " was not skipped");
    for (const AxiomReport& r : reports)
      if (r.axiom == name)
        o.expect(r.detail == kInfiniteSkipReason,
                 std::string(name) + " lacks the skip reason");
  }
  // Leak-freedom below the frontier: every escaped result must be excused
  // by the budget rules, which the auditor reports as a failure otherwise.
  for (const AxiomReport& r : reports)
    o.expect(r.status != AxiomStatus::fails, r.axiom + " failed: " + r.detail);
  return o;
}

// 12. The tagged construction: audits agree verdict for verdict and the
//     canonical map is a membership isomorphism.
Outcome tagged_construction() {
  Outcome o;
  Universe u = generate_universe(AtomPool(3), 1, 3);
  TaggedStages st = build_N(3, 1, 3);
  std::vector<AxiomReport> native = audit_axioms(u);
  std::vector<AxiomReport> tagged = audit_N(st);
  std::vector<std::string> mismatches = audit_verdict_mismatches(native, tagged);
  o.expect(mismatches.empty(),
           mismatches.empty() ? "" : "verdict mismatch: " + mismatches.front());
  IsoReport iso = iso_check(st, u);
  o.expect(iso.parameters_match, "parameters do not match");
  o.expect(iso.injective && iso.surjective, "map is not a bijection");
  o.expect(iso.membership_mismatches == 0,
           "membership mismatches: " + iso.first_mismatch);
  o.checks += iso.membership_pairs_checked;
  return o;
}

// 13. Both misuse searches return verified witnesses whose full-permutation
//     repair restores the equivalence.
Outcome counterexamples() {
  Outcome o;
  for (int n : {2, 3}) {
    Universe u = generate_universe(AtomPool(n), 1, 3);
    NaiveConstantWitness nw = find_naive_constant_counterexample(u);
    o.expect(nw.original_sat != nw.naive_sat,
             "naive witness shows no discrepancy");
    o.expect(verify_naive_witness(u, nw),
             "naive witness failed re-verification");
    o.expect(nw.repaired_sat == nw.original_sat,
             "full permutation did not restore equivalence");
    PartialPermuteWitness pw = find_partial_permute_counterexample(u);
    o.expect(verify_partial_witness(pw),
             "partial witness failed re-verification");
    o.expect(act(pw.perm, pw.x) == act(pw.perm, pw.y),
             "permuting both sides did not restore equality");
  }
  return o;
}

// 14. Printing then parsing is the identity, on the corpora and on 500
//     random core ASTs of depth <= 5.
Outcome parser_round_trip() {
  Outcome o;
  AtomPool pool(3);
  auto formulas = load_formula_corpus(
      std::string(ZFA_CORPUS_DIR) + "/formulas.zfa", pool);
  auto open = load_formula_corpus(
      std::string(ZFA_CORPUS_DIR) + "/open_formulas.zfa", pool);
  auto terms =
      load_term_corpus(std::string(ZFA_CORPUS_DIR) + "/terms.zfa", pool);
  for (const auto& [src, f] : formulas)
    o.expect(equal(parse_formula(print_formula(f), pool), f),
             "round trip failed on " + src);
  for (const auto& [src, f] : open)
    o.expect(equal(parse_formula(print_formula(f), pool), f),
             "round trip failed on " + src);
  for (const auto& [src, t] : terms)
    o.expect(equal(parse_term(print_term(t), pool), t),
             "round trip failed on " + src);

  std::mt19937 rng(424243);
  auto pick = [&](int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
  };
  std::function<Element(int)> element = [&](int depth) -> Element {
    if (depth == 0 || pick(2) == 0) return Element::atom(Atom{pick(3)});
    std::vector<Element> members;
    int n = pick(3);
    for (int i = 0; i < n; ++i) members.push_back(element(depth - 1));
    return Element::set(std::move(members));
  };
  auto name = [&]() {
    static const char* names[] = {"x", "y", "z", "v", "w"};
    return std::string(names[pick(5)]);
  };
  std::function<TermPtr(int)> term = [&](int depth) -> TermPtr {
    switch (pick(depth <= 0 ? 4 : 8)) {
      case 0: return mk_var(name());
      case 1: return mk_empty();
      case 2: return mk_atoms();
      case 3: return mk_elem(element(2));
      case 4: return mk_pairset(term(depth - 1), term(depth - 1));
      case 5: return mk_powerset(term(depth - 1));
      case 6: return mk_union(term(depth - 1));
      default: return mk_comprehension(name(), term(depth - 1), mk_bot());
    }
  };
  std::function<FormulaPtr(int)> formula = [&](int depth) -> FormulaPtr {
    switch (pick(depth <= 0 ? 3 : 7)) {
      case 0: return mk_bot();
      case 1: return mk_eq(term(depth - 1), term(depth - 1));
      case 2: return mk_mem(term(depth - 1), term(depth - 1));
      case 3: return mk_and(formula(depth - 1), formula(depth - 1));
      case 4: return mk_not(formula(depth - 1));
      case 5: return mk_implies(formula(depth - 1), formula(depth - 1));
      default: return mk_forall(name(), formula(depth - 1));
    }
  };
  for (int i = 0; i < 400; ++i) {
    FormulaPtr f = formula(5);
    o.expect(equal(parse_formula(print_formula(f), pool), f),
             "round trip failed on a random formula");
  }
  for (int i = 0; i < 100; ++i) {
    TermPtr t = term(5);
    o.expect(equal(parse_term(print_term(t), pool), t),
             "round trip failed on a random term");
  }
  return o;
}

// 15. Order-respecting permutation groups degenerate to the identity.
Outcome order_degeneracy() {
  Outcome o;
  AtomPool pool(3);
  std::vector<std::vector<Atom>> orders = {
      {Atom{0}, Atom{1}, Atom{2}}, {Atom{1}, Atom{0}, Atom{2}},
      {Atom{2}, Atom{1}, Atom{0}}, {Atom{1}, Atom{2}, Atom{0}},
      {Atom{0}, Atom{2}, Atom{1}}, {Atom{2}, Atom{0}, Atom{1}},
  };
  for (const auto& order : orders) {
    PermGroupSpec spec = OrderRespectingGroup{order};
    for (const Perm& p : enumerate_perms(pool))
      o.expect(in_group(p, spec) == p.is_identity(),
               "order-respecting admitted " + to_string(p));
  }
  return o;
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> run;
  double time_limit_seconds;  // 0: no limit pinned
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {1, "group-action laws (4-atom pool, 24 perms, 100 elements)",
       group_action_laws, 10.0},
      {2, "each permutation acts bijectively on the rank-1 universe",
       action_is_bijection, 0},
      {3, "membership/equality/subset equivalences, exhaustive",
       base_equivariance, 0},
      {4, "pair, powerset and injective function-set transport", transport, 0},
      {5, "corpus equivariance suites at default caps", corpus_suites, 60.0},
      {6, "compact form: meta action equals substitution of permuted values",
       compact_form, 0},
      {7, "fast support agrees with the subset-scan oracle; intersection "
          "property",
       support_oracle, 0},
      {8, "support and freshness transport along permutations",
       support_equivariance, 0},
      {9, "the atom set is equivariant, single atoms are not",
       atom_set_equivariance, 0},
      {10, "orbit counts: atoms 1, ordered pairs 2, powerset 4",
       orbit_counts, 0},
      {11, "axiom audit holds at pool 3 rank 1, with the stated skips",
       axiom_audit, 0},
      {12, "tagged construction: audits agree and the map is an isomorphism",
       tagged_construction, 30.0},
      {13, "misuse counterexamples found, verified and repaired",
       counterexamples, 0},
      {14, "parse of print is the identity (corpora + 500 random ASTs)",
       parser_round_trip, 0},
      {15, "order-respecting groups admit exactly the identity",
       order_degeneracy, 0},
  };

  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.number != only) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.time_limit_seconds > 0 && seconds > c.time_limit_seconds) {
      o.ok = false;
      o.note = "time limit exceeded: " + std::to_string(seconds) + "s > " +
               std::to_string(c.time_limit_seconds) + "s";
    }
    std::printf("[%s] %2d %s (%zu checks, %.2fs)%s%s\n",
                o.ok ? "PASS" : "FAIL", c.number, c.name, o.checks, seconds,
                o.note.empty() ? "" : " — ", o.note.c_str());
    if (!o.ok) ++failures;
  }
  return failures;
}
