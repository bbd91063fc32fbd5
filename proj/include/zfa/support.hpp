#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "zfa/element.hpp"
#include "zfa/group_spec.hpp"
#include "zfa/universe.hpp"

namespace zfa {

// True iff every permutation fixing K pointwise also fixes x. Checked on the
// swapping generators of that subgroup, which suffices because the action is
// a group action.
inline bool supports(const AtomSet& K, const Element& x, AtomPool pool) {
  for (Atom a : K)
    if (!pool.contains(a))
      throw PoolMismatchError("support candidate outside the pool");
  for (Atom a : atoms_of(x))
    if (!pool.contains(a))
      throw PoolMismatchError("element mentions atoms outside the pool");
  for (const Perm& gen : fix_generators(K, pool))
    if (act(gen, x) != x) return false;
  return true;
}

namespace detail {

inline std::vector<AtomSet> all_subsets(const AtomSet& base) {
  std::vector<AtomSet> out;
  if (base.size() > 20)
    throw EnumerationCapError("atom set too large for a subset scan");
  std::vector<Atom> items(base.begin(), base.end());
  out.reserve(std::size_t{1} << items.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << items.size());
       ++mask) {
    AtomSet s;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask & (std::uint32_t{1} << i)) s.insert(items[i]);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<AtomSet> all_subsets(AtomPool pool) {
  return all_subsets(all_atoms(pool));
}

}  // namespace detail

// The candidate supports worth scanning are the subsets of atoms_of(x):
// atoms_of(x) always supports x, and over an unbounded atom supply a support
// intersected with atoms_of(x) still supports, so every minimal support
// lives there. Scanning arbitrary pool subsets instead would admit
// degenerate "supports" K whose fix-group is too small to test anything
// (for instance pool minus one atom, whose fix-group is trivial).
inline std::vector<AtomSet> support_candidates(const Element& x,
                                               AtomPool pool) {
  for (Atom a : atoms_of(x))
    if (!pool.contains(a))
      throw PoolMismatchError("element mentions atoms outside the pool");
  return detail::all_subsets(atoms_of(x));
}

// All ⊆-minimal supporting sets, by brute force over the candidate scan.
inline std::vector<AtomSet> minimal_supports(const Element& x, AtomPool pool) {
  std::vector<AtomSet> supporting;
  for (const AtomSet& K : support_candidates(x, pool))
    if (supports(K, x, pool)) supporting.push_back(K);
  std::vector<AtomSet> minimal;
  for (const AtomSet& K : supporting) {
    bool has_proper_subset = false;
    for (const AtomSet& J : supporting)
      if (J != K && is_subset(J, K)) {
        has_proper_subset = true;
        break;
      }
    if (!has_proper_subset) minimal.push_back(K);
  }
  return minimal;
}

// A pool is adequate for x when it leaves at least two atoms to spare; below
// that threshold a least support need not exist.
inline bool pool_adequate(const Element& x, AtomPool pool) {
  return pool.size() >= static_cast<int>(atoms_of(x).size()) + 2;
}

// Fast route, valid on adequate pools: a is in the support exactly when
// swapping it with a fresh atom disturbs x. One fresh witness decides, since
// swapping two non-occurring atoms never changes the canonical form.
inline AtomSet supp_fast(const Element& x, AtomPool pool) {
  AtomSet occurring = atoms_of(x);
  AtomSet out;
  for (Atom a : occurring) {
    for (Atom b : pool.atoms()) {
      if (b == a || occurring.count(b)) continue;
      if (act(swapping(pool, a, b), x) != x) out.insert(a);
      break;
    }
  }
  return out;
}

// The least supporting set. On adequate pools this is the fast route; on
// inadequate pools it falls back to the subset scan and reports when the
// minimal supports are incomparable.
inline AtomSet supp(const Element& x, AtomPool pool) {
  if (pool_adequate(x, pool)) return supp_fast(x, pool);
  std::vector<AtomSet> minimal = minimal_supports(x, pool);
  if (minimal.size() != 1)
    throw NoLeastSupportError(
        "no unique least support: " + std::to_string(minimal.size()) +
        " incomparable minimal supports over an inadequate pool of size " +
        std::to_string(pool.size()));
  return minimal.front();
}

// K is fresh for x when some supporting set of x is disjoint from K.
// Candidate supports live inside atoms_of(x) and support is closed under
// superset there, so it suffices to test atoms_of(x) minus K.
inline bool fresh(const AtomSet& K, const Element& x, AtomPool pool) {
  for (Atom a : K)
    if (!pool.contains(a))
      throw PoolMismatchError("freshness candidate outside the pool");
  return supports(set_difference(atoms_of(x), K), x, pool);
}

// Supported by the empty set: fixed by every pool permutation.
inline bool is_equivariant(const Element& x, AtomPool pool) {
  return supports(AtomSet{}, x, pool);
}

struct SupportReport {
  Element subject;
  std::vector<AtomSet> minimal_supports;
  bool has_least = false;
  AtomSet least;
  bool pool_adequate = false;
};

inline SupportReport support_report(const Element& x, AtomPool pool) {
  SupportReport report{x, minimal_supports(x, pool), false, {},
                       pool_adequate(x, pool)};
  if (report.minimal_supports.size() == 1) {
    report.has_least = true;
    report.least = report.minimal_supports.front();
  }
  return report;
}

inline std::string to_string(const SupportReport& r) {
  std::string out = "subject: " + to_string(r.subject) + "\n";
  out += "minimal supports:";
  for (const AtomSet& K : r.minimal_supports) out += " " + to_string(K);
  out += "\nleast: " + (r.has_least ? to_string(r.least) : std::string("none"));
  out += "\npool adequate: ";
  out += r.pool_adequate ? "yes" : "no";
  return out;
}

// --- orbits ------------------------------------------------------------------

// { act(p, x) : p in the spec's group }, deterministically ordered.
inline std::vector<Element> orbit(const Element& x, const PermGroupSpec& spec,
                                  AtomPool pool) {
  std::set<Element> seen;
  for (const Perm& p : enumerate_group(spec, pool)) seen.insert(act(p, x));
  return {seen.begin(), seen.end()};
}

inline std::vector<Element> orbit(const Element& x, AtomPool pool) {
  return orbit(x, FullGroup{}, pool);
}

// Number of orbit classes partitioning X. X must be closed under the group
// action; a witness whose image escapes is reported otherwise.
inline std::size_t orbit_count(const std::vector<Element>& X,
                               const PermGroupSpec& spec, AtomPool pool) {
  std::map<Element, std::size_t> index;
  for (std::size_t i = 0; i < X.size(); ++i) index.emplace(X[i], i);
  std::vector<Perm> group = enumerate_group(spec, pool);

  std::vector<std::size_t> parent(X.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };

  for (std::size_t i = 0; i < X.size(); ++i) {
    for (const Perm& p : group) {
      Element image = act(p, X[i]);
      auto it = index.find(image);
      if (it == index.end())
        throw NotClosedError("set is not closed under the group action: " +
                                 to_string(X[i]) + " maps to " +
                                 to_string(image) + " under " + to_string(p),
                             to_string(X[i]));
      parent[find(i)] = find(it->second);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < X.size(); ++i) roots.insert(find(i));
  return roots.size();
}

}  // namespace zfa
