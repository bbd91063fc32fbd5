#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zfa/element.hpp"

namespace zfa {

struct UniverseConfig {
  int rank_bound = 2;
  // Stages whose base exceeds full_closure_limit admit only subsets of at
  // most subset_cap members; smaller stages take the full powerset.
  int subset_cap = 3;
  int full_closure_limit = 16;
  std::size_t max_elements = 200000;
};

// The enumerated rank-bounded cumulative hierarchy over an atom pool:
// V_0 = atoms ∪ {∅}, V_{i+1} = V_i ∪ { sets of elements of V_i }, with the
// stage subset policy above. Elements are listed in a deterministic order
// (rank, then literal serialization) and the whole structure is immutable
// and closed under every pool permutation's action.
class Universe {
 public:
  const AtomPool& pool() const { return pool_; }
  const UniverseConfig& config() const { return cfg_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool contains(const Element& e) const { return index_.count(e) != 0; }

  // True if the stage admitted only capped subsets rather than the full
  // powerset of its base. Stage 0 is never capped.
  bool stage_capped(int stage) const {
    return stage >= 0 && stage < static_cast<int>(stage_capped_.size()) &&
           stage_capped_[static_cast<std::size_t>(stage)];
  }

  // Whether the generation rules would have included e: used to tell a
  // genuine frontier escape (rank or cap) from a leak in the enumeration.
  bool within_budget_rules(const Element& e) const {
    if (contains(e)) return true;
    if (e.is_atom()) return pool_.contains(e.as_atom());
    int r = rank(e);
    if (r > cfg_.rank_bound) return false;
    for (const Element& c : e.children())
      if (!contains(c)) return false;
    if (static_cast<int>(e.children().size()) <= cfg_.subset_cap) return true;
    for (int s = r; s <= cfg_.rank_bound; ++s)
      if (!stage_capped(s)) return true;
    return false;
  }

  // The set of all pool atoms, as an element.
  Element atoms_element() const {
    std::vector<Element> members;
    for (Atom a : pool_.atoms()) members.push_back(Element::atom(a));
    return Element::set(std::move(members));
  }

  friend Universe generate_universe(AtomPool pool, UniverseConfig cfg);

 private:
  Universe(AtomPool pool, UniverseConfig cfg) : pool_(pool), cfg_(cfg) {}

  AtomPool pool_;
  UniverseConfig cfg_;
  std::vector<Element> elements_;
  std::set<Element> index_;
  std::vector<bool> stage_capped_;
};

namespace detail {

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

// C(n, k) with saturation.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (result > UINT64_MAX / (n - i)) return UINT64_MAX;
    result = result * (n - i) / (i + 1);
  }
  return result;
}

template <typename Fn>
void for_each_subset_up_to(const std::vector<Element>& base, int max_size,
                           Fn&& fn) {
  std::vector<std::size_t> idx;
  // Size-0 subset, then all index combinations of each larger size.
  fn(std::vector<Element>{});
  for (int size = 1; size <= max_size; ++size) {
    if (size > static_cast<int>(base.size())) break;
    idx.assign(static_cast<std::size_t>(size), 0);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (true) {
      std::vector<Element> subset;
      subset.reserve(idx.size());
      for (std::size_t i : idx) subset.push_back(base[i]);
      fn(std::move(subset));
      // Advance the combination.
      int pos = size - 1;
      while (pos >= 0 &&
             idx[static_cast<std::size_t>(pos)] ==
                 base.size() - static_cast<std::size_t>(size - pos))
        --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (std::size_t i = static_cast<std::size_t>(pos) + 1;
           i < idx.size(); ++i)
        idx[i] = idx[i - 1] + 1;
    }
  }
}

}  // namespace detail

inline Universe generate_universe(AtomPool pool, UniverseConfig cfg = {}) {
  if (cfg.rank_bound < 0) throw Error("rank bound must be nonnegative");
  Universe u(pool, cfg);
  u.stage_capped_.assign(static_cast<std::size_t>(cfg.rank_bound) + 1, false);

  std::vector<Element> current;
  auto add = [&](Element e) {
    if (u.index_.insert(e).second) current.push_back(std::move(e));
  };
  for (Atom a : pool.atoms()) add(Element::atom(a));
  add(Element::empty_set());

  for (int stage = 1; stage <= cfg.rank_bound; ++stage) {
    std::vector<Element> base = current;  // cumulative V_{stage-1}
    bool full = static_cast<int>(base.size()) <= cfg.full_closure_limit;
    std::uint64_t projected;
    if (full) {
      projected = std::uint64_t{1} << base.size();
    } else {
      projected = 0;
      for (int j = 0; j <= cfg.subset_cap; ++j)
        projected = detail::saturating_add(
            projected, detail::binomial(base.size(),
                                        static_cast<std::uint64_t>(j)));
    }
    std::uint64_t total =
        detail::saturating_add(projected, current.size());
    if (total > cfg.max_elements)
      throw BudgetError(
          "universe budget exceeded at stage " + std::to_string(stage) +
              ": projected " + std::to_string(total) + " elements (cap " +
              std::to_string(cfg.max_elements) + ")",
          static_cast<std::size_t>(total));
    u.stage_capped_[static_cast<std::size_t>(stage)] = !full;
    if (full) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << base.size());
           ++mask) {
        std::vector<Element> members;
        for (std::size_t i = 0; i < base.size(); ++i)
          if (mask & (std::uint64_t{1} << i)) members.push_back(base[i]);
        add(Element::set(std::move(members)));
      }
    } else {
      detail::for_each_subset_up_to(base, cfg.subset_cap,
                                    [&](std::vector<Element> subset) {
                                      add(Element::set(std::move(subset)));
                                    });
    }
  }

  // Deterministic order: rank first, then literal serialization.
  std::vector<std::pair<std::pair<int, std::string>, Element>> keyed;
  keyed.reserve(current.size());
  for (Element& e : current) {
    std::pair<int, std::string> key{rank(e), to_string(e)};
    keyed.emplace_back(std::move(key), std::move(e));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  u.elements_.reserve(keyed.size());
  for (auto& [key, e] : keyed) u.elements_.push_back(std::move(e));
  return u;
}

inline Universe generate_universe(AtomPool pool, int rank_bound,
                                  int subset_cap) {
  UniverseConfig cfg;
  cfg.rank_bound = rank_bound;
  cfg.subset_cap = subset_cap;
  return generate_universe(pool, cfg);
}

}  // namespace zfa
