#pragma once

#include <map>
#include <string>
#include <vector>

#include "zfa/ast.hpp"
#include "zfa/printer.hpp"
#include "zfa/universe.hpp"

namespace zfa {

// Denotation of closed terms and satisfaction of closed formulas over an
// enumerated universe. Quantifiers range over the universe's element list;
// every constructed or constant element must lie inside the universe, and
// anything that escapes its rank/size budget raises OutOfUniverseError with
// the witness rather than being truncated.
//
// Evaluation carries an environment binding quantified variables to
// elements. Binding a variable to x and evaluating is equivalent to
// substituting the constant x, since only closed values are ever bound.

namespace detail {

using Env = std::map<std::string, Element>;

inline Element require_in_universe(const Universe& u, Element e,
                                   const char* what) {
  if (!u.contains(e))
    throw OutOfUniverseError(std::string(what) +
                                 " produced an element outside the universe: " +
                                 to_string(e),
                             to_string(e));
  return e;
}

inline Element denote_env(const Term& t, const Universe& u, Env& env);
inline bool sat_env(const Formula& f, const Universe& u, Env& env);

inline Element denote_env(const Term& t, const Universe& u, Env& env) {
  return std::visit(
      [&](const auto& n) -> Element {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarTerm>) {
          auto it = env.find(n.name);
          if (it == env.end())
            throw OpenTermError("unbound variable " + n.name +
                                "; substitute element constants first");
          return it->second;
        } else if constexpr (std::is_same_v<T, PairSetTerm>) {
          Element l = denote_env(*n.left, u, env);
          Element r = denote_env(*n.right, u, env);
          return require_in_universe(u, Element::set({l, r}), "pairset");
        } else if constexpr (std::is_same_v<T, PowersetTerm>) {
          return require_in_universe(
              u, powerset(denote_env(*n.arg, u, env)), "pow");
        } else if constexpr (std::is_same_v<T, UnionTerm>) {
          return require_in_universe(
              u, big_union(denote_env(*n.arg, u, env)), "Union");
        } else if constexpr (std::is_same_v<T, ComprehensionTerm>) {
          Element domain = denote_env(*n.domain, u, env);
          std::vector<Element> kept;
          if (domain.is_set()) {
            auto saved = env.find(n.binder);
            bool had = saved != env.end();
            Element old = had ? saved->second : Element::empty_set();
            for (const Element& x : domain.children()) {
              env.insert_or_assign(n.binder, x);
              if (sat_env(*n.body, u, env)) kept.push_back(x);
            }
            if (had)
              env.insert_or_assign(n.binder, old);
            else
              env.erase(n.binder);
          }
          // An atom domain has no members, so the comprehension is empty.
          return require_in_universe(u, Element::set(std::move(kept)),
                                     "comprehension");
        } else if constexpr (std::is_same_v<T, EmptyTerm>) {
          return require_in_universe(u, Element::empty_set(), "empty");
        } else if constexpr (std::is_same_v<T, AtomsTerm>) {
          return require_in_universe(u, u.atoms_element(), "Atoms");
        } else {
          static_assert(std::is_same_v<T, ElemTerm>);
          return require_in_universe(u, n.value, "element constant");
        }
      },
      t.node);
}

inline bool sat_env(const Formula& f, const Universe& u, Env& env) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, EqFormula>) {
          return denote_env(*n.left, u, env) == denote_env(*n.right, u, env);
        } else if constexpr (std::is_same_v<T, MemFormula>) {
          Element container = denote_env(*n.container, u, env);
          Element elem = denote_env(*n.element, u, env);
          return container.contains(elem);  // false for atom containers
        } else if constexpr (std::is_same_v<T, BotFormula>) {
          return false;
        } else if constexpr (std::is_same_v<T, AndFormula>) {
          return sat_env(*n.left, u, env) && sat_env(*n.right, u, env);
        } else if constexpr (std::is_same_v<T, NotFormula>) {
          return !sat_env(*n.arg, u, env);
        } else if constexpr (std::is_same_v<T, ImpliesFormula>) {
          return !sat_env(*n.antecedent, u, env) ||
                 sat_env(*n.consequent, u, env);
        } else {
          static_assert(std::is_same_v<T, ForallFormula>);
          auto saved = env.find(n.binder);
          bool had = saved != env.end();
          Element old = had ? saved->second : Element::empty_set();
          bool all = true;
          for (const Element& x : u.elements()) {
            env.insert_or_assign(n.binder, x);
            if (!sat_env(*n.body, u, env)) {
              all = false;
              break;
            }
          }
          if (had)
            env.insert_or_assign(n.binder, old);
          else
            env.erase(n.binder);
          return all;
        }
      },
      f.node);
}

}  // namespace detail

inline Element denote(const Term& t, const Universe& u) {
  NameSet free = fv(t);
  if (!free.empty())
    throw OpenTermError("denote needs a closed term; free: {" +
                        detail::fv_list(free) + "}");
  detail::Env env;
  return detail::denote_env(t, u, env);
}
inline Element denote(const TermPtr& t, const Universe& u) {
  return denote(*t, u);
}

inline bool satisfies(const Universe& u, const Formula& f) {
  NameSet free = fv(f);
  if (!free.empty())
    throw OpenTermError("satisfaction needs a closed formula; free: {" +
                        detail::fv_list(free) + "}");
  detail::Env env;
  return detail::sat_env(f, u, env);
}
inline bool satisfies(const Universe& u, const FormulaPtr& f) {
  return satisfies(u, *f);
}

}  // namespace zfa
