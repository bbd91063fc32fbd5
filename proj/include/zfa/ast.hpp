#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "zfa/element.hpp"

namespace zfa {

// Abstract syntax for the language of sets with atoms. Terms may embed
// concrete elements as constants; a term or formula with no such constants
// is called pure. Or, Iff, Exists and subset exist only in concrete syntax
// and desugar on parse; Not and Implies are first-class because the
// bot/and/forall fragment cannot express them.

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

struct VarTerm {
  std::string name;
};
struct PairSetTerm {
  TermPtr left, right;
};
struct PowersetTerm {
  TermPtr arg;
};
struct UnionTerm {
  TermPtr arg;
};
struct ComprehensionTerm {
  std::string binder;  // bound within body only
  TermPtr domain;
  FormulaPtr body;
};
struct EmptyTerm {};
struct AtomsTerm {};
struct ElemTerm {
  Element value;
};

struct Term {
  std::variant<VarTerm, PairSetTerm, PowersetTerm, UnionTerm,
               ComprehensionTerm, EmptyTerm, AtomsTerm, ElemTerm>
      node;
};

struct EqFormula {
  TermPtr left, right;
};
struct MemFormula {
  TermPtr element, container;  // element in container
};
struct BotFormula {};
struct AndFormula {
  FormulaPtr left, right;
};
struct NotFormula {
  FormulaPtr arg;
};
struct ImpliesFormula {
  FormulaPtr antecedent, consequent;
};
struct ForallFormula {
  std::string binder;
  FormulaPtr body;
};

struct Formula {
  std::variant<EqFormula, MemFormula, BotFormula, AndFormula, NotFormula,
               ImpliesFormula, ForallFormula>
      node;
};

// --- builders ----------------------------------------------------------------

inline TermPtr mk_var(std::string name) {
  return std::make_shared<Term>(Term{VarTerm{std::move(name)}});
}
inline TermPtr mk_pairset(TermPtr l, TermPtr r) {
  return std::make_shared<Term>(Term{PairSetTerm{std::move(l), std::move(r)}});
}
inline TermPtr mk_powerset(TermPtr s) {
  return std::make_shared<Term>(Term{PowersetTerm{std::move(s)}});
}
inline TermPtr mk_union(TermPtr s) {
  return std::make_shared<Term>(Term{UnionTerm{std::move(s)}});
}
inline TermPtr mk_comprehension(std::string binder, TermPtr domain,
                                FormulaPtr body) {
  return std::make_shared<Term>(
      Term{ComprehensionTerm{std::move(binder), std::move(domain),
                             std::move(body)}});
}
inline TermPtr mk_empty() { return std::make_shared<Term>(Term{EmptyTerm{}}); }
inline TermPtr mk_atoms() { return std::make_shared<Term>(Term{AtomsTerm{}}); }
inline TermPtr mk_elem(Element value) {
  return std::make_shared<Term>(Term{ElemTerm{std::move(value)}});
}

inline FormulaPtr mk_eq(TermPtr l, TermPtr r) {
  return std::make_shared<Formula>(Formula{EqFormula{std::move(l), std::move(r)}});
}
inline FormulaPtr mk_mem(TermPtr elem, TermPtr container) {
  return std::make_shared<Formula>(
      Formula{MemFormula{std::move(elem), std::move(container)}});
}
inline FormulaPtr mk_bot() {
  return std::make_shared<Formula>(Formula{BotFormula{}});
}
inline FormulaPtr mk_and(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(
      Formula{AndFormula{std::move(l), std::move(r)}});
}
inline FormulaPtr mk_not(FormulaPtr f) {
  return std::make_shared<Formula>(Formula{NotFormula{std::move(f)}});
}
inline FormulaPtr mk_implies(FormulaPtr a, FormulaPtr c) {
  return std::make_shared<Formula>(
      Formula{ImpliesFormula{std::move(a), std::move(c)}});
}
inline FormulaPtr mk_forall(std::string binder, FormulaPtr body) {
  return std::make_shared<Formula>(
      Formula{ForallFormula{std::move(binder), std::move(body)}});
}

// Sugar. These fix the canonical desugarings once and for all.
inline FormulaPtr mk_or(FormulaPtr l, FormulaPtr r) {
  return mk_not(mk_and(mk_not(std::move(l)), mk_not(std::move(r))));
}
inline FormulaPtr mk_iff(FormulaPtr l, FormulaPtr r) {
  FormulaPtr forward = mk_implies(l, r);
  FormulaPtr backward = mk_implies(std::move(r), std::move(l));
  return mk_and(std::move(forward), std::move(backward));
}
inline FormulaPtr mk_exists(std::string binder, FormulaPtr body) {
  return mk_not(mk_forall(std::move(binder), mk_not(std::move(body))));
}

// --- free variables ----------------------------------------------------------

using NameSet = std::set<std::string>;

inline void collect_fv(const Term& t, NameSet& out);
inline void collect_fv(const Formula& f, NameSet& out);

inline void collect_fv(const Term& t, NameSet& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarTerm>) {
          out.insert(n.name);
        } else if constexpr (std::is_same_v<T, PairSetTerm>) {
          collect_fv(*n.left, out);
          collect_fv(*n.right, out);
        } else if constexpr (std::is_same_v<T, PowersetTerm> ||
                             std::is_same_v<T, UnionTerm>) {
          collect_fv(*n.arg, out);
        } else if constexpr (std::is_same_v<T, ComprehensionTerm>) {
          collect_fv(*n.domain, out);
          NameSet body;
          collect_fv(*n.body, body);
          body.erase(n.binder);
          out.insert(body.begin(), body.end());
        }
        // Empty, Atoms, ElemTerm: nothing.
      },
      t.node);
}

inline void collect_fv(const Formula& f, NameSet& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, EqFormula>) {
          collect_fv(*n.left, out);
          collect_fv(*n.right, out);
        } else if constexpr (std::is_same_v<T, MemFormula>) {
          collect_fv(*n.element, out);
          collect_fv(*n.container, out);
        } else if constexpr (std::is_same_v<T, AndFormula>) {
          collect_fv(*n.left, out);
          collect_fv(*n.right, out);
        } else if constexpr (std::is_same_v<T, NotFormula>) {
          collect_fv(*n.arg, out);
        } else if constexpr (std::is_same_v<T, ImpliesFormula>) {
          collect_fv(*n.antecedent, out);
          collect_fv(*n.consequent, out);
        } else if constexpr (std::is_same_v<T, ForallFormula>) {
          NameSet body;
          collect_fv(*n.body, body);
          body.erase(n.binder);
          out.insert(body.begin(), body.end());
        }
      },
      f.node);
}

inline NameSet fv(const Term& t) {
  NameSet out;
  collect_fv(t, out);
  return out;
}
inline NameSet fv(const Formula& f) {
  NameSet out;
  collect_fv(f, out);
  return out;
}
inline NameSet fv(const TermPtr& t) { return fv(*t); }
inline NameSet fv(const FormulaPtr& f) { return fv(*f); }

inline bool is_closed(const Formula& f) { return fv(f).empty(); }
inline bool is_closed(const Term& t) { return fv(t).empty(); }

// A fresh variable name avoiding everything in `used`.
inline std::string fresh_name(const NameSet& used, const std::string& hint) {
  if (!used.count(hint)) return hint;
  for (int i = 0;; ++i) {
    std::string candidate = hint + std::to_string(i);
    if (!used.count(candidate)) return candidate;
  }
}

// s subset t desugars to forall v. v in s -> v in t, v fresh for s and t.
inline FormulaPtr mk_subset(TermPtr s, TermPtr t) {
  NameSet used = fv(s);
  NameSet tv = fv(t);
  used.insert(tv.begin(), tv.end());
  std::string v = fresh_name(used, "b");
  return mk_forall(v, mk_implies(mk_mem(mk_var(v), std::move(s)),
                                 mk_mem(mk_var(v), std::move(t))));
}

// --- structural equality -------------------------------------------------------

inline bool equal(const Term& a, const Term& b);
inline bool equal(const Formula& a, const Formula& b);

inline bool equal(const Term& a, const Term& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, VarTerm>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, PairSetTerm>) {
          return equal(*x.left, *y.left) && equal(*x.right, *y.right);
        } else if constexpr (std::is_same_v<T, PowersetTerm> ||
                             std::is_same_v<T, UnionTerm>) {
          return equal(*x.arg, *y.arg);
        } else if constexpr (std::is_same_v<T, ComprehensionTerm>) {
          return x.binder == y.binder && equal(*x.domain, *y.domain) &&
                 equal(*x.body, *y.body);
        } else if constexpr (std::is_same_v<T, ElemTerm>) {
          return x.value == y.value;
        } else {
          return true;  // Empty, Atoms
        }
      },
      a.node);
}

inline bool equal(const Formula& a, const Formula& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, EqFormula>) {
          return equal(*x.left, *y.left) && equal(*x.right, *y.right);
        } else if constexpr (std::is_same_v<T, MemFormula>) {
          return equal(*x.element, *y.element) &&
                 equal(*x.container, *y.container);
        } else if constexpr (std::is_same_v<T, AndFormula>) {
          return equal(*x.left, *y.left) && equal(*x.right, *y.right);
        } else if constexpr (std::is_same_v<T, NotFormula>) {
          return equal(*x.arg, *y.arg);
        } else if constexpr (std::is_same_v<T, ImpliesFormula>) {
          return equal(*x.antecedent, *y.antecedent) &&
                 equal(*x.consequent, *y.consequent);
        } else if constexpr (std::is_same_v<T, ForallFormula>) {
          return x.binder == y.binder && equal(*x.body, *y.body);
        } else {
          return true;  // Bot
        }
      },
      a.node);
}

inline bool equal(const TermPtr& a, const TermPtr& b) { return equal(*a, *b); }
inline bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  return equal(*a, *b);
}

// --- substitution of closed element values -------------------------------------
//
// Only closed values are ever substituted, so capture cannot arise; bound
// occurrences are left untouched.

inline TermPtr substitute(const TermPtr& t, const std::string& v,
                          const Element& x);
inline FormulaPtr substitute(const FormulaPtr& f, const std::string& v,
                             const Element& x);

inline TermPtr substitute(const TermPtr& t, const std::string& v,
                          const Element& x) {
  return std::visit(
      [&](const auto& n) -> TermPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarTerm>) {
          return n.name == v ? mk_elem(x) : t;
        } else if constexpr (std::is_same_v<T, PairSetTerm>) {
          return mk_pairset(substitute(n.left, v, x), substitute(n.right, v, x));
        } else if constexpr (std::is_same_v<T, PowersetTerm>) {
          return mk_powerset(substitute(n.arg, v, x));
        } else if constexpr (std::is_same_v<T, UnionTerm>) {
          return mk_union(substitute(n.arg, v, x));
        } else if constexpr (std::is_same_v<T, ComprehensionTerm>) {
          TermPtr domain = substitute(n.domain, v, x);
          FormulaPtr body = n.binder == v ? n.body : substitute(n.body, v, x);
          return mk_comprehension(n.binder, std::move(domain), std::move(body));
        } else {
          return t;  // Empty, Atoms, ElemTerm
        }
      },
      t->node);
}

inline FormulaPtr substitute(const FormulaPtr& f, const std::string& v,
                             const Element& x) {
  return std::visit(
      [&](const auto& n) -> FormulaPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, EqFormula>) {
          return mk_eq(substitute(n.left, v, x), substitute(n.right, v, x));
        } else if constexpr (std::is_same_v<T, MemFormula>) {
          return mk_mem(substitute(n.element, v, x),
                        substitute(n.container, v, x));
        } else if constexpr (std::is_same_v<T, AndFormula>) {
          return mk_and(substitute(n.left, v, x), substitute(n.right, v, x));
        } else if constexpr (std::is_same_v<T, NotFormula>) {
          return mk_not(substitute(n.arg, v, x));
        } else if constexpr (std::is_same_v<T, ImpliesFormula>) {
          return mk_implies(substitute(n.antecedent, v, x),
                            substitute(n.consequent, v, x));
        } else if constexpr (std::is_same_v<T, ForallFormula>) {
          if (n.binder == v) return f;
          return mk_forall(n.binder, substitute(n.body, v, x));
        } else {
          return f;  // Bot
        }
      },
      f->node);
}

// --- purity and the meta-level permutation action --------------------------------

inline bool is_pure(const Term& t);
inline bool is_pure(const Formula& f);

inline bool is_pure(const Term& t) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ElemTerm>) {
          return false;
        } else if constexpr (std::is_same_v<T, PairSetTerm>) {
          return is_pure(*n.left) && is_pure(*n.right);
        } else if constexpr (std::is_same_v<T, PowersetTerm> ||
                             std::is_same_v<T, UnionTerm>) {
          return is_pure(*n.arg);
        } else if constexpr (std::is_same_v<T, ComprehensionTerm>) {
          return is_pure(*n.domain) && is_pure(*n.body);
        } else {
          return true;
        }
      },
      t.node);
}

inline bool is_pure(const Formula& f) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, EqFormula>) {
          return is_pure(*n.left) && is_pure(*n.right);
        } else if constexpr (std::is_same_v<T, MemFormula>) {
          return is_pure(*n.element) && is_pure(*n.container);
        } else if constexpr (std::is_same_v<T, AndFormula>) {
          return is_pure(*n.left) && is_pure(*n.right);
        } else if constexpr (std::is_same_v<T, NotFormula>) {
          return is_pure(*n.arg);
        } else if constexpr (std::is_same_v<T, ImpliesFormula>) {
          return is_pure(*n.antecedent) && is_pure(*n.consequent);
        } else if constexpr (std::is_same_v<T, ForallFormula>) {
          return is_pure(*n.body);
        } else {
          return true;
        }
      },
      f.node);
}

namespace detail {

inline TermPtr meta_act_rec(const Perm& p, const TermPtr& t);
inline FormulaPtr meta_act_rec(const Perm& p, const FormulaPtr& f);

inline TermPtr meta_act_rec(const Perm& p, const TermPtr& t) {
  return std::visit(
      [&](const auto& n) -> TermPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ElemTerm>) {
          return mk_elem(act(p, n.value));
        } else if constexpr (std::is_same_v<T, PairSetTerm>) {
          return mk_pairset(meta_act_rec(p, n.left), meta_act_rec(p, n.right));
        } else if constexpr (std::is_same_v<T, PowersetTerm>) {
          return mk_powerset(meta_act_rec(p, n.arg));
        } else if constexpr (std::is_same_v<T, UnionTerm>) {
          return mk_union(meta_act_rec(p, n.arg));
        } else if constexpr (std::is_same_v<T, ComprehensionTerm>) {
          return mk_comprehension(n.binder, meta_act_rec(p, n.domain),
                                  meta_act_rec(p, n.body));
        } else {
          return t;  // Var (bound), Empty, Atoms
        }
      },
      t->node);
}

inline FormulaPtr meta_act_rec(const Perm& p, const FormulaPtr& f) {
  return std::visit(
      [&](const auto& n) -> FormulaPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, EqFormula>) {
          return mk_eq(meta_act_rec(p, n.left), meta_act_rec(p, n.right));
        } else if constexpr (std::is_same_v<T, MemFormula>) {
          return mk_mem(meta_act_rec(p, n.element),
                        meta_act_rec(p, n.container));
        } else if constexpr (std::is_same_v<T, AndFormula>) {
          return mk_and(meta_act_rec(p, n.left), meta_act_rec(p, n.right));
        } else if constexpr (std::is_same_v<T, NotFormula>) {
          return mk_not(meta_act_rec(p, n.arg));
        } else if constexpr (std::is_same_v<T, ImpliesFormula>) {
          return mk_implies(meta_act_rec(p, n.antecedent),
                            meta_act_rec(p, n.consequent));
        } else if constexpr (std::is_same_v<T, ForallFormula>) {
          return mk_forall(n.binder, meta_act_rec(p, n.body));
        } else {
          return f;  // Bot
        }
      },
      f->node);
}

inline std::string fv_list(const NameSet& names) {
  std::string out;
  for (const std::string& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace detail

// The meta-level action on closed syntax: every embedded element constant is
// permuted, everything else is left alone. Open inputs are rejected; close
// them with element constants first.
inline FormulaPtr meta_act(const Perm& p, const FormulaPtr& f) {
  NameSet free = fv(f);
  if (!free.empty())
    throw OpenTermError("meta action needs a closed formula; free: {" +
                        detail::fv_list(free) + "}");
  return detail::meta_act_rec(p, f);
}

inline TermPtr meta_act(const Perm& p, const TermPtr& t) {
  NameSet free = fv(t);
  if (!free.empty())
    throw OpenTermError("meta action needs a closed term; free: {" +
                        detail::fv_list(free) + "}");
  return detail::meta_act_rec(p, t);
}

}  // namespace zfa
