#pragma once

#include <string>

#include "zfa/ast.hpp"

namespace zfa {

// Printing emits only core constructors; parse(print(x)) is the identity.
// Precedence, weakest first: forall, <->, ->, |, &, ~. Only the core levels
// appear in output.

namespace detail {

inline constexpr int kPrecForall = 0;
inline constexpr int kPrecImplies = 2;
inline constexpr int kPrecAnd = 4;
inline constexpr int kPrecRel = 5;  // = and in, parenthesized under ~
inline constexpr int kPrecNot = 6;
inline constexpr int kPrecAtom = 7;

inline std::string print_term_rec(const Term& t);
inline std::string print_formula_rec(const Formula& f, int parent_prec);

inline std::string print_term_rec(const Term& t) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarTerm>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, PairSetTerm>) {
          return "{" + print_term_rec(*n.left) + ", " +
                 print_term_rec(*n.right) + "}";
        } else if constexpr (std::is_same_v<T, PowersetTerm>) {
          return "pow(" + print_term_rec(*n.arg) + ")";
        } else if constexpr (std::is_same_v<T, UnionTerm>) {
          return "Union(" + print_term_rec(*n.arg) + ")";
        } else if constexpr (std::is_same_v<T, ComprehensionTerm>) {
          return "{" + n.binder + " in " + print_term_rec(*n.domain) + " | " +
                 print_formula_rec(*n.body, kPrecForall) + "}";
        } else if constexpr (std::is_same_v<T, EmptyTerm>) {
          return "empty";
        } else if constexpr (std::is_same_v<T, AtomsTerm>) {
          return "Atoms";
        } else {
          static_assert(std::is_same_v<T, ElemTerm>);
          return "#" + to_string(n.value);
        }
      },
      t.node);
}

inline std::string print_formula_rec(const Formula& f, int parent_prec) {
  int prec = std::visit(
      [](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ForallFormula>) return kPrecForall;
        else if constexpr (std::is_same_v<T, ImpliesFormula>) return kPrecImplies;
        else if constexpr (std::is_same_v<T, AndFormula>) return kPrecAnd;
        else if constexpr (std::is_same_v<T, EqFormula> ||
                           std::is_same_v<T, MemFormula>) return kPrecRel;
        else if constexpr (std::is_same_v<T, NotFormula>) return kPrecNot;
        else return kPrecAtom;
      },
      f.node);
  std::string body = std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, EqFormula>) {
          return print_term_rec(*n.left) + " = " + print_term_rec(*n.right);
        } else if constexpr (std::is_same_v<T, MemFormula>) {
          return print_term_rec(*n.element) + " in " +
                 print_term_rec(*n.container);
        } else if constexpr (std::is_same_v<T, BotFormula>) {
          return "false";
        } else if constexpr (std::is_same_v<T, AndFormula>) {
          return print_formula_rec(*n.left, kPrecAnd) + " & " +
                 print_formula_rec(*n.right, kPrecAnd + 1);
        } else if constexpr (std::is_same_v<T, NotFormula>) {
          return "~" + print_formula_rec(*n.arg, kPrecNot);
        } else if constexpr (std::is_same_v<T, ImpliesFormula>) {
          return print_formula_rec(*n.antecedent, kPrecImplies + 1) + " -> " +
                 print_formula_rec(*n.consequent, kPrecImplies);
        } else {
          static_assert(std::is_same_v<T, ForallFormula>);
          return "forall " + n.binder + ". " +
                 print_formula_rec(*n.body, kPrecForall);
        }
      },
      f.node);
  if (prec < parent_prec) return "(" + body + ")";
  return body;
}

}  // namespace detail

inline std::string print_term(const Term& t) {
  return detail::print_term_rec(t);
}
inline std::string print_term(const TermPtr& t) { return print_term(*t); }

inline std::string print_formula(const Formula& f) {
  return detail::print_formula_rec(f, detail::kPrecForall);
}
inline std::string print_formula(const FormulaPtr& f) {
  return print_formula(*f);
}

}  // namespace zfa
