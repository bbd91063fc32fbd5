#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zfa/ast.hpp"

namespace zfa {

// Recursive-descent parser for the ASCII grammar.
//
//   terms     x | {s, t} | pow(s) | Union(s) | {x in t | phi} | empty | Atoms
//             | #a0 | #{...}          (element literals)
//   formulas  s = t | s in t | false | phi & phi | forall x. phi
//   sugar     ~phi | phi "|" phi | phi -> phi | phi <-> phi
//             | exists x. phi | s subset t
//
// Precedence, weakest first: quantifiers, <->, ->, |, &, ~. Quantifier
// bodies extend as far right as possible. Errors carry line and column.

namespace detail {

enum class TokKind {
  Ident,     // variables and keywords
  Elem,      // '#'-prefixed element literal, text excludes the '#'
  LBrace,
  RBrace,
  LParen,
  RParen,
  Comma,
  Dot,
  Bar,
  Amp,
  Eq,
  Tilde,
  Arrow,
  DArrow,
  End,
};

struct Token {
  TokKind kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      int line = line_, col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({TokKind::End, "", line, col});
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance();
        out.push_back({TokKind::Ident, src_.substr(start, pos_ - start), line, col});
      } else if (c == '#') {
        advance();
        out.push_back({TokKind::Elem, lex_element_literal(line, col), line, col});
      } else if (c == '{') {
        advance();
        out.push_back({TokKind::LBrace, "{", line, col});
      } else if (c == '}') {
        advance();
        out.push_back({TokKind::RBrace, "}", line, col});
      } else if (c == '(') {
        advance();
        out.push_back({TokKind::LParen, "(", line, col});
      } else if (c == ')') {
        advance();
        out.push_back({TokKind::RParen, ")", line, col});
      } else if (c == ',') {
        advance();
        out.push_back({TokKind::Comma, ",", line, col});
      } else if (c == '.') {
        advance();
        out.push_back({TokKind::Dot, ".", line, col});
      } else if (c == '|') {
        advance();
        out.push_back({TokKind::Bar, "|", line, col});
      } else if (c == '&') {
        advance();
        out.push_back({TokKind::Amp, "&", line, col});
      } else if (c == '=') {
        advance();
        out.push_back({TokKind::Eq, "=", line, col});
      } else if (c == '~') {
        advance();
        out.push_back({TokKind::Tilde, "~", line, col});
      } else if (c == '<' && src_.compare(pos_, 3, "<->") == 0) {
        advance();
        advance();
        advance();
        out.push_back({TokKind::DArrow, "<->", line, col});
      } else if (c == '-' && src_.compare(pos_, 2, "->") == 0) {
        advance();
        advance();
        out.push_back({TokKind::Arrow, "->", line, col});
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line,
                         col);
      }
    }
  }

 private:
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }

  // After '#': either an atom name or a balanced-brace set literal. Returns
  // the literal text without the '#'.
  std::string lex_element_literal(int line, int col) {
    if (pos_ >= src_.size())
      throw ParseError("element literal expected after '#'", line, col);
    std::size_t start = pos_;
    if (src_[pos_] == 'a') {
      advance();
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        advance();
      if (pos_ == start + 1)
        throw ParseError("expected digits after '#a'", line, col);
      return src_.substr(start, pos_ - start);
    }
    if (src_[pos_] == '{') {
      int depth = 0;
      while (pos_ < src_.size()) {
        if (src_[pos_] == '{') ++depth;
        if (src_[pos_] == '}') {
          --depth;
          advance();
          if (depth == 0) return src_.substr(start, pos_ - start);
          continue;
        }
        advance();
      }
      throw ParseError("unterminated element literal", line, col);
    }
    throw ParseError("element literal expected after '#'", line, col);
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

inline bool is_keyword(const std::string& s) {
  return s == "in" || s == "forall" || s == "exists" || s == "false" ||
         s == "empty" || s == "Atoms" || s == "pow" || s == "Union" ||
         s == "subset";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, AtomPool pool)
      : tokens_(std::move(tokens)), pool_(pool) {}

  FormulaPtr parse_formula_all() {
    FormulaPtr f = formula();
    expect(TokKind::End, "end of input");
    return f;
  }

  TermPtr parse_term_all() {
    TermPtr t = term();
    expect(TokKind::End, "end of input");
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (t.kind != TokKind::End) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.line, at.column);
  }
  const Token& expect(TokKind kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what, peek());
    return next();
  }
  bool at_ident(const std::string& word) const {
    return peek().kind == TokKind::Ident && peek().text == word;
  }

  // formula := quantified-or-iff chain, quantifiers weakest
  FormulaPtr formula() { return iff_expr(); }

  FormulaPtr iff_expr() {
    FormulaPtr left = implies_expr();
    while (peek().kind == TokKind::DArrow) {
      next();
      left = mk_iff(std::move(left), implies_expr());
    }
    return left;
  }

  FormulaPtr implies_expr() {
    FormulaPtr left = or_expr();
    if (peek().kind == TokKind::Arrow) {
      next();
      return mk_implies(std::move(left), implies_expr());  // right-assoc
    }
    return left;
  }

  FormulaPtr or_expr() {
    FormulaPtr left = and_expr();
    while (peek().kind == TokKind::Bar) {
      next();
      left = mk_or(std::move(left), and_expr());
    }
    return left;
  }

  FormulaPtr and_expr() {
    FormulaPtr left = unary();
    while (peek().kind == TokKind::Amp) {
      next();
      left = mk_and(std::move(left), unary());
    }
    return left;
  }

  FormulaPtr unary() {
    if (peek().kind == TokKind::Tilde) {
      next();
      return mk_not(unary());
    }
    if (at_ident("forall") || at_ident("exists")) return quantified();
    return atom_formula();
  }

  // A quantifier's body extends as far right as possible.
  FormulaPtr quantified() {
    bool universal = peek().text == "forall";
    next();
    const Token& name = peek();
    if (name.kind != TokKind::Ident || is_keyword(name.text))
      fail("expected a variable name after quantifier", name);
    next();
    expect(TokKind::Dot, "'.' after quantified variable");
    FormulaPtr body = formula();
    return universal ? mk_forall(name.text, std::move(body))
                     : mk_exists(name.text, std::move(body));
  }

  FormulaPtr atom_formula() {
    if (at_ident("false")) {
      next();
      return mk_bot();
    }
    if (peek().kind == TokKind::LParen) {
      next();
      FormulaPtr f = formula();
      expect(TokKind::RParen, "')'");
      return f;
    }
    TermPtr left = term();
    if (peek().kind == TokKind::Eq) {
      next();
      return mk_eq(std::move(left), term());
    }
    if (at_ident("in")) {
      next();
      return mk_mem(std::move(left), term());
    }
    if (at_ident("subset")) {
      next();
      return mk_subset(std::move(left), term());
    }
    fail("expected '=', 'in' or 'subset' after term", peek());
  }

  TermPtr term() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Ident: {
        if (t.text == "empty") {
          next();
          return mk_empty();
        }
        if (t.text == "Atoms") {
          next();
          return mk_atoms();
        }
        if (t.text == "pow" || t.text == "Union") {
          bool power = t.text == "pow";
          next();
          expect(TokKind::LParen, "'(' after " + t.text);
          TermPtr arg = term();
          expect(TokKind::RParen, "')'");
          return power ? mk_powerset(std::move(arg))
                       : mk_union(std::move(arg));
        }
        if (is_keyword(t.text)) fail("keyword cannot be used as a term", t);
        next();
        return mk_var(t.text);
      }
      case TokKind::Elem: {
        next();
        try {
          return mk_elem(parse_element(t.text, pool_));
        } catch (const ParseError& e) {
          fail(std::string("bad element literal: ") + e.what(), t);
        }
      }
      case TokKind::LBrace:
        return braced_term();
      default:
        fail("expected a term", t);
    }
  }

  // After '{' either a comprehension {x in t | phi} or a pairset {s, t};
  // the two-token lookahead IDENT "in" decides.
  TermPtr braced_term() {
    expect(TokKind::LBrace, "'{'");
    if (peek().kind == TokKind::Ident && !is_keyword(peek().text) &&
        peek(1).kind == TokKind::Ident && peek(1).text == "in") {
      std::string binder = next().text;
      next();  // in
      TermPtr domain = term();
      expect(TokKind::Bar, "'|' in comprehension");
      FormulaPtr body = formula();
      expect(TokKind::RBrace, "'}'");
      return mk_comprehension(std::move(binder), std::move(domain),
                              std::move(body));
    }
    TermPtr left = term();
    if (peek().kind == TokKind::Comma) {
      next();
      TermPtr right = term();
      expect(TokKind::RBrace, "'}'");
      return mk_pairset(std::move(left), std::move(right));
    }
    // {s} is concrete-syntax shorthand for the pairset {s, s}.
    expect(TokKind::RBrace, "',' or '}'");
    TermPtr copy = left;
    return mk_pairset(std::move(left), std::move(copy));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  AtomPool pool_;
};

}  // namespace detail

inline FormulaPtr parse_formula(const std::string& src, AtomPool pool) {
  detail::Parser p(detail::Lexer(src).run(), pool);
  return p.parse_formula_all();
}

inline TermPtr parse_term(const std::string& src, AtomPool pool) {
  detail::Parser p(detail::Lexer(src).run(), pool);
  return p.parse_term_all();
}

// --- corpus files ---------------------------------------------------------------
//
// One entry per line. Blank lines are skipped. A line is a comment when its
// first nonblank character is '#' not introducing an element literal, i.e.
// not followed by '{' or an atom name; write comments as "# ...".

namespace detail {

inline bool is_comment_line(const std::string& line) {
  std::size_t i = line.find_first_not_of(" \t\r");
  if (i == std::string::npos) return true;  // blank
  if (line[i] != '#') return false;
  if (i + 1 >= line.size()) return true;
  char c = line[i + 1];
  if (c == '{') return false;
  if (c == 'a' && i + 2 < line.size() &&
      std::isdigit(static_cast<unsigned char>(line[i + 2])))
    return false;
  return true;
}

}  // namespace detail

struct CorpusEntry {
  std::string source;
  int line = 0;
};

inline std::vector<CorpusEntry> read_corpus_lines(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_comment_line(line)) continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    out.push_back({line, lineno});
  }
  return out;
}

inline std::vector<CorpusEntry> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file: " + path);
  return read_corpus_lines(in);
}

inline std::vector<std::pair<std::string, FormulaPtr>> load_formula_corpus(
    const std::string& path, AtomPool pool) {
  std::vector<std::pair<std::string, FormulaPtr>> out;
  for (const CorpusEntry& entry : read_corpus_file(path)) {
    try {
      out.emplace_back(entry.source, parse_formula(entry.source, pool));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(entry.line) + ": " +
                           e.what(),
                       entry.line, e.column);
    }
  }
  return out;
}

inline std::vector<std::pair<std::string, TermPtr>> load_term_corpus(
    const std::string& path, AtomPool pool) {
  std::vector<std::pair<std::string, TermPtr>> out;
  for (const CorpusEntry& entry : read_corpus_file(path)) {
    try {
      out.emplace_back(entry.source, parse_term(entry.source, pool));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(entry.line) + ": " +
                           e.what(),
                       entry.line, e.column);
    }
  }
  return out;
}

}  // namespace zfa
