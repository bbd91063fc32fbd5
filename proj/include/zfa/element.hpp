#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zfa/atoms.hpp"
#include "zfa/errors.hpp"
#include "zfa/perm.hpp"

namespace zfa {

// A hereditarily finite value over an atom pool: either an atom or a finite
// set of elements. Sets are kept in extensional canonical form — children
// sorted under a fixed total order and duplicate-free — so structural
// equality coincides with set-theoretic equality. Values are immutable and
// share structure: copying is a reference bump, comparison short-circuits on
// shared subtrees, and the rank is memoized at construction.
class Element {
 public:
  static Element atom(Atom a) {
    auto node = std::make_shared<Node>();
    node->atom_id = a.id;
    return Element(std::move(node));
  }

  // Canonicalizes: sorts and deduplicates the children.
  static Element set(std::vector<Element> children) {
    std::sort(children.begin(), children.end());
    children.erase(std::unique(children.begin(), children.end()),
                   children.end());
    auto node = std::make_shared<Node>();
    for (const Element& c : children)
      node->rank = std::max(node->rank, 1 + c.node_->rank);
    node->children = std::move(children);
    return Element(std::move(node));
  }

  static Element empty_set() {
    static const Element empty = set({});
    return empty;
  }

  bool is_atom() const { return node_->atom_id >= 0; }
  bool is_set() const { return node_->atom_id < 0; }

  Atom as_atom() const {
    if (!is_atom()) throw Error("element is not an atom");
    return Atom{node_->atom_id};
  }

  const std::vector<Element>& children() const {
    if (is_atom()) throw NotASetError("atoms have no children");
    return node_->children;
  }

  // 0 for atoms and the empty set, 1 + max child rank otherwise.
  int rank_value() const { return node_->rank; }

  // Membership. Atoms have no members, so this is false for atom receivers.
  bool contains(const Element& e) const {
    if (is_atom()) return false;
    return std::binary_search(node_->children.begin(), node_->children.end(),
                              e);
  }

  // Fixed total order on canonical forms: atoms by id first, then sets
  // compared lexicographically by their (already canonical) children.
  friend bool operator<(const Element& a, const Element& b) {
    return a.compare(b) < 0;
  }
  friend bool operator==(const Element& a, const Element& b) {
    return a.compare(b) == 0;
  }
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }

  int compare(const Element& other) const {
    if (node_ == other.node_) return 0;
    if (is_atom() != other.is_atom()) return is_atom() ? -1 : 1;
    if (is_atom()) {
      int a = node_->atom_id, b = other.node_->atom_id;
      return a < b ? -1 : a > b ? 1 : 0;
    }
    const auto& xs = node_->children;
    const auto& ys = other.node_->children;
    std::size_t n = std::min(xs.size(), ys.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = xs[i].compare(ys[i]);
      if (c != 0) return c;
    }
    if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
    return 0;
  }

 private:
  struct Node {
    int atom_id = -1;  // >= 0 iff this is an atom
    int rank = 0;
    std::vector<Element> children;  // canonical, sets only
  };

  explicit Element(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// --- pointwise permutation action -----------------------------------------

// Atoms map through p; sets map elementwise and are re-canonicalized.
// Preserves rank.
inline Element act(const Perm& p, const Element& x) {
  if (x.is_atom()) return Element::atom(p(x.as_atom()));
  std::vector<Element> mapped;
  mapped.reserve(x.children().size());
  for (const Element& c : x.children()) mapped.push_back(act(p, c));
  return Element::set(std::move(mapped));
}

// --- structural measures ---------------------------------------------------

// 0 for atoms and the empty set, 1 + max child rank otherwise.
inline int rank(const Element& x) { return x.rank_value(); }

// All atoms occurring hereditarily in x.
inline AtomSet atoms_of(const Element& x) {
  AtomSet out;
  if (x.is_atom()) {
    out.insert(x.as_atom());
    return out;
  }
  for (const Element& c : x.children()) {
    AtomSet sub = atoms_of(c);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

// s ⊆ t read as "every member of s is a member of t"; atoms have no members,
// so an atom is vacuously a subset of anything.
inline bool subset_of(const Element& s, const Element& t) {
  if (s.is_atom()) return true;
  for (const Element& c : s.children())
    if (!t.contains(c)) return false;
  return true;
}

// --- pairs and function-sets -----------------------------------------------

// (x, y) = {{x, y}, {x}}.
inline Element kuratowski_pair(const Element& x, const Element& y) {
  return Element::set({Element::set({x, y}), Element::set({x})});
}

inline std::optional<std::pair<Element, Element>> try_decode_pair(
    const Element& e) {
  if (e.is_atom()) return std::nullopt;
  const auto& cs = e.children();
  if (cs.size() == 1) {
    // {{x}} decodes as (x, x).
    if (cs[0].is_atom() || cs[0].children().size() != 1) return std::nullopt;
    const Element& x = cs[0].children()[0];
    return std::make_pair(x, x);
  }
  if (cs.size() != 2) return std::nullopt;
  if (cs[0].is_atom() || cs[1].is_atom()) return std::nullopt;
  // One component is the singleton {x}, the other the doubleton {x, y};
  // canonical order does not fix which comes first.
  std::size_t singleton = cs[0].children().size() == 1 ? 0 : 1;
  std::size_t doubleton = 1 - singleton;
  if (cs[singleton].children().size() != 1 ||
      cs[doubleton].children().size() != 2)
    return std::nullopt;
  const Element& x = cs[singleton].children()[0];
  if (!cs[doubleton].contains(x)) return std::nullopt;
  const Element& y = cs[doubleton].children()[0] == x
                         ? cs[doubleton].children()[1]
                         : cs[doubleton].children()[0];
  return std::make_pair(x, y);
}

// The unique (x, y) with kuratowski_pair(x, y) = e.
inline std::pair<Element, Element> decode_pair(const Element& e) {
  auto p = try_decode_pair(e);
  if (!p) throw NotAPairError("element is not a Kuratowski pair");
  return *p;
}

// --- set-formers -----------------------------------------------------------

// The set of all subsets of x. Errors on atoms: they have no elements but
// are not sets.
inline Element powerset(const Element& x) {
  if (x.is_atom()) throw NotASetError("powerset of an atom");
  const auto& cs = x.children();
  if (cs.size() > 62) throw BudgetError("powerset of a set this large", 0);
  std::vector<Element> subsets;
  subsets.reserve(static_cast<std::size_t>(1) << cs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cs.size()); ++mask) {
    std::vector<Element> members;
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) members.push_back(cs[i]);
    subsets.push_back(Element::set(std::move(members)));
  }
  return Element::set(std::move(subsets));
}

// ⋃x: the members of x's members. Atom members contribute nothing (atoms
// have no elements); an atom input is an error.
inline Element big_union(const Element& x) {
  if (x.is_atom()) throw NotASetError("union of an atom");
  std::vector<Element> members;
  for (const Element& c : x.children()) {
    if (c.is_atom()) continue;
    for (const Element& g : c.children()) members.push_back(g);
  }
  return Element::set(std::move(members));
}

// True iff f is a set of Kuratowski pairs (x, y) with x ∈ X, y ∈ Y and every
// x ∈ X occurring as a first component exactly once.
inline bool is_function_set(const Element& f, const Element& X,
                            const Element& Y) {
  if (f.is_atom() || X.is_atom() || Y.is_atom())
    throw NotASetError("function-set check needs sets");
  std::vector<Element> firsts;
  for (const Element& member : f.children()) {
    auto p = try_decode_pair(member);
    if (!p) return false;
    if (!X.contains(p->first) || !Y.contains(p->second)) return false;
    firsts.push_back(p->first);
  }
  std::sort(firsts.begin(), firsts.end());
  if (std::adjacent_find(firsts.begin(), firsts.end()) != firsts.end())
    return false;
  return firsts.size() == X.children().size();
}

// As is_function_set, plus distinct first components map to distinct second
// components.
inline bool is_injective_function_set(const Element& f, const Element& X,
                                      const Element& Y) {
  if (!is_function_set(f, X, Y)) return false;
  std::vector<Element> seconds;
  for (const Element& member : f.children())
    seconds.push_back(decode_pair(member).second);
  std::sort(seconds.begin(), seconds.end());
  return std::adjacent_find(seconds.begin(), seconds.end()) == seconds.end();
}

// --- literal syntax ----------------------------------------------------------
//
// Atoms print as "a0"; sets as "{e1, e2}" with children in canonical order;
// the empty set as "{}".

inline std::string to_string(const Element& x) {
  if (x.is_atom()) return to_string(x.as_atom());
  std::string out = "{";
  bool first = true;
  for (const Element& c : x.children()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(c);
  }
  return out + "}";
}

namespace detail {

inline Element parse_element_at(const std::string& text, std::size_t& pos,
                                AtomPool pool) {
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](const std::string& msg) -> Element {
    throw ParseError(msg, 1, static_cast<int>(pos) + 1);
  };
  skip_ws();
  if (pos >= text.size()) return fail("unexpected end of element literal");
  if (text[pos] == '{') {
    ++pos;
    std::vector<Element> members;
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      return Element::empty_set();
    }
    while (true) {
      members.push_back(parse_element_at(text, pos, pool));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        return Element::set(std::move(members));
      }
      return fail("expected ',' or '}' in set literal");
    }
  }
  if (text[pos] == 'a') {
    std::size_t start = pos++;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start + 1) return fail("expected digits after 'a'");
    int id = std::stoi(text.substr(start + 1, pos - start - 1));
    if (!pool.contains(Atom{id}))
      throw ParseError("unknown element literal: atom " +
                           text.substr(start, pos - start) +
                           " outside pool of size " +
                           std::to_string(pool.size()),
                       1, static_cast<int>(start) + 1);
    return Element::atom(Atom{id});
  }
  return fail("expected an atom or '{' in element literal");
}

}  // namespace detail

inline Element parse_element(const std::string& text, AtomPool pool) {
  std::size_t pos = 0;
  Element e = detail::parse_element_at(text, pos, pool);
  while (pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos != text.size())
    throw ParseError("trailing input after element literal", 1,
                     static_cast<int>(pos) + 1);
  return e;
}

}  // namespace zfa
