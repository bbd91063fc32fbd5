#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "zfa/errors.hpp"

namespace zfa {

// An atom: an opaque urelement identified only by its index in the owning
// pool. Atoms compare by id and carry no other structure.
struct Atom {
  int id = 0;
  friend constexpr auto operator<=>(const Atom&, const Atom&) = default;
};

inline std::string to_string(Atom a) { return "a" + std::to_string(a.id); }

// A finite pool of atoms a0 .. a<size-1>.
class AtomPool {
 public:
  explicit AtomPool(int size) : size_(size) {
    if (size < 1) throw Error("atom pool must contain at least one atom");
  }

  int size() const { return size_; }
  bool contains(Atom a) const { return 0 <= a.id && a.id < size_; }

  Atom atom(int i) const {
    if (i < 0 || i >= size_)
      throw PoolMismatchError("atom index " + std::to_string(i) +
                              " outside pool of size " + std::to_string(size_));
    return Atom{i};
  }

  std::vector<Atom> atoms() const {
    std::vector<Atom> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int i = 0; i < size_; ++i) out.push_back(Atom{i});
    return out;
  }

  friend bool operator==(const AtomPool&, const AtomPool&) = default;

 private:
  int size_;
};

using AtomSet = std::set<Atom>;

inline std::string to_string(const AtomSet& s) {
  std::string out = "{";
  bool first = true;
  for (Atom a : s) {
    if (!first) out += ", ";
    first = false;
    out += to_string(a);
  }
  return out + "}";
}

inline AtomSet all_atoms(AtomPool pool) {
  AtomSet s;
  for (Atom a : pool.atoms()) s.insert(a);
  return s;
}

inline AtomSet set_difference(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  for (Atom x : a)
    if (!b.count(x)) out.insert(x);
  return out;
}

inline AtomSet set_intersection(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  for (Atom x : a)
    if (b.count(x)) out.insert(x);
  return out;
}

inline bool is_subset(const AtomSet& a, const AtomSet& b) {
  for (Atom x : a)
    if (!b.count(x)) return false;
  return true;
}

// Parses "a3". Accepts no surrounding whitespace.
inline Atom parse_atom(const std::string& text, AtomPool pool) {
  if (text.size() < 2 || text[0] != 'a')
    throw ParseError("expected an atom name like \"a0\", got \"" + text + "\"",
                     1, 1);
  for (std::size_t i = 1; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw ParseError("bad atom name \"" + text + "\"", 1, 1);
  int id = std::stoi(text.substr(1));
  if (!pool.contains(Atom{id}))
    throw PoolMismatchError("atom " + text + " outside pool of size " +
                            std::to_string(pool.size()));
  return Atom{id};
}

// Parses "{a0, a2}" or a bare comma list "a0,a2"; "{}" is the empty set.
inline AtomSet parse_atom_set(const std::string& text, AtomPool pool) {
  std::string body = text;
  auto strip = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return std::string();
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
  };
  body = strip(body);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw ParseError("unterminated atom set", 1, 1);
    body = strip(body.substr(1, body.size() - 2));
  }
  AtomSet out;
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (pos != std::string::npos) {
    std::size_t comma = body.find(',', pos);
    std::string item = comma == std::string::npos
                           ? body.substr(pos)
                           : body.substr(pos, comma - pos);
    out.insert(parse_atom(strip(item), pool));
    pos = comma == std::string::npos ? comma : comma + 1;
  }
  return out;
}

}  // namespace zfa
