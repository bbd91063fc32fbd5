#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "zfa/atoms.hpp"
#include "zfa/errors.hpp"

namespace zfa {

inline constexpr int kDefaultPermEnumCap = 6;  // 6! = 720 permutations

// A permutation of a finite atom pool, stored in canonical form: the sorted
// list of (source, image) pairs for exactly the atoms it moves. Fixed points
// are never stored, so two permutations are equal iff their stored maps are.
class Perm {
 public:
  explicit Perm(AtomPool pool) : pool_(pool) {}  // identity

  // Builds from a full image table images[i] = image of atom i.
  static Perm from_images(AtomPool pool, const std::vector<int>& images) {
    if (static_cast<int>(images.size()) != pool.size())
      throw PoolMismatchError("image table size does not match pool");
    std::vector<bool> seen(images.size(), false);
    for (int img : images) {
      if (img < 0 || img >= pool.size())
        throw PoolMismatchError("image outside pool");
      if (seen[static_cast<std::size_t>(img)])
        throw Error("image table is not a bijection");
      seen[static_cast<std::size_t>(img)] = true;
    }
    Perm p(pool);
    for (int i = 0; i < pool.size(); ++i)
      if (images[static_cast<std::size_t>(i)] != i)
        p.moved_.emplace_back(Atom{i}, Atom{images[static_cast<std::size_t>(i)]});
    return p;
  }

  const AtomPool& pool() const { return pool_; }
  bool is_identity() const { return moved_.empty(); }

  // The (source, image) pairs for moved atoms, sorted by source.
  const std::vector<std::pair<Atom, Atom>>& moved() const { return moved_; }

  Atom operator()(Atom a) const {
    if (!pool_.contains(a))
      throw PoolMismatchError("atom " + to_string(a) + " outside pool of size " +
                              std::to_string(pool_.size()));
    auto it = std::lower_bound(
        moved_.begin(), moved_.end(), a,
        [](const std::pair<Atom, Atom>& m, Atom key) { return m.first < key; });
    if (it != moved_.end() && it->first == a) return it->second;
    return a;
  }

  friend bool operator==(const Perm& p, const Perm& q) {
    return p.pool_ == q.pool_ && p.moved_ == q.moved_;
  }

  // Arbitrary total order; lets permutations live in ordered containers.
  friend bool operator<(const Perm& p, const Perm& q) {
    if (p.pool_.size() != q.pool_.size())
      return p.pool_.size() < q.pool_.size();
    return p.moved_ < q.moved_;
  }

 private:
  AtomPool pool_;
  std::vector<std::pair<Atom, Atom>> moved_;
};

inline Atom apply(const Perm& p, Atom a) { return p(a); }

// The swapping (a b): maps a to b, b to a, fixes everything else.
// swapping(pool, a, a) is the identity.
inline Perm swapping(AtomPool pool, Atom a, Atom b) {
  if (!pool.contains(a) || !pool.contains(b))
    throw PoolMismatchError("swapping of atoms outside the pool");
  std::vector<int> images(static_cast<std::size_t>(pool.size()));
  std::iota(images.begin(), images.end(), 0);
  std::swap(images[static_cast<std::size_t>(a.id)],
            images[static_cast<std::size_t>(b.id)]);
  return Perm::from_images(pool, images);
}

// Composition: compose(p, q)(a) = p(q(a)).
inline Perm compose(const Perm& p, const Perm& q) {
  if (p.pool() != q.pool())
    throw PoolMismatchError("composing permutations of different pools");
  std::vector<int> images(static_cast<std::size_t>(p.pool().size()));
  for (int i = 0; i < p.pool().size(); ++i)
    images[static_cast<std::size_t>(i)] = p(q(Atom{i})).id;
  return Perm::from_images(p.pool(), images);
}

inline Perm inverse(const Perm& p) {
  std::vector<int> images(static_cast<std::size_t>(p.pool().size()));
  std::iota(images.begin(), images.end(), 0);
  for (const auto& [src, img] : p.moved())
    images[static_cast<std::size_t>(img.id)] = src.id;
  return Perm::from_images(p.pool(), images);
}

// The atoms moved by p.
inline AtomSet nontriv(const Perm& p) {
  AtomSet out;
  for (const auto& [src, img] : p.moved()) out.insert(src);
  return out;
}

// All pool.size()! permutations, in lexicographic image-table order, each
// exactly once. Refuses pools past the cap.
inline std::vector<Perm> enumerate_perms(AtomPool pool,
                                         int cap = kDefaultPermEnumCap) {
  if (pool.size() > cap)
    throw EnumerationCapError(
        "pool of size " + std::to_string(pool.size()) +
        " exceeds the permutation enumeration cap of " + std::to_string(cap));
  std::vector<int> images(static_cast<std::size_t>(pool.size()));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(pool, images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Cycle notation: "(a0 a1)(a2 a3)", "id" for the identity. Each cycle starts
// at its smallest atom; cycles are ordered by their smallest atom.
inline std::string to_string(const Perm& p) {
  if (p.is_identity()) return "id";
  std::string out;
  AtomSet done;
  for (const auto& [src, img] : p.moved()) {
    if (done.count(src)) continue;
    out += "(";
    Atom cur = src;
    bool first = true;
    do {
      if (!first) out += " ";
      first = false;
      out += to_string(cur);
      done.insert(cur);
      cur = p(cur);
    } while (cur != src);
    out += ")";
  }
  return out;
}

// Parses cycle notation. Listed cycles are treated as a right-to-left
// composition; the printer only ever emits disjoint cycles, for which the
// order does not matter.
inline Perm parse_perm(AtomPool pool, const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.compare(pos, 2, "id") == 0) {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing input after \"id\"", 1, static_cast<int>(pos) + 1);
    return Perm(pool);
  }
  std::vector<std::vector<Atom>> cycles;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation", 1, static_cast<int>(pos) + 1);
    ++pos;
    std::vector<Atom> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos >= text.size() || text[pos] != 'a')
        throw ParseError("expected atom name in cycle", 1, static_cast<int>(pos) + 1);
      std::size_t start = pos++;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      cycle.push_back(parse_atom(text.substr(start, pos - start), pool));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
  }
  Perm result(pool);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> images(static_cast<std::size_t>(pool.size()));
    std::iota(images.begin(), images.end(), 0);
    const auto& c = *it;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Atom from = c[i];
      Atom to = c[(i + 1) % c.size()];
      images[static_cast<std::size_t>(from.id)] = to.id;
    }
    result = compose(Perm::from_images(pool, images), result);
  }
  return result;
}

}  // namespace zfa
