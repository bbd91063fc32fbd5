#include <catch2/catch_amalgamated.hpp>

#include "zfa/element.hpp"
#include "zfa/universe.hpp"

using namespace zfa;

namespace {

Element atom(int i) { return Element::atom(Atom{i}); }

}  // namespace

TEST_CASE("canonical form sorts and deduplicates") {
  Element a = Element::set({atom(1), atom(0), atom(1)});
  Element b = Element::set({atom(0), atom(1)});
  CHECK(a == b);
  CHECK(a.children().size() == 2);
  CHECK(Element::set(a.children()) == a);  // canonicalizing twice
  CHECK(Element::empty_set() != atom(0));   // an atom is not the empty set
  CHECK(atom(0).contains(Element::empty_set()) == false);
}

TEST_CASE("pointwise action") {
  AtomPool pool(3);
  Perm s01 = swapping(pool, Atom{0}, Atom{1});
  Element x = Element::set({atom(0), Element::set({atom(1)})});
  CHECK(act(s01, x) == Element::set({atom(1), Element::set({atom(0)})}));
  CHECK(to_string(act(s01, x)) == "{a1, {a0}}");
  CHECK(rank(act(s01, x)) == rank(x));
  CHECK_THROWS_AS(act(swapping(AtomPool(2), Atom{0}, Atom{1}), atom(2)),
                  PoolMismatchError);
}

TEST_CASE("action is a group action over the rank-1 universe") {
  AtomPool pool(3);
  Universe u = generate_universe(pool, 1, 3);
  std::vector<Perm> perms = enumerate_perms(pool);
  for (const Element& x : u.elements()) {
    CHECK(act(Perm(pool), x) == x);
    for (const Perm& p : perms)
      for (const Perm& q : perms)
        CHECK(act(p, act(q, x)) == act(compose(p, q), x));
  }
}

TEST_CASE("rank") {
  CHECK(rank(atom(0)) == 0);
  CHECK(rank(Element::empty_set()) == 0);
  CHECK(rank(Element::set({Element::empty_set()})) == 1);
  CHECK(rank(kuratowski_pair(atom(0), atom(1))) == 2);
}

TEST_CASE("atoms_of") {
  CHECK(atoms_of(Element::empty_set()).empty());
  CHECK(atoms_of(kuratowski_pair(atom(0), atom(1))) ==
        AtomSet{Atom{0}, Atom{1}});

  // The occurring atoms of a permuted element are the permuted occurring
  // atoms — exhaustive over a small universe.
  AtomPool pool(3);
  Universe u = generate_universe(pool, 2, 3);
  std::size_t step = u.size() / 50 + 1;
  for (std::size_t i = 0; i < u.size(); i += step) {
    const Element& x = u.elements()[i];
    for (const Perm& p : enumerate_perms(pool)) {
      AtomSet image;
      for (Atom a : atoms_of(x)) image.insert(p(a));
      CHECK(atoms_of(act(p, x)) == image);
    }
  }
}

TEST_CASE("kuratowski pairs") {
  Element x = atom(0), y = atom(1);
  CHECK(kuratowski_pair(x, x) ==
        Element::set({Element::set({x})}));  // {x,x} collapses
  CHECK(decode_pair(kuratowski_pair(x, y)) == std::pair{x, y});

  AtomPool pool(3);
  for (const Perm& p : enumerate_perms(pool))
    CHECK(act(p, kuratowski_pair(x, y)) ==
          kuratowski_pair(act(p, x), act(p, y)));
}

TEST_CASE("pair decoding round-trips over the rank-1 universe") {
  AtomPool pool(3);
  Universe u = generate_universe(pool, 1, 3);
  for (const Element& x : u.elements())
    for (const Element& y : u.elements()) {
      auto [dx, dy] = decode_pair(kuratowski_pair(x, y));
      CHECK(dx == x);
      CHECK(dy == y);
    }
}

TEST_CASE("decode_pair rejects non-pairs") {
  CHECK_THROWS_AS(decode_pair(atom(0)), NotAPairError);
  CHECK_THROWS_AS(decode_pair(Element::empty_set()), NotAPairError);
  // {{a0}, {a1}}: two singletons is not a Kuratowski pair.
  CHECK_THROWS_AS(decode_pair(Element::set({Element::set({atom(0)}),
                                            Element::set({atom(1)})})),
                  NotAPairError);
  // {{a0, a1}} alone lacks the {x} component.
  CHECK_THROWS_AS(decode_pair(Element::set({Element::set({atom(0), atom(1)})})),
                  NotAPairError);
  CHECK(decode_pair(parse_element("{{a0, a1}, {a0}}", AtomPool(3))) ==
        std::pair{atom(0), atom(1)});
}

TEST_CASE("powerset") {
  CHECK(powerset(Element::empty_set()) ==
        Element::set({Element::empty_set()}));
  CHECK(powerset(Element::set({atom(0), atom(1)})).children().size() == 4);
  CHECK_THROWS_AS(powerset(atom(0)), NotASetError);

  AtomPool pool(3);
  Element x = Element::set({atom(0), atom(2)});
  for (const Perm& p : enumerate_perms(pool))
    CHECK(act(p, powerset(x)) == powerset(act(p, x)));
}

TEST_CASE("big_union") {
  CHECK(big_union(Element::empty_set()) == Element::empty_set());
  CHECK(big_union(Element::set({Element::set({atom(0)}),
                                Element::set({atom(0), atom(1)})})) ==
        Element::set({atom(0), atom(1)}));
  // Atom members contribute nothing.
  CHECK(big_union(Element::set({atom(0), Element::set({atom(1)})})) ==
        Element::set({atom(1)}));
  CHECK_THROWS_AS(big_union(atom(0)), NotASetError);
}

TEST_CASE("union commutes with the action over the rank-2 universe") {
  AtomPool pool(3);
  Universe u = generate_universe(pool, 2, 3);
  std::vector<Perm> perms = enumerate_perms(pool);
  for (const Element& x : u.elements()) {
    if (x.is_atom()) continue;
    for (const Perm& p : perms)
      CHECK(act(p, big_union(x)) == big_union(act(p, x)));
  }
}

TEST_CASE("function-sets") {
  Element empty = Element::empty_set();
  Element X = Element::set({atom(0)});
  Element Y = Element::set({atom(0), atom(1)});
  CHECK(is_function_set(empty, empty, Y));
  CHECK(is_function_set(Element::set({kuratowski_pair(atom(0), atom(1))}), X,
                        Y));
  CHECK_FALSE(is_function_set(
      Element::set({kuratowski_pair(atom(0), atom(0)),
                    kuratowski_pair(atom(0), atom(1))}),
      X, Y));
  // Domain not fully covered.
  CHECK_FALSE(is_function_set(empty, X, Y));
  CHECK_THROWS_AS(is_function_set(atom(0), X, Y), NotASetError);
}

TEST_CASE("injective function-sets transport under the action") {
  AtomPool pool(3);
  Element XY = Element::set({atom(0), atom(1)});
  Element f = Element::set({kuratowski_pair(atom(0), atom(1)),
                            kuratowski_pair(atom(1), atom(0))});
  REQUIRE(is_injective_function_set(f, XY, XY));
  CHECK_FALSE(is_injective_function_set(
      Element::set({kuratowski_pair(atom(0), atom(1)),
                    kuratowski_pair(atom(1), atom(1))}),
      XY, XY));
  for (const Perm& p : enumerate_perms(pool))
    CHECK(is_injective_function_set(act(p, f), act(p, XY), act(p, XY)));
}

TEST_CASE("subset_of") {
  CHECK(subset_of(atom(0), Element::empty_set()));  // atoms are vacuous
  CHECK(subset_of(Element::set({atom(0)}), Element::set({atom(0), atom(1)})));
  CHECK_FALSE(
      subset_of(Element::set({atom(2)}), Element::set({atom(0), atom(1)})));
}

TEST_CASE("element literals parse and print") {
  AtomPool pool(3);
  for (std::string text :
       {"a0", "{}", "{a0, a1}", "{a0, {a1}}", "{{}, {a0}}"}) {
    Element e = parse_element(text, pool);
    CHECK(to_string(e) == text);
    CHECK(parse_element(to_string(e), pool) == e);
  }
  // Non-canonical spellings normalize.
  CHECK(to_string(parse_element("{ {a1} , a0 , a0 }", pool)) == "{a0, {a1}}");

  CHECK_THROWS_AS(parse_element("a9", pool), ParseError);
  CHECK_THROWS_AS(parse_element("{a0", pool), ParseError);
  CHECK_THROWS_AS(parse_element("{a0,}", pool), ParseError);
  CHECK_THROWS_AS(parse_element("{} junk", pool), ParseError);
  CHECK_THROWS_MATCHES(parse_element("a7", pool), ParseError,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("a7")));
}
