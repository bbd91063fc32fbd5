// Supports of order structure.
//
// A total order on atoms, encoded as its set of ordered pairs, is supported
// only by every atom it orders: unlike the bare set of those atoms, no
// permutation of the carrier fixes it. The set of ALL total orders on the
// pool, by contrast, is equivariant, because permutations shuffle orders
// into orders. Over a finite pool this is the nearest analogue of the
// contrast between a single well-ordering (no small support) and the set of
// all well-orderings (empty support); the ambient pool here is finite, so
// this is an analogue, not the unbounded statement.

#include <iostream>

#include "zfa/support.hpp"

using namespace zfa;

namespace {

Element atom(int i) { return Element::atom(Atom{i}); }

// The order a_lo <= ... <= a_hi as a set of Kuratowski pairs (m, n), m <= n.
Element chain_order(const std::vector<Atom>& chain) {
  std::vector<Element> pairs;
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i; j < chain.size(); ++j)
      pairs.push_back(
          kuratowski_pair(Element::atom(chain[i]), Element::atom(chain[j])));
  return Element::set(std::move(pairs));
}

}  // namespace

int main() {
  // A carrier of three ordered atoms inside a five-atom pool, so the pool
  // stays adequate for support computations.
  AtomPool pool(5);
  Element order = chain_order({Atom{0}, Atom{1}, Atom{2}});
  Element carrier = Element::set({atom(0), atom(1), atom(2)});

  std::cout << "pool of " << pool.size() << " atoms\n";
  std::cout << "order a0 <= a1 <= a2 as pairs: " << to_string(order) << "\n\n";

  std::cout << "supp(order)   = " << to_string(supp(order, pool)) << "\n";
  std::cout << "supp(carrier) = " << to_string(supp(carrier, pool)) << "\n";
  std::cout << "swapping two carrier atoms fixes the carrier but not the "
               "order:\n";
  Perm s01 = swapping(pool, Atom{0}, Atom{1});
  std::cout << "  (a0 a1) . carrier == carrier: "
            << (act(s01, carrier) == carrier ? "yes" : "no") << "\n";
  std::cout << "  (a0 a1) . order   == order:   "
            << (act(s01, order) == order ? "yes" : "no") << "\n\n";

  // The set of all six total orders on a three-atom pool is equivariant,
  // while each single order is not.
  AtomPool p3(3);
  std::vector<Element> orders;
  for (const Perm& p : enumerate_perms(p3)) {
    std::vector<Atom> chain = {p(Atom{0}), p(Atom{1}), p(Atom{2})};
    orders.push_back(chain_order(chain));
  }
  Element all_orders = Element::set(std::move(orders));
  std::cout << "on the 3-atom pool: " << all_orders.children().size()
            << " distinct total orders\n";
  std::cout << "the set of all orders is equivariant: "
            << (is_equivariant(all_orders, p3) ? "yes" : "no") << "\n";
  bool any_single = false;
  for (const Element& one : all_orders.children())
    any_single = any_single || is_equivariant(one, p3);
  std::cout << "some single order is equivariant:   "
            << (any_single ? "yes" : "no") << "\n";

  // On the inadequate 3-atom pool, a single order has incomparable minimal
  // supports: the finite-pool shadow of having no small support at all.
  SupportReport report = support_report(all_orders.children()[0], p3);
  std::cout << "\nsupport report for one order over its own 3-atom pool:\n"
            << to_string(report) << "\n";
  return 0;
}
