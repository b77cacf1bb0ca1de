#include <doctest.h>

#include <random>

#include "mlat/finite_monoid.hpp"
#include "oracles.hpp"

using namespace mlat;

TEST_CASE("one-element table is the trivial monoid") {
  const FiniteMonoid m(1, {0});
  CHECK(m.order() == 1);
  CHECK(m.identity() == 0);
}

TEST_CASE("two-element group table loads with identity 0") {
  const FiniteMonoid m(2, {0, 1, 1, 0});
  CHECK(m.order() == 2);
  CHECK(m.identity() == 0);
  CHECK(m.product(1, 1) == 0);
}

TEST_CASE("corrupted group table has no identity") {
  // Oracle: neither candidate satisfies the identity law on both sides.
  const std::vector<Elem> t = {0, 1, 0, 0};
  for (Elem e = 0; e < 2; ++e) {
    bool is_identity = true;
    for (Elem i = 0; i < 2; ++i) {
      is_identity = is_identity && t[e * 2 + i] == i && t[i * 2 + e] == i;
    }
    CHECK_FALSE(is_identity);
  }
  CHECK_THROWS_AS(FiniteMonoid(2, t), NoIdentity);
}

TEST_CASE("dimension and range validation") {
  CHECK_THROWS_AS(FiniteMonoid(2, {0, 1, 1}), MalformedTable);
  CHECK_THROWS_AS(FiniteMonoid(2, {0, 1, 1, 5}), MalformedTable);
  CHECK_THROWS_AS(FiniteMonoid(0, {}), MalformedTable);
}

TEST_CASE("non-associative table is rejected with a witness") {
  // Identity 0, but 1*(1*1) != (1*1)*1 once entry (1,1) points at 2.
  const std::vector<Elem> t = {0, 1, 2, 1, 2, 0, 2, 1, 0};
  bool caught = false;
  try {
    FiniteMonoid m(3, t);
  } catch (const NotAssociative& e) {
    caught = true;
    const Elem ij = t[e.i * 3 + e.j];
    const Elem jk = t[e.j * 3 + e.k];
    CHECK(t[ij * 3 + e.k] != t[e.i * 3 + jk]);
  }
  CHECK(caught);
}

TEST_CASE("declared identity is cross-checked") {
  CHECK_THROWS_AS(FiniteMonoid(2, {0, 1, 1, 0}, Elem{1}), NoIdentity);
  const FiniteMonoid ok(2, {0, 1, 1, 0}, Elem{0});
  CHECK(ok.identity() == 0);
}

TEST_CASE("json document round trip") {
  const FiniteMonoid m = load_finite_monoid(
      R"({"order": 2, "table": [0, 1, 1, 0], "names": ["1", "g"]})");
  CHECK(m.order() == 2);
  CHECK(m.element_name(1) == "g");
  const FiniteMonoid again = load_finite_monoid(finite_monoid_to_json(m));
  CHECK(again.table() == m.table());
  CHECK_THROWS_AS(load_finite_monoid("{"), MalformedTable);
  CHECK_THROWS_AS(load_finite_monoid(R"({"order": 2})"), MalformedTable);
}

TEST_CASE("direct product of two groups of order two") {
  const FiniteMonoid z2 = cyclic_group(2);
  const FiniteMonoid k4 = direct_product_table(z2, z2);
  REQUIRE(k4.order() == 4);
  for (Elem x = 0; x < 4; ++x) {
    CHECK(k4.product(x, x) == k4.identity());  // elementary abelian
  }
}

TEST_CASE("identity factor leaves the table unchanged") {
  const FiniteMonoid z2 = cyclic_group(2);
  const FiniteMonoid p = direct_product_table(z2, trivial_monoid());
  CHECK(p.order() == 2);
  CHECK(p.table() == z2.table());
}

TEST_CASE("group times chain has two idempotents and two units") {
  const FiniteMonoid p = direct_product_table(cyclic_group(2), chain_semilattice(2));
  REQUIRE(p.order() == 4);
  // Brute-force scan of the product table.
  int idem = 0, units = 0;
  for (Elem x = 0; x < 4; ++x) {
    if (p.product(x, x) == x) {
      ++idem;
    }
    for (Elem y = 0; y < 4; ++y) {
      if (p.product(x, y) == p.identity() && p.product(y, x) == p.identity()) {
        ++units;
        break;
      }
    }
  }
  CHECK(idem == 2);
  CHECK(units == 2);
}

TEST_CASE("zero adjunction on the trivial monoid gives the two-chain") {
  const FiniteMonoid z = adjoin_zero_table(trivial_monoid());
  CHECK(z.order() == 2);
  CHECK(z.table() == chain_semilattice(2).table());
}

TEST_CASE("zero adjunction on a group") {
  const FiniteMonoid z = adjoin_zero_table(cyclic_group(2));
  REQUIRE(z.order() == 3);
  IndexSet idem = idempotent_elements(z);
  CHECK(idem.count() == 2);
  CHECK(idem.test(z.identity()));
  CHECK(idem.test(2));  // the new zero
}

TEST_CASE("zero adjunction restricts back to the original table") {
  const FiniteMonoid m = singular_plus_identity(3);
  const FiniteMonoid z = adjoin_zero_table(m);
  IndexSet original(z.order());
  for (Elem x = 0; x < m.order(); ++x) {
    original.set(x);
  }
  const FiniteMonoid back = restrict_table(z, original);
  CHECK(back.table() == m.table());
}

TEST_CASE("transformation monoids") {
  CHECK(transformation_monoid(1).order() == 1);

  const FiniteMonoid t2 = transformation_monoid(2);
  REQUIRE(t2.order() == 4);
  CHECK(idempotent_elements(t2).count() == 3);

  const FiniteMonoid t3 = transformation_monoid(3);
  REQUIRE(t3.order() == 27);
  CHECK(idempotent_elements(t3).count() == oracles::transformation_idempotent_count(3));
  CHECK(oracles::transformation_idempotent_count(3) == 10);
  IndexSet units = left_unit_elements(t3) & right_unit_elements(t3);
  CHECK(units.count() == oracles::factorial(3));

  CHECK_THROWS_AS(transformation_monoid(6), BoundExceeded);
  CHECK(transformation_monoid(4, 6).order() == 256);
}

TEST_CASE("left units of a transformation monoid are the injective maps") {
  // Composition is right-to-left, so maps with a left inverse are injective,
  // and on a finite set those are the n! bijections.
  const FiniteMonoid t3 = transformation_monoid(3);
  CHECK(left_unit_elements(t3).count() == 6);
  CHECK(right_unit_elements(t3).count() == 6);
}

TEST_CASE("singular maps plus identity") {
  const FiniteMonoid s = singular_plus_identity(3);
  CHECK(s.order() == 22);  // 27 - 6 bijections + identity
  // Idempotent-generated: the closure of its idempotents is everything.
  CHECK(submonoid_closure(s, idempotent_elements(s)).count() == s.order());
}

TEST_CASE("closure of the idempotents of T3 has order 22") {
  const FiniteMonoid t3 = transformation_monoid(3);
  const IndexSet idem = idempotent_elements(t3);
  const IndexSet closed = submonoid_closure(t3, idem);
  CHECK(closed.count() == 22);
  CHECK(closed == oracles::naive_closure(t3, idem));
}

TEST_CASE("empty generating set yields the trivial submonoid") {
  const FiniteMonoid z2 = cyclic_group(2);
  const IndexSet closed = submonoid_closure(z2, IndexSet(2));
  CHECK(closed.count() == 1);
  CHECK(closed.test(z2.identity()));
}

TEST_CASE("closure is idempotent and monotone on random subsets") {
  std::mt19937 rng(20240811);
  const std::vector<FiniteMonoid> small = {
      trivial_monoid(),
      cyclic_group(2),
      cyclic_group(3),
      chain_semilattice(3),
      transformation_monoid(2),
      direct_product_table(cyclic_group(2), chain_semilattice(2)),
      direct_product_table(chain_semilattice(2), chain_semilattice(2)),
      adjoin_zero_table(cyclic_group(4)),
  };
  for (const FiniteMonoid& m : small) {
    REQUIRE(m.order() <= 8);
    for (int trial = 0; trial < 50; ++trial) {
      IndexSet s(m.order()), t(m.order());
      for (Elem x = 0; x < m.order(); ++x) {
        const unsigned bits = rng();
        if (bits & 1) {
          s.set(x);
        }
        if (bits & 3) {
          t.set(x);  // t is a superset of s whenever bit 0 implies bit 0|1
        }
      }
      t |= s;
      const IndexSet cs = submonoid_closure(m, s);
      CHECK(submonoid_closure(m, cs) == cs);
      CHECK(cs.is_subset_of(submonoid_closure(m, t)));
      CHECK(cs == oracles::naive_closure(m, s));
    }
  }
}

TEST_CASE("restriction rejects non-closed subsets") {
  const FiniteMonoid z4 = cyclic_group(4);
  IndexSet s(4);
  s.set(0);
  s.set(1);  // 1+1=2 escapes
  CHECK_THROWS_AS(restrict_table(z4, s), NotClosed);
  IndexSet no_identity(4);
  no_identity.set(2);
  CHECK_THROWS_AS(restrict_table(z4, no_identity), NotClosed);
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(cyclic_group(0), BadParams);
  CHECK_THROWS_AS(chain_semilattice(0), BadParams);
  CHECK(cyclic_group(1).order() == 1);
  CHECK(chain_semilattice(2).order() == 2);
}
