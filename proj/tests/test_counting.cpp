#include <doctest.h>

#include <algorithm>
#include <set>

#include "mlat/counting.hpp"
#include "mlat/functor_monoid.hpp"
#include "oracles.hpp"

using namespace mlat;

namespace {

std::set<std::vector<int>> as_keys(const std::vector<Partition>& ps) {
  std::set<std::vector<int>> out;
  for (const Partition& p : ps) {
    out.insert(p.cls);
  }
  return out;
}

}  // namespace

TEST_CASE("subsemigroup counts of tiny monoids") {
  // Convention: the empty subset is a (vacuously closed) subsemigroup, so
  // the trivial monoid has the empty set and {1}.
  const SubsemigroupCounts one = count_subsemigroups(trivial_monoid());
  CHECK(one.subsemigroups == 2);
  CHECK(one.submonoids == 1);

  // Z2: empty, {1}, {1, g} are closed; {g} is not since g*g = 1.
  const SubsemigroupCounts z2 = count_subsemigroups(cyclic_group(2));
  CHECK(z2.subsemigroups == 3);
  CHECK(z2.submonoids == 2);

  // Two-chain: every subset is closed (both elements idempotent, product
  // lands at the lower one).
  const SubsemigroupCounts chain = count_subsemigroups(chain_semilattice(2));
  CHECK(chain.subsemigroups == 4);
  CHECK(chain.submonoids == 2);

  CHECK_THROWS_AS(count_subsemigroups(transformation_monoid(3), 20), BoundExceeded);
}

TEST_CASE("principal congruences of small monoids") {
  // Z2 has one nontrivial pair; it generates the universal congruence.
  const Partition p = principal_congruence(cyclic_group(2), 0, 1);
  CHECK(p.count == 1);

  const CongruenceCounts one = count_congruences(trivial_monoid());
  CHECK(one.congruences == 1);
  CHECK(one.principal == 0);

  const CongruenceCounts z2 = count_congruences(cyclic_group(2));
  CHECK(z2.congruences == 2);
  CHECK(z2.principal == 1);
}

TEST_CASE("join closure equals the direct partition scan on small monoids") {
  const std::vector<FiniteMonoid> small = {
      trivial_monoid(),
      cyclic_group(2),
      cyclic_group(3),
      chain_semilattice(2),
      chain_semilattice(3),
      cyclic_group(4),
      transformation_monoid(2),
      adjoin_zero_table(cyclic_group(3)),
      direct_product_table(cyclic_group(2), chain_semilattice(2)),
  };
  for (const FiniteMonoid& m : small) {
    REQUIRE(m.order() <= 4);
    const auto generated = congruences_by_join_closure(m);
    const auto scanned = oracles::congruences_by_partition_scan(m);
    CHECK(as_keys(generated) == as_keys(scanned));
    for (const Partition& p : generated) {
      CHECK(is_congruence(m, p));
    }
  }
}

TEST_CASE("every congruence is a join of principal congruences") {
  const FiniteMonoid m = direct_product_table(cyclic_group(2), chain_semilattice(2));
  const auto scanned = oracles::congruences_by_partition_scan(m);
  const auto generated = congruences_by_join_closure(m);
  CHECK(as_keys(generated) == as_keys(scanned));
}

TEST_CASE("functor monoid counts") {
  const FiniteMonoid f = build_functor_monoid();
  const SubsemigroupCounts subs = count_subsemigroups(f);
  CHECK(subs.subsemigroups == 2904);
  CHECK(subs.submonoids == 1452);
  CHECK(subs.subsemigroups == 2 * subs.submonoids);

  const CongruenceCounts congs = count_congruences(f);
  CHECK(congs.congruences == 1613);
  CHECK(congs.principal == 76);
}
