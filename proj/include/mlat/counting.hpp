#pragma once

#include <cstdint>
#include <vector>

#include "mlat/finite_monoid.hpp"
#include "mlat/greens.hpp"  // Partition

namespace mlat {

struct SubsemigroupCounts {
  std::uint64_t subsemigroups = 0;  // product-closed subsets, empty included
  std::uint64_t submonoids = 0;     // those containing the identity
};

/// Exhaustive scan over all 2^n subsets.  Throws BoundExceeded when the
/// order is above `bound`.
SubsemigroupCounts count_subsemigroups(const FiniteMonoid& m,
                                       unsigned bound = kDefaultEnumerationBound);

/// Whether the partition is product-compatible: x ~ y implies ax ~ ay and
/// xa ~ ya for every a.
bool is_congruence(const FiniteMonoid& m, const Partition& p);

/// Smallest congruence identifying x and y, by pair-propagation closure
/// over a union-find.
Partition principal_congruence(const FiniteMonoid& m, Elem x, Elem y);

/// Join of two congruences: transitive closure of the union of their
/// blocks, followed by a compatibility re-closure (a no-op for congruences,
/// kept as a guard).
Partition congruence_join(const FiniteMonoid& m, const Partition& a, const Partition& b);

/// Every congruence, generated as the join closure of the principal
/// congruences together with the equality congruence.
std::vector<Partition> congruences_by_join_closure(const FiniteMonoid& m);

struct CongruenceCounts {
  std::uint64_t congruences = 0;
  std::uint64_t principal = 0;  // distinct nontrivial principal congruences
};

CongruenceCounts count_congruences(const FiniteMonoid& m,
                                   unsigned bound = kDefaultEnumerationBound);

}  // namespace mlat
