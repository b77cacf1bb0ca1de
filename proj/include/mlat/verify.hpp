#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mlat/functor_id.hpp"
#include "mlat/report.hpp"

namespace mlat {

/// Property suites over the default corpus: the intersection and collapse
/// laws, the product and zero-adjunction laws, and the Green's class
/// identities of the identity element.
RunReport verify_lemmas();

/// Reproduction of the functor-monoid structure: composition table, size,
/// idempotents, J-triviality, divisibility order, subsemigroup and
/// congruence counts, and the functor monoid's own lattice.
RunReport verify_fplus();

/// Type realization, node counts against the shape catalog, and the
/// intersection-closure witnesses.
RunReport verify_shapes();

/// One of "lemmas", "fplus", "shapes", "all"; throws BadParams otherwise.
RunReport verify_suite(const std::string& name);

/// Expected covering pairs of the divisibility order on the fifteen
/// functors, and on the nine idempotent ones.
const std::vector<std::pair<FunctorId, FunctorId>>& expected_divisibility_hasse();
const std::vector<std::pair<FunctorId, FunctorId>>& expected_idempotent_divisibility_hasse();

}  // namespace mlat
