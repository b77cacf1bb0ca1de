#pragma once

#include <vector>

#include "mlat/monoid.hpp"

namespace mlat {

/// The named seed monoids the verification corpus is built from: the
/// trivial monoid, small cyclic groups, small chain semilattices, the free
/// monogenic monoid, the bicyclic monoid with and without zero, and the
/// idempotent-generated monoid of singular maps plus identity.
std::vector<Monoid> default_builtins();

/// The default verification corpus: every builtin, every builtin with a
/// zero adjoined, all pairwise products of builtins, and the full
/// transformation monoids on 2 and 3 points.
std::vector<Monoid> default_corpus();

}  // namespace mlat
