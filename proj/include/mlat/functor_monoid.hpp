#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "mlat/finite_monoid.hpp"
#include "mlat/functor_id.hpp"
#include "mlat/lattice.hpp"
#include "mlat/monoid.hpp"

namespace mlat {

/// table[x][y] = x after y: the image monoid of (x o y) equals the image of
/// table[x][y] on every monoid.
using CompositionTable = std::array<std::array<FunctorId, kFunctorCount>, kFunctorCount>;

/// The composition law of the fifteen functors, embedded as static data.
/// derive_composition_table() must reproduce it cell for cell.
const CompositionTable& known_composition_table();

/// The default corpus that separates all fifteen functors: the single
/// product Z2 x 2-chain x monogenic x bicyclic.
std::vector<Monoid> separating_corpus();

/// Empirically derives the composition table: for each pair (x, y) it
/// evaluates x on the restriction to the image of y, over every corpus
/// member, and finds the unique functor with the same images.  Throws
/// AmbiguousComposition / NoMatchingComposition.
CompositionTable derive_composition_table(const std::vector<Monoid>& corpus);

struct TableComparison {
  int matches = 0;
  // (row, column, derived, expected) for each disagreeing cell.
  std::vector<std::array<FunctorId, 4>> mismatches;
  bool all_match() const { return mismatches.empty(); }
};

/// Cell-by-cell comparison of a derived table against the embedded law.
TableComparison verify_composition_table(const CompositionTable& derived);

/// The fifteen-element monoid of functors under composition, as a validated
/// multiplication table with the functor names as element labels.
FiniteMonoid build_functor_monoid();

struct FunctorMonoidAnalysis {
  bool j_trivial = false;
  bool all_green_partitions_discrete = false;
  std::vector<Elem> idempotents;                       // sorted indices
  std::vector<Elem> idempotent_generated;              // the submonoid they generate
  std::vector<std::pair<Elem, Elem>> divisibility_hasse;  // (lower, upper)
  // Divisibility order inside the idempotent-generated submonoid, expressed
  // in the outer element indices.
  std::vector<std::pair<Elem, Elem>> idempotent_divisibility_hasse;
  bool gl_divides_pl = true;   // expected false
  bool pl_sandwich_ok = false; // x o PL o y always lands in {O, G, Q, P, PL}
};

FunctorMonoidAnalysis analyze_functor_monoid(const FiniteMonoid& f);

/// Feeds the functor monoid's own table back through the invariant and
/// lattice machinery.
InvariantLattice functor_monoid_self_lattice();

}  // namespace mlat
