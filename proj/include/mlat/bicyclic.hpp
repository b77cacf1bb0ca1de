#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mlat {

/// Canonical form a^m b^n of an element of the bicyclic monoid (relation
/// b a = 1), with an optional absorbing zero for the zero-extended family.
/// Two words a^m b^n and a^k b^l are equal iff m = k and n = l, so the pair
/// is a faithful representation.
struct BicyclicElement {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  bool zero = false;

  static BicyclicElement one() { return {}; }
  static BicyclicElement a(std::uint64_t k = 1) { return {k, 0, false}; }
  static BicyclicElement b(std::uint64_t k = 1) { return {0, k, false}; }
  static BicyclicElement word(std::uint64_t m, std::uint64_t n) { return {m, n, false}; }
  static BicyclicElement zero_element() { return {0, 0, true}; }

  bool is_one() const { return !zero && m == 0 && n == 0; }

  friend bool operator==(const BicyclicElement&, const BicyclicElement&) = default;
};

/// a^m b^n * a^k b^l = a^{m+mu-n} b^{l+mu-k} with mu = max(n, k); the zero
/// absorbs on both sides.
BicyclicElement bicyclic_multiply(const BicyclicElement& x, const BicyclicElement& y);

std::string bicyclic_element_name(const BicyclicElement& x);

/// The closed-form families of pair sets that arise as functor images inside
/// the bicyclic monoid.  The family is closed under intersection and under
/// join (= generated submonoid of the union), which is what makes symbolic
/// lattice computations exact.
enum class PairSet : std::uint8_t {
  Origin,         // {1}
  Diagonal,       // {a^m b^m : m >= 0}, the idempotents
  PowersOfA,      // {a^m : m >= 0}
  PowersOfB,      // {b^n : n >= 0}
  LowerTriangle,  // {a^m b^n : m >= n}
  UpperTriangle,  // {a^m b^n : m <= n}
  All,            // every a^m b^n
};

bool pair_set_contains(PairSet s, std::uint64_t m, std::uint64_t n);
bool pair_set_subset(PairSet s, PairSet t);
PairSet pair_set_meet(PairSet s, PairSet t);

/// Generated submonoid of the union of two families, inside the bicyclic
/// monoid.  Stays within the enum by construction.
PairSet pair_set_join(PairSet s, PairSet t);

/// The idempotents lying in a family (always Origin or Diagonal).
PairSet pair_set_diagonal_part(PairSet s);

/// A submonoid of the bicyclic family in closed form: a pair set, plus a
/// flag recording whether the absorbing zero belongs to it.
struct SymEntry {
  PairSet set = PairSet::Origin;
  bool zero = false;

  friend bool operator==(const SymEntry&, const SymEntry&) = default;
};

bool entry_contains(const SymEntry& e, const BicyclicElement& x);
bool entry_subset(const SymEntry& s, const SymEntry& t);
SymEntry entry_meet(const SymEntry& s, const SymEntry& t);
SymEntry entry_join(const SymEntry& s, const SymEntry& t);

/// True only for {1} and {1, 0}.
bool entry_is_finite(const SymEntry& e);

/// Catalog attribute: whether the entry contains infinitely many
/// idempotents (i.e. its diagonal part is the full diagonal).
bool entry_has_infinitely_many_idempotents(const SymEntry& e);

/// All members with both exponents <= bound, plus the zero when present.
/// Used by the membership-sampling checks that guard the hardcoded tables.
std::vector<BicyclicElement> entry_sample(const SymEntry& e, std::uint64_t bound);

/// Human-readable set description, e.g. "{a^m b^n : m >= n}".
std::string entry_description(const SymEntry& e);

/// Same, but for the free monogenic rendering {1, a, a^2, ...} where only
/// Origin and PowersOfA occur.
std::string entry_description_monogenic(const SymEntry& e);

}  // namespace mlat
