#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mlat/error.hpp"

namespace mlat {

using Elem = std::uint32_t;

/// Dense element-index set over a finite monoid's universe.
using IndexSet = boost::dynamic_bitset<>;

inline constexpr unsigned kDefaultTransformationBound = 5;
inline constexpr unsigned kDefaultEnumerationBound = 20;

/// A finite monoid given by its full multiplication table.  table(i, j) is
/// the index of x_i * x_j (row index = left factor).  Immutable after
/// construction; construction validates the monoid axioms.
class FiniteMonoid {
 public:
  /// Validates dimensions, locates the identity (auto-detected when
  /// `declared_identity` is absent, cross-checked when present) and checks
  /// associativity.  Throws MalformedTable, NoIdentity or NotAssociative.
  FiniteMonoid(std::size_t order, std::vector<Elem> table,
               std::optional<Elem> declared_identity = std::nullopt,
               std::vector<std::string> names = {});

  /// Builds without the O(n^3) associativity check; for tables produced by
  /// constructions that are associative by design.  Still locates the
  /// identity.
  static FiniteMonoid trusted(std::size_t order, std::vector<Elem> table,
                              std::vector<std::string> names = {});

  std::size_t order() const { return order_; }
  Elem product(Elem i, Elem j) const { return table_[i * order_ + j]; }
  Elem identity() const { return identity_; }
  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  std::string element_name(Elem i) const;
  const std::vector<Elem>& table() const { return table_; }

 private:
  FiniteMonoid() = default;

  std::size_t order_ = 0;
  std::vector<Elem> table_;
  Elem identity_ = 0;
  std::vector<std::string> names_;
};

/// All x with x*x = x.
IndexSet idempotent_elements(const FiniteMonoid& m);

/// All x with a*x = 1 for some a (scan of the identity's preimages).
IndexSet left_unit_elements(const FiniteMonoid& m);

/// All x with x*a = 1 for some a.
IndexSet right_unit_elements(const FiniteMonoid& m);

/// Smallest product-closed, identity-containing superset of `generators`.
/// Worklist closure with a membership mask for O(1) dedup.
IndexSet submonoid_closure(const FiniteMonoid& m, const IndexSet& generators);

/// Sub-table induced on `subset` (which must be closed and contain the
/// identity; throws NotClosed otherwise).  Element i of the result is the
/// i-th smallest member of `subset`; if `map_out` is non-null it receives
/// that sub-index -> parent-index map.
FiniteMonoid restrict_table(const FiniteMonoid& m, const IndexSet& subset,
                            std::vector<Elem>* map_out = nullptr);

/// Componentwise product table of order |a|*|b|; element i*|b|+j is the
/// pair (a_i, b_j).
FiniteMonoid direct_product_table(const FiniteMonoid& a, const FiniteMonoid& b);

/// Adds a new absorbing element (index n) to the table.
FiniteMonoid adjoin_zero_table(const FiniteMonoid& m);

// Standard finite families.
FiniteMonoid trivial_monoid();
FiniteMonoid cyclic_group(unsigned k);

/// Chain semilattice 1 = e_0 > e_1 > ... > e_{k-1} with product = meet
/// (table entry max(i, j)); every element is idempotent.
FiniteMonoid chain_semilattice(unsigned k);

/// All self-maps of {0..n-1} under right-to-left composition (f*g applies g
/// first), so the left units are the injective maps.  Order n^n.
FiniteMonoid transformation_monoid(unsigned n, unsigned bound = kDefaultTransformationBound);

/// The identity together with all non-bijective self-maps of {0..n-1}; a
/// finite idempotent-generated monoid of order n^n - n! + 1.
FiniteMonoid singular_plus_identity(unsigned n, unsigned bound = kDefaultTransformationBound);

/// Parses the JSON table document: fields `order` (int), `table` (row-major
/// array of length order^2), optional `identity`, optional `names`.
FiniteMonoid load_finite_monoid(const std::string& json_text);

std::string finite_monoid_to_json(const FiniteMonoid& m);

}  // namespace mlat
