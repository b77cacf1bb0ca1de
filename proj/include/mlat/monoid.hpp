#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mlat/bicyclic.hpp"
#include "mlat/error.hpp"
#include "mlat/finite_monoid.hpp"
#include "mlat/functor_id.hpp"

namespace mlat {

enum class BackendKind {
  Finite,
  Monogenic,
  Bicyclic,
  BicyclicZero,
  SymbolicView,  // a closed-form submonoid of a symbolic backend
  ZeroAdjoined,  // generic zero adjunction around a non-materializable monoid
  Product,
};

struct Handle;

/// Handle payload for a zero-adjoined monoid: a handle of the inner monoid
/// plus whether the new zero belongs to the submonoid.
struct ZeroedHandle {
  std::shared_ptr<const Handle> inner;
  bool zero = false;
};

/// Handle payload for a direct product: one handle per factor.  Submonoids
/// of products are represented componentwise; every functor image has this
/// shape because the functors respect direct products.
struct ProductHandle {
  std::vector<Handle> parts;
};

/// A submonoid of a parent monoid.  Finite backends carry an explicit
/// element-index set, symbolic backends a closed-form catalog entry,
/// products a tuple of handles.  Handles always contain the identity and
/// are closed under the parent product.
struct Handle {
  std::variant<IndexSet, SymEntry, ZeroedHandle, ProductHandle> v;

  Handle() = default;
  Handle(IndexSet s) : v(std::move(s)) {}
  Handle(SymEntry e) : v(e) {}
  Handle(ZeroedHandle z) : v(std::move(z)) {}
  Handle(ProductHandle p) : v(std::move(p)) {}

  const IndexSet* finite_set() const { return std::get_if<IndexSet>(&v); }
  const SymEntry* sym_entry() const { return std::get_if<SymEntry>(&v); }
  const ZeroedHandle* zeroed() const { return std::get_if<ZeroedHandle>(&v); }
  const ProductHandle* product() const { return std::get_if<ProductHandle>(&v); }
};

bool operator==(const Handle& a, const Handle& b);
inline bool operator!=(const Handle& a, const Handle& b) { return !(a == b); }

/// Structural subset test (componentwise on products, inclusion tables on
/// symbolic entries).
bool handle_subset(const Handle& s, const Handle& t);

/// Set intersection.  Always representable: the symbolic entry family is
/// closed under intersection.
Handle handle_intersect(const Handle& s, const Handle& t);

ZeroedHandle make_zeroed_handle(Handle inner, bool zero);

struct MonoidType {
  bool t1 = false;  // units = left units (identity stable)
  bool t2 = false;  // FLR = whole monoid
  bool t3 = false;  // FLR = GLR
  bool t4 = false;  // trivial unit group

  friend bool operator==(const MonoidType&, const MonoidType&) = default;
  bool stable() const { return t1; }
  std::string to_string() const;
  static MonoidType bits(int i, int j, int k, int l) {
    return {i != 0, j != 0, k != 0, l != 0};
  }
};

/// Coordinatewise product: the type of a direct product is the product of
/// the factor types.
MonoidType type_product(const MonoidType& a, const MonoidType& b);

class Monoid;
struct Restriction;

/// Uniform monoid value: a finite table, a symbolic backend (free
/// monogenic, bicyclic, bicyclic with zero, or a closed-form submonoid of
/// those), a generic zero adjunction, or a direct product.  Immutable and
/// cheap to copy.
class Monoid {
 public:
  static Monoid finite(FiniteMonoid m);
  static Monoid monogenic();
  static Monoid bicyclic();
  static Monoid bicyclic_zero();

  /// Flattens nested products; an empty factor list gives the trivial
  /// monoid and a single factor is returned unchanged.
  static Monoid direct_product(std::vector<Monoid> factors);

  /// Adds a new absorbing zero.  Finite tables grow by one element, the
  /// plain bicyclic backend becomes the bicyclic-zero backend, anything
  /// else is wrapped generically.
  static Monoid adjoin_zero(const Monoid& m);

  /// Named families: cyclic:k, chain:k, nat (= monogenic), bicyclic,
  /// bicyclic0, sing1:n.  Throws UnknownFamily / BadParams.
  static Monoid standard_family(const std::string& name,
                                std::optional<long> param = std::nullopt);

  /// Parses "name[:param]" builtin tokens, including tn:n.  `tn_bound`
  /// caps the transformation-monoid size.
  static Monoid builtin(const std::string& token,
                        unsigned tn_bound = kDefaultTransformationBound);

  BackendKind kind() const;
  std::string describe() const;

  bool is_finite() const;
  /// Multiplication table of a finite-universe monoid (products of finite
  /// factors are materialized componentwise).  Throws BackendUnsupported
  /// for infinite universes.
  FiniteMonoid materialize() const;
  const FiniteMonoid* finite_table() const;  // non-null only for kind() == Finite
  const std::vector<Monoid>& factors() const;  // kind() == Product only

  Handle full_handle() const;
  Handle identity_handle() const;

  /// The set of idempotent elements (not closed under products for finite
  /// backends; symbolic idempotent sets happen to be submonoids).
  Handle idempotent_elements() const;
  Handle left_units() const;
  Handle right_units() const;
  Handle units() const;

  /// Generated submonoid of the union of two submonoid handles.
  Handle join(const Handle& s, const Handle& t) const;

  /// Evaluates one of the fifteen functors.  Product backends evaluate
  /// componentwise; the named symbolic backends use their catalog; Q, P,
  /// PL, PR go through restrict-then-apply on computed backends.
  Handle apply(FunctorId x) const;

  Restriction restrict_to(const Handle& h) const;

  /// Generated submonoid of an explicit element set (finite backends).
  Handle generated(const IndexSet& generators) const;

  /// Generated submonoid of symbolic elements; throws NotInCatalog when
  /// the closure has no closed form in the entry family.
  Handle generated(const std::vector<BicyclicElement>& generators) const;

  MonoidType type() const;

  /// Whether units = left units; finite backends cross-check against the
  /// Green's classes of the identity.
  bool identity_stable() const;

  std::string describe_handle(const Handle& h) const;

  /// Number of elements of the submonoid, when finite.
  std::optional<std::uint64_t> handle_size(const Handle& h) const;

 private:
  struct Impl;
  friend struct MonoidFactory;
  explicit Monoid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// Result of restricting a monoid to a submonoid handle: the induced monoid
/// plus an embedding that maps its handles back to handles of the original
/// parent.
struct Restriction {
  Monoid monoid;
  std::function<Handle(const Handle&)> embed;
};

/// Catalog access for the named symbolic backends (monogenic, bicyclic,
/// bicyclic-zero): the closed-form submonoid produced by a functor.
SymEntry catalog_entry(const Monoid& symbolic_backend, FunctorId x);

struct SymbolicGreensDescription;

/// Precomputed Green's class descriptions for the named symbolic backends.
/// Throws BackendUnsupported elsewhere; finite monoids use greens().
SymbolicGreensDescription symbolic_greens(const Monoid& symbolic_backend);

/// Hardcoded inclusion order on catalog entries.
bool catalog_inclusion(const SymEntry& s, const SymEntry& t);

}  // namespace mlat
