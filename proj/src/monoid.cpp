#include "mlat/monoid.hpp"

#include <algorithm>
#include <cctype>

#include "mlat/greens.hpp"

namespace mlat {

// ---------------------------------------------------------------------------
// Handle operations
// ---------------------------------------------------------------------------

bool operator==(const Handle& a, const Handle& b) {
  if (a.v.index() != b.v.index()) {
    return false;
  }
  if (const auto* s = a.finite_set()) {
    return *s == *b.finite_set();
  }
  if (const auto* e = a.sym_entry()) {
    return *e == *b.sym_entry();
  }
  if (const auto* z = a.zeroed()) {
    const auto* w = b.zeroed();
    return z->zero == w->zero && *z->inner == *w->inner;
  }
  const auto& p = a.product()->parts;
  const auto& q = b.product()->parts;
  if (p.size() != q.size()) {
    return false;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] == q[i])) {
      return false;
    }
  }
  return true;
}

bool handle_subset(const Handle& s, const Handle& t) {
  if (const auto* a = s.finite_set()) {
    return a->is_subset_of(*t.finite_set());
  }
  if (const auto* a = s.sym_entry()) {
    return entry_subset(*a, *t.sym_entry());
  }
  if (const auto* a = s.zeroed()) {
    const auto* b = t.zeroed();
    return (!a->zero || b->zero) && handle_subset(*a->inner, *b->inner);
  }
  const auto& p = s.product()->parts;
  const auto& q = t.product()->parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!handle_subset(p[i], q[i])) {
      return false;
    }
  }
  return true;
}

Handle handle_intersect(const Handle& s, const Handle& t) {
  if (const auto* a = s.finite_set()) {
    return Handle(*a & *t.finite_set());
  }
  if (const auto* a = s.sym_entry()) {
    return Handle(entry_meet(*a, *t.sym_entry()));
  }
  if (const auto* a = s.zeroed()) {
    const auto* b = t.zeroed();
    return Handle(make_zeroed_handle(handle_intersect(*a->inner, *b->inner),
                                     a->zero && b->zero));
  }
  ProductHandle out;
  const auto& p = s.product()->parts;
  const auto& q = t.product()->parts;
  out.parts.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.parts.push_back(handle_intersect(p[i], q[i]));
  }
  return Handle(std::move(out));
}

ZeroedHandle make_zeroed_handle(Handle inner, bool zero) {
  return {std::make_shared<const Handle>(std::move(inner)), zero};
}

// ---------------------------------------------------------------------------
// MonoidType
// ---------------------------------------------------------------------------

std::string MonoidType::to_string() const {
  std::string s = "(";
  s += t1 ? '1' : '0';
  s += ',';
  s += t2 ? '1' : '0';
  s += ',';
  s += t3 ? '1' : '0';
  s += ',';
  s += t4 ? '1' : '0';
  s += ')';
  return s;
}

MonoidType type_product(const MonoidType& a, const MonoidType& b) {
  return {a.t1 && b.t1, a.t2 && b.t2, a.t3 && b.t3, a.t4 && b.t4};
}

// ---------------------------------------------------------------------------
// Backends
// ---------------------------------------------------------------------------

namespace detail {

struct FiniteBackend {
  FiniteMonoid table;
};

struct SymbolicBackend {
  SymEntry universe;
  bool monogenic = false;  // rendering flavour only
};

struct ZeroedBackend {
  Monoid inner;
};

struct ProductBackend {
  std::vector<Monoid> factors;
};

}  // namespace detail

using BackendVariant = std::variant<detail::FiniteBackend, detail::SymbolicBackend,
                                    detail::ZeroedBackend, detail::ProductBackend>;

struct Monoid::Impl {
  BackendVariant v;
  explicit Impl(BackendVariant vv) : v(std::move(vv)) {}
};

struct MonoidFactory {
  template <typename T>
  static Monoid make(T backend) {
    return Monoid(std::make_shared<Monoid::Impl>(BackendVariant(std::move(backend))));
  }
};

namespace {

constexpr SymEntry kOriginEntry{PairSet::Origin, false};

// Catalog columns for the named symbolic backends, indexed by FunctorId in
// declaration order: O, E, G, GL, GR, GLR, F, FL, FR, FLR, Q, P, PL, PR, I.
const SymEntry kMonogenicColumn[kFunctorCount] = {
    kOriginEntry, kOriginEntry, kOriginEntry, kOriginEntry, kOriginEntry,
    kOriginEntry, kOriginEntry, kOriginEntry, kOriginEntry, kOriginEntry,
    kOriginEntry, kOriginEntry, kOriginEntry, kOriginEntry,
    {PairSet::PowersOfA, false},
};

const SymEntry kBicyclicColumn[kFunctorCount] = {
    /* O   */ kOriginEntry,
    /* E   */ {PairSet::Diagonal, false},
    /* G   */ kOriginEntry,
    /* GL  */ {PairSet::PowersOfA, false},
    /* GR  */ {PairSet::PowersOfB, false},
    /* GLR */ {PairSet::All, false},
    /* F   */ {PairSet::Diagonal, false},
    /* FL  */ {PairSet::LowerTriangle, false},
    /* FR  */ {PairSet::UpperTriangle, false},
    /* FLR */ {PairSet::All, false},
    /* Q   */ {PairSet::Diagonal, false},
    /* P   */ {PairSet::Diagonal, false},
    /* PL  */ {PairSet::LowerTriangle, false},
    /* PR  */ {PairSet::UpperTriangle, false},
    /* I   */ {PairSet::All, false},
};

const SymEntry kBicyclicZeroColumn[kFunctorCount] = {
    /* O   */ kOriginEntry,
    /* E   */ {PairSet::Diagonal, true},
    /* G   */ kOriginEntry,
    /* GL  */ {PairSet::PowersOfA, false},
    /* GR  */ {PairSet::PowersOfB, false},
    /* GLR */ {PairSet::All, false},
    /* F   */ {PairSet::Diagonal, true},
    /* FL  */ {PairSet::LowerTriangle, true},
    /* FR  */ {PairSet::UpperTriangle, true},
    /* FLR */ {PairSet::All, true},
    /* Q   */ {PairSet::Diagonal, false},
    /* P   */ {PairSet::Diagonal, false},
    /* PL  */ {PairSet::LowerTriangle, false},
    /* PR  */ {PairSet::UpperTriangle, false},
    /* I   */ {PairSet::All, true},
};

Monoid symbolic_view(SymEntry universe, bool monogenic_flavour) {
  return MonoidFactory::make(detail::SymbolicBackend{universe, monogenic_flavour});
}

// Product preserving arity and order; used by restriction so that handle
// embeddings stay positional.
Monoid raw_product(std::vector<Monoid> factors) {
  return MonoidFactory::make(detail::ProductBackend{std::move(factors)});
}

Handle generic_apply(const Monoid& m, FunctorId x);

}  // namespace

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

Monoid Monoid::finite(FiniteMonoid m) {
  return MonoidFactory::make(detail::FiniteBackend{std::move(m)});
}

Monoid Monoid::monogenic() {
  return symbolic_view({PairSet::PowersOfA, false}, true);
}

Monoid Monoid::bicyclic() { return symbolic_view({PairSet::All, false}, false); }

Monoid Monoid::bicyclic_zero() { return symbolic_view({PairSet::All, true}, false); }

Monoid Monoid::direct_product(std::vector<Monoid> factors) {
  std::vector<Monoid> flat;
  for (Monoid& f : factors) {
    if (std::holds_alternative<detail::ProductBackend>(f.impl_->v)) {
      for (const Monoid& g : f.factors()) {
        flat.push_back(g);
      }
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) {
    return Monoid::finite(trivial_monoid());
  }
  if (flat.size() == 1) {
    return flat.front();
  }
  return MonoidFactory::make(detail::ProductBackend{std::move(flat)});
}

Monoid Monoid::adjoin_zero(const Monoid& m) {
  if (const auto* f = std::get_if<detail::FiniteBackend>(&m.impl_->v)) {
    return Monoid::finite(adjoin_zero_table(f->table));
  }
  if (const auto* s = std::get_if<detail::SymbolicBackend>(&m.impl_->v)) {
    if (!s->universe.zero) {
      // An abstract new zero is exactly the entry-level zero flag.
      return symbolic_view({s->universe.set, true}, s->monogenic);
    }
  }
  return MonoidFactory::make(detail::ZeroedBackend{m});
}

BackendKind Monoid::kind() const {
  if (std::holds_alternative<detail::FiniteBackend>(impl_->v)) {
    return BackendKind::Finite;
  }
  if (const auto* s = std::get_if<detail::SymbolicBackend>(&impl_->v)) {
    if (s->monogenic && s->universe == SymEntry{PairSet::PowersOfA, false}) {
      return BackendKind::Monogenic;
    }
    if (s->universe == SymEntry{PairSet::All, false}) {
      return BackendKind::Bicyclic;
    }
    if (s->universe == SymEntry{PairSet::All, true}) {
      return BackendKind::BicyclicZero;
    }
    return BackendKind::SymbolicView;
  }
  if (std::holds_alternative<detail::ZeroedBackend>(impl_->v)) {
    return BackendKind::ZeroAdjoined;
  }
  return BackendKind::Product;
}

const FiniteMonoid* Monoid::finite_table() const {
  if (const auto* f = std::get_if<detail::FiniteBackend>(&impl_->v)) {
    return &f->table;
  }
  return nullptr;
}

const std::vector<Monoid>& Monoid::factors() const {
  const auto* p = std::get_if<detail::ProductBackend>(&impl_->v);
  if (p == nullptr) {
    throw BackendUnsupported("factors() requires a product backend");
  }
  return p->factors;
}

bool Monoid::is_finite() const {
  if (std::holds_alternative<detail::FiniteBackend>(impl_->v)) {
    return true;
  }
  if (const auto* s = std::get_if<detail::SymbolicBackend>(&impl_->v)) {
    return entry_is_finite(s->universe);
  }
  if (const auto* z = std::get_if<detail::ZeroedBackend>(&impl_->v)) {
    return z->inner.is_finite();
  }
  const auto& fs = std::get<detail::ProductBackend>(impl_->v).factors;
  return std::all_of(fs.begin(), fs.end(), [](const Monoid& f) { return f.is_finite(); });
}

FiniteMonoid Monoid::materialize() const {
  if (const auto* f = std::get_if<detail::FiniteBackend>(&impl_->v)) {
    return f->table;
  }
  if (const auto* s = std::get_if<detail::SymbolicBackend>(&impl_->v)) {
    if (s->universe.set == PairSet::Origin) {
      return s->universe.zero ? chain_semilattice(2) : trivial_monoid();
    }
    throw BackendUnsupported("cannot materialize an infinite symbolic monoid");
  }
  if (const auto* z = std::get_if<detail::ZeroedBackend>(&impl_->v)) {
    return adjoin_zero_table(z->inner.materialize());
  }
  const auto& fs = std::get<detail::ProductBackend>(impl_->v).factors;
  FiniteMonoid acc = trivial_monoid();
  for (const Monoid& f : fs) {
    acc = direct_product_table(acc, f.materialize());
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Primitive submonoid handles
// ---------------------------------------------------------------------------

Handle Monoid::full_handle() const {
  if (const auto* f = std::get_if<detail::FiniteBackend>(&impl_->v)) {
    IndexSet s(f->table.order());
    s.set();
    return Handle(std::move(s));
  }
  if (const auto* s = std::get_if<detail::SymbolicBackend>(&impl_->v)) {
    return Handle(s->universe);
  }
  if (const auto* z = std::get_if<detail::ZeroedBackend>(&impl_->v)) {
    return Handle(make_zeroed_handle(z->inner.full_handle(), true));
  }
  ProductHandle out;
  for (const Monoid& f : std::get<detail::ProductBackend>(impl_->v).factors) {
    out.parts.push_back(f.full_handle());
  }
  return Handle(std::move(out));
}

Handle Monoid::identity_handle() const {
  if (const auto* f = std::get_if<detail::FiniteBackend>(&impl_->v)) {
    IndexSet s(f->table.order());
    s.set(f->table.identity());
    return Handle(std::move(s));
  }
  if (std::holds_alternative<detail::SymbolicBackend>(impl_->v)) {
    return Handle(kOriginEntry);
  }
  if (const auto* z = std::get_if<detail::ZeroedBackend>(&impl_->v)) {
    return Handle(make_zeroed_handle(z->inner.identity_handle(), false));
  }
  ProductHandle out;
  for (const Monoid& f : std::get<detail::ProductBackend>(impl_->v).factors) {
    out.parts.push_back(f.identity_handle());
  }
  return Handle(std::move(out));
}

Handle Monoid::idempotent_elements() const {
  if (const auto* f = std::get_if<detail::FiniteBackend>(&impl_->v)) {
    return Handle(mlat::idempotent_elements(f->table));
  }
  if (const auto* s = std::get_if<detail::SymbolicBackend>(&impl_->v)) {
    return Handle(SymEntry{pair_set_diagonal_part(s->universe.set), s->universe.zero});
  }
  if (const auto* z = std::get_if<detail::ZeroedBackend>(&impl_->v)) {
    return Handle(make_zeroed_handle(z->inner.idempotent_elements(), true));
  }
  ProductHandle out;
  for (const Monoid& f : std::get<detail::ProductBackend>(impl_->v).factors) {
    out.parts.push_back(f.idempotent_elements());
  }
  return Handle(std::move(out));
}

Handle Monoid::left_units() const {
  if (const auto* f = std::get_if<detail::FiniteBackend>(&impl_->v)) {
    return Handle(left_unit_elements(f->table));
  }
  if (const auto* s = std::get_if<detail::SymbolicBackend>(&impl_->v)) {
    // a^m b^n has a left inverse (namely b^m a^n ... reduced: b^m) exactly
    // when n = 0 and b^m lies in the universe, which happens only on the
    // full plane.
    if (s->universe.set == PairSet::All) {
      return Handle(SymEntry{PairSet::PowersOfA, false});
    }
    return Handle(kOriginEntry);
  }
  if (const auto* z = std::get_if<detail::ZeroedBackend>(&impl_->v)) {
    return Handle(make_zeroed_handle(z->inner.left_units(), false));
  }
  ProductHandle out;
  for (const Monoid& f : std::get<detail::ProductBackend>(impl_->v).factors) {
    out.parts.push_back(f.left_units());
  }
  return Handle(std::move(out));
}

Handle Monoid::right_units() const {
  if (const auto* f = std::get_if<detail::FiniteBackend>(&impl_->v)) {
    return Handle(right_unit_elements(f->table));
  }
  if (const auto* s = std::get_if<detail::SymbolicBackend>(&impl_->v)) {
    if (s->universe.set == PairSet::All) {
      return Handle(SymEntry{PairSet::PowersOfB, false});
    }
    return Handle(kOriginEntry);
  }
  if (const auto* z = std::get_if<detail::ZeroedBackend>(&impl_->v)) {
    return Handle(make_zeroed_handle(z->inner.right_units(), false));
  }
  ProductHandle out;
  for (const Monoid& f : std::get<detail::ProductBackend>(impl_->v).factors) {
    out.parts.push_back(f.right_units());
  }
  return Handle(std::move(out));
}

Handle Monoid::units() const { return handle_intersect(left_units(), right_units()); }

Handle Monoid::join(const Handle& s, const Handle& t) const {
  if (const auto* f = std::get_if<detail::FiniteBackend>(&impl_->v)) {
    return Handle(submonoid_closure(f->table, *s.finite_set() | *t.finite_set()));
  }
  if (std::holds_alternative<detail::SymbolicBackend>(impl_->v)) {
    return Handle(entry_join(*s.sym_entry(), *t.sym_entry()));
  }
  if (const auto* z = std::get_if<detail::ZeroedBackend>(&impl_->v)) {
    const auto* a = s.zeroed();
    const auto* b = t.zeroed();
    return Handle(make_zeroed_handle(z->inner.join(*a->inner, *b->inner),
                                     a->zero || b->zero));
  }
  // Componentwise join is exact here because every generating set the engine
  // produces contains the identity in each component.
  ProductHandle out;
  const auto& fs = std::get<detail::ProductBackend>(impl_->v).factors;
  const auto& p = s.product()->parts;
  const auto& q = t.product()->parts;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    out.parts.push_back(fs[i].join(p[i], q[i]));
  }
  return Handle(std::move(out));
}

// ---------------------------------------------------------------------------
// Functor evaluation
// ---------------------------------------------------------------------------

namespace {

Handle generic_apply(const Monoid& m, FunctorId x) {
  switch (x) {
    case FunctorId::O:
      return m.identity_handle();
    case FunctorId::I:
      return m.full_handle();
    case FunctorId::E:
      return m.join(m.idempotent_elements(), m.identity_handle());
    case FunctorId::G:
      return m.units();
    case FunctorId::GL:
      return m.left_units();
    case FunctorId::GR:
      return m.right_units();
    case FunctorId::GLR:
      return m.join(m.left_units(), m.right_units());
    case FunctorId::F:
      return m.join(m.apply(FunctorId::E), m.units());
    case FunctorId::FL:
      return m.join(m.apply(FunctorId::E), m.left_units());
    case FunctorId::FR:
      return m.join(m.apply(FunctorId::E), m.right_units());
    case FunctorId::FLR:
      return m.join(m.apply(FunctorId::E), m.apply(FunctorId::GLR));
    case FunctorId::Q:
    case FunctorId::P:
    case FunctorId::PL:
    case FunctorId::PR: {
      // These are compositions: restrict to the submonoid generated by all
      // one-sided units, apply the matching functor there, embed back.
      Restriction r = m.restrict_to(m.apply(FunctorId::GLR));
      FunctorId inner = FunctorId::E;
      if (x == FunctorId::P) {
        inner = FunctorId::F;
      } else if (x == FunctorId::PL) {
        inner = FunctorId::FL;
      } else if (x == FunctorId::PR) {
        inner = FunctorId::FR;
      }
      return r.embed(r.monoid.apply(inner));
    }
  }
  throw Error("unreachable functor id");
}

}  // namespace

Handle Monoid::apply(FunctorId x) const {
  if (const auto* p = std::get_if<detail::ProductBackend>(&impl_->v)) {
    ProductHandle out;
    out.parts.reserve(p->factors.size());
    for (const Monoid& f : p->factors) {
      out.parts.push_back(f.apply(x));
    }
    return Handle(std::move(out));
  }
  switch (kind()) {
    case BackendKind::Monogenic:
      return Handle(kMonogenicColumn[static_cast<int>(x)]);
    case BackendKind::Bicyclic:
      return Handle(kBicyclicColumn[static_cast<int>(x)]);
    case BackendKind::BicyclicZero:
      return Handle(kBicyclicZeroColumn[static_cast<int>(x)]);
    default:
      return generic_apply(*this, x);
  }
}

// ---------------------------------------------------------------------------
// Restriction
// ---------------------------------------------------------------------------

Restriction Monoid::restrict_to(const Handle& h) const {
  if (const auto* f = std::get_if<detail::FiniteBackend>(&impl_->v)) {
    std::vector<Elem> to_parent;
    FiniteMonoid sub = restrict_table(f->table, *h.finite_set(), &to_parent);
    const std::size_t parent_order = f->table.order();
    auto embed = [to_parent, parent_order](const Handle& hs) {
      IndexSet out(parent_order);
      const IndexSet& in = *hs.finite_set();
      for (auto i = in.find_first(); i != IndexSet::npos; i = in.find_next(i)) {
        out.set(to_parent[i]);
      }
      return Handle(std::move(out));
    };
    return {Monoid::finite(std::move(sub)), embed};
  }

  if (const auto* s = std::get_if<detail::SymbolicBackend>(&impl_->v)) {
    const SymEntry e = *h.sym_entry();
    if (!entry_subset(e, s->universe)) {
      throw NotClosed("entry is not a subset of the backend universe");
    }
    if (e.set == PairSet::Origin) {
      // {1} or the two-element semilattice {1, 0}; both materialize.
      if (!e.zero) {
        return {Monoid::finite(trivial_monoid()),
                [](const Handle&) { return Handle(kOriginEntry); }};
      }
      return {Monoid::finite(chain_semilattice(2)), [](const Handle& hs) {
                return Handle(SymEntry{PairSet::Origin, hs.finite_set()->test(1)});
              }};
    }
    return {symbolic_view(e, s->monogenic), [](const Handle& hs) { return hs; }};
  }

  if (const auto* z = std::get_if<detail::ZeroedBackend>(&impl_->v)) {
    const auto* zh = h.zeroed();
    Restriction ri = z->inner.restrict_to(*zh->inner);
    auto inner_embed = ri.embed;
    if (!zh->zero) {
      return {ri.monoid, [inner_embed](const Handle& hs) {
                return Handle(make_zeroed_handle(inner_embed(hs), false));
              }};
    }
    if (const FiniteMonoid* tbl = ri.monoid.finite_table()) {
      const std::size_t k = tbl->order();
      Monoid res = Monoid::finite(adjoin_zero_table(*tbl));
      auto embed = [inner_embed, k](const Handle& hs) {
        const IndexSet& in = *hs.finite_set();
        IndexSet without(k);
        for (auto i = in.find_first(); i != IndexSet::npos; i = in.find_next(i)) {
          if (i < k) {
            without.set(i);
          }
        }
        return Handle(make_zeroed_handle(inner_embed(Handle(std::move(without))),
                                         in.test(k)));
      };
      return {res, embed};
    }
    Monoid res = Monoid::adjoin_zero(ri.monoid);
    if (std::holds_alternative<detail::ZeroedBackend>(res.impl_->v)) {
      auto embed = [inner_embed](const Handle& hs) {
        const auto* zz = hs.zeroed();
        return Handle(make_zeroed_handle(inner_embed(*zz->inner), zz->zero));
      };
      return {res, embed};
    }
    // adjoin_zero turned a zero-free symbolic view into an entry with the
    // zero flag set; its handles are entries whose flag tracks the zero.
    auto embed = [inner_embed](const Handle& hs) {
      const SymEntry in = *hs.sym_entry();
      Handle base = inner_embed(Handle(SymEntry{in.set, false}));
      return Handle(make_zeroed_handle(std::move(base), in.zero));
    };
    return {res, embed};
  }

  const auto& fs = std::get<detail::ProductBackend>(impl_->v).factors;
  const auto& parts = h.product()->parts;
  std::vector<Monoid> sub_factors;
  std::vector<std::function<Handle(const Handle&)>> embeds;
  sub_factors.reserve(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    Restriction ri = fs[i].restrict_to(parts[i]);
    sub_factors.push_back(ri.monoid);
    embeds.push_back(ri.embed);
  }
  Monoid res = raw_product(std::move(sub_factors));
  auto embed = [embeds](const Handle& hs) {
    ProductHandle out;
    const auto& in = hs.product()->parts;
    out.parts.reserve(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
      out.parts.push_back(embeds[i](in[i]));
    }
    return Handle(std::move(out));
  };
  return {res, embed};
}

// ---------------------------------------------------------------------------
// Generated submonoids
// ---------------------------------------------------------------------------

Handle Monoid::generated(const IndexSet& generators) const {
  const auto* f = std::get_if<detail::FiniteBackend>(&impl_->v);
  if (f == nullptr) {
    throw BackendUnsupported("element-index generation requires a finite backend");
  }
  return Handle(submonoid_closure(f->table, generators));
}

Handle Monoid::generated(const std::vector<BicyclicElement>& generators) const {
  const auto* s = std::get_if<detail::SymbolicBackend>(&impl_->v);
  if (s == nullptr) {
    throw BackendUnsupported("symbolic generation requires a symbolic backend");
  }
  bool zero = false;
  bool has_a = false;
  bool has_b = false;
  bool all_pow_a = true;
  bool all_pow_b = true;
  bool nontrivial = false;
  for (const BicyclicElement& g : generators) {
    if (!entry_contains(s->universe, g)) {
      throw BadParams("generator " + bicyclic_element_name(g) +
                      " is not an element of " + describe());
    }
    if (g.zero) {
      zero = true;
      continue;
    }
    if (g.is_one()) {
      continue;
    }
    nontrivial = true;
    all_pow_a = all_pow_a && g.n == 0;
    all_pow_b = all_pow_b && g.m == 0;
    has_a = has_a || (g.m == 1 && g.n == 0);
    has_b = has_b || (g.m == 0 && g.n == 1);
  }
  if (!nontrivial) {
    return Handle(SymEntry{PairSet::Origin, zero});
  }
  if (all_pow_a) {
    if (has_a) {
      return Handle(SymEntry{PairSet::PowersOfA, zero});
    }
    throw NotInCatalog("powers of a without a itself generate no catalog entry");
  }
  if (all_pow_b) {
    if (has_b) {
      return Handle(SymEntry{PairSet::PowersOfB, zero});
    }
    throw NotInCatalog("powers of b without b itself generate no catalog entry");
  }
  if (has_a && has_b) {
    return Handle(SymEntry{PairSet::All, zero});
  }
  throw NotInCatalog("generator set has no closed form in the catalog");
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

MonoidType Monoid::type() const {
  const Handle g = apply(FunctorId::G);
  const Handle gl = apply(FunctorId::GL);
  const Handle flr = apply(FunctorId::FLR);
  const Handle glr = apply(FunctorId::GLR);
  return {g == gl, flr == full_handle(), flr == glr, g == identity_handle()};
}

bool Monoid::identity_stable() const {
  const bool stable = apply(FunctorId::G) == apply(FunctorId::GL);
  if (const auto* f = std::get_if<detail::FiniteBackend>(&impl_->v)) {
    const GreensData gd = greens(f->table);
    const Elem e = f->table.identity();
    bool j_eq_h = true;
    for (Elem x = 0; x < f->table.order(); ++x) {
      const bool in_j = gd.j.class_of(x) == gd.j.class_of(e);
      const bool in_h = gd.h.class_of(x) == gd.h.class_of(e);
      if (in_j != in_h) {
        j_eq_h = false;
        break;
      }
    }
    if (j_eq_h != stable) {
      throw Error("stability cross-check failed: unit scan and Green's classes disagree");
    }
  }
  return stable;
}

// ---------------------------------------------------------------------------
// Description
// ---------------------------------------------------------------------------

std::string Monoid::describe() const {
  switch (kind()) {
    case BackendKind::Finite:
      return "finite monoid of order " + std::to_string(finite_table()->order());
    case BackendKind::Monogenic:
      return "free monogenic monoid {1, a, a^2, ...}";
    case BackendKind::Bicyclic:
      return "bicyclic monoid B = <a,b : ba = 1>";
    case BackendKind::BicyclicZero:
      return "bicyclic monoid with zero B^0";
    case BackendKind::SymbolicView: {
      const auto& s = std::get<detail::SymbolicBackend>(impl_->v);
      return "symbolic submonoid " + (s.monogenic
                                          ? entry_description_monogenic(s.universe)
                                          : entry_description(s.universe));
    }
    case BackendKind::ZeroAdjoined:
      return std::get<detail::ZeroedBackend>(impl_->v).inner.describe() +
             " with zero adjoined";
    case BackendKind::Product: {
      std::string out = "product(";
      const auto& fs = std::get<detail::ProductBackend>(impl_->v).factors;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i > 0) {
          out += ", ";
        }
        out += fs[i].describe();
      }
      return out + ")";
    }
  }
  return "?";
}

std::string Monoid::describe_handle(const Handle& h) const {
  if (const auto* f = std::get_if<detail::FiniteBackend>(&impl_->v)) {
    const IndexSet& s = *h.finite_set();
    std::string out = "{";
    bool first = true;
    for (auto i = s.find_first(); i != IndexSet::npos; i = s.find_next(i)) {
      if (!first) {
        out += ", ";
      }
      first = false;
      out += f->table.element_name(static_cast<Elem>(i));
    }
    return out + "}";
  }
  if (const auto* s = std::get_if<detail::SymbolicBackend>(&impl_->v)) {
    return s->monogenic ? entry_description_monogenic(*h.sym_entry())
                        : entry_description(*h.sym_entry());
  }
  if (const auto* z = std::get_if<detail::ZeroedBackend>(&impl_->v)) {
    const auto* zh = h.zeroed();
    std::string out = z->inner.describe_handle(*zh->inner);
    if (zh->zero) {
      out += " U {0}";
    }
    return out;
  }
  const auto& fs = std::get<detail::ProductBackend>(impl_->v).factors;
  const auto& parts = h.product()->parts;
  std::string out = "(";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i > 0) {
      out += " x ";
    }
    out += fs[i].describe_handle(parts[i]);
  }
  return out + ")";
}

std::optional<std::uint64_t> Monoid::handle_size(const Handle& h) const {
  if (const auto* s = h.finite_set()) {
    return s->count();
  }
  if (const auto* e = h.sym_entry()) {
    if (e->set == PairSet::Origin) {
      return e->zero ? 2u : 1u;
    }
    return std::nullopt;
  }
  if (const auto* z = h.zeroed()) {
    auto inner = std::get<detail::ZeroedBackend>(impl_->v).inner.handle_size(*z->inner);
    if (!inner) {
      return std::nullopt;
    }
    return *inner + (z->zero ? 1 : 0);
  }
  const auto& fs = std::get<detail::ProductBackend>(impl_->v).factors;
  const auto& parts = h.product()->parts;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    auto part = fs[i].handle_size(parts[i]);
    if (!part) {
      return std::nullopt;
    }
    total *= *part;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

namespace {

std::string lower_copy(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

long require_param(const std::string& name, std::optional<long> param) {
  if (!param) {
    throw BadParams("family `" + name + "` needs a parameter, e.g. " + name + ":2");
  }
  if (*param <= 0) {
    throw BadParams("family `" + name + "` needs a positive parameter");
  }
  return *param;
}

void forbid_param(const std::string& name, std::optional<long> param) {
  if (param) {
    throw BadParams("family `" + name + "` takes no parameter");
  }
}

}  // namespace

Monoid Monoid::standard_family(const std::string& name, std::optional<long> param) {
  const std::string n = lower_copy(name);
  if (n == "cyclic" || n == "cyclic-group") {
    return Monoid::finite(cyclic_group(static_cast<unsigned>(require_param(n, param))));
  }
  if (n == "chain" || n == "semilattice-chain") {
    return Monoid::finite(chain_semilattice(static_cast<unsigned>(require_param(n, param))));
  }
  if (n == "nat" || n == "monogenic") {
    forbid_param(n, param);
    return Monoid::monogenic();
  }
  if (n == "bicyclic") {
    forbid_param(n, param);
    return Monoid::bicyclic();
  }
  if (n == "bicyclic0" || n == "bicyclic-zero") {
    forbid_param(n, param);
    return Monoid::bicyclic_zero();
  }
  if (n == "sing1" || n == "singular-plus-identity") {
    return Monoid::finite(
        singular_plus_identity(static_cast<unsigned>(require_param(n, param))));
  }
  throw UnknownFamily("unknown family `" + name + "`");
}

Monoid Monoid::builtin(const std::string& token, unsigned tn_bound) {
  std::string name = token;
  std::optional<long> param;
  const auto colon = token.find(':');
  if (colon != std::string::npos) {
    name = token.substr(0, colon);
    const std::string rest = token.substr(colon + 1);
    try {
      std::size_t used = 0;
      param = std::stol(rest, &used);
      if (used != rest.size()) {
        throw std::invalid_argument(rest);
      }
    } catch (const std::logic_error&) {
      throw BadParams("bad parameter `" + rest + "` in `" + token + "`");
    }
  }
  const std::string n = lower_copy(name);
  if (n == "tn") {
    return Monoid::finite(
        transformation_monoid(static_cast<unsigned>(require_param(n, param)), tn_bound));
  }
  return standard_family(name, param);
}

// ---------------------------------------------------------------------------
// Catalog access
// ---------------------------------------------------------------------------

SymEntry catalog_entry(const Monoid& symbolic_backend, FunctorId x) {
  switch (symbolic_backend.kind()) {
    case BackendKind::Monogenic:
      return kMonogenicColumn[static_cast<int>(x)];
    case BackendKind::Bicyclic:
      return kBicyclicColumn[static_cast<int>(x)];
    case BackendKind::BicyclicZero:
      return kBicyclicZeroColumn[static_cast<int>(x)];
    default:
      throw BackendUnsupported("catalog_entry requires a named symbolic backend");
  }
}

bool catalog_inclusion(const SymEntry& s, const SymEntry& t) {
  return entry_subset(s, t);
}

SymbolicGreensDescription symbolic_greens(const Monoid& symbolic_backend) {
  switch (symbolic_backend.kind()) {
    case BackendKind::Monogenic:
      // Free and commutative with trivial units: every class is a singleton.
      return {"singletons {a^k}", "singletons {a^k}", "singletons {a^k}",
              "singletons {a^k}", "singletons {a^k}"};
    case BackendKind::Bicyclic:
      // a^m b^n and a^k b^l are L-related iff n = l, R-related iff m = k.
      return {"{a^m b^n : m >= 0} for each fixed n",
              "{a^m b^n : n >= 0} for each fixed m",
              "singletons {a^m b^n}",
              "one class: all of B",
              "one class: all of B"};
    case BackendKind::BicyclicZero:
      return {"{a^m b^n : m >= 0} for each fixed n, plus {0}",
              "{a^m b^n : n >= 0} for each fixed m, plus {0}",
              "singletons",
              "all of B in one class, plus {0}",
              "all of B in one class, plus {0}"};
    default:
      throw BackendUnsupported("no precomputed Green's description for " +
                               symbolic_backend.describe());
  }
}

}  // namespace mlat
