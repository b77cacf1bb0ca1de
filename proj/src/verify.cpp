#include "mlat/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "mlat/corpus.hpp"
#include "mlat/counting.hpp"
#include "mlat/functor_monoid.hpp"
#include "mlat/greens.hpp"
#include "mlat/lattice.hpp"
#include "mlat/monoid.hpp"

namespace mlat {

namespace {

// Aggregates a property over a corpus into a single report row.
struct Counterexamples {
  int count = 0;
  std::string first;

  void check(bool ok, const std::string& where) {
    if (!ok && count++ == 0) {
      first = where;
    }
  }
  std::string text() const {
    if (count == 0) {
      return "0 counterexamples";
    }
    return std::to_string(count) + " counterexamples (first: " + first + ")";
  }
};

void add_counterexamples(RunReport& report, const std::string& name,
                         const Counterexamples& ce) {
  report.add(name, "0 counterexamples", ce.text());
}

std::array<Handle, kFunctorCount> images_of(const Monoid& m) {
  std::array<Handle, kFunctorCount> out;
  for (FunctorId x : all_functors()) {
    out[static_cast<int>(x)] = m.apply(x);
  }
  return out;
}

const Handle& img(const std::array<Handle, kFunctorCount>& h, FunctorId x) {
  return h[static_cast<int>(x)];
}

// Builds the handle of the zero-adjoined monoid that corresponds to a
// handle of the original monoid, optionally together with the new zero.
Handle lift_zero_handle(const Monoid& z, const Handle& h, bool add_zero) {
  switch (z.kind()) {
    case BackendKind::Finite: {
      const std::size_t n1 = z.finite_table()->order();
      IndexSet out(n1);
      const IndexSet& in = *h.finite_set();
      for (auto i = in.find_first(); i != IndexSet::npos; i = in.find_next(i)) {
        out.set(i);
      }
      if (add_zero) {
        out.set(n1 - 1);
      }
      return Handle(std::move(out));
    }
    case BackendKind::ZeroAdjoined:
      return Handle(make_zeroed_handle(h, add_zero));
    default:  // symbolic backends keep the entry shape, only the flag moves
      return Handle(SymEntry{h.sym_entry()->set, add_zero});
  }
}

// Rectangle {(x, y) : x in sa, y in sb} in the row-major index encoding of a
// materialized two-factor product.
IndexSet rectangle(const IndexSet& sa, const IndexSet& sb) {
  IndexSet out(sa.size() * sb.size());
  for (auto i = sa.find_first(); i != IndexSet::npos; i = sa.find_next(i)) {
    for (auto j = sb.find_first(); j != IndexSet::npos; j = sb.find_next(j)) {
      out.set(i * sb.size() + j);
    }
  }
  return out;
}

}  // namespace

RunReport verify_lemmas() {
  RunReport report;
  report.command = "verify lemmas";

  const std::vector<Monoid> corpus = default_corpus();
  const std::vector<Monoid> builtins = default_builtins();

  Counterexamples idem_units, idem_extended, gl_absorb, gl_drop, gr_absorb, gr_drop;
  Counterexamples dichotomy, distinctness, eg_bottom, e_bottom, pq_bottom, q_level;
  Counterexamples unit_restriction;

  for (const Monoid& m : corpus) {
    const auto h = images_of(m);
    const std::string& where = m.describe();
    const Handle& bottom = img(h, FunctorId::O);

    // Idempotent intersections.
    idem_units.check(handle_intersect(img(h, FunctorId::E), img(h, FunctorId::G)) == bottom &&
                         handle_intersect(img(h, FunctorId::E), img(h, FunctorId::GL)) == bottom &&
                         handle_intersect(img(h, FunctorId::E), img(h, FunctorId::GR)) == bottom,
                     where);
    idem_extended.check(
        handle_intersect(img(h, FunctorId::E), img(h, FunctorId::F)) == img(h, FunctorId::E) &&
            handle_intersect(img(h, FunctorId::E), img(h, FunctorId::FL)) == img(h, FunctorId::E) &&
            handle_intersect(img(h, FunctorId::E), img(h, FunctorId::FR)) == img(h, FunctorId::E) &&
            handle_intersect(img(h, FunctorId::E), img(h, FunctorId::FLR)) == img(h, FunctorId::E),
        where);

    // Left-unit intersections, and the dual.
    gl_absorb.check(
        handle_intersect(img(h, FunctorId::GL), img(h, FunctorId::GLR)) == img(h, FunctorId::GL) &&
            handle_intersect(img(h, FunctorId::GL), img(h, FunctorId::FL)) == img(h, FunctorId::GL) &&
            handle_intersect(img(h, FunctorId::GL), img(h, FunctorId::FLR)) == img(h, FunctorId::GL),
        where);
    gl_drop.check(
        handle_intersect(img(h, FunctorId::GL), img(h, FunctorId::G)) == img(h, FunctorId::G) &&
            handle_intersect(img(h, FunctorId::GL), img(h, FunctorId::GR)) == img(h, FunctorId::G) &&
            handle_intersect(img(h, FunctorId::GL), img(h, FunctorId::F)) == img(h, FunctorId::G) &&
            handle_intersect(img(h, FunctorId::GL), img(h, FunctorId::FR)) == img(h, FunctorId::G),
        where);
    gr_absorb.check(
        handle_intersect(img(h, FunctorId::GR), img(h, FunctorId::GLR)) == img(h, FunctorId::GR) &&
            handle_intersect(img(h, FunctorId::GR), img(h, FunctorId::FR)) == img(h, FunctorId::GR) &&
            handle_intersect(img(h, FunctorId::GR), img(h, FunctorId::FLR)) == img(h, FunctorId::GR),
        where);
    gr_drop.check(
        handle_intersect(img(h, FunctorId::GR), img(h, FunctorId::G)) == img(h, FunctorId::G) &&
            handle_intersect(img(h, FunctorId::GR), img(h, FunctorId::GL)) == img(h, FunctorId::G) &&
            handle_intersect(img(h, FunctorId::GR), img(h, FunctorId::F)) == img(h, FunctorId::G) &&
            handle_intersect(img(h, FunctorId::GR), img(h, FunctorId::FL)) == img(h, FunctorId::G),
        where);

    // The collapse dichotomy: either both diamonds collapse completely or
    // neither collapses at all, and the idempotents detect which.
    {
      const bool stable = img(h, FunctorId::G) == img(h, FunctorId::GL);
      const bool stable_r = img(h, FunctorId::G) == img(h, FunctorId::GR);
      const bool g_all = stable && stable_r &&
                         img(h, FunctorId::G) == img(h, FunctorId::GLR);
      const bool f_all = img(h, FunctorId::F) == img(h, FunctorId::FL) &&
                         img(h, FunctorId::F) == img(h, FunctorId::FR) &&
                         img(h, FunctorId::F) == img(h, FunctorId::FLR);
      const bool trivial_meet =
          handle_intersect(img(h, FunctorId::E), img(h, FunctorId::GLR)) == bottom;
      dichotomy.check(stable == stable_r && stable == g_all && stable == f_all &&
                          stable == trivial_meet,
                      where);
      if (!stable) {
        const std::array<FunctorId, 4> gs = {FunctorId::G, FunctorId::GL,
                                             FunctorId::GR, FunctorId::GLR};
        const std::array<FunctorId, 4> fs = {FunctorId::F, FunctorId::FL,
                                             FunctorId::FR, FunctorId::FLR};
        bool pairwise = true;
        for (int i = 0; i < 4; ++i) {
          for (int j = i + 1; j < 4; ++j) {
            pairwise = pairwise && !(img(h, gs[i]) == img(h, gs[j])) &&
                       !(img(h, fs[i]) == img(h, fs[j]));
          }
        }
        distinctness.check(pairwise, where);
      }
    }

    // Bottom-of-lattice collapse.
    eg_bottom.check((img(h, FunctorId::G) == bottom) ==
                        (img(h, FunctorId::F) == img(h, FunctorId::E)),
                    where);
    e_bottom.check((img(h, FunctorId::E) == bottom) ==
                       (img(h, FunctorId::FLR) == img(h, FunctorId::G)),
                   where);
    pq_bottom.check((img(h, FunctorId::G) == bottom) ==
                        (img(h, FunctorId::P) == img(h, FunctorId::Q)),
                    where);
    {
      const bool eq = img(h, FunctorId::E) == img(h, FunctorId::Q);
      q_level.check(eq == (img(h, FunctorId::F) == img(h, FunctorId::P)) &&
                        eq == (img(h, FunctorId::FL) == img(h, FunctorId::PL)) &&
                        eq == (img(h, FunctorId::FR) == img(h, FunctorId::PR)) &&
                        eq == (img(h, FunctorId::FLR) == img(h, FunctorId::GLR)),
                    where);
    }

    // Unit levels are untouched by restricting to any submonoid containing
    // all one-sided units.
    for (FunctorId big : {FunctorId::GLR, FunctorId::FLR, FunctorId::I}) {
      Restriction r = m.restrict_to(img(h, big));
      for (FunctorId x : {FunctorId::G, FunctorId::GL, FunctorId::GR, FunctorId::GLR}) {
        unit_restriction.check(r.embed(r.monoid.apply(x)) == img(h, x),
                               where + " via " + std::string(functor_name(big)));
      }
    }
  }

  add_counterexamples(report, "idempotents meet unit levels in the bottom", idem_units);
  add_counterexamples(report, "idempotents lie inside every extended level", idem_extended);
  add_counterexamples(report, "left units absorb into their own levels", gl_absorb);
  add_counterexamples(report, "left units meet opposite levels in the units", gl_drop);
  add_counterexamples(report, "right units absorb into their own levels", gr_absorb);
  add_counterexamples(report, "right units meet opposite levels in the units", gr_drop);
  add_counterexamples(report, "collapse dichotomy across both diamonds", dichotomy);
  add_counterexamples(report, "unstable monoids keep both diamonds pairwise distinct",
                      distinctness);
  add_counterexamples(report, "trivial units iff idempotent level equals extended level",
                      eg_bottom);
  add_counterexamples(report, "trivial idempotents iff extended level collapses to units",
                      e_bottom);
  add_counterexamples(report, "trivial units iff restricted levels P and Q agree", pq_bottom);
  add_counterexamples(report, "restricted-idempotent collapse propagates across all levels",
                      q_level);
  add_counterexamples(report, "unit levels survive restriction to unit-containing submonoids",
                      unit_restriction);

  // Product laws.
  {
    Counterexamples componentwise, materialized, restricted_path, type_law;
    for (std::size_t i = 0; i < builtins.size(); ++i) {
      for (std::size_t j = i; j < builtins.size(); ++j) {
        const Monoid& a = builtins[i];
        const Monoid& b = builtins[j];
        const Monoid prod = Monoid::direct_product({a, b});
        const std::string where = a.describe() + " x " + b.describe();

        for (FunctorId x : all_functors()) {
          ProductHandle pair;
          pair.parts = {a.apply(x), b.apply(x)};
          componentwise.check(prod.apply(x) == Handle(std::move(pair)), where);
        }

        type_law.check(prod.type() == type_product(a.type(), b.type()), where);

        if (a.is_finite() && b.is_finite()) {
          const FiniteMonoid ma = a.materialize();
          const FiniteMonoid mb = b.materialize();
          const Monoid mat = Monoid::finite(direct_product_table(ma, mb));
          const Monoid fa = Monoid::finite(ma);
          const Monoid fb = Monoid::finite(mb);
          for (FunctorId x : all_functors()) {
            const Handle lhs = mat.apply(x);
            const Handle rhs = Handle(
                rectangle(*fa.apply(x).finite_set(), *fb.apply(x).finite_set()));
            materialized.check(lhs == rhs, where);
          }
        }

        // The restriction route for the composed functors, evaluated on the
        // whole product rather than componentwise.
        {
          Restriction r = prod.restrict_to(prod.apply(FunctorId::GLR));
          restricted_path.check(
              r.embed(r.monoid.apply(FunctorId::E)) == prod.apply(FunctorId::Q) &&
                  r.embed(r.monoid.apply(FunctorId::F)) == prod.apply(FunctorId::P) &&
                  r.embed(r.monoid.apply(FunctorId::FL)) == prod.apply(FunctorId::PL) &&
                  r.embed(r.monoid.apply(FunctorId::FR)) == prod.apply(FunctorId::PR),
              where);
        }
      }
    }
    add_counterexamples(report, "every functor respects direct products", componentwise);
    add_counterexamples(report, "materialized product tables give the same images",
                        materialized);
    add_counterexamples(report, "restriction route matches composed functors on products",
                        restricted_path);
    add_counterexamples(report, "types multiply coordinatewise", type_law);
  }

  // Zero-adjunction law.
  {
    Counterexamples zero_law;
    for (const Monoid& m : builtins) {
      const Monoid z = Monoid::adjoin_zero(m);
      const auto h = images_of(m);
      const std::string where = m.describe() + " with zero";
      for (FunctorId x : all_functors()) {
        const bool gains_zero =
            x == FunctorId::I || x == FunctorId::E || x == FunctorId::F ||
            x == FunctorId::FL || x == FunctorId::FR || x == FunctorId::FLR;
        zero_law.check(z.apply(x) == lift_zero_handle(z, img(h, x), gains_zero),
                       where + " at " + std::string(functor_name(x)));
      }
    }
    add_counterexamples(report, "zero adjunction shifts exactly the idempotent levels",
                        zero_law);
  }

  // Green's classes of the identity.
  {
    Counterexamples green_ids, finite_stability;
    for (const Monoid& m : corpus) {
      if (!m.is_finite()) {
        continue;
      }
      const FiniteMonoid mat = m.materialize();
      const GreensData g = greens(mat);
      const Elem e = mat.identity();
      IndexSet l1(mat.order()), r1(mat.order()), h1(mat.order());
      for (Elem x = 0; x < mat.order(); ++x) {
        if (g.l.class_of(x) == g.l.class_of(e)) {
          l1.set(x);
        }
        if (g.r.class_of(x) == g.r.class_of(e)) {
          r1.set(x);
        }
        if (g.h.class_of(x) == g.h.class_of(e)) {
          h1.set(x);
        }
      }
      green_ids.check(l1 == left_unit_elements(mat) && r1 == right_unit_elements(mat) &&
                          h1 == (left_unit_elements(mat) & right_unit_elements(mat)),
                      m.describe());
      finite_stability.check(Monoid::finite(mat).identity_stable(), m.describe());
    }
    add_counterexamples(report, "identity classes are the unit sets", green_ids);
    add_counterexamples(report, "finite monoids always have a stable identity",
                        finite_stability);
  }

  // The four possible positions of idempotents-within-generated-units,
  // realized by the named witnesses.
  {
    auto pattern = [](const Monoid& m) {
      const Handle e = m.apply(FunctorId::E);
      const Handle meet = handle_intersect(e, m.apply(FunctorId::GLR));
      const bool bottom = meet == m.apply(FunctorId::O);
      const bool top = meet == e;
      return std::make_pair(bottom, top);
    };
    const Monoid z2 = Monoid::finite(cyclic_group(2));
    report.add_ok("group: meet trivial and equal to idempotent level",
                  pattern(z2) == std::make_pair(true, true));
    report.add_ok("group with zero: meet trivial, idempotent level larger",
                  pattern(Monoid::adjoin_zero(z2)) == std::make_pair(true, false));
    report.add_ok("bicyclic: meet nontrivial and equal to idempotent level",
                  pattern(Monoid::bicyclic()) == std::make_pair(false, true));
    report.add_ok("bicyclic with zero: meet strictly between",
                  pattern(Monoid::bicyclic_zero()) == std::make_pair(false, false));
  }

  return report;
}

namespace {

const std::vector<std::pair<FunctorId, FunctorId>> kDivisibilityHasse = {
    {FunctorId::O, FunctorId::G},    {FunctorId::O, FunctorId::Q},
    {FunctorId::G, FunctorId::GL},   {FunctorId::G, FunctorId::GR},
    {FunctorId::G, FunctorId::P},    {FunctorId::Q, FunctorId::E},
    {FunctorId::Q, FunctorId::P},    {FunctorId::P, FunctorId::PL},
    {FunctorId::P, FunctorId::PR},   {FunctorId::P, FunctorId::F},
    {FunctorId::E, FunctorId::F},    {FunctorId::GL, FunctorId::GLR},
    {FunctorId::GR, FunctorId::GLR}, {FunctorId::PL, FunctorId::GLR},
    {FunctorId::PR, FunctorId::GLR}, {FunctorId::PL, FunctorId::FL},
    {FunctorId::PR, FunctorId::FR},  {FunctorId::F, FunctorId::FL},
    {FunctorId::F, FunctorId::FR},   {FunctorId::GLR, FunctorId::FLR},
    {FunctorId::FL, FunctorId::FLR}, {FunctorId::FR, FunctorId::FLR},
    {FunctorId::FLR, FunctorId::I},
};

const std::vector<std::pair<FunctorId, FunctorId>> kIdempotentDivisibilityHasse = {
    {FunctorId::O, FunctorId::G},     {FunctorId::O, FunctorId::Q},
    {FunctorId::G, FunctorId::P},     {FunctorId::Q, FunctorId::E},
    {FunctorId::Q, FunctorId::P},     {FunctorId::P, FunctorId::GLR},
    {FunctorId::P, FunctorId::F},     {FunctorId::E, FunctorId::F},
    {FunctorId::GLR, FunctorId::FLR}, {FunctorId::F, FunctorId::FLR},
    {FunctorId::FLR, FunctorId::I},
};

std::vector<std::pair<Elem, Elem>> as_elem_pairs(
    const std::vector<std::pair<FunctorId, FunctorId>>& in) {
  std::vector<std::pair<Elem, Elem>> out;
  out.reserve(in.size());
  for (auto [a, b] : in) {
    out.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string edge_list_text(const std::vector<std::pair<Elem, Elem>>& edges,
                           const FiniteMonoid& f) {
  std::string out;
  for (auto [a, b] : edges) {
    if (!out.empty()) {
      out += ' ';
    }
    out += f.element_name(a) + "<" + f.element_name(b);
  }
  return out;
}

}  // namespace

const std::vector<std::pair<FunctorId, FunctorId>>& expected_divisibility_hasse() {
  return kDivisibilityHasse;
}

const std::vector<std::pair<FunctorId, FunctorId>>& expected_idempotent_divisibility_hasse() {
  return kIdempotentDivisibilityHasse;
}

RunReport verify_fplus() {
  RunReport report;
  report.command = "verify fplus";

  const CompositionTable derived = derive_composition_table(separating_corpus());
  const TableComparison cmp = verify_composition_table(derived);
  report.add("derived composition table matches the embedded law", "225/225",
             std::to_string(cmp.matches) + "/225");

  // Associativity of the derived table, independent of the comparison.
  {
    bool assoc = true;
    for (int x = 0; x < kFunctorCount && assoc; ++x) {
      for (int y = 0; y < kFunctorCount && assoc; ++y) {
        for (int z = 0; z < kFunctorCount && assoc; ++z) {
          const int xy = static_cast<int>(derived[x][y]);
          const int yz = static_cast<int>(derived[y][z]);
          assoc = derived[xy][z] == derived[x][yz];
        }
      }
    }
    report.add_ok("derived table is associative on all 3375 triples", assoc);
  }

  const FiniteMonoid f = build_functor_monoid();
  report.add("functor monoid order", "15", std::to_string(f.order()));
  report.add("identity element", "I", f.element_name(f.identity()));

  {
    bool right_id = true;
    bool left_id = true;
    const Elem flr = static_cast<Elem>(FunctorId::FLR);
    for (Elem x = 0; x < f.order(); ++x) {
      if (x == static_cast<Elem>(FunctorId::I)) {
        continue;
      }
      right_id = right_id && f.product(x, flr) == x;
      left_id = left_id && f.product(flr, x) == x;
    }
    report.add_ok("FLR is a right identity of the maximal subsemigroup", right_id);
    report.add_ok("FLR is not a left identity of the maximal subsemigroup", !left_id);
  }

  const FunctorMonoidAnalysis analysis = analyze_functor_monoid(f);
  {
    auto sorted_names = [&](const std::vector<Elem>& xs) {
      std::vector<std::string> names;
      for (Elem x : xs) {
        names.push_back(f.element_name(x));
      }
      std::sort(names.begin(), names.end());
      std::string out;
      for (const std::string& n : names) {
        if (!out.empty()) {
          out += ' ';
        }
        out += n;
      }
      return out;
    };
    report.add("idempotent functors", "E F FLR G GLR I O",
               sorted_names(analysis.idempotents));
    report.add("idempotent-generated submonoid", "E F FLR G GLR I O P Q",
               sorted_names(analysis.idempotent_generated));
    report.add("idempotent-generated submonoid size", "9",
               std::to_string(analysis.idempotent_generated.size()));
  }
  report.add_ok("J-trivial", analysis.j_trivial);
  report.add_ok("all five Green's partitions discrete",
                analysis.all_green_partitions_discrete);
  report.add("divisibility covering edges",
             edge_list_text(as_elem_pairs(kDivisibilityHasse), f),
             edge_list_text([&] {
               auto e = analysis.divisibility_hasse;
               std::sort(e.begin(), e.end());
               return e;
             }(), f));
  report.add("idempotent-submonoid divisibility covering edges",
             edge_list_text(as_elem_pairs(kIdempotentDivisibilityHasse), f),
             edge_list_text([&] {
               auto e = analysis.idempotent_divisibility_hasse;
               std::sort(e.begin(), e.end());
               return e;
             }(), f));
  report.add_ok("GL does not divide PL", !analysis.gl_divides_pl);
  report.add_ok("sandwiches of PL stay in {O, G, Q, P, PL}", analysis.pl_sandwich_ok);
  {
    // The containment GL <= PL holds as submonoids of any monoid, so the
    // divisibility order and the generic inclusion order differ.
    const Monoid w = separating_corpus().front();
    report.add_ok("GL included in PL on the separating witness",
                  handle_subset(w.apply(FunctorId::GL), w.apply(FunctorId::PL)));
  }

  const SubsemigroupCounts subs = count_subsemigroups(f);
  report.add("subsemigroups", "2904", std::to_string(subs.subsemigroups));
  report.add("submonoids", "1452", std::to_string(subs.submonoids));
  const CongruenceCounts congs = count_congruences(f);
  report.add("congruences", "1613", std::to_string(congs.congruences));
  report.add("principal congruences", "76", std::to_string(congs.principal));

  {
    const InvariantLattice lat = functor_monoid_self_lattice();
    report.add("self lattice size", "3", std::to_string(lat.nodes.size()));
    report.add("self type", "(1,0,0,1)", lat.type.to_string());
    const Monoid fm = Monoid::finite(f);
    report.add_ok("idempotent level equals extended level on itself",
                  fm.apply(FunctorId::E) == fm.apply(FunctorId::F));
    bool chain = lat.nodes.size() == 3;
    if (chain) {
      chain = lat.leq[0][1] && lat.leq[1][2] && lat.hasse.size() == 2;
    }
    report.add_ok("self lattice is a chain", chain);
  }

  return report;
}

RunReport verify_shapes() {
  RunReport report;
  report.command = "verify shapes";

  // Join closure and variant monotonicity over the whole corpus: building a
  // lattice throws JoinClosureViolation if any pairwise join escapes.
  {
    Counterexamples join_closed, never_smaller, collapse_iff;
    for (const Monoid& m : default_corpus()) {
      const std::string& where = m.describe();
      try {
        const InvariantLattice plain = build_lattice(m, false);
        const InvariantLattice enhanced = build_lattice(m, true);
        never_smaller.check(enhanced.nodes.size() >= plain.nodes.size(), where);
        const MonoidType t = plain.type;
        collapse_iff.check(
            (enhanced.nodes.size() == plain.nodes.size()) == (t.t1 || t.t3), where);
      } catch (const JoinClosureViolation&) {
        join_closed.check(false, where);
      }
    }
    add_counterexamples(report, "joins stay inside both lattices across the corpus",
                        join_closed);
    add_counterexamples(report, "enhanced lattice is never smaller across the corpus",
                        never_smaller);
    add_counterexamples(report,
                        "enhanced collapse across the corpus happens exactly for "
                        "stable or unit-saturated types",
                        collapse_iff);
  }

  Counterexamples realized, plain_counts, enhanced_counts, collapse_rule, monotone;
  for (int bits = 0; bits < 16; ++bits) {
    const MonoidType t = MonoidType::bits(bits >> 3 & 1, bits >> 2 & 1,
                                          bits >> 1 & 1, bits & 1);
    const Monoid w = type_witness(t);
    const std::string where = "type " + t.to_string();
    realized.check(w.type() == t, where);

    const InvariantLattice plain = build_lattice(w, false);
    const InvariantLattice enhanced = build_lattice(w, true);
    plain_counts.check(plain.nodes.size() == expected_lattice_size(t, false),
                       where + " got " + std::to_string(plain.nodes.size()));
    enhanced_counts.check(enhanced.nodes.size() == expected_lattice_size(t, true),
                          where + " got " + std::to_string(enhanced.nodes.size()));
    monotone.check(enhanced.nodes.size() >= plain.nodes.size(), where);

    // The enhanced lattice collapses onto the plain one exactly when the
    // identity is stable or the unit level already carries its idempotents.
    bool same_nodes = plain.nodes.size() == enhanced.nodes.size();
    if (same_nodes) {
      for (const LatticeNode& node : plain.nodes) {
        if (enhanced.node_of(node.handle) < 0) {
          same_nodes = false;
          break;
        }
      }
    }
    collapse_rule.check(same_nodes == (t.t1 || t.t3), where);
  }
  add_counterexamples(report, "all sixteen types realized by witness products", realized);
  add_counterexamples(report, "lattice node counts match the catalog", plain_counts);
  add_counterexamples(report, "enhanced node counts match the catalog", enhanced_counts);
  add_counterexamples(report, "enhanced lattice never loses nodes", monotone);
  add_counterexamples(report, "enhanced equals plain exactly for stable or collapsed types",
                      collapse_rule);

  const Monoid b = Monoid::bicyclic();
  const Monoid b0 = Monoid::bicyclic_zero();
  {
    const InvariantLattice lb = build_lattice(b, false);
    report.add("bicyclic lattice nodes", "7", std::to_string(lb.nodes.size()));
    report.add("bicyclic lattice edges", "9", std::to_string(lb.hasse.size()));
    const InvariantLattice lb0 = build_lattice(b0, false);
    report.add("bicyclic-with-zero lattice nodes", "8", std::to_string(lb0.nodes.size()));
    const InvariantLattice lb0e = build_lattice(b0, true);
    report.add("bicyclic-with-zero enhanced nodes", "11", std::to_string(lb0e.nodes.size()));
    const InvariantLattice lw = build_lattice(separating_corpus().front(), true);
    report.add("separating witness enhanced nodes", "15", std::to_string(lw.nodes.size()));

    // Meets computed inside the lattice, not as intersections.
    {
      const int fl = lb0.node_of(b0.apply(FunctorId::FL));
      const int glr = lb0.node_of(b0.apply(FunctorId::GLR));
      const int meet = meet_in_lattice(lb0, fl, glr);
      report.add("meet of FL and GLR inside the zero lattice", "GL",
                 lb0.nodes[meet].label);
    }
    {
      const int fl = lb.node_of(b.apply(FunctorId::FL));
      const int fr = lb.node_of(b.apply(FunctorId::FR));
      const int meet = meet_in_lattice(lb, fl, fr);
      report.add_ok("meet of FL and FR in the plain lattice is the idempotent level",
                    lb.nodes[meet].handle == b.apply(FunctorId::E));
    }
    {
      bool ok = true;
      for (std::size_t i = 0; i < lb.nodes.size(); ++i) {
        ok = ok && meet_in_lattice(lb, lb.top, static_cast<int>(i)) == static_cast<int>(i);
      }
      report.add_ok("meet with the top is the identity map", ok);
    }
  }

  {
    const SublatticeReport rb = is_sublattice_of_sub(b, false);
    report.add_ok("bicyclic lattice is closed under intersections",
                  rb.closed_under_intersection);
    const SublatticeReport rb0 = is_sublattice_of_sub(b0, false);
    report.add_ok("zero lattice is not closed under intersections",
                  !rb0.closed_under_intersection);
    if (rb0.witness) {
      const InvariantLattice lb0 = build_lattice(b0, false);
      std::string u = lb0.nodes[rb0.witness->node_s].label;
      std::string v = lb0.nodes[rb0.witness->node_t].label;
      if (v < u) {
        std::swap(u, v);
      }
      report.add("witness pair", "FL GLR", u + " " + v);
      report.add("witness intersection", "{a^m b^n : m >= n}",
                 rb0.witness->intersection_description);
    } else {
      report.add("witness pair", "FL GLR", "missing");
    }
    const SublatticeReport rb0e = is_sublattice_of_sub(b0, true);
    report.add_ok("enhanced zero lattice is closed under intersections",
                  rb0e.closed_under_intersection);
  }

  {
    const InvariantLattice once = build_lattice(b0, true);
    const InvariantLattice twice = build_lattice(b0, true);
    report.add_ok("hasse output is deterministic",
                  emit_hasse(once, OutputFormat::Dot) == emit_hasse(twice, OutputFormat::Dot) &&
                      emit_hasse(once, OutputFormat::Text) == emit_hasse(twice, OutputFormat::Text));
  }

  return report;
}

RunReport verify_suite(const std::string& name) {
  if (name == "lemmas") {
    return verify_lemmas();
  }
  if (name == "fplus") {
    return verify_fplus();
  }
  if (name == "shapes") {
    return verify_shapes();
  }
  if (name == "all") {
    RunReport all;
    all.command = "verify all";
    for (const RunReport& part : {verify_lemmas(), verify_fplus(), verify_shapes()}) {
      for (const Check& c : part.checks) {
        all.checks.push_back(c);
      }
    }
    return all;
  }
  throw BadParams("unknown suite `" + name + "` (expected lemmas, fplus, shapes or all)");
}

}  // namespace mlat
