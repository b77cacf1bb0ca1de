#include "mlat/functor_monoid.hpp"

#include <algorithm>
#include <sstream>

#include "mlat/greens.hpp"

namespace mlat {

namespace {

// Shorthand for the table literal below.
constexpr FunctorId O = FunctorId::O;
constexpr FunctorId E = FunctorId::E;
constexpr FunctorId G = FunctorId::G;
constexpr FunctorId GL = FunctorId::GL;
constexpr FunctorId GR = FunctorId::GR;
constexpr FunctorId GLR = FunctorId::GLR;
constexpr FunctorId F = FunctorId::F;
constexpr FunctorId FL = FunctorId::FL;
constexpr FunctorId FR = FunctorId::FR;
constexpr FunctorId FLR = FunctorId::FLR;
constexpr FunctorId Q = FunctorId::Q;
constexpr FunctorId P = FunctorId::P;
constexpr FunctorId PL = FunctorId::PL;
constexpr FunctorId PR = FunctorId::PR;
constexpr FunctorId I = FunctorId::I;

constexpr CompositionTable kComposition = {{
    // column order: O, E, G, GL, GR, GLR, F, FL, FR, FLR, Q, P, PL, PR, I
    /* O   */ {{O, O, O, O, O, O, O, O, O, O, O, O, O, O, O}},
    /* E   */ {{O, E, O, O, O, Q, E, E, E, E, Q, Q, Q, Q, E}},
    /* G   */ {{O, O, G, G, G, G, G, G, G, G, O, G, G, G, G}},
    /* GL  */ {{O, O, G, G, G, GL, G, G, G, GL, O, G, G, G, GL}},
    /* GR  */ {{O, O, G, G, G, GR, G, G, G, GR, O, G, G, G, GR}},
    /* GLR */ {{O, O, G, G, G, GLR, G, G, G, GLR, O, G, G, G, GLR}},
    /* F   */ {{O, E, G, G, G, P, F, F, F, F, Q, P, P, P, F}},
    /* FL  */ {{O, E, G, G, G, PL, F, F, F, FL, Q, P, P, P, FL}},
    /* FR  */ {{O, E, G, G, G, PR, F, F, F, FR, Q, P, P, P, FR}},
    /* FLR */ {{O, E, G, G, G, GLR, F, F, F, FLR, Q, P, P, P, FLR}},
    /* Q   */ {{O, O, O, O, O, Q, O, O, O, Q, O, O, O, O, Q}},
    /* P   */ {{O, O, G, G, G, P, G, G, G, P, O, G, G, G, P}},
    /* PL  */ {{O, O, G, G, G, PL, G, G, G, PL, O, G, G, G, PL}},
    /* PR  */ {{O, O, G, G, G, PR, G, G, G, PR, O, G, G, G, PR}},
    /* I   */ {{O, E, G, GL, GR, GLR, F, FL, FR, FLR, Q, P, PL, PR, I}},
}};

}  // namespace

const CompositionTable& known_composition_table() { return kComposition; }

std::vector<Monoid> separating_corpus() {
  return {Monoid::direct_product({Monoid::finite(cyclic_group(2)),
                                  Monoid::finite(chain_semilattice(2)),
                                  Monoid::monogenic(), Monoid::bicyclic()})};
}

CompositionTable derive_composition_table(const std::vector<Monoid>& corpus) {
  if (corpus.empty()) {
    throw BadParams("composition derivation needs a nonempty corpus");
  }
  // Functor images per corpus member, for matching candidates.
  std::vector<std::array<Handle, kFunctorCount>> images(corpus.size());
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    for (FunctorId z : all_functors()) {
      images[c][static_cast<int>(z)] = corpus[c].apply(z);
    }
  }

  CompositionTable table{};
  for (FunctorId x : all_functors()) {
    for (FunctorId y : all_functors()) {
      std::vector<Handle> composed(corpus.size());
      for (std::size_t c = 0; c < corpus.size(); ++c) {
        Restriction r = corpus[c].restrict_to(images[c][static_cast<int>(y)]);
        composed[c] = r.embed(r.monoid.apply(x));
      }
      std::vector<FunctorId> candidates;
      for (FunctorId z : all_functors()) {
        bool all = true;
        for (std::size_t c = 0; c < corpus.size() && all; ++c) {
          all = images[c][static_cast<int>(z)] == composed[c];
        }
        if (all) {
          candidates.push_back(z);
        }
      }
      const std::string cell = std::string(functor_name(x)) + " after " +
                               std::string(functor_name(y));
      if (candidates.empty()) {
        throw NoMatchingComposition("no functor matches " + cell);
      }
      if (candidates.size() > 1) {
        std::string list;
        for (FunctorId z : candidates) {
          list += ' ';
          list += functor_name(z);
        }
        throw AmbiguousComposition("corpus does not separate" + list + " for " + cell);
      }
      table[static_cast<int>(x)][static_cast<int>(y)] = candidates.front();
    }
  }
  return table;
}

TableComparison verify_composition_table(const CompositionTable& derived) {
  TableComparison cmp;
  for (FunctorId x : all_functors()) {
    for (FunctorId y : all_functors()) {
      const FunctorId got = derived[static_cast<int>(x)][static_cast<int>(y)];
      const FunctorId want = kComposition[static_cast<int>(x)][static_cast<int>(y)];
      if (got == want) {
        ++cmp.matches;
      } else {
        cmp.mismatches.push_back({x, y, got, want});
      }
    }
  }
  return cmp;
}

FiniteMonoid build_functor_monoid() {
  std::vector<Elem> table(kFunctorCount * kFunctorCount);
  std::vector<std::string> names;
  names.reserve(kFunctorCount);
  for (int x = 0; x < kFunctorCount; ++x) {
    names.emplace_back(functor_name(static_cast<FunctorId>(x)));
    for (int y = 0; y < kFunctorCount; ++y) {
      table[x * kFunctorCount + y] = static_cast<Elem>(kComposition[x][y]);
    }
  }
  // The validating constructor re-checks associativity and locates the
  // identity rather than trusting the embedded data.
  return FiniteMonoid(kFunctorCount, std::move(table), std::nullopt, std::move(names));
}

FunctorMonoidAnalysis analyze_functor_monoid(const FiniteMonoid& f) {
  FunctorMonoidAnalysis out;
  const GreensData g = greens(f);
  out.j_trivial = g.j.is_discrete();
  out.all_green_partitions_discrete = g.l.is_discrete() && g.r.is_discrete() &&
                                      g.j.is_discrete() && g.h.is_discrete() &&
                                      g.d.is_discrete();

  const IndexSet idem = idempotent_elements(f);
  for (auto i = idem.find_first(); i != IndexSet::npos; i = idem.find_next(i)) {
    out.idempotents.push_back(static_cast<Elem>(i));
  }
  const IndexSet closure = submonoid_closure(f, idem);
  for (auto i = closure.find_first(); i != IndexSet::npos; i = closure.find_next(i)) {
    out.idempotent_generated.push_back(static_cast<Elem>(i));
  }

  // With all J-classes trivial the class ids coincide with element indices,
  // so the class-level Hasse edges are already element pairs.
  for (auto [a, b] : g.j_hasse()) {
    out.divisibility_hasse.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
  }

  std::vector<Elem> to_parent;
  const FiniteMonoid sub = restrict_table(f, closure, &to_parent);
  const GreensData gs = greens(sub);
  for (auto [a, b] : gs.j_hasse()) {
    // J-trivial again, so class ids are sub-element indices.
    out.idempotent_divisibility_hasse.emplace_back(to_parent[a], to_parent[b]);
  }

  const int gl = static_cast<int>(FunctorId::GL);
  const int pl = static_cast<int>(FunctorId::PL);
  out.gl_divides_pl = g.j_leq[g.j.class_of(gl)][g.j.class_of(pl)];

  out.pl_sandwich_ok = true;
  const IndexSet allowed = [&] {
    IndexSet s(f.order());
    s.set(static_cast<int>(FunctorId::O));
    s.set(static_cast<int>(FunctorId::G));
    s.set(static_cast<int>(FunctorId::Q));
    s.set(static_cast<int>(FunctorId::P));
    s.set(static_cast<int>(FunctorId::PL));
    return s;
  }();
  for (Elem x = 0; x < f.order(); ++x) {
    for (Elem y = 0; y < f.order(); ++y) {
      if (!allowed.test(f.product(f.product(x, static_cast<Elem>(pl)), y))) {
        out.pl_sandwich_ok = false;
      }
    }
  }
  return out;
}

InvariantLattice functor_monoid_self_lattice() {
  return build_lattice(Monoid::finite(build_functor_monoid()), false);
}

}  // namespace mlat
