// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion is self-contained and pinned to its tolerance.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "mlat/corpus.hpp"
#include "mlat/counting.hpp"
#include "mlat/functor_monoid.hpp"
#include "mlat/greens.hpp"
#include "mlat/lattice.hpp"
#include "mlat/monoid.hpp"
#include "mlat/verify.hpp"
#include "oracles.hpp"

using namespace mlat;

namespace {

int failures = 0;

void criterion(int number, bool pass, const std::string& description) {
  std::cout << "criterion " << number << ": " << (pass ? "PASS" : "FAIL") << " - "
            << description << "\n";
  if (!pass) {
    ++failures;
  }
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string with_time(const std::string& text, double secs, double budget) {
  std::ostringstream os;
  os << text << " in " << static_cast<long>(secs * 1000) << " ms (budget "
     << static_cast<long>(budget) << " s)";
  return os.str();
}

}  // namespace

int main() {
  // 1. Composition-table reproduction on the separating witness corpus.
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    int matches = 0;
    try {
      const CompositionTable derived = derive_composition_table(separating_corpus());
      const TableComparison cmp = verify_composition_table(derived);
      matches = cmp.matches;
      pass = cmp.all_match();
    } catch (const Error&) {
      pass = false;
    }
    const double secs = seconds_since(t0);
    criterion(1, pass && secs < 10.0,
              with_time("composition table derived and matched " +
                            std::to_string(matches) + "/225 cells",
                        secs, 10));
  }

  const FiniteMonoid f = build_functor_monoid();

  // 2. Order 15; the idempotents generate exactly the nine-element
  // submonoid {O, E, G, GLR, F, FLR, Q, P, I}.
  {
    const FunctorMonoidAnalysis a = analyze_functor_monoid(f);
    std::vector<Elem> expected;
    for (FunctorId x : {FunctorId::O, FunctorId::E, FunctorId::G, FunctorId::GLR,
                        FunctorId::F, FunctorId::FLR, FunctorId::Q, FunctorId::P,
                        FunctorId::I}) {
      expected.push_back(static_cast<Elem>(x));
    }
    std::sort(expected.begin(), expected.end());
    std::vector<Elem> got = a.idempotent_generated;
    std::sort(got.begin(), got.end());
    criterion(2, f.order() == 15 && got == expected && got.size() == 9,
              "order 15 and idempotent-generated submonoid = {O, E, G, GLR, F, FLR, Q, P, I}");
  }

  // 3. J-trivial with every Green's partition discrete.
  {
    const GreensData g = greens(f);
    criterion(3, g.j.is_discrete() && g.l.is_discrete() && g.r.is_discrete() &&
                      g.h.is_discrete() && g.d.is_discrete(),
              "all five Green's partitions of the functor monoid are discrete");
  }

  // 4. Subsemigroup and congruence counts.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const SubsemigroupCounts subs = count_subsemigroups(f);
    const CongruenceCounts congs = count_congruences(f);
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << "counts (" << subs.subsemigroups << ", " << subs.submonoids << ") and ("
       << congs.congruences << ", " << congs.principal << ")";
    criterion(4,
              subs.subsemigroups == 2904 && subs.submonoids == 1452 &&
                  congs.congruences == 1613 && congs.principal == 76 && secs < 60.0,
              with_time(os.str(), secs, 60));
  }

  // 5. The functor monoid's own lattice is the three-chain of type (1,0,0,1).
  {
    const InvariantLattice lat = functor_monoid_self_lattice();
    const bool chain = lat.nodes.size() == 3 && lat.hasse.size() == 2 &&
                       lat.type == MonoidType::bits(1, 0, 0, 1);
    const Monoid fm = Monoid::finite(f);
    const bool ef = fm.apply(FunctorId::E) == fm.apply(FunctorId::F);
    criterion(5, chain && ef, "self lattice is the three-chain and the type is (1,0,0,1)");
  }

  // 6. All sixteen binary quadruples are realized by witness products.
  {
    bool pass = true;
    for (int bits = 0; bits < 16; ++bits) {
      const MonoidType t =
          MonoidType::bits(bits >> 3 & 1, bits >> 2 & 1, bits >> 1 & 1, bits & 1);
      pass = pass && type_witness(t).type() == t;
    }
    criterion(6, pass, "all sixteen types realized by witness products");
  }

  // 7. Shape counts for both lattice variants, plus the pinned instances.
  {
    bool pass = true;
    for (int bits = 0; bits < 16; ++bits) {
      const MonoidType t =
          MonoidType::bits(bits >> 3 & 1, bits >> 2 & 1, bits >> 1 & 1, bits & 1);
      const Monoid w = type_witness(t);
      pass = pass && build_lattice(w, false).nodes.size() == expected_lattice_size(t, false);
      pass = pass && build_lattice(w, true).nodes.size() == expected_lattice_size(t, true);
    }
    pass = pass && build_lattice(Monoid::bicyclic(), false).nodes.size() == 7;
    pass = pass && build_lattice(Monoid::bicyclic_zero(), false).nodes.size() == 8;
    pass = pass && build_lattice(Monoid::bicyclic_zero(), true).nodes.size() == 11;
    pass = pass && build_lattice(separating_corpus().front(), true).nodes.size() == 15;
    criterion(7, pass, "lattice node counts match the shape catalog for all types");
  }

  // 8. The lemma property suites over the full default corpus.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const RunReport lemmas = verify_lemmas();
    const double secs = seconds_since(t0);
    std::size_t passed = 0;
    for (const Check& c : lemmas.checks) {
      passed += c.pass ? 1 : 0;
    }
    criterion(8, lemmas.all_pass() && secs < 60.0,
              with_time("lemma suites " + std::to_string(passed) + "/" +
                            std::to_string(lemmas.checks.size()) + " checks",
                        secs, 60));
  }

  // 9. Intersection-closure witnesses.
  {
    const SublatticeReport rb = is_sublattice_of_sub(Monoid::bicyclic(), false);
    const SublatticeReport rb0 = is_sublattice_of_sub(Monoid::bicyclic_zero(), false);
    const SublatticeReport rb0e = is_sublattice_of_sub(Monoid::bicyclic_zero(), true);
    bool witness_ok = false;
    if (rb0.witness) {
      const InvariantLattice lat = build_lattice(Monoid::bicyclic_zero(), false);
      std::set<std::string> labels = {lat.nodes[rb0.witness->node_s].label,
                                      lat.nodes[rb0.witness->node_t].label};
      witness_ok = labels == std::set<std::string>{"FL", "GLR"} &&
                   rb0.witness->intersection_description == "{a^m b^n : m >= n}";
    }
    criterion(9,
              rb.closed_under_intersection && !rb0.closed_under_intersection &&
                  witness_ok && rb0e.closed_under_intersection,
              "intersection closure holds for B and the enhanced zero lattice, fails "
              "for the plain zero lattice at (FL, GLR)");
  }

  // 10. Oracle equivalences: SCC Green's classes against explicit ideal
  // comparison, congruence join closure against the direct partition scan,
  // and the three-point transformation facts through two code paths.
  {
    bool pass = true;
    for (const Monoid& m : default_corpus()) {
      if (!m.is_finite()) {
        continue;
      }
      const FiniteMonoid mat = m.materialize();
      if (mat.order() <= 30) {
        const GreensData g = greens(mat);
        pass = pass && g.l == oracles::greens_l_by_ideals(mat);
        pass = pass && g.r == oracles::greens_r_by_ideals(mat);
        pass = pass && g.j == oracles::greens_j_by_ideals(mat);
      }
      if (mat.order() <= 4) {
        std::set<std::vector<int>> generated, scanned;
        for (const Partition& p : congruences_by_join_closure(mat)) {
          generated.insert(p.cls);
        }
        for (const Partition& p : oracles::congruences_by_partition_scan(mat)) {
          scanned.insert(p.cls);
        }
        pass = pass && generated == scanned;
      }
    }

    const FiniteMonoid t3 = transformation_monoid(3);
    pass = pass && idempotent_elements(t3).count() ==
                       oracles::transformation_idempotent_count(3);
    pass = pass && oracles::transformation_idempotent_count(3) == 10;
    const IndexSet idem = idempotent_elements(t3);
    pass = pass && submonoid_closure(t3, idem).count() == 22;
    pass = pass && oracles::naive_closure(t3, idem).count() == 22;
    const GreensData g3 = greens(t3);
    std::vector<std::size_t> sizes;
    for (const auto& cls : g3.j.classes()) {
      sizes.push_back(cls.size());
    }
    std::sort(sizes.begin(), sizes.end());
    pass = pass && sizes == std::vector<std::size_t>{3, 6, 18};
    std::vector<std::size_t> oracle_sizes;
    for (const auto& cls : oracles::greens_j_by_ideals(t3).classes()) {
      oracle_sizes.push_back(cls.size());
    }
    std::sort(oracle_sizes.begin(), oracle_sizes.end());
    pass = pass && oracle_sizes == sizes;

    criterion(10, pass, "independent oracles agree with the computation paths");
  }

  if (failures == 0) {
    std::cout << "acceptance: all 10 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
