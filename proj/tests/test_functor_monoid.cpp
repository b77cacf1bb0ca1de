#include <doctest.h>

#include <algorithm>

#include "mlat/functor_monoid.hpp"
#include "mlat/verify.hpp"

using namespace mlat;

TEST_CASE("derived composition table matches the embedded law") {
  const CompositionTable derived = derive_composition_table(separating_corpus());
  const TableComparison cmp = verify_composition_table(derived);
  CHECK(cmp.matches == 225);
  CHECK(cmp.all_match());
}

TEST_CASE("specific composition cells") {
  const CompositionTable& t = known_composition_table();
  auto at = [&](FunctorId x, FunctorId y) {
    return t[static_cast<int>(x)][static_cast<int>(y)];
  };
  CHECK(at(FunctorId::E, FunctorId::G) == FunctorId::O);
  CHECK(at(FunctorId::E, FunctorId::GLR) == FunctorId::Q);
  CHECK(at(FunctorId::PL, FunctorId::FLR) == FunctorId::PL);
  CHECK(at(FunctorId::F, FunctorId::GLR) == FunctorId::P);
  CHECK(at(FunctorId::FL, FunctorId::GLR) == FunctorId::PL);

  // Row of Q is constant O except over GLR, FLR and the identity.
  const std::array<FunctorId, kFunctorCount> q_row = {
      FunctorId::O, FunctorId::O, FunctorId::O, FunctorId::O, FunctorId::O,
      FunctorId::Q, FunctorId::O, FunctorId::O, FunctorId::O, FunctorId::Q,
      FunctorId::O, FunctorId::O, FunctorId::O, FunctorId::O, FunctorId::Q};
  CHECK(t[static_cast<int>(FunctorId::Q)] == q_row);

  // Composing with the identity functor changes nothing on either side.
  for (FunctorId x : all_functors()) {
    CHECK(at(FunctorId::I, x) == x);
    CHECK(at(x, FunctorId::I) == x);
    CHECK(at(FunctorId::O, x) == FunctorId::O);
    CHECK(at(x, FunctorId::O) == FunctorId::O);
  }
}

TEST_CASE("a one-monoid corpus that misses unstable behaviour is ambiguous") {
  // A finite corpus cannot separate the one-sided levels.
  CHECK_THROWS_AS(
      derive_composition_table({Monoid::finite(transformation_monoid(3))}),
      AmbiguousComposition);
}

TEST_CASE("functor monoid table") {
  const FiniteMonoid f = build_functor_monoid();
  CHECK(f.order() == 15);
  CHECK(f.element_name(f.identity()) == "I");

  const Elem flr = static_cast<Elem>(FunctorId::FLR);
  bool right_identity = true;
  bool left_identity = true;
  for (Elem x = 0; x < f.order(); ++x) {
    if (x == f.identity()) {
      continue;
    }
    right_identity = right_identity && f.product(x, flr) == x;
    left_identity = left_identity && f.product(flr, x) == x;
  }
  CHECK(right_identity);
  CHECK_FALSE(left_identity);
}

TEST_CASE("functor monoid structure analysis") {
  const FiniteMonoid f = build_functor_monoid();
  const FunctorMonoidAnalysis a = analyze_functor_monoid(f);
  CHECK(a.j_trivial);
  CHECK(a.all_green_partitions_discrete);

  const std::vector<Elem> expected_idem = {
      static_cast<Elem>(FunctorId::O),   static_cast<Elem>(FunctorId::E),
      static_cast<Elem>(FunctorId::G),   static_cast<Elem>(FunctorId::GLR),
      static_cast<Elem>(FunctorId::F),   static_cast<Elem>(FunctorId::FLR),
      static_cast<Elem>(FunctorId::I)};
  std::vector<Elem> got = a.idempotents;
  std::vector<Elem> want = expected_idem;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);

  // The idempotents generate a nine-element submonoid: composing the
  // idempotent-level functor with the one-sided-unit closure adds the two
  // restricted levels.
  std::vector<Elem> gen = a.idempotent_generated;
  std::sort(gen.begin(), gen.end());
  std::vector<Elem> want_gen = want;
  want_gen.push_back(static_cast<Elem>(FunctorId::Q));
  want_gen.push_back(static_cast<Elem>(FunctorId::P));
  std::sort(want_gen.begin(), want_gen.end());
  CHECK(gen == want_gen);
  CHECK(gen.size() == 9);

  CHECK_FALSE(a.gl_divides_pl);
  CHECK(a.pl_sandwich_ok);
}

TEST_CASE("divisibility order matches the expected covering relations") {
  const FiniteMonoid f = build_functor_monoid();
  const FunctorMonoidAnalysis a = analyze_functor_monoid(f);

  auto as_pairs = [](const std::vector<std::pair<FunctorId, FunctorId>>& in) {
    std::vector<std::pair<Elem, Elem>> out;
    for (auto [x, y] : in) {
      out.emplace_back(static_cast<Elem>(x), static_cast<Elem>(y));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto sorted = [](std::vector<std::pair<Elem, Elem>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(a.divisibility_hasse) == as_pairs(expected_divisibility_hasse()));
  CHECK(sorted(a.idempotent_divisibility_hasse) ==
        as_pairs(expected_idempotent_divisibility_hasse()));
}

TEST_CASE("the functor monoid's own lattice is a three-chain") {
  const InvariantLattice lat = functor_monoid_self_lattice();
  REQUIRE(lat.nodes.size() == 3);
  CHECK(lat.type == MonoidType::bits(1, 0, 0, 1));
  CHECK(lat.hasse.size() == 2);
  CHECK(lat.nodes[lat.bottom].handle == Monoid::finite(build_functor_monoid()).identity_handle());
  // Middle node: the nine-element idempotent-generated submonoid.
  int middle = -1;
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    if (static_cast<int>(i) != lat.top && static_cast<int>(i) != lat.bottom) {
      middle = static_cast<int>(i);
    }
  }
  REQUIRE(middle >= 0);
  CHECK(lat.nodes[middle].handle.finite_set()->count() == 9);
  CHECK(lat.nodes[middle].label == "E=F=FL=FR=FLR");
}
