#include <doctest.h>

#include "mlat/functor_monoid.hpp"
#include "mlat/greens.hpp"

using namespace mlat;

TEST_CASE("eggbox of a group is one box") {
  const FiniteMonoid z4 = cyclic_group(4);
  const GreensData g = greens(z4);
  CHECK(g.d.count == 1);
  const std::string text = emit_eggbox(z4, g, OutputFormat::Text);
  CHECK(text.find("1 D-classes") != std::string::npos);
}

TEST_CASE("eggbox of the three-point transformation monoid") {
  const FiniteMonoid t3 = transformation_monoid(3);
  const GreensData g = greens(t3);
  REQUIRE(g.d.count == 3);
  // Rank-2 D-class: 3 R-classes (kernels) x 3 L-classes (images), 2 maps
  // per H-cell.
  const std::string text = emit_eggbox(t3, g, OutputFormat::Text);
  CHECK(text.find("(size 18, 3x3)") != std::string::npos);
  CHECK(text.find("(size 6, 1x1)") != std::string::npos);
  CHECK(text.find("(size 3, 3x1)") != std::string::npos);
  // Deterministic output.
  CHECK(text == emit_eggbox(t3, greens(t3), OutputFormat::Text));
}

TEST_CASE("eggbox dot output for the functor monoid") {
  const FiniteMonoid f = build_functor_monoid();
  const GreensData g = greens(f);
  CHECK(g.d.count == 15);  // all classes singletons
  const std::string dot = emit_eggbox(f, g, OutputFormat::Dot);
  CHECK(dot.find("digraph eggbox") == 0);
  // One node per element, idempotents shaded.
  CHECK(dot.find("BGCOLOR=\"lightgrey\">I*") != std::string::npos);
  CHECK(dot.find(">PL<") != std::string::npos);
  // 23 covering edges of the divisibility order.
  std::size_t arrows = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 1)) {
    ++arrows;
  }
  CHECK(arrows == 23);
}
