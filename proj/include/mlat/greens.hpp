#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mlat/finite_monoid.hpp"

namespace mlat {

/// A partition of {0..n-1}; class ids are numbered by first occurrence, so
/// two runs over the same monoid produce identical ids.
struct Partition {
  std::vector<int> cls;
  int count = 0;

  int class_of(Elem x) const { return cls[x]; }
  bool is_discrete() const { return count == static_cast<int>(cls.size()); }
  std::vector<std::vector<Elem>> classes() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Green's relations of a finite monoid: x L y iff Mx = My, x R y iff
/// xM = yM, x J y iff MxM = MyM, H = L meet R, D = L join R.  Computed via
/// strongly connected components of the one- and two-sided Cayley
/// reachability graphs.
struct GreensData {
  Partition l, r, j, h, d;

  /// j_leq[a][b]: J-class a lies below or equals J-class b in the
  /// divisibility preorder (every member of a is divisible by members of b).
  std::vector<std::vector<bool>> j_leq;

  /// Covering pairs (lower, upper) of the J order on J-classes.
  std::vector<std::pair<int, int>> j_hasse() const;
};

GreensData greens(const FiniteMonoid& m);

/// Closed-form description of the Green's classes of an infinite symbolic
/// backend (the finite computation path does not apply there).
struct SymbolicGreensDescription {
  std::string l;
  std::string r;
  std::string h;
  std::string d;
  std::string j;
};

enum class OutputFormat { Dot, Text };

/// Eggbox rendering: one box per D-class, R-classes as rows, L-classes as
/// columns, H-classes as cells, idempotents marked with '*'.  Deterministic.
std::string emit_eggbox(const FiniteMonoid& m, const GreensData& g, OutputFormat f);

}  // namespace mlat
