#include "mlat/bicyclic.hpp"

#include <algorithm>

namespace mlat {

BicyclicElement bicyclic_multiply(const BicyclicElement& x, const BicyclicElement& y) {
  if (x.zero || y.zero) {
    return BicyclicElement::zero_element();
  }
  const std::uint64_t mu = std::max(x.n, y.m);
  return BicyclicElement::word(x.m + mu - x.n, y.n + mu - y.m);
}

std::string bicyclic_element_name(const BicyclicElement& x) {
  if (x.zero) {
    return "0";
  }
  if (x.m == 0 && x.n == 0) {
    return "1";
  }
  std::string s;
  if (x.m > 0) {
    s += "a";
    if (x.m > 1) {
      s += "^" + std::to_string(x.m);
    }
  }
  if (x.n > 0) {
    s += "b";
    if (x.n > 1) {
      s += "^" + std::to_string(x.n);
    }
  }
  return s;
}

bool pair_set_contains(PairSet s, std::uint64_t m, std::uint64_t n) {
  switch (s) {
    case PairSet::Origin:
      return m == 0 && n == 0;
    case PairSet::Diagonal:
      return m == n;
    case PairSet::PowersOfA:
      return n == 0;
    case PairSet::PowersOfB:
      return m == 0;
    case PairSet::LowerTriangle:
      return m >= n;
    case PairSet::UpperTriangle:
      return m <= n;
    case PairSet::All:
      return true;
  }
  return false;
}

namespace {

constexpr int kPairSetCount = 7;

inline int idx(PairSet s) { return static_cast<int>(s); }

// Rows/columns ordered as the enum: Origin, Diagonal, PowersOfA, PowersOfB,
// LowerTriangle, UpperTriangle, All.
constexpr bool kSubset[kPairSetCount][kPairSetCount] = {
    //            O  D  A  B  L  U  *
    /* Origin */ {1, 1, 1, 1, 1, 1, 1},
    /* Diag   */ {0, 1, 0, 0, 1, 1, 1},
    /* PowA   */ {0, 0, 1, 0, 1, 0, 1},
    /* PowB   */ {0, 0, 0, 1, 0, 1, 1},
    /* Lower  */ {0, 0, 0, 0, 1, 0, 1},
    /* Upper  */ {0, 0, 0, 0, 0, 1, 1},
    /* All    */ {0, 0, 0, 0, 0, 0, 1},
};

constexpr PairSet O = PairSet::Origin;
constexpr PairSet D = PairSet::Diagonal;
constexpr PairSet A = PairSet::PowersOfA;
constexpr PairSet B = PairSet::PowersOfB;
constexpr PairSet L = PairSet::LowerTriangle;
constexpr PairSet U = PairSet::UpperTriangle;
constexpr PairSet W = PairSet::All;

constexpr PairSet kMeet[kPairSetCount][kPairSetCount] = {
    //            O  D  A  B  L  U  *
    /* Origin */ {O, O, O, O, O, O, O},
    /* Diag   */ {O, D, O, O, D, D, D},
    /* PowA   */ {O, O, A, O, A, O, A},
    /* PowB   */ {O, O, O, B, O, B, B},
    /* Lower  */ {O, D, A, O, L, D, L},
    /* Upper  */ {O, D, O, B, D, U, U},
    /* All    */ {O, D, A, B, L, U, W},
};

// Join = generated submonoid of the union.  The non-obvious entries:
// Diagonal with PowersOfA generates the lower triangle (a^x b^y with x >= y
// factors as a^{x-y} * a^y b^y) and dually for PowersOfB; any family
// containing both a and b generates everything.
constexpr PairSet kJoin[kPairSetCount][kPairSetCount] = {
    //            O  D  A  B  L  U  *
    /* Origin */ {O, D, A, B, L, U, W},
    /* Diag   */ {D, D, L, U, L, U, W},
    /* PowA   */ {A, L, A, W, L, W, W},
    /* PowB   */ {B, U, W, B, W, U, W},
    /* Lower  */ {L, L, L, W, L, W, W},
    /* Upper  */ {U, U, W, U, W, U, W},
    /* All    */ {W, W, W, W, W, W, W},
};

}  // namespace

bool pair_set_subset(PairSet s, PairSet t) { return kSubset[idx(s)][idx(t)]; }

PairSet pair_set_meet(PairSet s, PairSet t) { return kMeet[idx(s)][idx(t)]; }

PairSet pair_set_join(PairSet s, PairSet t) { return kJoin[idx(s)][idx(t)]; }

PairSet pair_set_diagonal_part(PairSet s) {
  switch (s) {
    case PairSet::Origin:
    case PairSet::PowersOfA:
    case PairSet::PowersOfB:
      return PairSet::Origin;
    case PairSet::Diagonal:
    case PairSet::LowerTriangle:
    case PairSet::UpperTriangle:
    case PairSet::All:
      return PairSet::Diagonal;
  }
  return PairSet::Origin;
}

bool entry_contains(const SymEntry& e, const BicyclicElement& x) {
  if (x.zero) {
    return e.zero;
  }
  return pair_set_contains(e.set, x.m, x.n);
}

bool entry_subset(const SymEntry& s, const SymEntry& t) {
  return pair_set_subset(s.set, t.set) && (!s.zero || t.zero);
}

SymEntry entry_meet(const SymEntry& s, const SymEntry& t) {
  return {pair_set_meet(s.set, t.set), s.zero && t.zero};
}

SymEntry entry_join(const SymEntry& s, const SymEntry& t) {
  // Adding the absorbing zero to a generating set contributes only the zero
  // itself, so the flags just combine.
  return {pair_set_join(s.set, t.set), s.zero || t.zero};
}

bool entry_is_finite(const SymEntry& e) { return e.set == PairSet::Origin; }

bool entry_has_infinitely_many_idempotents(const SymEntry& e) {
  return pair_set_diagonal_part(e.set) == PairSet::Diagonal;
}

std::vector<BicyclicElement> entry_sample(const SymEntry& e, std::uint64_t bound) {
  std::vector<BicyclicElement> out;
  for (std::uint64_t m = 0; m <= bound; ++m) {
    for (std::uint64_t n = 0; n <= bound; ++n) {
      if (pair_set_contains(e.set, m, n)) {
        out.push_back(BicyclicElement::word(m, n));
      }
    }
  }
  if (e.zero) {
    out.push_back(BicyclicElement::zero_element());
  }
  return out;
}

namespace {

std::string pair_set_description(PairSet s) {
  switch (s) {
    case PairSet::Origin:
      return "{1}";
    case PairSet::Diagonal:
      return "{a^m b^m : m >= 0}";
    case PairSet::PowersOfA:
      return "<a> = {a^m : m >= 0}";
    case PairSet::PowersOfB:
      return "<b> = {b^n : n >= 0}";
    case PairSet::LowerTriangle:
      return "{a^m b^n : m >= n}";
    case PairSet::UpperTriangle:
      return "{a^m b^n : m <= n}";
    case PairSet::All:
      return "B = {a^m b^n : m, n >= 0}";
  }
  return "?";
}

}  // namespace

std::string entry_description(const SymEntry& e) {
  if (e.set == PairSet::Origin && e.zero) {
    return "{1, 0}";
  }
  std::string s = pair_set_description(e.set);
  if (e.zero) {
    s += " U {0}";
  }
  return s;
}

std::string entry_description_monogenic(const SymEntry& e) {
  std::string s;
  switch (e.set) {
    case PairSet::Origin:
      s = e.zero ? "{1, 0}" : "{1}";
      return s;
    case PairSet::PowersOfA:
      s = "<a> = {1, a, a^2, ...}";
      break;
    default:
      s = pair_set_description(e.set);
      break;
  }
  if (e.zero) {
    s += " U {0}";
  }
  return s;
}

}  // namespace mlat
