#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlat/greens.hpp"  // OutputFormat
#include "mlat/monoid.hpp"

namespace mlat {

struct LatticeNode {
  Handle handle;
  std::vector<FunctorId> functors;  // all functors with this image, by label rank
  std::string label;                // names joined with '=', e.g. "E=F=Q=P"
};

/// The lattice of functor images of a monoid, ordered by inclusion with
/// join = generated submonoid.  `enhanced` selects the fifteen-functor
/// variant instead of the eleven-functor one.
struct InvariantLattice {
  Monoid monoid;
  bool enhanced = false;
  MonoidType type;
  std::vector<LatticeNode> nodes;          // sorted by functor label rank
  std::vector<std::vector<bool>> leq;      // leq[i][j]: node i included in node j
  std::vector<std::pair<int, int>> hasse;  // covering pairs (child, parent)
  int bottom = -1;
  int top = -1;

  int node_of(const Handle& h) const;  // -1 when absent
  std::string shape_id() const;        // e.g. "L+(0,1,0,1)"
};

/// Evaluates the functors, deduplicates images, computes containment and
/// covering edges, and asserts join closure (JoinClosureViolation signals an
/// engine bug).
InvariantLattice build_lattice(const Monoid& m, bool enhanced);

/// Lattice meet: the largest node below both, equivalently the join of all
/// common lower bounds.  May differ from set intersection.
int meet_in_lattice(const InvariantLattice& lat, int s, int t);

struct SublatticeWitness {
  int node_s = -1;
  int node_t = -1;
  std::string intersection_description;
};

struct SublatticeReport {
  bool closed_under_intersection = false;
  std::optional<SublatticeWitness> witness;  // set when not closed
};

/// Whether every pairwise intersection of lattice nodes is itself a node.
SublatticeReport is_sublattice_of_sub(const Monoid& m, bool enhanced);

/// Hasse document.  Text: node labels, then one "child < parent" line per
/// covering edge.  DOT: edges point from smaller to larger submonoid.
/// Output is deterministic.
std::string emit_hasse(const InvariantLattice& lat, OutputFormat format);

/// Expected node count for the shape catalog, by type and variant.
std::size_t expected_lattice_size(const MonoidType& t, bool enhanced);

/// A witness monoid of the given type: the direct product of the seed
/// monoids Z2, 2-chain, free monogenic and bicyclic selected by the zero
/// coordinates of the type.
Monoid type_witness(const MonoidType& t);

struct ShapeReport {
  std::string monoid_description;
  MonoidType type;
  bool stable = false;
  std::size_t expected_plain = 0;
  std::size_t expected_enhanced = 0;
  std::size_t actual_plain = 0;
  std::size_t actual_enhanced = 0;
  bool pass = false;
};

/// Classifies a monoid against the shape catalog: type, stability, expected
/// and actual node counts for both lattice variants.
ShapeReport classify_shape(const Monoid& m);

}  // namespace mlat
