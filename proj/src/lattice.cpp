#include "mlat/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace mlat {

int InvariantLattice::node_of(const Handle& h) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].handle == h) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

std::string InvariantLattice::shape_id() const {
  return std::string(enhanced ? "L+" : "L") + type.to_string();
}

InvariantLattice build_lattice(const Monoid& m, bool enhanced) {
  InvariantLattice lat{m, enhanced, m.type(), {}, {}, {}, -1, -1};

  std::vector<FunctorId> ids(plain_functors().begin(), plain_functors().end());
  if (enhanced) {
    ids.assign(all_functors().begin(), all_functors().end());
  }
  for (FunctorId x : ids) {
    Handle h = m.apply(x);
    int at = lat.node_of(h);
    if (at < 0) {
      lat.nodes.push_back({std::move(h), {x}, {}});
    } else {
      lat.nodes[at].functors.push_back(x);
    }
  }
  for (LatticeNode& node : lat.nodes) {
    std::sort(node.functors.begin(), node.functors.end(),
              [](FunctorId a, FunctorId b) {
                return functor_label_rank(a) < functor_label_rank(b);
              });
    std::string label;
    for (FunctorId x : node.functors) {
      if (!label.empty()) {
        label += '=';
      }
      label += functor_name(x);
    }
    node.label = std::move(label);
  }
  std::sort(lat.nodes.begin(), lat.nodes.end(),
            [](const LatticeNode& a, const LatticeNode& b) {
              return functor_label_rank(a.functors.front()) <
                     functor_label_rank(b.functors.front());
            });

  const int n = static_cast<int>(lat.nodes.size());
  lat.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      lat.leq[i][j] = handle_subset(lat.nodes[i].handle, lat.nodes[j].handle);
    }
  }
  lat.bottom = lat.node_of(m.apply(FunctorId::O));
  lat.top = lat.node_of(m.apply(FunctorId::I));

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !lat.leq[i][j]) {
        continue;
      }
      bool covering = true;
      for (int k = 0; k < n && covering; ++k) {
        if (k != i && k != j && lat.leq[i][k] && lat.leq[k][j]) {
          covering = false;
        }
      }
      if (covering) {
        lat.hasse.emplace_back(i, j);
      }
    }
  }
  std::sort(lat.hasse.begin(), lat.hasse.end());

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Handle join = m.join(lat.nodes[i].handle, lat.nodes[j].handle);
      if (lat.node_of(join) < 0) {
        throw JoinClosureViolation("join of " + lat.nodes[i].label + " and " +
                                   lat.nodes[j].label + " is not a lattice node");
      }
    }
  }
  return lat;
}

int meet_in_lattice(const InvariantLattice& lat, int s, int t) {
  const int n = static_cast<int>(lat.nodes.size());
  std::vector<int> lower;
  for (int k = 0; k < n; ++k) {
    if (lat.leq[k][s] && lat.leq[k][t]) {
      lower.push_back(k);
    }
  }
  for (int c : lower) {
    bool greatest = true;
    for (int k : lower) {
      if (!lat.leq[k][c]) {
        greatest = false;
        break;
      }
    }
    if (greatest) {
      return c;
    }
  }
  throw Error("common lower bounds have no greatest element; lattice invariant broken");
}

SublatticeReport is_sublattice_of_sub(const Monoid& m, bool enhanced) {
  const InvariantLattice lat = build_lattice(m, enhanced);
  const int n = static_cast<int>(lat.nodes.size());
  struct Missing {
    int i, j;
    Handle inter;
  };
  std::vector<Missing> missing;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Handle inter = handle_intersect(lat.nodes[i].handle, lat.nodes[j].handle);
      if (lat.node_of(inter) < 0) {
        missing.push_back({i, j, std::move(inter)});
      }
    }
  }
  if (missing.empty()) {
    return {true, std::nullopt};
  }
  // Report the most informative witness: one whose escaped intersection is
  // maximal under inclusion (first such pair in node order on ties).
  const Missing* best = nullptr;
  for (const Missing& cand : missing) {
    bool maximal = true;
    for (const Missing& other : missing) {
      if (&other != &cand && handle_subset(cand.inter, other.inter) &&
          !(cand.inter == other.inter)) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      best = &cand;
      break;
    }
  }
  return {false, SublatticeWitness{best->i, best->j, m.describe_handle(best->inter)}};
}

std::string emit_hasse(const InvariantLattice& lat, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::Text) {
    os << "lattice " << lat.shape_id() << ": " << lat.nodes.size() << " nodes, "
       << lat.hasse.size() << " edges\n";
    for (const LatticeNode& node : lat.nodes) {
      os << "node " << node.label << "\n";
    }
    for (auto [child, parent] : lat.hasse) {
      os << lat.nodes[child].label << " < " << lat.nodes[parent].label << "\n";
    }
  } else if (format == OutputFormat::Dot) {
    os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
      os << "  n" << i << " [label=\"" << lat.nodes[i].label << "\"];\n";
    }
    for (auto [child, parent] : lat.hasse) {
      os << "  n" << child << " -> n" << parent << ";\n";
    }
    os << "}\n";
  } else {
    throw UnknownFormat("unknown lattice format");
  }
  return os.str();
}

std::size_t expected_lattice_size(const MonoidType& t, bool enhanced) {
  const int key = (t.t2 ? 4 : 0) | (t.t3 ? 2 : 0) | (t.t4 ? 1 : 0);
  // Indexed by (t2, t3, t4) bits.
  static constexpr std::size_t kStable[8] = {5, 3, 3, 2, 4, 2, 2, 1};
  static constexpr std::size_t kUnstable[8] = {11, 9, 10, 8, 10, 8, 9, 7};
  if (!enhanced || t.t1 || t.t3) {
    // The enhanced variant adds nothing when the identity is stable or when
    // the generated-unit level already reaches its idempotent extension.
    return t.t1 ? kStable[key] : kUnstable[key];
  }
  static constexpr std::size_t kEnhanced[4] = {15, 12, 14, 11};  // by (t2, t4)
  return kEnhanced[(t.t2 ? 2 : 0) | (t.t4 ? 1 : 0)];
}

Monoid type_witness(const MonoidType& t) {
  std::vector<Monoid> factors;
  if (!t.t4) {
    factors.push_back(Monoid::finite(cyclic_group(2)));
  }
  if (!t.t3) {
    factors.push_back(Monoid::finite(chain_semilattice(2)));
  }
  if (!t.t2) {
    factors.push_back(Monoid::monogenic());
  }
  if (!t.t1) {
    factors.push_back(Monoid::bicyclic());
  }
  return Monoid::direct_product(std::move(factors));
}

ShapeReport classify_shape(const Monoid& m) {
  ShapeReport report;
  report.monoid_description = m.describe();
  report.type = m.type();
  report.stable = report.type.stable();
  report.expected_plain = expected_lattice_size(report.type, false);
  report.expected_enhanced = expected_lattice_size(report.type, true);
  report.actual_plain = build_lattice(m, false).nodes.size();
  report.actual_enhanced = build_lattice(m, true).nodes.size();
  report.pass = report.actual_plain == report.expected_plain &&
                report.actual_enhanced == report.expected_enhanced;
  return report;
}

}  // namespace mlat
