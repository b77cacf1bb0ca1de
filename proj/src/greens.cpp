#include "mlat/greens.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mlat {

std::vector<std::vector<Elem>> Partition::classes() const {
  std::vector<std::vector<Elem>> out(count);
  for (Elem x = 0; x < cls.size(); ++x) {
    out[cls[x]].push_back(x);
  }
  return out;
}

namespace {

enum class Side { Left, Right, Both };

// Iterative Tarjan SCC over the implicit Cayley reachability graph.  From x
// the neighbours are m*x (left), x*m (right) or both; every neighbour of x
// divides x on the corresponding side, so mutual reachability is exactly
// Green's equivalence for that side.
struct SccState {
  const FiniteMonoid& m;
  Side side;
  std::vector<int> index, low, comp;
  std::vector<bool> on_stack;
  std::vector<Elem> stack;
  int next_index = 0;
  int next_comp = 0;

  explicit SccState(const FiniteMonoid& mm, Side s)
      : m(mm),
        side(s),
        index(mm.order(), -1),
        low(mm.order(), 0),
        comp(mm.order(), -1),
        on_stack(mm.order(), false) {}

  std::size_t degree() const {
    return side == Side::Both ? 2 * m.order() : m.order();
  }

  Elem neighbour(Elem x, std::size_t k) const {
    const std::size_t n = m.order();
    if (side == Side::Left || (side == Side::Both && k < n)) {
      return m.product(static_cast<Elem>(k % n), x);
    }
    return m.product(x, static_cast<Elem>(k % n));
  }

  void run(Elem root) {
    struct Frame {
      Elem x;
      std::size_t k;
    };
    std::vector<Frame> frames;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.k < degree()) {
        const Elem y = neighbour(f.x, f.k++);
        if (index[y] < 0) {
          index[y] = low[y] = next_index++;
          stack.push_back(y);
          on_stack[y] = true;
          frames.push_back({y, 0});
        } else if (on_stack[y]) {
          low[f.x] = std::min(low[f.x], index[y]);
        }
      } else {
        if (low[f.x] == index[f.x]) {
          while (true) {
            const Elem y = stack.back();
            stack.pop_back();
            on_stack[y] = false;
            comp[y] = next_comp;
            if (y == f.x) {
              break;
            }
          }
          ++next_comp;
        }
        const Elem finished = f.x;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().x] = std::min(low[frames.back().x], low[finished]);
        }
      }
    }
  }
};

Partition normalise(const std::vector<int>& raw, int raw_count) {
  Partition p;
  p.cls.assign(raw.size(), -1);
  std::vector<int> remap(raw_count, -1);
  for (std::size_t x = 0; x < raw.size(); ++x) {
    if (remap[raw[x]] < 0) {
      remap[raw[x]] = p.count++;
    }
    p.cls[x] = remap[raw[x]];
  }
  return p;
}

Partition scc_partition(const FiniteMonoid& m, Side side, std::vector<int>* raw_out = nullptr) {
  SccState st(m, side);
  for (Elem x = 0; x < m.order(); ++x) {
    if (st.index[x] < 0) {
      st.run(x);
    }
  }
  if (raw_out != nullptr) {
    *raw_out = st.comp;
  }
  return normalise(st.comp, st.next_comp);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) {
      parent[i] = static_cast<int>(i);
    }
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

GreensData greens(const FiniteMonoid& m) {
  GreensData g;
  g.l = scc_partition(m, Side::Left);
  g.r = scc_partition(m, Side::Right);
  g.j = scc_partition(m, Side::Both);

  const std::size_t n = m.order();

  // H = L meet R: classes are (L-class, R-class) pairs.
  {
    std::map<std::pair<int, int>, int> ids;
    g.h.cls.assign(n, -1);
    for (Elem x = 0; x < n; ++x) {
      auto key = std::make_pair(g.l.cls[x], g.r.cls[x]);
      auto [it, inserted] = ids.emplace(key, g.h.count);
      if (inserted) {
        ++g.h.count;
      }
      g.h.cls[x] = it->second;
    }
    g.h = normalise(g.h.cls, g.h.count);
  }

  // D = L join R: smallest equivalence containing both.
  {
    UnionFind uf(n);
    std::vector<int> first_l(g.l.count, -1), first_r(g.r.count, -1);
    for (Elem x = 0; x < n; ++x) {
      if (first_l[g.l.cls[x]] < 0) {
        first_l[g.l.cls[x]] = static_cast<int>(x);
      } else {
        uf.unite(static_cast<int>(x), first_l[g.l.cls[x]]);
      }
      if (first_r[g.r.cls[x]] < 0) {
        first_r[g.r.cls[x]] = static_cast<int>(x);
      } else {
        uf.unite(static_cast<int>(x), first_r[g.r.cls[x]]);
      }
    }
    std::vector<int> raw(n);
    for (Elem x = 0; x < n; ++x) {
      raw[x] = uf.find(static_cast<int>(x));
    }
    g.d = normalise(raw, static_cast<int>(n));
  }

  // J-class order: class-level down-edges (from y to m*y and y*m), then
  // reachability per class.
  {
    const int c = g.j.count;
    std::vector<std::set<int>> down(c);
    for (Elem y = 0; y < n; ++y) {
      for (Elem a = 0; a < n; ++a) {
        down[g.j.cls[y]].insert(g.j.cls[m.product(a, y)]);
        down[g.j.cls[y]].insert(g.j.cls[m.product(y, a)]);
      }
    }
    g.j_leq.assign(c, std::vector<bool>(c, false));
    for (int b = 0; b < c; ++b) {
      std::vector<int> todo{b};
      g.j_leq[b][b] = true;
      while (!todo.empty()) {
        int cur = todo.back();
        todo.pop_back();
        for (int nxt : down[cur]) {
          if (!g.j_leq[nxt][b]) {
            g.j_leq[nxt][b] = true;
            todo.push_back(nxt);
          }
        }
      }
    }
  }
  return g;
}

std::vector<std::pair<int, int>> GreensData::j_hasse() const {
  const int c = j.count;
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < c; ++a) {
    for (int b = 0; b < c; ++b) {
      if (a == b || !j_leq[a][b] || j_leq[b][a]) {
        continue;
      }
      bool covering = true;
      for (int mid = 0; mid < c && covering; ++mid) {
        if (mid == a || mid == b) {
          continue;
        }
        if (j_leq[a][mid] && !j_leq[mid][a] && j_leq[mid][b] && !j_leq[b][mid]) {
          covering = false;
        }
      }
      if (covering) {
        edges.emplace_back(a, b);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

namespace {

struct EggboxLayout {
  // Per D-class: rows = R-classes (sorted by least element), columns =
  // L-classes (sorted by least element); each cell lists its elements.
  struct Box {
    int d_class;
    std::vector<int> row_ids, col_ids;
    std::vector<std::vector<std::vector<Elem>>> cells;
  };
  std::vector<Box> boxes;
};

EggboxLayout layout(const FiniteMonoid& m, const GreensData& g) {
  EggboxLayout out;
  auto d_classes = g.d.classes();
  for (int d = 0; d < g.d.count; ++d) {
    EggboxLayout::Box box;
    box.d_class = d;
    std::map<int, Elem> row_min, col_min;
    for (Elem x : d_classes[d]) {
      auto [rit, rnew] = row_min.emplace(g.r.cls[x], x);
      if (!rnew) {
        rit->second = std::min(rit->second, x);
      }
      auto [cit, cnew] = col_min.emplace(g.l.cls[x], x);
      if (!cnew) {
        cit->second = std::min(cit->second, x);
      }
    }
    std::vector<std::pair<Elem, int>> rows, cols;
    for (auto& [id, least] : row_min) {
      rows.emplace_back(least, id);
    }
    for (auto& [id, least] : col_min) {
      cols.emplace_back(least, id);
    }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    for (auto& [least, id] : rows) {
      box.row_ids.push_back(id);
    }
    for (auto& [least, id] : cols) {
      box.col_ids.push_back(id);
    }
    box.cells.assign(box.row_ids.size(),
                     std::vector<std::vector<Elem>>(box.col_ids.size()));
    for (Elem x : d_classes[d]) {
      auto ri = std::find(box.row_ids.begin(), box.row_ids.end(), g.r.cls[x]) -
                box.row_ids.begin();
      auto ci = std::find(box.col_ids.begin(), box.col_ids.end(), g.l.cls[x]) -
                box.col_ids.begin();
      box.cells[ri][ci].push_back(x);
    }
    for (auto& row : box.cells) {
      for (auto& cell : row) {
        std::sort(cell.begin(), cell.end());
      }
    }
    out.boxes.push_back(std::move(box));
  }
  return out;
}

std::string cell_text(const FiniteMonoid& m, const std::vector<Elem>& cell,
                      const IndexSet& idem) {
  std::string s;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (i > 0) {
      s += ' ';
    }
    s += m.element_name(cell[i]);
    if (idem.test(cell[i])) {
      s += '*';
    }
  }
  return s;
}

}  // namespace

std::string emit_eggbox(const FiniteMonoid& m, const GreensData& g, OutputFormat f) {
  const EggboxLayout lay = layout(m, g);
  const IndexSet idem = idempotent_elements(m);
  std::ostringstream os;
  if (f == OutputFormat::Text) {
    os << "eggbox: " << g.d.count << " D-classes, " << m.order() << " elements\n";
    for (const auto& box : lay.boxes) {
      std::size_t size = 0;
      for (const auto& row : box.cells) {
        for (const auto& cell : row) {
          size += cell.size();
        }
      }
      os << "D" << box.d_class << " (size " << size << ", " << box.row_ids.size()
         << "x" << box.col_ids.size() << ")\n";
      for (const auto& row : box.cells) {
        os << " ";
        for (const auto& cell : row) {
          os << " [" << cell_text(m, cell, idem) << "]";
        }
        os << "\n";
      }
    }
    os << "J-order (lower < upper):\n";
    for (auto [a, b] : g.j_hasse()) {
      os << "  D" << a << " < D" << b << "\n";
    }
  } else if (f == OutputFormat::Dot) {
    os << "digraph eggbox {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (const auto& box : lay.boxes) {
      os << "  d" << box.d_class << " [label=<<TABLE BORDER=\"1\" CELLBORDER=\"1\" CELLSPACING=\"0\">";
      for (const auto& row : box.cells) {
        os << "<TR>";
        for (const auto& cell : row) {
          bool has_idem = std::any_of(cell.begin(), cell.end(),
                                      [&](Elem x) { return idem.test(x); });
          os << "<TD" << (has_idem ? " BGCOLOR=\"lightgrey\"" : "") << ">";
          std::string t = cell_text(m, cell, idem);
          if (t.empty()) {
            t = " ";
          }
          os << t << "</TD>";
        }
        os << "</TR>";
      }
      os << "</TABLE>>];\n";
    }
    for (auto [a, b] : g.j_hasse()) {
      os << "  d" << a << " -> d" << b << ";\n";
    }
    os << "}\n";
  } else {
    throw UnknownFormat("unknown eggbox format");
  }
  return os.str();
}

}  // namespace mlat
