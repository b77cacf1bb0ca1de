// Test-only oracles, independent of the library's computation paths: naive
// fixpoint closure, Green's classes by explicit ideal comparison, congruence
// enumeration by partition scan, counting formulas for transformation
// monoids, and bicyclic multiplication by word rewriting.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mlat/finite_monoid.hpp"
#include "mlat/greens.hpp"

namespace oracles {

// Pairwise-product fixpoint, no worklist: recompute all products of current
// members until nothing new appears.
inline mlat::IndexSet naive_closure(const mlat::FiniteMonoid& m, mlat::IndexSet s) {
  s.resize(m.order());
  s.set(m.identity());
  bool changed = true;
  while (changed) {
    changed = false;
    const mlat::IndexSet snapshot = s;
    for (auto x = snapshot.find_first(); x != mlat::IndexSet::npos;
         x = snapshot.find_next(x)) {
      for (auto y = snapshot.find_first(); y != mlat::IndexSet::npos;
           y = snapshot.find_next(y)) {
        const mlat::Elem p =
            m.product(static_cast<mlat::Elem>(x), static_cast<mlat::Elem>(y));
        if (!s.test(p)) {
          s.set(p);
          changed = true;
        }
      }
    }
  }
  return s;
}

inline mlat::IndexSet left_ideal(const mlat::FiniteMonoid& m, mlat::Elem x) {
  mlat::IndexSet out(m.order());
  for (mlat::Elem a = 0; a < m.order(); ++a) {
    out.set(m.product(a, x));
  }
  return out;
}

inline mlat::IndexSet right_ideal(const mlat::FiniteMonoid& m, mlat::Elem x) {
  mlat::IndexSet out(m.order());
  for (mlat::Elem a = 0; a < m.order(); ++a) {
    out.set(m.product(x, a));
  }
  return out;
}

inline mlat::IndexSet two_sided_ideal(const mlat::FiniteMonoid& m, mlat::Elem x) {
  mlat::IndexSet out(m.order());
  for (mlat::Elem a = 0; a < m.order(); ++a) {
    const mlat::Elem ax = m.product(a, x);
    for (mlat::Elem b = 0; b < m.order(); ++b) {
      out.set(m.product(ax, b));
    }
  }
  return out;
}

// Partition elements by equality of their principal ideals.
template <typename IdealFn>
mlat::Partition partition_by_ideal(const mlat::FiniteMonoid& m, IdealFn ideal) {
  mlat::Partition p;
  p.cls.assign(m.order(), -1);
  std::map<std::vector<bool>, int> ids;
  for (mlat::Elem x = 0; x < m.order(); ++x) {
    const mlat::IndexSet s = ideal(m, x);
    std::vector<bool> key(m.order());
    for (std::size_t i = 0; i < m.order(); ++i) {
      key[i] = s.test(i);
    }
    auto [it, inserted] = ids.emplace(std::move(key), p.count);
    if (inserted) {
      ++p.count;
    }
    p.cls[x] = it->second;
  }
  // Renumber by first occurrence so the result is comparable with the
  // library's partitions.
  std::vector<int> remap(p.count, -1);
  int next = 0;
  for (mlat::Elem x = 0; x < m.order(); ++x) {
    if (remap[p.cls[x]] < 0) {
      remap[p.cls[x]] = next++;
    }
    p.cls[x] = remap[p.cls[x]];
  }
  return p;
}

inline mlat::Partition greens_l_by_ideals(const mlat::FiniteMonoid& m) {
  return partition_by_ideal(m, [](const mlat::FiniteMonoid& mm, mlat::Elem x) {
    return left_ideal(mm, x);
  });
}

inline mlat::Partition greens_r_by_ideals(const mlat::FiniteMonoid& m) {
  return partition_by_ideal(m, [](const mlat::FiniteMonoid& mm, mlat::Elem x) {
    return right_ideal(mm, x);
  });
}

inline mlat::Partition greens_j_by_ideals(const mlat::FiniteMonoid& m) {
  return partition_by_ideal(m, [](const mlat::FiniteMonoid& mm, mlat::Elem x) {
    return two_sided_ideal(mm, x);
  });
}

// All partitions of {0..n-1}, as class-id vectors in first-occurrence form.
inline void enumerate_partitions(unsigned n, std::vector<std::vector<int>>& out) {
  std::vector<int> cls(n, 0);
  auto rec = [&](auto&& self, unsigned i, int max_used) -> void {
    if (i == n) {
      out.push_back(cls);
      return;
    }
    for (int c = 0; c <= max_used + 1; ++c) {
      cls[i] = c;
      self(self, i + 1, std::max(max_used, c));
    }
  };
  if (n > 0) {
    rec(rec, 1, 0);  // element 0 is always in class 0
  } else {
    out.push_back({});
  }
}

// Direct scan: every product-compatible partition.
inline std::vector<mlat::Partition> congruences_by_partition_scan(const mlat::FiniteMonoid& m) {
  std::vector<std::vector<int>> raw;
  enumerate_partitions(static_cast<unsigned>(m.order()), raw);
  std::vector<mlat::Partition> out;
  for (auto& cls : raw) {
    mlat::Partition p;
    p.cls = cls;
    p.count = *std::max_element(cls.begin(), cls.end()) + 1;
    bool compatible = true;
    for (mlat::Elem x = 0; x < m.order() && compatible; ++x) {
      for (mlat::Elem y = 0; y < m.order() && compatible; ++y) {
        if (p.cls[x] != p.cls[y]) {
          continue;
        }
        for (mlat::Elem a = 0; a < m.order() && compatible; ++a) {
          compatible = p.cls[m.product(a, x)] == p.cls[m.product(a, y)] &&
                       p.cls[m.product(x, a)] == p.cls[m.product(y, a)];
        }
      }
    }
    if (compatible) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
  }
  return r;
}

// Idempotent self-maps of an n-point set: choose the image (k points), then
// send every other point anywhere into the image.
inline std::uint64_t transformation_idempotent_count(unsigned n) {
  std::uint64_t total = 0;
  for (unsigned k = 1; k <= n; ++k) {
    std::uint64_t power = 1;
    for (unsigned i = 0; i < n - k; ++i) {
      power *= k;
    }
    total += binomial(n, k) * power;
  }
  return total;
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) {
    r *= i;
  }
  return r;
}

// Bicyclic product by literal word rewriting: concatenate, erase "ba" until
// none remains, then read off the a-prefix and b-suffix.
struct RewrittenWord {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool canonical = false;
};

inline RewrittenWord rewrite_bicyclic(std::uint64_t m1, std::uint64_t n1,
                                      std::uint64_t m2, std::uint64_t n2) {
  std::string w;
  w.append(m1, 'a');
  w.append(n1, 'b');
  w.append(m2, 'a');
  w.append(n2, 'b');
  for (std::size_t pos = w.find("ba"); pos != std::string::npos; pos = w.find("ba")) {
    w.erase(pos, 2);
  }
  RewrittenWord out;
  std::size_t i = 0;
  while (i < w.size() && w[i] == 'a') {
    ++out.a;
    ++i;
  }
  while (i < w.size() && w[i] == 'b') {
    ++out.b;
    ++i;
  }
  out.canonical = i == w.size();
  return out;
}

}  // namespace oracles
