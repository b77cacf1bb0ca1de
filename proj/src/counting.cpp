#include "mlat/counting.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>

namespace mlat {

namespace {

void require_bound(const FiniteMonoid& m, unsigned bound, const char* what) {
  if (m.order() > bound) {
    std::ostringstream msg;
    msg << what << " needs order <= " << bound << ", got " << m.order();
    throw BoundExceeded(msg.str());
  }
}

}  // namespace

SubsemigroupCounts count_subsemigroups(const FiniteMonoid& m, unsigned bound) {
  require_bound(m, std::min(bound, 63u), "subsemigroup enumeration");
  const unsigned n = static_cast<unsigned>(m.order());
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t identity_bit = std::uint64_t{1} << m.identity();

  // The empty subset counts as a (vacuously closed) subsemigroup.  This is
  // the convention under which a monoid whose only solution of x*y = 1 is
  // x = y = 1 has exactly twice as many subsemigroups as submonoids.
  SubsemigroupCounts counts{1, 0};
  std::vector<Elem> members;
  members.reserve(n);
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    members.clear();
    for (unsigned i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        members.push_back(i);
      }
    }
    bool closed = true;
    for (std::size_t i = 0; i < members.size() && closed; ++i) {
      for (std::size_t j = 0; j < members.size() && closed; ++j) {
        closed = (mask >> m.product(members[i], members[j]) & 1) != 0;
      }
    }
    if (closed) {
      ++counts.subsemigroups;
      if (mask & identity_bit) {
        ++counts.submonoids;
      }
    }
  }
  return counts;
}

bool is_congruence(const FiniteMonoid& m, const Partition& p) {
  const std::size_t n = m.order();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (p.cls[x] != p.cls[y]) {
        continue;
      }
      for (Elem a = 0; a < n; ++a) {
        if (p.cls[m.product(a, x)] != p.cls[m.product(a, y)] ||
            p.cls[m.product(x, a)] != p.cls[m.product(y, a)]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

struct PairCloser {
  const FiniteMonoid& m;
  std::vector<int> parent;
  std::vector<std::pair<Elem, Elem>> pending;

  explicit PairCloser(const FiniteMonoid& mm) : m(mm), parent(mm.order()) {
    for (std::size_t i = 0; i < parent.size(); ++i) {
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

  void merge(Elem x, Elem y) {
    const int rx = find(static_cast<int>(x));
    const int ry = find(static_cast<int>(y));
    if (rx != ry) {
      parent[rx] = ry;
      pending.emplace_back(x, y);
    }
  }

  // Propagate compatibility: each merged pair forces its left and right
  // translates to merge as well, until a fixpoint.
  void close() {
    while (!pending.empty()) {
      auto [x, y] = pending.back();
      pending.pop_back();
      for (Elem a = 0; a < m.order(); ++a) {
        merge(m.product(a, x), m.product(a, y));
        merge(m.product(x, a), m.product(y, a));
      }
    }
  }

  Partition partition() {
    Partition p;
    p.cls.assign(m.order(), -1);
    std::vector<int> remap(m.order(), -1);
    for (Elem x = 0; x < m.order(); ++x) {
      const int root = find(static_cast<int>(x));
      if (remap[root] < 0) {
        remap[root] = p.count++;
      }
      p.cls[x] = remap[root];
    }
    return p;
  }
};

std::string partition_key(const Partition& p) {
  std::string key;
  key.reserve(p.cls.size() * 3);
  for (int c : p.cls) {
    key += std::to_string(c);
    key += ',';
  }
  return key;
}

}  // namespace

Partition principal_congruence(const FiniteMonoid& m, Elem x, Elem y) {
  PairCloser closer(m);
  closer.merge(x, y);
  closer.close();
  return closer.partition();
}

Partition congruence_join(const FiniteMonoid& m, const Partition& a, const Partition& b) {
  PairCloser closer(m);
  std::vector<int> first_a(a.count, -1), first_b(b.count, -1);
  for (Elem x = 0; x < m.order(); ++x) {
    if (first_a[a.cls[x]] < 0) {
      first_a[a.cls[x]] = static_cast<int>(x);
    } else {
      closer.merge(static_cast<Elem>(first_a[a.cls[x]]), x);
    }
    if (first_b[b.cls[x]] < 0) {
      first_b[b.cls[x]] = static_cast<int>(x);
    } else {
      closer.merge(static_cast<Elem>(first_b[b.cls[x]]), x);
    }
  }
  closer.close();
  return closer.partition();
}

std::vector<Partition> congruences_by_join_closure(const FiniteMonoid& m) {
  const std::size_t n = m.order();

  Partition equality;
  equality.cls.resize(n);
  for (Elem x = 0; x < n; ++x) {
    equality.cls[x] = static_cast<int>(x);
  }
  equality.count = static_cast<int>(n);

  std::vector<Partition> principals;
  std::unordered_set<std::string> principal_keys;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      Partition p = principal_congruence(m, x, y);
      if (principal_keys.insert(partition_key(p)).second) {
        principals.push_back(std::move(p));
      }
    }
  }

  std::vector<Partition> all;
  std::unordered_set<std::string> seen;
  auto add = [&](Partition p) -> bool {
    if (seen.insert(partition_key(p)).second) {
      all.push_back(std::move(p));
      return true;
    }
    return false;
  };
  add(equality);
  for (const Partition& p : principals) {
    add(p);
  }
  // Join closure: every congruence is the join of the principal congruences
  // of its pairs, so joining with principals until fixpoint reaches all of
  // them.
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const Partition& p : principals) {
      Partition j = congruence_join(m, all[i], p);
      add(std::move(j));
    }
  }
  return all;
}

CongruenceCounts count_congruences(const FiniteMonoid& m, unsigned bound) {
  require_bound(m, bound, "congruence enumeration");

  std::unordered_set<std::string> principal_keys;
  Partition equality;
  equality.cls.resize(m.order());
  for (Elem x = 0; x < m.order(); ++x) {
    equality.cls[x] = static_cast<int>(x);
  }
  equality.count = static_cast<int>(m.order());
  const std::string equality_key = partition_key(equality);

  for (Elem x = 0; x < m.order(); ++x) {
    for (Elem y = x + 1; y < m.order(); ++y) {
      std::string key = partition_key(principal_congruence(m, x, y));
      // The equality congruence is generated by no nontrivial pair, so it
      // can never appear here; counted separately below.
      principal_keys.insert(std::move(key));
    }
  }
  const std::vector<Partition> all = congruences_by_join_closure(m);
  return {all.size(), principal_keys.size()};
}

}  // namespace mlat
