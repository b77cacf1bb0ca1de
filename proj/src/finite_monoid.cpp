#include "mlat/finite_monoid.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace mlat {

namespace {

std::optional<Elem> find_identity(std::size_t n, const std::vector<Elem>& t) {
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem i = 0; i < n && ok; ++i) {
      ok = t[e * n + i] == i && t[i * n + e] == i;
    }
    if (ok) {
      return e;
    }
  }
  return std::nullopt;
}

void check_associativity(std::size_t n, const std::vector<Elem>& t) {
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      const Elem ij = t[i * n + j];
      for (Elem k = 0; k < n; ++k) {
        if (t[ij * n + k] != t[i * n + t[j * n + k]]) {
          std::ostringstream msg;
          msg << "not associative: (x" << i << " x" << j << ") x" << k
              << " = x" << t[ij * n + k] << " but x" << i << " (x" << j
              << " x" << k << ") = x" << t[i * n + t[j * n + k]];
          throw NotAssociative(i, j, k, msg.str());
        }
      }
    }
  }
}

}  // namespace

FiniteMonoid::FiniteMonoid(std::size_t order, std::vector<Elem> table,
                           std::optional<Elem> declared_identity,
                           std::vector<std::string> names) {
  if (order == 0) {
    throw MalformedTable("order must be positive");
  }
  if (table.size() != order * order) {
    std::ostringstream msg;
    msg << "table has " << table.size() << " entries, expected " << order * order;
    throw MalformedTable(msg.str());
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= order) {
      std::ostringstream msg;
      msg << "table entry " << table[i] << " at position " << i
          << " out of range [0, " << order << ")";
      throw MalformedTable(msg.str());
    }
  }
  if (!names.empty() && names.size() != order) {
    throw MalformedTable("names array length does not match order");
  }
  auto identity = find_identity(order, table);
  if (!identity) {
    throw NoIdentity("no element satisfies the identity law");
  }
  if (declared_identity && *declared_identity != *identity) {
    std::ostringstream msg;
    msg << "declared identity " << *declared_identity
        << " does not satisfy the identity law (actual identity: " << *identity << ")";
    throw NoIdentity(msg.str());
  }
  check_associativity(order, table);

  order_ = order;
  table_ = std::move(table);
  identity_ = *identity;
  names_ = std::move(names);
}

FiniteMonoid FiniteMonoid::trusted(std::size_t order, std::vector<Elem> table,
                                   std::vector<std::string> names) {
  FiniteMonoid m;
  m.order_ = order;
  m.table_ = std::move(table);
  m.names_ = std::move(names);
  auto identity = find_identity(order, m.table_);
  if (!identity) {
    throw NoIdentity("no element satisfies the identity law");
  }
  m.identity_ = *identity;
  return m;
}

std::string FiniteMonoid::element_name(Elem i) const {
  if (i < names_.size()) {
    return names_[i];
  }
  return std::to_string(i);
}

IndexSet idempotent_elements(const FiniteMonoid& m) {
  IndexSet out(m.order());
  for (Elem x = 0; x < m.order(); ++x) {
    if (m.product(x, x) == x) {
      out.set(x);
    }
  }
  return out;
}

IndexSet left_unit_elements(const FiniteMonoid& m) {
  IndexSet out(m.order());
  const Elem e = m.identity();
  for (Elem a = 0; a < m.order(); ++a) {
    for (Elem x = 0; x < m.order(); ++x) {
      if (m.product(a, x) == e) {
        out.set(x);
      }
    }
  }
  return out;
}

IndexSet right_unit_elements(const FiniteMonoid& m) {
  IndexSet out(m.order());
  const Elem e = m.identity();
  for (Elem x = 0; x < m.order(); ++x) {
    for (Elem a = 0; a < m.order(); ++a) {
      if (m.product(x, a) == e) {
        out.set(x);
      }
    }
  }
  return out;
}

IndexSet submonoid_closure(const FiniteMonoid& m, const IndexSet& generators) {
  IndexSet member(m.order());
  std::vector<Elem> elems;
  auto add = [&](Elem x) {
    if (!member.test(x)) {
      member.set(x);
      elems.push_back(x);
    }
  };
  add(m.identity());
  for (auto x = generators.find_first(); x != IndexSet::npos;
       x = generators.find_next(x)) {
    add(static_cast<Elem>(x));
  }
  // For each i, multiply with everything discovered up to and including i;
  // every ordered pair of closure elements is eventually tried.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Elem x = elems[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem y = elems[j];
      add(m.product(x, y));
      add(m.product(y, x));
    }
  }
  return member;
}

FiniteMonoid restrict_table(const FiniteMonoid& m, const IndexSet& subset,
                            std::vector<Elem>* map_out) {
  std::vector<Elem> to_parent;
  to_parent.reserve(subset.count());
  std::vector<Elem> to_sub(m.order(), 0);
  for (auto x = subset.find_first(); x != IndexSet::npos; x = subset.find_next(x)) {
    to_sub[x] = static_cast<Elem>(to_parent.size());
    to_parent.push_back(static_cast<Elem>(x));
  }
  if (!subset.test(m.identity())) {
    throw NotClosed("subset does not contain the identity");
  }
  const std::size_t k = to_parent.size();
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Elem p = m.product(to_parent[i], to_parent[j]);
      if (!subset.test(p)) {
        std::ostringstream msg;
        msg << "subset not closed: x" << to_parent[i] << " * x" << to_parent[j]
            << " = x" << p << " escapes";
        throw NotClosed(msg.str());
      }
      table[i * k + j] = to_sub[p];
    }
  }
  std::vector<std::string> names;
  if (m.has_names()) {
    names.reserve(k);
    for (Elem p : to_parent) {
      names.push_back(m.element_name(p));
    }
  }
  if (map_out != nullptr) {
    *map_out = to_parent;
  }
  return FiniteMonoid::trusted(k, std::move(table), std::move(names));
}

FiniteMonoid direct_product_table(const FiniteMonoid& a, const FiniteMonoid& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Elem ia = static_cast<Elem>(i / nb);
    const Elem ib = static_cast<Elem>(i % nb);
    for (std::size_t j = 0; j < n; ++j) {
      const Elem ja = static_cast<Elem>(j / nb);
      const Elem jb = static_cast<Elem>(j % nb);
      table[i * n + j] = a.product(ia, ja) * static_cast<Elem>(nb) + b.product(ib, jb);
    }
  }
  std::vector<std::string> names;
  if (a.has_names() || b.has_names()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("(" + a.element_name(static_cast<Elem>(i / nb)) + "," +
                      b.element_name(static_cast<Elem>(i % nb)) + ")");
    }
  }
  return FiniteMonoid::trusted(n, std::move(table), std::move(names));
}

FiniteMonoid adjoin_zero_table(const FiniteMonoid& m) {
  const std::size_t n = m.order();
  const std::size_t n1 = n + 1;
  std::vector<Elem> table(n1 * n1, static_cast<Elem>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n1 + j] = m.product(static_cast<Elem>(i), static_cast<Elem>(j));
    }
  }
  std::vector<std::string> names;
  if (m.has_names()) {
    names = m.names();
    names.push_back("0");
  }
  return FiniteMonoid::trusted(n1, std::move(table), std::move(names));
}

FiniteMonoid trivial_monoid() {
  return FiniteMonoid::trusted(1, {0});
}

FiniteMonoid cyclic_group(unsigned k) {
  if (k == 0) {
    throw BadParams("cyclic group order must be positive");
  }
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  for (Elem i = 0; i < k; ++i) {
    for (Elem j = 0; j < k; ++j) {
      table[i * k + j] = (i + j) % k;
    }
  }
  return FiniteMonoid::trusted(k, std::move(table));
}

FiniteMonoid chain_semilattice(unsigned k) {
  if (k == 0) {
    throw BadParams("chain length must be positive");
  }
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  for (Elem i = 0; i < k; ++i) {
    for (Elem j = 0; j < k; ++j) {
      table[i * k + j] = std::max(i, j);
    }
  }
  return FiniteMonoid::trusted(k, std::move(table));
}

namespace {

// Self-maps of {0..n-1} encoded as sum f(i) * n^i.
std::vector<Elem> decode_map(Elem code, unsigned n) {
  std::vector<Elem> f(n);
  for (unsigned i = 0; i < n; ++i) {
    f[i] = code % n;
    code /= n;
  }
  return f;
}

std::string map_name(const std::vector<Elem>& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) {
      s += ' ';
    }
    s += std::to_string(f[i]);
  }
  s += ']';
  return s;
}

}  // namespace

FiniteMonoid transformation_monoid(unsigned n, unsigned bound) {
  if (n == 0) {
    throw BadParams("transformation monoid needs at least one point");
  }
  if (n > bound) {
    std::ostringstream msg;
    msg << "transformation monoid on " << n << " points exceeds bound " << bound;
    throw BoundExceeded(msg.str());
  }
  std::size_t count = 1;
  for (unsigned i = 0; i < n; ++i) {
    count *= n;
  }
  std::vector<std::vector<Elem>> maps(count);
  std::vector<std::string> names(count);
  for (std::size_t c = 0; c < count; ++c) {
    maps[c] = decode_map(static_cast<Elem>(c), n);
    names[c] = map_name(maps[c]);
  }
  std::vector<Elem> table(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      // f*g applies g first: (f*g)(x) = f(g(x)).
      Elem code = 0;
      Elem pow = 1;
      for (unsigned x = 0; x < n; ++x) {
        code += maps[i][maps[j][x]] * pow;
        pow *= n;
      }
      table[i * count + j] = code;
    }
  }
  return FiniteMonoid::trusted(count, std::move(table), std::move(names));
}

FiniteMonoid singular_plus_identity(unsigned n, unsigned bound) {
  FiniteMonoid full = transformation_monoid(n, bound);
  IndexSet keep(full.order());
  for (Elem c = 0; c < full.order(); ++c) {
    std::vector<Elem> f = decode_map(c, n);
    std::vector<bool> hit(n, false);
    for (Elem v : f) {
      hit[v] = true;
    }
    bool bijective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    if (!bijective) {
      keep.set(c);
    }
  }
  keep.set(full.identity());
  return restrict_table(full, keep);
}

FiniteMonoid load_finite_monoid(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedTable(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("table")) {
    throw MalformedTable("document must be an object with `order` and `table`");
  }
  if (!doc["order"].is_number_integer() || doc["order"].get<long long>() <= 0) {
    throw MalformedTable("`order` must be a positive integer");
  }
  const std::size_t order = doc["order"].get<std::size_t>();
  if (!doc["table"].is_array()) {
    throw MalformedTable("`table` must be a flat row-major array");
  }
  std::vector<Elem> table;
  table.reserve(doc["table"].size());
  for (const auto& v : doc["table"]) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw MalformedTable("table entries must be non-negative integers");
    }
    table.push_back(v.get<Elem>());
  }
  std::optional<Elem> identity;
  if (doc.contains("identity")) {
    identity = doc["identity"].get<Elem>();
    if (*identity >= order) {
      throw MalformedTable("`identity` index out of range");
    }
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    for (const auto& v : doc["names"]) {
      names.push_back(v.get<std::string>());
    }
  }
  return FiniteMonoid(order, std::move(table), identity, std::move(names));
}

std::string finite_monoid_to_json(const FiniteMonoid& m) {
  nlohmann::ordered_json doc;
  doc["order"] = m.order();
  doc["table"] = m.table();
  doc["identity"] = m.identity();
  if (m.has_names()) {
    doc["names"] = m.names();
  }
  return doc.dump();
}

}  // namespace mlat
