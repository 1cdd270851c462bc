#pragma once

// Finite posets and monotone maps. A PosetObject stores its full order
// relation as a flattened size x size boolean matrix; it must be reflexive,
// antisymmetric and transitive. Monotone maps are plain tables validated
// against the two orders.
//
// Canonical encodings:
//   product      pairs row-major, ordered componentwise
//   exponential  carrier enumerates the monotone tables k -> x in
//                lexicographic order; element i is the i-th table
//   pushout      set-level classes by union-find, then the induced preorder
//                is closed transitively and its strongly connected components
//                are collapsed; final classes ordered by ascending minimal
//                representative in the disjoint union (first foot first)
//   pullback     order pairs (b,c) with f(b)=g(c), ascending row-major,
//                ordered componentwise

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "thc/error.hpp"
#include "thc/finset.hpp"

namespace thc {

struct PosetObject {
  int size = 0;
  std::vector<std::uint8_t> leq;  // row-major: leq[i*size+j] iff i <= j

  bool le(int i, int j) const { return leq[static_cast<std::size_t>(i) * size + j] != 0; }

  friend auto operator<=>(const PosetObject&, const PosetObject&) = default;
};

inline std::string describe(const PosetObject& p) {
  std::ostringstream os;
  os << "poset" << p.size << "{";
  bool first = true;
  for (int i = 0; i < p.size; ++i)
    for (int j = 0; j < p.size; ++j)
      if (i != j && p.le(i, j)) {
        if (!first) os << ' ';
        os << i << "<=" << j;
        first = false;
      }
  os << '}';
  return os.str();
}

// Builds a poset from the given relation pairs: reflexivity is implied and
// the transitive closure is taken; antisymmetry failures are rejected.
inline PosetObject make_poset(int size, const std::vector<std::pair<int, int>>& pairs) {
  require(size >= 0, "poset-size", "poset size must be non-negative");
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(size) * size, 0);
  auto at = [&](int i, int j) -> std::uint8_t& {
    return leq[static_cast<std::size_t>(i) * size + j];
  };
  for (int i = 0; i < size; ++i) at(i, i) = 1;
  for (auto [i, j] : pairs) {
    require(0 <= i && i < size && 0 <= j && j < size, "poset-pair-range",
            "relation pair (" + std::to_string(i) + "," + std::to_string(j) +
                ") out of range for size " + std::to_string(size));
    at(i, j) = 1;
  }
  for (int k = 0; k < size; ++k)
    for (int i = 0; i < size; ++i)
      if (at(i, k))
        for (int j = 0; j < size; ++j)
          if (at(k, j)) at(i, j) = 1;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      require(!(at(i, j) && at(j, i)), "poset-antisymmetry",
              "relation has a cycle through " + std::to_string(i) + " and " + std::to_string(j));
  return PosetObject{size, std::move(leq)};
}

inline PosetObject chain(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return make_poset(n, pairs);
}

inline PosetObject antichain(int n) { return make_poset(n, {}); }

struct MonotoneMap {
  PosetObject dom;
  PosetObject cod;
  std::vector<int> table;
  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;
};

inline std::string describe(const MonotoneMap& f) {
  std::ostringstream os;
  os << describe(f.dom) << "->" << describe(f.cod) << " [";
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    if (i) os << ' ';
    os << f.table[i];
  }
  os << ']';
  return os.str();
}

inline MonotoneMap make_monotone(PosetObject dom, PosetObject cod, std::vector<int> table) {
  require(static_cast<int>(table.size()) == dom.size, "morphism-table-length",
          "table has " + std::to_string(table.size()) + " entries for domain of size " +
              std::to_string(dom.size));
  for (int v : table)
    require(0 <= v && v < cod.size, "morphism-table-range",
            "table entry " + std::to_string(v) + " out of range for codomain of size " +
                std::to_string(cod.size));
  for (int i = 0; i < dom.size; ++i)
    for (int j = 0; j < dom.size; ++j)
      if (dom.le(i, j))
        require(cod.le(table[i], table[j]), "not-monotone",
                "table is not monotone: " + std::to_string(i) + "<=" + std::to_string(j) +
                    " but image values " + std::to_string(table[i]) + "," +
                    std::to_string(table[j]) + " are not ordered");
  return MonotoneMap{std::move(dom), std::move(cod), std::move(table)};
}

inline MonotoneMap identity(const PosetObject& x) {
  std::vector<int> t(static_cast<std::size_t>(x.size));
  for (int i = 0; i < x.size; ++i) t[i] = i;
  return MonotoneMap{x, x, std::move(t)};
}

inline MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  require(f.cod == g.dom, "compose-mismatch",
          "cannot compose " + describe(f) + " then " + describe(g) +
              ": middle posets differ");
  std::vector<int> t(f.table.size());
  for (std::size_t i = 0; i < f.table.size(); ++i) t[i] = g.table[f.table[i]];
  return MonotoneMap{f.dom, g.cod, std::move(t)};
}

inline MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g, const MonotoneMap& h) {
  return compose(compose(f, g), h);
}

// All monotone tables dom -> cod in lexicographic order, generated by
// backtracking: entry i is constrained against every earlier entry that is
// comparable to i.
inline std::vector<std::vector<int>> monotone_tables(const PosetObject& dom,
                                                     const PosetObject& cod) {
  std::vector<std::vector<int>> out;
  if (dom.size == 0) {
    out.push_back({});
    return out;
  }
  if (cod.size == 0) return out;
  std::vector<int> t(static_cast<std::size_t>(dom.size), 0);
  std::uint64_t guard = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == dom.size) {
      require(++guard <= (1u << 21), "hom-too-large",
              "monotone map set " + describe(dom) + " -> " + describe(cod) + " too large");
      out.push_back(t);
      return;
    }
    for (int v = 0; v < cod.size; ++v) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (dom.le(j, i) && !cod.le(t[j], v)) ok = false;
        if (dom.le(i, j) && !cod.le(v, t[j])) ok = false;
      }
      if (!ok) continue;
      t[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<MonotoneMap> hom(const PosetObject& x, const PosetObject& y) {
  std::vector<MonotoneMap> out;
  for (auto& t : monotone_tables(x, y)) out.push_back(MonotoneMap{x, y, std::move(t)});
  return out;
}

// Product poset on row-major pairs, ordered componentwise.
inline PosetObject poset_product(const PosetObject& x, const PosetObject& y) {
  int n = x.size * y.size;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < y.size; ++b)
      for (int c = 0; c < x.size; ++c)
        for (int d = 0; d < y.size; ++d) {
          int i = pair_index(a, b, y.size);
          int j = pair_index(c, d, y.size);
          leq[static_cast<std::size_t>(i) * n + j] = x.le(a, c) && y.le(b, d);
        }
  return PosetObject{n, std::move(leq)};
}

inline MonotoneMap poset_product_map(const MonotoneMap& f, const MonotoneMap& g) {
  PosetObject d = poset_product(f.dom, g.dom);
  PosetObject c = poset_product(f.cod, g.cod);
  std::vector<int> t(static_cast<std::size_t>(d.size));
  for (int a = 0; a < f.dom.size; ++a)
    for (int b = 0; b < g.dom.size; ++b)
      t[pair_index(a, b, g.dom.size)] = pair_index(f.table[a], g.table[b], g.cod.size);
  return MonotoneMap{std::move(d), std::move(c), std::move(t)};
}

// Exponential poset: monotone tables k -> x under the pointwise order. The
// carrier's element i is tables[i]; tables are in lexicographic order.
struct PosetExponential {
  PosetObject object;
  std::vector<std::vector<int>> tables;
};

inline PosetExponential poset_exponential(const PosetObject& k, const PosetObject& x) {
  std::vector<std::vector<int>> tables = monotone_tables(k, x);
  int n = static_cast<int>(tables.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool le = true;
      for (int e = 0; e < k.size && le; ++e) le = x.le(tables[i][e], tables[j][e]);
      leq[static_cast<std::size_t>(i) * n + j] = le;
    }
  return PosetExponential{PosetObject{n, std::move(leq)}, std::move(tables)};
}

inline int monotone_rank(const PosetExponential& e, const std::vector<int>& table) {
  auto it = std::lower_bound(e.tables.begin(), e.tables.end(), table);
  require(it != e.tables.end() && *it == table, "exponential-rank",
          "table is not an element of the exponential (not monotone?)");
  return static_cast<int>(it - e.tables.begin());
}

inline MonotoneMap poset_curry(const PosetObject& a, const PosetObject& k, const MonotoneMap& f) {
  require(f.dom == poset_product(a, k), "curry-shape",
          "domain of " + describe(f) + " is not the product of " + describe(a) + " and " +
              describe(k));
  PosetExponential e = poset_exponential(k, f.cod);
  std::vector<int> t(static_cast<std::size_t>(a.size));
  std::vector<int> slice(static_cast<std::size_t>(k.size));
  for (int i = 0; i < a.size; ++i) {
    for (int j = 0; j < k.size; ++j) slice[j] = f.table[pair_index(i, j, k.size)];
    t[i] = monotone_rank(e, slice);
  }
  return make_monotone(a, e.object, std::move(t));
}

inline MonotoneMap poset_uncurry(const PosetObject& a, const PosetObject& k, const PosetObject& b,
                                 const MonotoneMap& n) {
  PosetExponential e = poset_exponential(k, b);
  require(n.dom == a && n.cod == e.object, "uncurry-shape",
          "map " + describe(n) + " is not of shape a -> b^k");
  PosetObject p = poset_product(a, k);
  std::vector<int> t(static_cast<std::size_t>(p.size));
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < k.size; ++j) t[pair_index(i, j, k.size)] = e.tables[n.table[i]][j];
  return make_monotone(std::move(p), b, std::move(t));
}

struct PosetPushout {
  PosetObject object;
  MonotoneMap inj_first;
  MonotoneMap inj_second;
  std::vector<int> class_of;  // disjoint-union element -> final class index
};

// Pushout in posets: the set-level quotient may only be a preorder, so the
// strongly connected components of its transitive closure are collapsed.
inline PosetPushout poset_pushout(const MonotoneMap& f, const MonotoneMap& g) {
  require(f.dom == g.dom, "pushout-mismatch",
          "pushout legs must share their domain: " + describe(f) + " vs " + describe(g));
  int nb = f.cod.size;
  int nc = g.cod.size;
  detail::UnionFind uf(nb + nc);
  for (int a = 0; a < f.dom.size; ++a) uf.unite(f.table[a], nb + g.table[a]);
  std::vector<int> set_class(static_cast<std::size_t>(nb + nc), -1);
  std::vector<int> index_of_root(static_cast<std::size_t>(nb + nc), -1);
  int nset = 0;
  for (int e = 0; e < nb + nc; ++e) {
    int r = uf.find(e);
    if (index_of_root[r] < 0) index_of_root[r] = nset++;
    set_class[e] = index_of_root[r];
  }
  // preorder generated by the images of both foot orders
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(nset) * nset, 0);
  auto r_at = [&](int i, int j) -> std::uint8_t& {
    return reach[static_cast<std::size_t>(i) * nset + j];
  };
  for (int i = 0; i < nset; ++i) r_at(i, i) = 1;
  for (int b = 0; b < nb; ++b)
    for (int b2 = 0; b2 < nb; ++b2)
      if (f.cod.le(b, b2)) r_at(set_class[b], set_class[b2]) = 1;
  for (int c = 0; c < nc; ++c)
    for (int c2 = 0; c2 < nc; ++c2)
      if (g.cod.le(c, c2)) r_at(set_class[nb + c], set_class[nb + c2]) = 1;
  for (int k = 0; k < nset; ++k)
    for (int i = 0; i < nset; ++i)
      if (r_at(i, k))
        for (int j = 0; j < nset; ++j)
          if (r_at(k, j)) r_at(i, j) = 1;
  // collapse mutually reachable set-classes
  std::vector<int> scc(static_cast<std::size_t>(nset), -1);
  // final classes keyed by the minimal disjoint-union representative
  std::vector<int> min_rep;
  std::vector<int> scc_of_set(static_cast<std::size_t>(nset), -1);
  for (int e = 0; e < nb + nc; ++e) {
    int s = set_class[e];
    if (scc_of_set[s] >= 0) continue;
    // look for an earlier set-class in the same scc
    bool merged = false;
    for (int s2 = 0; s2 < nset && !merged; ++s2)
      if (scc_of_set[s2] >= 0 && r_at(s, s2) && r_at(s2, s)) {
        scc_of_set[s] = scc_of_set[s2];
        merged = true;
      }
    if (!merged) {
      scc_of_set[s] = static_cast<int>(min_rep.size());
      min_rep.push_back(e);
    }
  }
  int nfinal = static_cast<int>(min_rep.size());
  std::vector<int> class_of(static_cast<std::size_t>(nb + nc));
  for (int e = 0; e < nb + nc; ++e) class_of[e] = scc_of_set[set_class[e]];
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(nfinal) * nfinal, 0);
  for (int i = 0; i < nset; ++i)
    for (int j = 0; j < nset; ++j)
      if (r_at(i, j)) leq[static_cast<std::size_t>(scc_of_set[i]) * nfinal + scc_of_set[j]] = 1;
  PosetObject obj{nfinal, std::move(leq)};
  std::vector<int> tb(static_cast<std::size_t>(nb)), tc(static_cast<std::size_t>(nc));
  for (int b = 0; b < nb; ++b) tb[b] = class_of[b];
  for (int c = 0; c < nc; ++c) tc[c] = class_of[nb + c];
  MonotoneMap ib = make_monotone(f.cod, obj, std::move(tb));
  MonotoneMap ic = make_monotone(g.cod, obj, std::move(tc));
  return PosetPushout{std::move(obj), std::move(ib), std::move(ic), std::move(class_of)};
}

inline MonotoneMap poset_copair(const PosetPushout& po, const MonotoneMap& from_first,
                                const MonotoneMap& from_second) {
  require(from_first.dom == po.inj_first.dom && from_second.dom == po.inj_second.dom,
          "copair-shape", "cocone legs do not match the pushout feet");
  require(from_first.cod == from_second.cod, "copair-shape",
          "cocone legs have different codomains");
  int nb = from_first.dom.size;
  std::vector<int> t(static_cast<std::size_t>(po.object.size), -1);
  auto put = [&](int element, int value) {
    int cls = po.class_of[element];
    if (t[cls] < 0)
      t[cls] = value;
    else
      require(t[cls] == value, "copair-cocone",
              "legs disagree on elements identified by the pushout");
  };
  for (int b = 0; b < nb; ++b) put(b, from_first.table[b]);
  for (int c = 0; c < from_second.dom.size; ++c) put(nb + c, from_second.table[c]);
  return make_monotone(po.object, from_first.cod, std::move(t));
}

struct PosetPullback {
  PosetObject object;
  MonotoneMap proj_first;
  MonotoneMap proj_second;
  std::vector<std::pair<int, int>> pairs;
};

inline PosetPullback poset_pullback(const MonotoneMap& f, const MonotoneMap& g) {
  require(f.cod == g.cod, "pullback-mismatch",
          "pullback legs must share their codomain: " + describe(f) + " vs " + describe(g));
  std::vector<std::pair<int, int>> pairs;
  for (int b = 0; b < f.dom.size; ++b)
    for (int c = 0; c < g.dom.size; ++c)
      if (f.table[b] == g.table[c]) pairs.emplace_back(b, c);
  int n = static_cast<int>(pairs.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[static_cast<std::size_t>(i) * n + j] =
          f.dom.le(pairs[i].first, pairs[j].first) && g.dom.le(pairs[i].second, pairs[j].second);
  PosetObject obj{n, std::move(leq)};
  std::vector<int> tb(pairs.size()), tc(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    tb[i] = pairs[i].first;
    tc[i] = pairs[i].second;
  }
  MonotoneMap pb = make_monotone(obj, f.dom, std::move(tb));
  MonotoneMap pc = make_monotone(obj, g.dom, std::move(tc));
  return PosetPullback{std::move(obj), std::move(pb), std::move(pc), std::move(pairs)};
}

inline MonotoneMap poset_pair_into(const PosetPullback& pb, const MonotoneMap& to_first,
                                   const MonotoneMap& to_second) {
  require(to_first.dom == to_second.dom, "pair-shape", "cone legs have different domains");
  require(to_first.cod == pb.proj_first.cod && to_second.cod == pb.proj_second.cod, "pair-shape",
          "cone legs do not match the pullback feet");
  std::vector<int> t(static_cast<std::size_t>(to_first.dom.size));
  for (int z = 0; z < to_first.dom.size; ++z) {
    std::pair<int, int> want{to_first.table[z], to_second.table[z]};
    auto it = std::lower_bound(pb.pairs.begin(), pb.pairs.end(), want);
    require(it != pb.pairs.end() && *it == want, "pair-cone",
            "legs do not form a cone over the pullback at element " + std::to_string(z));
    t[z] = static_cast<int>(it - pb.pairs.begin());
  }
  return make_monotone(to_first.dom, pb.object, std::move(t));
}

struct PosetCat {
  using Object = PosetObject;
  using Morphism = MonotoneMap;
  using PushoutResult = PosetPushout;
  using PullbackResult = PosetPullback;

  static Object dom(const Morphism& m) { return m.dom; }
  static Object cod(const Morphism& m) { return m.cod; }
  static Morphism identity(const Object& x) { return thc::identity(x); }
  static Morphism compose(const Morphism& f, const Morphism& g) { return thc::compose(f, g); }
  static std::vector<Morphism> hom(const Object& x, const Object& y) { return thc::hom(x, y); }

  static bool is_iso(const Morphism& m) {
    if (m.dom.size != m.cod.size) return false;
    std::vector<char> seen(static_cast<std::size_t>(m.cod.size), 0);
    for (int v : m.table) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    for (int i = 0; i < m.dom.size; ++i)
      for (int j = 0; j < m.dom.size; ++j)
        if (m.dom.le(i, j) != m.cod.le(m.table[i], m.table[j])) return false;
    return true;
  }

  static PushoutResult pushout(const Morphism& f, const Morphism& g) {
    return poset_pushout(f, g);
  }
  static Morphism copair(const PushoutResult& po, const Morphism& a, const Morphism& b) {
    return poset_copair(po, a, b);
  }
  static PullbackResult pullback(const Morphism& f, const Morphism& g) {
    return poset_pullback(f, g);
  }
  static Morphism pair_into(const PullbackResult& pb, const Morphism& a, const Morphism& b) {
    return poset_pair_into(pb, a, b);
  }

  // First order-isomorphism in lexicographic permutation order, if any.
  static std::optional<Morphism> find_iso(const Object& x, const Object& y) {
    if (x.size != y.size) return std::nullopt;
    std::vector<int> perm(static_cast<std::size_t>(x.size));
    for (int i = 0; i < x.size; ++i) perm[i] = i;
    do {
      bool ok = true;
      for (int i = 0; i < x.size && ok; ++i)
        for (int j = 0; j < x.size && ok; ++j)
          if (x.le(i, j) != y.le(perm[i], perm[j])) ok = false;
      if (ok) return MonotoneMap{x, y, perm};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
  }

  static std::string describe(const Morphism& m) { return thc::describe(m); }
  static std::string describe_object(const Object& x) { return thc::describe(x); }
};

}  // namespace thc
