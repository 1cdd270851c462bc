#pragma once

// Finite sets and total maps, with deterministic encodings for every
// constructed object. Objects are skeletal: an object is its size and the
// elements are 0..size-1. Encodings are normative; all downstream results
// (reports, golden files) depend on them bit-for-bit:
//   product    (a,b)        ->  a * second_size + b          (row-major)
//   exponential table t:k->x ->  sum t[i] * x^(k-1-i)        (lex rank, 0^0=1)
//   pushout    classes by union-find over the disjoint union (first leg's
//              codomain first), class indices ascending in the minimal
//              representative
//   pullback   pairs (b,c) with f(b)=g(c), ascending row-major in (b,c)

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "thc/error.hpp"

namespace thc {

struct FinObject {
  int size = 0;
  friend constexpr auto operator<=>(const FinObject&, const FinObject&) = default;
};

struct FinMorphism {
  FinObject dom;
  FinObject cod;
  std::vector<int> table;  // table[i] in [0, cod.size)
  friend auto operator<=>(const FinMorphism&, const FinMorphism&) = default;
};

inline std::string describe(const FinObject& x) { return std::to_string(x.size); }

inline std::string describe(const FinMorphism& f) {
  std::ostringstream os;
  os << f.dom.size << "->" << f.cod.size << " [";
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    if (i) os << ' ';
    os << f.table[i];
  }
  os << ']';
  return os.str();
}

inline FinMorphism make_fin_morphism(FinObject dom, FinObject cod, std::vector<int> table) {
  require(static_cast<int>(table.size()) == dom.size, "morphism-table-length",
          "table has " + std::to_string(table.size()) + " entries for domain of size " +
              std::to_string(dom.size));
  for (int v : table)
    require(0 <= v && v < cod.size, "morphism-table-range",
            "table entry " + std::to_string(v) + " out of range for codomain of size " +
                std::to_string(cod.size));
  return FinMorphism{dom, cod, std::move(table)};
}

inline FinMorphism identity(FinObject x) {
  std::vector<int> t(x.size);
  for (int i = 0; i < x.size; ++i) t[i] = i;
  return FinMorphism{x, x, std::move(t)};
}

// Diagrammatic order: compose(f, g) is "f then g".
inline FinMorphism compose(const FinMorphism& f, const FinMorphism& g) {
  require(f.cod == g.dom, "compose-mismatch",
          "cannot compose " + describe(f) + " then " + describe(g) + ": middle objects " +
              describe(f.cod) + " and " + describe(g.dom) + " differ");
  std::vector<int> t(f.table.size());
  for (std::size_t i = 0; i < f.table.size(); ++i) t[i] = g.table[f.table[i]];
  return FinMorphism{f.dom, g.cod, std::move(t)};
}

inline FinMorphism compose(const FinMorphism& f, const FinMorphism& g, const FinMorphism& h) {
  return compose(compose(f, g), h);
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  require(!__builtin_mul_overflow(a, b, &r), "count-overflow",
          "intermediate count exceeds 64 bits");
  return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  require(!__builtin_add_overflow(a, b, &r), "count-overflow",
          "intermediate count exceeds 64 bits");
  return r;
}

// Integer power with 0^0 = 1.
inline std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (; exp > 0; --exp) r = checked_mul(r, base);
  return r;
}

// All maps x -> y in lexicographic table order. Enumeration index equals the
// exponential rank of the table, so hom(k, x)[r] decodes rank r.
inline std::vector<FinMorphism> hom(FinObject x, FinObject y) {
  if (y.size == 0) {
    if (x.size == 0) return {FinMorphism{x, y, {}}};
    return {};
  }
  std::uint64_t total = ipow(static_cast<std::uint64_t>(y.size), static_cast<std::uint64_t>(x.size));
  require(total <= (1u << 21), "hom-too-large",
          "hom set " + describe(x) + " -> " + describe(y) + " has " + std::to_string(total) +
              " elements; refusing to materialize");
  std::vector<FinMorphism> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> t(x.size, 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    out.push_back(FinMorphism{x, y, t});
    for (int i = x.size - 1; i >= 0; --i) {
      if (++t[i] < y.size) break;
      t[i] = 0;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructed objects and their decodings.

struct PairDecoding {
  int first_size = 0;
  int second_size = 0;
};

struct FunctionDecoding {
  int base_size = 0;   // size of the exponent object k
  int value_size = 0;  // size of the value object x
};

struct PushoutDecoding {
  int first_size = 0;                 // size of the first leg's codomain
  int second_size = 0;                // size of the second leg's codomain
  std::vector<int> class_of;          // disjoint-union element -> class index
};

struct PullbackDecoding {
  std::vector<std::pair<int, int>> pairs;  // ascending row-major
};

using Decoding = std::variant<PairDecoding, FunctionDecoding, PushoutDecoding, PullbackDecoding>;

struct ConstructedObject {
  FinObject carrier;
  Decoding decoding;
};

inline constexpr int pair_index(int a, int b, int second_size) { return a * second_size + b; }

inline constexpr std::pair<int, int> pair_at(int index, int second_size) {
  return {index / second_size, index % second_size};
}

inline ConstructedObject product(FinObject x, FinObject y) {
  long long n = static_cast<long long>(x.size) * y.size;
  require(n <= std::numeric_limits<int>::max(), "object-too-large",
          "product of sizes " + describe(x) + " and " + describe(y) + " does not fit an int");
  return {FinObject{static_cast<int>(n)}, PairDecoding{x.size, y.size}};
}

// f x g acting on row-major pairs.
inline FinMorphism product_map(const FinMorphism& f, const FinMorphism& g) {
  ConstructedObject d = product(f.dom, g.dom);
  ConstructedObject c = product(f.cod, g.cod);
  std::vector<int> t(static_cast<std::size_t>(d.carrier.size));
  for (int a = 0; a < f.dom.size; ++a)
    for (int b = 0; b < g.dom.size; ++b)
      t[pair_index(a, b, g.dom.size)] = pair_index(f.table[a], g.table[b], g.cod.size);
  return FinMorphism{d.carrier, c.carrier, std::move(t)};
}

inline ConstructedObject exponential(FinObject k, FinObject x) {
  std::uint64_t n = ipow(static_cast<std::uint64_t>(x.size), static_cast<std::uint64_t>(k.size));
  require(n <= static_cast<std::uint64_t>(std::numeric_limits<int>::max()), "object-too-large",
          "exponential " + describe(x) + "^" + describe(k) + " does not fit an int");
  return {FinObject{static_cast<int>(n)}, FunctionDecoding{k.size, x.size}};
}

inline int function_rank(const std::vector<int>& table, int value_size) {
  long long r = 0;
  for (int v : table) r = r * value_size + v;
  return static_cast<int>(r);
}

inline std::vector<int> function_table(int rank, int base_size, int value_size) {
  std::vector<int> t(static_cast<std::size_t>(base_size));
  for (int i = base_size - 1; i >= 0; --i) {
    t[i] = rank % value_size;
    rank /= value_size;
  }
  return t;
}

// curry(a, k, f): transpose of f: a x k -> b to a -> b^k.
inline FinMorphism curry(FinObject a, FinObject k, const FinMorphism& f) {
  require(f.dom.size == a.size * k.size, "curry-shape",
          "domain of " + describe(f) + " is not the product of " + describe(a) + " and " +
              describe(k));
  ConstructedObject e = exponential(k, f.cod);
  std::vector<int> t(static_cast<std::size_t>(a.size));
  std::vector<int> slice(static_cast<std::size_t>(k.size));
  for (int i = 0; i < a.size; ++i) {
    for (int j = 0; j < k.size; ++j) slice[j] = f.table[pair_index(i, j, k.size)];
    t[i] = function_rank(slice, f.cod.size);
  }
  return FinMorphism{a, e.carrier, std::move(t)};
}

inline FinMorphism uncurry(FinObject a, FinObject k, FinObject b, const FinMorphism& n) {
  require(n.dom == a, "uncurry-shape",
          "domain of " + describe(n) + " is not " + describe(a));
  ConstructedObject e = exponential(k, b);
  require(n.cod == e.carrier, "uncurry-shape",
          "codomain of " + describe(n) + " is not the exponential " + describe(b) + "^" +
              describe(k));
  ConstructedObject p = product(a, k);
  std::vector<int> t(static_cast<std::size_t>(p.carrier.size));
  for (int i = 0; i < a.size; ++i) {
    std::vector<int> slice = function_table(n.table[i], k.size, b.size);
    for (int j = 0; j < k.size; ++j) t[pair_index(i, j, k.size)] = slice[j];
  }
  return FinMorphism{p.carrier, b, std::move(t)};
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];  // path compression
      i = parent[i];
    }
    return i;
  }

  void unite(int i, int j) {
    i = find(i);
    j = find(j);
    if (i != j) parent[std::max(i, j)] = std::min(i, j);
  }
};

}  // namespace detail

struct Pushout {
  ConstructedObject object;
  FinMorphism inj_first;   // cod(f) -> P
  FinMorphism inj_second;  // cod(g) -> P
};

// Pushout of the span cod(f) <- dom -> cod(g). Classes are indexed by the
// ascending minimal representative in the disjoint union, cod(f) first.
inline Pushout pushout(const FinMorphism& f, const FinMorphism& g) {
  require(f.dom == g.dom, "pushout-mismatch",
          "pushout legs must share their domain: " + describe(f) + " vs " + describe(g));
  int nb = f.cod.size;
  int nc = g.cod.size;
  detail::UnionFind uf(nb + nc);
  for (int a = 0; a < f.dom.size; ++a) uf.unite(f.table[a], nb + g.table[a]);
  std::vector<int> class_of(static_cast<std::size_t>(nb + nc), -1);
  std::vector<int> index_of_root(static_cast<std::size_t>(nb + nc), -1);
  int next = 0;
  for (int e = 0; e < nb + nc; ++e) {
    int r = uf.find(e);
    if (index_of_root[r] < 0) index_of_root[r] = next++;
    class_of[e] = index_of_root[r];
  }
  FinObject carrier{next};
  std::vector<int> tb(static_cast<std::size_t>(nb)), tc(static_cast<std::size_t>(nc));
  for (int b = 0; b < nb; ++b) tb[b] = class_of[b];
  for (int c = 0; c < nc; ++c) tc[c] = class_of[nb + c];
  return Pushout{{carrier, PushoutDecoding{nb, nc, std::move(class_of)}},
                 FinMorphism{f.cod, carrier, std::move(tb)},
                 FinMorphism{g.cod, carrier, std::move(tc)}};
}

// The unique map out of a pushout determined by a cocone. Rejects inputs
// that do not agree on identified elements.
inline FinMorphism copair(const Pushout& po, const FinMorphism& from_first,
                          const FinMorphism& from_second) {
  const auto& dec = std::get<PushoutDecoding>(po.object.decoding);
  require(from_first.dom.size == dec.first_size && from_second.dom.size == dec.second_size,
          "copair-shape",
          "cocone legs " + describe(from_first) + ", " + describe(from_second) +
              " do not match the pushout feet");
  require(from_first.cod == from_second.cod, "copair-shape",
          "cocone legs " + describe(from_first) + " and " + describe(from_second) +
              " have different codomains");
  std::vector<int> t(static_cast<std::size_t>(po.object.carrier.size), -1);
  auto put = [&](int element, int value) {
    int cls = dec.class_of[element];
    if (t[cls] < 0)
      t[cls] = value;
    else
      require(t[cls] == value, "copair-cocone",
              "legs disagree on elements identified by the pushout");
  };
  for (int b = 0; b < dec.first_size; ++b) put(b, from_first.table[b]);
  for (int c = 0; c < dec.second_size; ++c) put(dec.first_size + c, from_second.table[c]);
  return FinMorphism{po.object.carrier, from_first.cod, std::move(t)};
}

struct Pullback {
  ConstructedObject object;
  FinMorphism proj_first;   // Q -> dom(f)
  FinMorphism proj_second;  // Q -> dom(g)
};

// Pullback of the cospan dom(f) -> cod <- dom(g); pairs ascending row-major.
inline Pullback pullback(const FinMorphism& f, const FinMorphism& g) {
  require(f.cod == g.cod, "pullback-mismatch",
          "pullback legs must share their codomain: " + describe(f) + " vs " + describe(g));
  std::vector<std::pair<int, int>> pairs;
  for (int b = 0; b < f.dom.size; ++b)
    for (int c = 0; c < g.dom.size; ++c)
      if (f.table[b] == g.table[c]) pairs.emplace_back(b, c);
  FinObject carrier{static_cast<int>(pairs.size())};
  std::vector<int> tb(pairs.size()), tc(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    tb[i] = pairs[i].first;
    tc[i] = pairs[i].second;
  }
  return Pullback{{carrier, PullbackDecoding{std::move(pairs)}},
                  FinMorphism{carrier, f.dom, std::move(tb)},
                  FinMorphism{carrier, g.dom, std::move(tc)}};
}

// The unique map into a pullback determined by a cone.
inline FinMorphism pair_into(const Pullback& pb, const FinMorphism& to_first,
                             const FinMorphism& to_second) {
  const auto& dec = std::get<PullbackDecoding>(pb.object.decoding);
  require(to_first.dom == to_second.dom, "pair-shape",
          "cone legs " + describe(to_first) + " and " + describe(to_second) +
              " have different domains");
  require(to_first.cod == pb.proj_first.cod && to_second.cod == pb.proj_second.cod, "pair-shape",
          "cone legs " + describe(to_first) + ", " + describe(to_second) +
              " do not match the pullback feet");
  std::vector<int> t(static_cast<std::size_t>(to_first.dom.size));
  for (int z = 0; z < to_first.dom.size; ++z) {
    std::pair<int, int> want{to_first.table[z], to_second.table[z]};
    auto it = std::lower_bound(dec.pairs.begin(), dec.pairs.end(), want);
    require(it != dec.pairs.end() && *it == want, "pair-cone",
            "legs do not form a cone over the pullback at element " + std::to_string(z));
    t[z] = static_cast<int>(it - dec.pairs.begin());
  }
  return FinMorphism{to_first.dom, pb.object.carrier, std::move(t)};
}

// ---------------------------------------------------------------------------
// Category trait used by the generic machinery.

struct FinSetCat {
  using Object = FinObject;
  using Morphism = FinMorphism;
  using PushoutResult = thc::Pushout;
  using PullbackResult = thc::Pullback;

  static Object dom(const Morphism& m) { return m.dom; }
  static Object cod(const Morphism& m) { return m.cod; }
  static Morphism identity(Object x) { return thc::identity(x); }
  static Morphism compose(const Morphism& f, const Morphism& g) { return thc::compose(f, g); }
  static std::vector<Morphism> hom(Object x, Object y) { return thc::hom(x, y); }

  static bool is_iso(const Morphism& m) {
    if (m.dom.size != m.cod.size) return false;
    std::vector<char> seen(static_cast<std::size_t>(m.cod.size), 0);
    for (int v : m.table) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  static PushoutResult pushout(const Morphism& f, const Morphism& g) { return thc::pushout(f, g); }
  static Morphism copair(const PushoutResult& po, const Morphism& a, const Morphism& b) {
    return thc::copair(po, a, b);
  }
  static PullbackResult pullback(const Morphism& f, const Morphism& g) {
    return thc::pullback(f, g);
  }
  static Morphism pair_into(const PullbackResult& pb, const Morphism& a, const Morphism& b) {
    return thc::pair_into(pb, a, b);
  }

  // Objects are skeletal, so the only canonical iso is the identity.
  static std::optional<Morphism> find_iso(Object x, Object y) {
    if (x == y) return identity(x);
    return std::nullopt;
  }

  static std::string describe(const Morphism& m) { return thc::describe(m); }
  static std::string describe_object(Object x) { return thc::describe(x); }
};

}  // namespace thc
