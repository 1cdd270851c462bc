#pragma once

// A two-variable adjunction presented concretely: a tensor A x S -> B, a left
// hom lhom: S^op x B -> A, a right hom rhom: A^op x B -> S, and the two
// transpose bijections
//     Hom_B(a (x) k, b)  ~  Hom_A(a, lhom(k, b))  ~  Hom_S(k, rhom(a, b)).
// Transposes are primitive; units, counits and mates are derived from them
// (and cross-checked against each other elsewhere).

#include <concepts>
#include <optional>
#include <type_traits>
#include <vector>

#include "thc/arrow.hpp"
#include "thc/category.hpp"
#include "thc/error.hpp"
#include "thc/finset.hpp"
#include "thc/poset.hpp"

namespace thc {

template <class T>
concept ThcSituation =
    Category<typename T::CatA> && Category<typename T::CatS> && Category<typename T::CatB> &&
    requires(const T& t, const typename T::CatA::Object& a, const typename T::CatS::Object& k,
             const typename T::CatB::Object& b, const typename T::CatA::Morphism& fa,
             const typename T::CatS::Morphism& fs, const typename T::CatB::Morphism& fb) {
      { t.tensor(a, k) } -> std::convertible_to<typename T::CatB::Object>;
      { t.lhom_obj(k, b) } -> std::convertible_to<typename T::CatA::Object>;
      { t.rhom_obj(a, b) } -> std::convertible_to<typename T::CatS::Object>;
      { t.tensor_mor(fa, fs) } -> std::convertible_to<typename T::CatB::Morphism>;
      { t.lhom_mor(fs, fb) } -> std::convertible_to<typename T::CatA::Morphism>;
      { t.rhom_mor(fa, fb) } -> std::convertible_to<typename T::CatS::Morphism>;
      { t.transpose_left(a, k, fb) } -> std::convertible_to<typename T::CatA::Morphism>;
      { t.untranspose_left(a, k, b, fa) } -> std::convertible_to<typename T::CatB::Morphism>;
      { t.transpose_right(a, k, fb) } -> std::convertible_to<typename T::CatS::Morphism>;
      { t.untranspose_right(a, k, b, fs) } -> std::convertible_to<typename T::CatB::Morphism>;
    };

// Cartesian instance on finite sets: tensor is the product, both homs are
// exponentials, transposes are currying in the respective variable.
struct FinSetCartesian {
  using CatA = FinSetCat;
  using CatS = FinSetCat;
  using CatB = FinSetCat;

  FinObject tensor(FinObject a, FinObject k) const { return product(a, k).carrier; }
  FinObject lhom_obj(FinObject k, FinObject b) const { return exponential(k, b).carrier; }
  FinObject rhom_obj(FinObject a, FinObject b) const { return exponential(a, b).carrier; }

  FinMorphism tensor_mor(const FinMorphism& f, const FinMorphism& u) const {
    return product_map(f, u);
  }

  // lhom(u, g): X^K -> Y^L for u: L -> K, g: X -> Y (precompose, postcompose).
  FinMorphism lhom_mor(const FinMorphism& u, const FinMorphism& g) const {
    FinObject k = u.cod, l = u.dom, x = g.dom, y = g.cod;
    FinObject src = lhom_obj(k, x), dst = lhom_obj(l, y);
    std::vector<int> table(static_cast<std::size_t>(src.size));
    std::vector<int> s(static_cast<std::size_t>(l.size));
    for (int r = 0; r < src.size; ++r) {
      std::vector<int> t = function_table(r, k.size, x.size);
      for (int j = 0; j < l.size; ++j) s[j] = g.table[t[u.table[j]]];
      table[r] = function_rank(s, y.size);
    }
    return FinMorphism{src, dst, std::move(table)};
  }

  // rhom(f, g): X^A' -> Y^A for f: A -> A', g: X -> Y.
  FinMorphism rhom_mor(const FinMorphism& f, const FinMorphism& g) const {
    FinObject a2 = f.cod, a = f.dom, x = g.dom, y = g.cod;
    FinObject src = rhom_obj(a2, x), dst = rhom_obj(a, y);
    std::vector<int> table(static_cast<std::size_t>(src.size));
    std::vector<int> s(static_cast<std::size_t>(a.size));
    for (int r = 0; r < src.size; ++r) {
      std::vector<int> t = function_table(r, a2.size, x.size);
      for (int i = 0; i < a.size; ++i) s[i] = g.table[t[f.table[i]]];
      table[r] = function_rank(s, y.size);
    }
    return FinMorphism{src, dst, std::move(table)};
  }

  FinMorphism transpose_left(FinObject a, FinObject k, const FinMorphism& m) const {
    return curry(a, k, m);
  }

  FinMorphism untranspose_left(FinObject a, FinObject k, FinObject b,
                               const FinMorphism& n) const {
    return uncurry(a, k, b, n);
  }

  FinMorphism transpose_right(FinObject a, FinObject k, const FinMorphism& m) const {
    require(m.dom.size == a.size * k.size, "curry-shape",
            "domain of " + describe(m) + " is not the product of " + describe(a) + " and " +
                describe(k));
    FinObject b = m.cod;
    FinObject e = rhom_obj(a, b);
    std::vector<int> table(static_cast<std::size_t>(k.size));
    std::vector<int> slice(static_cast<std::size_t>(a.size));
    for (int j = 0; j < k.size; ++j) {
      for (int i = 0; i < a.size; ++i) slice[i] = m.table[pair_index(i, j, k.size)];
      table[j] = function_rank(slice, b.size);
    }
    return FinMorphism{k, e, std::move(table)};
  }

  FinMorphism untranspose_right(FinObject a, FinObject k, FinObject b,
                                const FinMorphism& n) const {
    require(n.dom == k, "uncurry-shape", "domain of " + describe(n) + " is not " + describe(k));
    require(n.cod == rhom_obj(a, b), "uncurry-shape",
            "codomain of " + describe(n) + " is not the exponential " + describe(b) + "^" +
                describe(a));
    FinObject p = product(a, k).carrier;
    std::vector<int> table(static_cast<std::size_t>(p.size));
    for (int j = 0; j < k.size; ++j) {
      std::vector<int> slice = function_table(n.table[j], a.size, b.size);
      for (int i = 0; i < a.size; ++i) table[pair_index(i, j, k.size)] = slice[i];
    }
    return FinMorphism{p, b, std::move(table)};
  }
};

// Cartesian instance on finite posets; exponentials carry the pointwise
// order and enumerate monotone tables lexicographically.
struct PosetCartesian {
  using CatA = PosetCat;
  using CatS = PosetCat;
  using CatB = PosetCat;

  PosetObject tensor(const PosetObject& a, const PosetObject& k) const {
    return poset_product(a, k);
  }
  PosetObject lhom_obj(const PosetObject& k, const PosetObject& b) const {
    return poset_exponential(k, b).object;
  }
  PosetObject rhom_obj(const PosetObject& a, const PosetObject& b) const {
    return poset_exponential(a, b).object;
  }

  MonotoneMap tensor_mor(const MonotoneMap& f, const MonotoneMap& u) const {
    return poset_product_map(f, u);
  }

  MonotoneMap lhom_mor(const MonotoneMap& u, const MonotoneMap& g) const {
    PosetExponential src = poset_exponential(u.cod, g.dom);
    PosetExponential dst = poset_exponential(u.dom, g.cod);
    std::vector<int> table(src.tables.size());
    std::vector<int> s(static_cast<std::size_t>(u.dom.size));
    for (std::size_t r = 0; r < src.tables.size(); ++r) {
      for (int j = 0; j < u.dom.size; ++j) s[j] = g.table[src.tables[r][u.table[j]]];
      table[r] = monotone_rank(dst, s);
    }
    return make_monotone(src.object, dst.object, std::move(table));
  }

  MonotoneMap rhom_mor(const MonotoneMap& f, const MonotoneMap& g) const {
    PosetExponential src = poset_exponential(f.cod, g.dom);
    PosetExponential dst = poset_exponential(f.dom, g.cod);
    std::vector<int> table(src.tables.size());
    std::vector<int> s(static_cast<std::size_t>(f.dom.size));
    for (std::size_t r = 0; r < src.tables.size(); ++r) {
      for (int i = 0; i < f.dom.size; ++i) s[i] = g.table[src.tables[r][f.table[i]]];
      table[r] = monotone_rank(dst, s);
    }
    return make_monotone(src.object, dst.object, std::move(table));
  }

  MonotoneMap transpose_left(const PosetObject& a, const PosetObject& k,
                             const MonotoneMap& m) const {
    return poset_curry(a, k, m);
  }

  MonotoneMap untranspose_left(const PosetObject& a, const PosetObject& k, const PosetObject& b,
                               const MonotoneMap& n) const {
    return poset_uncurry(a, k, b, n);
  }

  MonotoneMap transpose_right(const PosetObject& a, const PosetObject& k,
                              const MonotoneMap& m) const {
    require(m.dom == poset_product(a, k), "curry-shape",
            "domain of " + describe(m) + " is not the product of " + describe(a) + " and " +
                describe(k));
    PosetExponential e = poset_exponential(a, m.cod);
    std::vector<int> table(static_cast<std::size_t>(k.size));
    std::vector<int> slice(static_cast<std::size_t>(a.size));
    for (int j = 0; j < k.size; ++j) {
      for (int i = 0; i < a.size; ++i) slice[i] = m.table[pair_index(i, j, k.size)];
      table[j] = monotone_rank(e, slice);
    }
    return make_monotone(k, e.object, std::move(table));
  }

  MonotoneMap untranspose_right(const PosetObject& a, const PosetObject& k, const PosetObject& b,
                                const MonotoneMap& n) const {
    PosetExponential e = poset_exponential(a, b);
    require(n.dom == k && n.cod == e.object, "uncurry-shape",
            "map " + describe(n) + " is not of shape k -> b^a");
    PosetObject p = poset_product(a, k);
    std::vector<int> table(static_cast<std::size_t>(p.size));
    for (int j = 0; j < k.size; ++j)
      for (int i = 0; i < a.size; ++i)
        table[pair_index(i, j, k.size)] = e.tables[n.table[j]][i];
    return make_monotone(std::move(p), b, std::move(table));
  }
};

// ---------------------------------------------------------------------------
// Derived structure: units, counits and mates of the two adjunctions
//     - (x) k  -|  lhom(k, -)        and        a (x) -  -|  rhom(a, -).

template <ThcSituation T>
typename T::CatA::Morphism unit(const T& inst, const typename T::CatA::Object& a,
                                const typename T::CatS::Object& k) {
  return inst.transpose_left(a, k, T::CatB::identity(inst.tensor(a, k)));
}

template <ThcSituation T>
typename T::CatB::Morphism counit(const T& inst, const typename T::CatB::Object& y,
                                  const typename T::CatS::Object& k) {
  auto lk = inst.lhom_obj(k, y);
  return inst.untranspose_left(lk, k, y, T::CatA::identity(lk));
}

template <ThcSituation T>
typename T::CatS::Morphism unit_right(const T& inst, const typename T::CatS::Object& k,
                                      const typename T::CatA::Object& a) {
  return inst.transpose_right(a, k, T::CatB::identity(inst.tensor(a, k)));
}

template <ThcSituation T>
typename T::CatB::Morphism counit_right(const T& inst, const typename T::CatB::Object& y,
                                        const typename T::CatA::Object& a) {
  auto rk = inst.rhom_obj(a, y);
  return inst.untranspose_right(a, rk, y, T::CatS::identity(rk));
}

// mate_left(m) = lhom(k, m) . unit; agrees with transpose_left pointwise.
template <ThcSituation T>
typename T::CatA::Morphism mate_left(const T& inst, const typename T::CatA::Object& a,
                                     const typename T::CatS::Object& k,
                                     const typename T::CatB::Morphism& m) {
  return T::CatA::compose(unit(inst, a, k), inst.lhom_mor(T::CatS::identity(k), m));
}

template <ThcSituation T>
typename T::CatB::Morphism unmate_left(const T& inst, const typename T::CatA::Object& a,
                                       const typename T::CatS::Object& k,
                                       const typename T::CatB::Object& b,
                                       const typename T::CatA::Morphism& n) {
  (void)a;
  return T::CatB::compose(inst.tensor_mor(n, T::CatS::identity(k)), counit(inst, b, k));
}

template <ThcSituation T>
typename T::CatS::Morphism mate_right(const T& inst, const typename T::CatA::Object& a,
                                      const typename T::CatS::Object& k,
                                      const typename T::CatB::Morphism& m) {
  return T::CatS::compose(unit_right(inst, k, a), inst.rhom_mor(T::CatA::identity(a), m));
}

template <ThcSituation T>
typename T::CatB::Morphism unmate_right(const T& inst, const typename T::CatA::Object& a,
                                        const typename T::CatS::Object& k,
                                        const typename T::CatB::Object& b,
                                        const typename T::CatS::Morphism& n) {
  (void)k;
  return T::CatB::compose(inst.tensor_mor(T::CatA::identity(a), n), counit_right(inst, b, a));
}

// Fault-injection wrapper: swaps two morphisms (by hom-set rank) before
// left-transposing them whenever the shape matches the configured triple.
// Used to demonstrate that the verifier actually detects a broken bijection.
template <ThcSituation Base>
struct SwapTransposeLeft {
  using CatA = typename Base::CatA;
  using CatS = typename Base::CatS;
  using CatB = typename Base::CatB;

  Base base;
  typename CatA::Object at_a;
  typename CatS::Object at_k;
  typename CatB::Object at_b;
  int rank1 = 0;
  int rank2 = 0;

  auto tensor(const typename CatA::Object& a, const typename CatS::Object& k) const {
    return base.tensor(a, k);
  }
  auto lhom_obj(const typename CatS::Object& k, const typename CatB::Object& b) const {
    return base.lhom_obj(k, b);
  }
  auto rhom_obj(const typename CatA::Object& a, const typename CatB::Object& b) const {
    return base.rhom_obj(a, b);
  }
  auto tensor_mor(const typename CatA::Morphism& f, const typename CatS::Morphism& u) const {
    return base.tensor_mor(f, u);
  }
  auto lhom_mor(const typename CatS::Morphism& u, const typename CatB::Morphism& g) const {
    return base.lhom_mor(u, g);
  }
  auto rhom_mor(const typename CatA::Morphism& f, const typename CatB::Morphism& g) const {
    return base.rhom_mor(f, g);
  }

  typename CatA::Morphism transpose_left(const typename CatA::Object& a,
                                         const typename CatS::Object& k,
                                         const typename CatB::Morphism& m) const {
    if (a == at_a && k == at_k && CatB::cod(m) == at_b) {
      auto all = CatB::hom(CatB::dom(m), CatB::cod(m));
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (!(all[i] == m)) continue;
        if (static_cast<int>(i) == rank1) return base.transpose_left(a, k, all[rank2]);
        if (static_cast<int>(i) == rank2) return base.transpose_left(a, k, all[rank1]);
        break;
      }
    }
    return base.transpose_left(a, k, m);
  }

  auto untranspose_left(const typename CatA::Object& a, const typename CatS::Object& k,
                        const typename CatB::Object& b, const typename CatA::Morphism& n) const {
    return base.untranspose_left(a, k, b, n);
  }
  auto transpose_right(const typename CatA::Object& a, const typename CatS::Object& k,
                       const typename CatB::Morphism& m) const {
    return base.transpose_right(a, k, m);
  }
  auto untranspose_right(const typename CatA::Object& a, const typename CatS::Object& k,
                         const typename CatB::Object& b, const typename CatS::Morphism& n) const {
    return base.untranspose_right(a, k, b, n);
  }
};

}  // namespace thc
