#pragma once

// Morphism classes inside a finite universe: saturated/cosaturated closure,
// lifting-property complements, weak-factorization checking, and the
// closure-under-Leibniz-product theorem checker.
//
// All notions are universe-relative: "saturated" means closed under the
// composites, retracts and (co)base changes that are expressible with the
// universe's own objects and morphisms. Constructed objects are matched
// against universe objects up to canonical isomorphism; a construction whose
// result has no universe representative is skipped during closure and
// reported as an escape by the theorem checker.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thc/arrow.hpp"
#include "thc/category.hpp"
#include "thc/error.hpp"
#include "thc/leibniz.hpp"
#include "thc/lifting.hpp"
#include "thc/situation.hpp"

namespace thc {

template <Category C>
struct Universe {
  std::vector<typename C::Object> objects;      // sorted, unique
  std::vector<typename C::Morphism> morphisms;  // sorted, unique, closed

  std::optional<std::size_t> index_of(const typename C::Morphism& m) const {
    auto it = std::lower_bound(morphisms.begin(), morphisms.end(), m);
    if (it != morphisms.end() && *it == m) return static_cast<std::size_t>(it - morphisms.begin());
    return std::nullopt;
  }

  bool has_object(const typename C::Object& x) const {
    return std::binary_search(objects.begin(), objects.end(), x);
  }
};

// Builds a universe from the given generators: adds every morphism's
// endpoints, all identities, and all binary composites, then sorts. The
// result is the least composition-closed superset.
template <Category C>
Universe<C> make_universe(std::vector<typename C::Object> objects,
                          const std::vector<typename C::Morphism>& morphisms) {
  std::set<typename C::Object> obj(objects.begin(), objects.end());
  for (const auto& m : morphisms) {
    obj.insert(C::dom(m));
    obj.insert(C::cod(m));
  }
  std::set<typename C::Morphism> ms(morphisms.begin(), morphisms.end());
  for (const auto& x : obj) ms.insert(C::identity(x));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<typename C::Morphism> cur(ms.begin(), ms.end());
    for (const auto& f : cur)
      for (const auto& g : cur)
        if (C::cod(f) == C::dom(g) && ms.insert(C::compose(f, g)).second) changed = true;
  }
  return Universe<C>{std::vector<typename C::Object>(obj.begin(), obj.end()),
                     std::vector<typename C::Morphism>(ms.begin(), ms.end())};
}

// Universe holding every morphism between the given objects.
template <Category C>
Universe<C> complete_universe(std::vector<typename C::Object> objects) {
  std::set<typename C::Object> obj(objects.begin(), objects.end());
  std::set<typename C::Morphism> ms;
  for (const auto& x : obj)
    for (const auto& y : obj)
      for (auto& m : C::hom(x, y)) ms.insert(std::move(m));
  return Universe<C>{std::vector<typename C::Object>(obj.begin(), obj.end()),
                     std::vector<typename C::Morphism>(ms.begin(), ms.end())};
}

template <Category C>
struct MorphismClass {
  const Universe<C>* universe = nullptr;
  std::vector<char> members;  // indexed by universe morphism id

  bool contains(std::size_t id) const { return members[id] != 0; }

  std::size_t count() const {
    std::size_t n = 0;
    for (char c : members) n += (c != 0);
    return n;
  }

  std::vector<std::size_t> ids() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i]) out.push_back(i);
    return out;
  }

  friend bool operator==(const MorphismClass& a, const MorphismClass& b) {
    return a.universe == b.universe && a.members == b.members;
  }
};

template <Category C>
MorphismClass<C> empty_class(const Universe<C>& u) {
  return MorphismClass<C>{&u, std::vector<char>(u.morphisms.size(), 0)};
}

template <Category C>
MorphismClass<C> class_of(const Universe<C>& u,
                          const std::vector<typename C::Morphism>& members) {
  auto out = empty_class(u);
  for (const auto& m : members) {
    auto id = u.index_of(m);
    require(id.has_value(), "class-member-missing",
            "class member " + C::describe(m) + " is not a universe morphism");
    out.members[*id] = 1;
  }
  return out;
}

template <Category C>
MorphismClass<C> iso_class(const Universe<C>& u) {
  auto out = empty_class(u);
  for (std::size_t i = 0; i < u.morphisms.size(); ++i)
    if (C::is_iso(u.morphisms[i])) out.members[i] = 1;
  return out;
}

template <Category C>
MorphismClass<C> all_class(const Universe<C>& u) {
  auto out = empty_class(u);
  for (auto& c : out.members) c = 1;
  return out;
}

template <Category C>
bool is_subclass(const MorphismClass<C>& a, const MorphismClass<C>& b) {
  require(a.universe == b.universe, "class-universe-mismatch",
          "classes live in different universes");
  for (std::size_t i = 0; i < a.members.size(); ++i)
    if (a.members[i] && !b.members[i]) return false;
  return true;
}

namespace detail {

// For every ordered pair of universe objects, the (section, retraction)
// pairs drawn from the universe: s: x -> y, r: y -> x with s;r = id_x.
template <Category C>
struct SrTable {
  std::size_t nobj = 0;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs;  // [xi * nobj + yi]

  const std::vector<std::pair<std::size_t, std::size_t>>& at(std::size_t xi,
                                                             std::size_t yi) const {
    return pairs[xi * nobj + yi];
  }
};

template <Category C>
std::size_t object_index(const Universe<C>& u, const typename C::Object& x) {
  auto it = std::lower_bound(u.objects.begin(), u.objects.end(), x);
  require(it != u.objects.end() && *it == x, "universe-object-missing",
          "object " + C::describe_object(x) + " is not in the universe");
  return static_cast<std::size_t>(it - u.objects.begin());
}

template <Category C>
SrTable<C> section_retraction_table(const Universe<C>& u) {
  SrTable<C> t;
  t.nobj = u.objects.size();
  t.pairs.resize(t.nobj * t.nobj);
  std::vector<std::vector<std::size_t>> bucket(t.nobj * t.nobj);
  for (std::size_t i = 0; i < u.morphisms.size(); ++i) {
    auto xi = object_index<C>(u, C::dom(u.morphisms[i]));
    auto yi = object_index<C>(u, C::cod(u.morphisms[i]));
    bucket[xi * t.nobj + yi].push_back(i);
  }
  for (std::size_t xi = 0; xi < t.nobj; ++xi)
    for (std::size_t yi = 0; yi < t.nobj; ++yi) {
      auto idx = C::identity(u.objects[xi]);
      for (std::size_t s : bucket[xi * t.nobj + yi])
        for (std::size_t r : bucket[yi * t.nobj + xi])
          if (C::compose(u.morphisms[s], u.morphisms[r]) == idx)
            t.pairs[xi * t.nobj + yi].emplace_back(s, r);
    }
  return t;
}

// g is a retract of f when squares g -> f -> g compose to the identity
// square on g; the connecting maps are section/retraction pairs on each leg.
template <Category C>
bool is_retract_of(const Universe<C>& u, const SrTable<C>& sr, const typename C::Morphism& g,
                   const typename C::Morphism& f) {
  auto gx = object_index<C>(u, C::dom(g)), gy = object_index<C>(u, C::cod(g));
  auto fx = object_index<C>(u, C::dom(f)), fy = object_index<C>(u, C::cod(f));
  for (const auto& [s1, r1] : sr.at(gx, fx))
    for (const auto& [s2, r2] : sr.at(gy, fy))
      if (C::compose(u.morphisms[s1], f) == C::compose(g, u.morphisms[s2]) &&
          C::compose(u.morphisms[r1], g) == C::compose(f, u.morphisms[r2]))
        return true;
  return false;
}

}  // namespace detail

// Least universe-relative fixpoint containing c, all isomorphisms, and
// closed under composition, retracts, and pushout along universe morphisms.
// Finite composition chains stand in for arbitrary ones; base changes whose
// pushout object has no universe representative are skipped.
template <Category C>
MorphismClass<C> saturate(const MorphismClass<C>& c) {
  const Universe<C>& u = *c.universe;
  MorphismClass<C> out = c;
  for (std::size_t i = 0; i < u.morphisms.size(); ++i)
    if (C::is_iso(u.morphisms[i])) out.members[i] = 1;
  auto sr = detail::section_retraction_table<C>(u);
  bool changed = true;
  while (changed) {
    changed = false;
    auto add = [&](std::size_t id) {
      if (!out.members[id]) {
        out.members[id] = 1;
        changed = true;
      }
    };
    for (std::size_t i = 0; i < u.morphisms.size(); ++i) {
      if (!out.members[i]) continue;
      const auto& f = u.morphisms[i];
      for (std::size_t j = 0; j < u.morphisms.size(); ++j) {
        if (out.members[j] && C::cod(f) == C::dom(u.morphisms[j]))
          if (auto id = u.index_of(C::compose(f, u.morphisms[j]))) add(*id);
      }
      for (const auto& h : u.morphisms) {
        if (!(C::dom(h) == C::dom(f))) continue;
        auto po = C::pushout(f, h);
        auto moved = po.inj_second;  // cod(h) -> P, the base change of f
        auto p_obj = C::cod(moved);
        for (const auto& w : u.objects)
          if (auto iso = C::find_iso(p_obj, w))
            if (auto id = u.index_of(C::compose(moved, *iso))) add(*id);
      }
    }
    for (std::size_t j = 0; j < u.morphisms.size(); ++j) {
      if (out.members[j]) continue;
      for (std::size_t i = 0; i < u.morphisms.size(); ++i)
        if (out.members[i] && detail::is_retract_of<C>(u, sr, u.morphisms[j], u.morphisms[i])) {
          add(j);
          break;
        }
    }
  }
  return out;
}

// Dual fixpoint: composition, retracts, and pullback along universe
// morphisms.
template <Category C>
MorphismClass<C> cosaturate(const MorphismClass<C>& c) {
  const Universe<C>& u = *c.universe;
  MorphismClass<C> out = c;
  for (std::size_t i = 0; i < u.morphisms.size(); ++i)
    if (C::is_iso(u.morphisms[i])) out.members[i] = 1;
  auto sr = detail::section_retraction_table<C>(u);
  bool changed = true;
  while (changed) {
    changed = false;
    auto add = [&](std::size_t id) {
      if (!out.members[id]) {
        out.members[id] = 1;
        changed = true;
      }
    };
    for (std::size_t i = 0; i < u.morphisms.size(); ++i) {
      if (!out.members[i]) continue;
      const auto& f = u.morphisms[i];
      for (std::size_t j = 0; j < u.morphisms.size(); ++j) {
        if (out.members[j] && C::cod(f) == C::dom(u.morphisms[j]))
          if (auto id = u.index_of(C::compose(f, u.morphisms[j]))) add(*id);
      }
      for (const auto& h : u.morphisms) {
        if (!(C::cod(h) == C::cod(f))) continue;
        auto pb = C::pullback(f, h);
        auto moved = pb.proj_second;  // Q -> dom(h), the base change of f
        auto q_obj = C::dom(moved);
        for (const auto& w : u.objects)
          if (auto iso = C::find_iso(w, q_obj))
            if (auto id = u.index_of(C::compose(*iso, moved))) add(*id);
      }
    }
    for (std::size_t j = 0; j < u.morphisms.size(); ++j) {
      if (out.members[j]) continue;
      for (std::size_t i = 0; i < u.morphisms.size(); ++i)
        if (out.members[i] && detail::is_retract_of<C>(u, sr, u.morphisms[j], u.morphisms[i])) {
          add(j);
          break;
        }
    }
  }
  return out;
}

// Everything with the left lifting property against every member of m.
template <Category C>
MorphismClass<C> left_complement(const MorphismClass<C>& m) {
  const Universe<C>& u = *m.universe;
  auto out = empty_class(u);
  auto member_ids = m.ids();
  for (std::size_t i = 0; i < u.morphisms.size(); ++i) {
    ArrowObject<C> f{u.morphisms[i]};
    bool ok = true;
    for (std::size_t j : member_ids)
      if (!has_lifting_property<C>(f, ArrowObject<C>{u.morphisms[j]})) {
        ok = false;
        break;
      }
    if (ok) out.members[i] = 1;
  }
  return out;
}

// Everything with the right lifting property against every member of e.
template <Category C>
MorphismClass<C> right_complement(const MorphismClass<C>& e) {
  const Universe<C>& u = *e.universe;
  auto out = empty_class(u);
  auto member_ids = e.ids();
  for (std::size_t i = 0; i < u.morphisms.size(); ++i) {
    ArrowObject<C> g{u.morphisms[i]};
    bool ok = true;
    for (std::size_t j : member_ids)
      if (!has_lifting_property<C>(ArrowObject<C>{u.morphisms[j]}, g)) {
        ok = false;
        break;
      }
    if (ok) out.members[i] = 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weak factorization systems.

struct WfsReport {
  bool factorization_ok = true;
  std::vector<std::string> factorization_failures;
  bool left_is_complement = true;  // e equals the left complement of m
  std::vector<std::string> left_mismatches;
  bool right_is_complement = true;  // m equals the right complement of e
  std::vector<std::string> right_mismatches;

  bool passed() const { return factorization_ok && left_is_complement && right_is_complement; }
};

template <Category C>
WfsReport is_wfs(const MorphismClass<C>& e, const MorphismClass<C>& m) {
  require(e.universe == m.universe, "class-universe-mismatch",
          "classes live in different universes");
  const Universe<C>& u = *e.universe;
  WfsReport rep;
  auto e_ids = e.ids();
  auto m_ids = m.ids();
  for (const auto& h : u.morphisms) {
    bool found = false;
    for (std::size_t pi : e_ids) {
      const auto& p = u.morphisms[pi];
      if (!(C::dom(p) == C::dom(h))) continue;
      for (std::size_t qi : m_ids) {
        const auto& q = u.morphisms[qi];
        if (!(C::dom(q) == C::cod(p) && C::cod(q) == C::cod(h))) continue;
        if (C::compose(p, q) == h) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      rep.factorization_ok = false;
      rep.factorization_failures.push_back("no in-universe factorization of " + C::describe(h));
    }
  }
  auto lc = left_complement(m);
  for (std::size_t i = 0; i < u.morphisms.size(); ++i) {
    if (e.members[i] == lc.members[i]) continue;
    rep.left_is_complement = false;
    rep.left_mismatches.push_back(std::string(e.members[i] ? "not lifting against m: "
                                                           : "missing from e: ") +
                                  C::describe(u.morphisms[i]));
  }
  auto rc = right_complement(e);
  for (std::size_t i = 0; i < u.morphisms.size(); ++i) {
    if (m.members[i] == rc.members[i]) continue;
    rep.right_is_complement = false;
    rep.right_mismatches.push_back(std::string(m.members[i] ? "e does not lift against: "
                                                            : "missing from m: ") +
                                   C::describe(u.morphisms[i]));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Closure theorem checker.

namespace detail {

enum class RepStatus { found, missing, unrepresentable };

struct RepResult {
  RepStatus status = RepStatus::unrepresentable;
  std::size_t id = 0;
};

// Finds the universe morphism equal to m after transporting both endpoints
// along canonical isomorphisms onto universe objects.
template <Category C>
RepResult find_representative(const Universe<C>& u, const typename C::Morphism& m) {
  bool any_iso = false;
  for (const auto& w1 : u.objects) {
    auto s1 = C::find_iso(w1, C::dom(m));
    if (!s1) continue;
    for (const auto& w2 : u.objects) {
      auto s2 = C::find_iso(C::cod(m), w2);
      if (!s2) continue;
      any_iso = true;
      if (auto id = u.index_of(C::compose(C::compose(*s1, m), *s2)))
        return RepResult{RepStatus::found, *id};
    }
  }
  return RepResult{any_iso ? RepStatus::missing : RepStatus::unrepresentable, 0};
}

}  // namespace detail

struct ClosureReport {
  WfsReport wfs;
  bool hypothesis_ok = true;  // products of the given classes lie in e
  std::vector<std::string> hypothesis_failures;
  std::vector<std::string> hypothesis_escapes;
  bool conclusion_ok = true;  // products of the saturated classes lie in e
  std::vector<std::string> conclusion_failures;
  std::vector<std::string> conclusion_escapes;
  bool k_containment_ok = true;  // saturate(a) lifts against lhom-leibniz of (s, m)
  std::vector<std::string> k_failures;
  bool h_containment_ok = true;  // saturate(s) lifts against rhom-leibniz of (a, m)
  std::vector<std::string> h_failures;
  std::size_t saturated_a_count = 0;
  std::size_t saturated_s_count = 0;

  bool passed() const {
    return wfs.passed() && hypothesis_ok && conclusion_ok && k_containment_ok &&
           h_containment_ok;
  }
};

template <ThcSituation T>
ClosureReport check_closure_theorem(const T& inst, const MorphismClass<typename T::CatA>& a,
                                    const MorphismClass<typename T::CatS>& s,
                                    const MorphismClass<typename T::CatB>& e,
                                    const MorphismClass<typename T::CatB>& m) {
  using CatA = typename T::CatA;
  using CatS = typename T::CatS;
  using CatB = typename T::CatB;
  const Universe<CatA>& ua = *a.universe;
  const Universe<CatS>& us = *s.universe;
  const Universe<CatB>& ub = *e.universe;
  require(e.universe == m.universe, "class-universe-mismatch",
          "classes live in different universes");

  ClosureReport rep;
  rep.wfs = is_wfs(e, m);

  auto check_products = [&](const MorphismClass<CatA>& ca, const MorphismClass<CatS>& cs,
                            bool& ok, std::vector<std::string>& fails,
                            std::vector<std::string>& escapes) {
    for (std::size_t fi : ca.ids())
      for (std::size_t ui : cs.ids()) {
        ArrowObject<CatA> f{ua.morphisms[fi]};
        ArrowObject<CatS> uu{us.morphisms[ui]};
        auto prod = pushout_product(inst, f, uu);
        std::string pair_tag = "product of " + CatA::describe(f.morphism) + " and " +
                               CatS::describe(uu.morphism);
        auto r = detail::find_representative<CatB>(ub, prod.result.morphism);
        switch (r.status) {
          case detail::RepStatus::unrepresentable:
            escapes.push_back(pair_tag + " lands outside the universe");
            break;
          case detail::RepStatus::missing:
            ok = false;
            fails.push_back(pair_tag + " transports to a morphism missing from the universe");
            break;
          case detail::RepStatus::found:
            if (!e.contains(r.id)) {
              ok = false;
              fails.push_back(pair_tag + " = " + CatB::describe(ub.morphisms[r.id]) +
                              " is not in e");
            }
            break;
        }
      }
  };

  check_products(a, s, rep.hypothesis_ok, rep.hypothesis_failures, rep.hypothesis_escapes);

  auto sa = saturate(a);
  auto ss = saturate(s);
  rep.saturated_a_count = sa.count();
  rep.saturated_s_count = ss.count();
  check_products(sa, ss, rep.conclusion_ok, rep.conclusion_failures, rep.conclusion_escapes);

  // The lifting-theoretic route: members of the saturated classes must lift
  // against every Leibniz hom of a generator with an m-member.
  std::vector<ArrowObject<CatA>> k_targets;
  for (std::size_t ui : s.ids())
    for (std::size_t qi : m.ids())
      k_targets.push_back(pullback_lhom(inst, ArrowObject<CatS>{us.morphisms[ui]},
                                        ArrowObject<CatB>{ub.morphisms[qi]})
                              .result);
  std::sort(k_targets.begin(), k_targets.end());
  k_targets.erase(std::unique(k_targets.begin(), k_targets.end()), k_targets.end());
  for (std::size_t fi : sa.ids()) {
    ArrowObject<CatA> f{ua.morphisms[fi]};
    for (const auto& t : k_targets)
      if (!has_lifting_property<CatA>(f, t)) {
        rep.k_containment_ok = false;
        rep.k_failures.push_back(CatA::describe(f.morphism) + " does not lift against " +
                                 CatA::describe(t.morphism));
      }
  }
  std::vector<ArrowObject<CatS>> h_targets;
  for (std::size_t fi : a.ids())
    for (std::size_t qi : m.ids())
      h_targets.push_back(pullback_rhom(inst, ArrowObject<CatA>{ua.morphisms[fi]},
                                        ArrowObject<CatB>{ub.morphisms[qi]})
                              .result);
  std::sort(h_targets.begin(), h_targets.end());
  h_targets.erase(std::unique(h_targets.begin(), h_targets.end()), h_targets.end());
  for (std::size_t ui : ss.ids()) {
    ArrowObject<CatS> uu{us.morphisms[ui]};
    for (const auto& t : h_targets)
      if (!has_lifting_property<CatS>(uu, t)) {
        rep.h_containment_ok = false;
        rep.h_failures.push_back(CatS::describe(uu.morphism) + " does not lift against " +
                                 CatS::describe(t.morphism));
      }
  }
  return rep;
}

}  // namespace thc
