#pragma once

// Lifting problems, brute-force solvers, and the transfer maps that carry a
// solution of one of the three induced problems
//     (f<>u  vs  g),   (f  vs  <<u,g>>),   (u  vs  <<f,g>>)
// to a solution of either other form. Transfers validate on entry that the
// candidate solves its source problem and assert on exit that the image
// solves the target problem.

#include <cstdint>
#include <type_traits>
#include <vector>

#include "thc/arrow.hpp"
#include "thc/category.hpp"
#include "thc/error.hpp"
#include "thc/finset.hpp"
#include "thc/leibniz.hpp"
#include "thc/situation.hpp"

namespace thc {

template <Category C>
struct LiftingProblem {
  ArrowObject<C> left;
  ArrowObject<C> right;
  typename C::Morphism top;     // dom(left) -> dom(right)
  typename C::Morphism bottom;  // cod(left) -> cod(right)

  friend auto operator<=>(const LiftingProblem&, const LiftingProblem&) = default;
};

template <Category C>
struct Lift {
  typename C::Morphism diagonal;  // cod(left) -> dom(right)

  friend auto operator<=>(const Lift&, const Lift&) = default;
};

template <Category C>
LiftingProblem<C> make_lifting_problem(const ArrowObject<C>& left, const ArrowObject<C>& right,
                                       const typename C::Morphism& top,
                                       const typename C::Morphism& bottom) {
  make_square<C>(left, right, top, bottom);  // shape and commutativity checks
  return LiftingProblem<C>{left, right, top, bottom};
}

template <Category C>
Square<C> problem_square(const LiftingProblem<C>& p) {
  return Square<C>{p.left, p.right, p.top, p.bottom};
}

template <Category C>
LiftingProblem<C> square_problem(const Square<C>& s) {
  return LiftingProblem<C>{s.source, s.target, s.top, s.bottom};
}

template <Category C>
bool lift_solves(const LiftingProblem<C>& p, const Lift<C>& l) {
  return C::dom(l.diagonal) == p.left.cod() && C::cod(l.diagonal) == p.right.dom() &&
         C::compose(p.left.morphism, l.diagonal) == p.top &&
         C::compose(l.diagonal, p.right.morphism) == p.bottom;
}

namespace detail {

// Per-element constraints of a finite-set lifting problem: positions in the
// image of the left leg are forced, the rest choose freely from the fiber of
// the right leg over the bottom value. Returns false if no diagonal exists.
struct FinLiftFrame {
  std::vector<int> base;                  // forced entries, -1 where free
  std::vector<int> free_pos;              // ascending
  std::vector<std::vector<int>> options;  // ascending values per free position
};

inline bool fin_lift_frame(const LiftingProblem<FinSetCat>& p, FinLiftFrame& out) {
  int nb = p.left.cod().size;
  int nx = p.right.dom().size;
  const auto& f = p.left.morphism.table;
  const auto& g = p.right.morphism.table;
  const auto& t = p.top.table;
  const auto& s = p.bottom.table;
  out.base.assign(static_cast<std::size_t>(nb), -1);
  out.free_pos.clear();
  out.options.clear();
  for (std::size_t a = 0; a < f.size(); ++a) {
    int b = f[a];
    if (out.base[b] < 0)
      out.base[b] = t[a];
    else if (out.base[b] != t[a])
      return false;  // left leg identifies elements the top map separates
  }
  for (int b = 0; b < nb; ++b) {
    if (out.base[b] >= 0) {
      if (g[out.base[b]] != s[b]) return false;
      continue;
    }
    std::vector<int> opts;
    for (int x = 0; x < nx; ++x)
      if (g[x] == s[b]) opts.push_back(x);
    if (opts.empty()) return false;
    out.free_pos.push_back(b);
    out.options.push_back(std::move(opts));
  }
  return true;
}

}  // namespace detail

// All diagonals splitting the problem into two commuting triangles, in
// lexicographic table order.
template <Category C>
std::vector<Lift<C>> solve_all(const LiftingProblem<C>& p) {
  std::vector<Lift<C>> out;
  if constexpr (std::is_same_v<C, FinSetCat>) {
    detail::FinLiftFrame fr;
    if (!detail::fin_lift_frame(p, fr)) return out;
    std::uint64_t total = 1;
    for (const auto& o : fr.options) total = checked_mul(total, o.size());
    require(total <= (1u << 21), "enumeration-too-large",
            "problem has " + std::to_string(total) + " lifts; refusing to materialize");
    out.reserve(static_cast<std::size_t>(total));
    std::vector<int> d = fr.base;
    std::vector<std::size_t> idx(fr.free_pos.size(), 0);
    for (;;) {
      for (std::size_t i = 0; i < fr.free_pos.size(); ++i) d[fr.free_pos[i]] = fr.options[i][idx[i]];
      out.push_back(Lift<C>{FinMorphism{p.left.cod(), p.right.dom(), d}});
      int i = static_cast<int>(fr.free_pos.size()) - 1;
      while (i >= 0) {
        if (++idx[i] < fr.options[i].size()) break;
        idx[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  } else {
    for (const auto& d : C::hom(p.left.cod(), p.right.dom())) {
      Lift<C> l{d};
      if (lift_solves(p, l)) out.push_back(std::move(l));
    }
  }
  return out;
}

template <Category C>
bool has_lift(const LiftingProblem<C>& p) {
  if constexpr (std::is_same_v<C, FinSetCat>) {
    detail::FinLiftFrame fr;
    return detail::fin_lift_frame(p, fr);  // every free slot has an option
  } else {
    for (const auto& d : C::hom(p.left.cod(), p.right.dom()))
      if (lift_solves(p, Lift<C>{d})) return true;
    return false;
  }
}

// f has the left lifting property against g: every commuting square from f
// to g admits a diagonal.
//
// Finite sets admit a closed form. A square (t, s) has no lift only if
// either t separates two elements of an f-fiber (possible in a commuting
// square iff f and g are both non-injective), or some element outside the
// image of f is sent by s outside the image of g (possible iff f and g are
// both non-surjective and a top map exists at all). The generic branch
// enumerates every square; tests compare the two on exhaustive pools.
template <Category C>
bool has_lifting_property(const ArrowObject<C>& f, const ArrowObject<C>& g) {
  if constexpr (std::is_same_v<C, FinSetCat>) {
    int na = f.dom().size;
    int nx = g.dom().size;
    if (na > 0 && nx == 0) return true;  // no top map, hence no squares
    auto injective = [](const FinMorphism& m) {
      std::vector<char> seen(static_cast<std::size_t>(m.cod.size), 0);
      for (int v : m.table) {
        if (seen[v]) return false;
        seen[v] = 1;
      }
      return true;
    };
    auto surjective = [](const FinMorphism& m) {
      std::vector<char> seen(static_cast<std::size_t>(m.cod.size), 0);
      for (int v : m.table) seen[v] = 1;
      for (char c : seen)
        if (!c) return false;
      return true;
    };
    if (!injective(f.morphism) && !injective(g.morphism)) return false;
    if (!surjective(f.morphism) && !surjective(g.morphism)) return false;
    return true;
  } else {
    for (const auto& sq : enumerate_squares<C>(f, g))
      if (!has_lift(square_problem(sq))) return false;
    return true;
  }
}

// ---------------------------------------------------------------------------
// The three problem forms and the transfers between their solution sets.
// All transfers are parametrized by the base problem p over (f<>u, g); the
// other two problems are its phi / phi_r images.

template <ThcSituation T>
LiftingProblem<typename T::CatA> phi_problem(const T& inst,
                                             const ArrowObject<typename T::CatA>& f,
                                             const ArrowObject<typename T::CatS>& u,
                                             const ArrowObject<typename T::CatB>& g,
                                             const LiftingProblem<typename T::CatB>& p) {
  return square_problem(phi(inst, f, u, g, problem_square(p)));
}

template <ThcSituation T>
LiftingProblem<typename T::CatS> phi_r_problem(const T& inst,
                                               const ArrowObject<typename T::CatA>& f,
                                               const ArrowObject<typename T::CatS>& u,
                                               const ArrowObject<typename T::CatB>& g,
                                               const LiftingProblem<typename T::CatB>& p) {
  return square_problem(phi_r(inst, f, u, g, problem_square(p)));
}

template <ThcSituation T>
Lift<typename T::CatA> transfer_solution_to_lhom(const T& inst,
                                                 const ArrowObject<typename T::CatA>& f,
                                                 const ArrowObject<typename T::CatS>& u,
                                                 const ArrowObject<typename T::CatB>& g,
                                                 const LiftingProblem<typename T::CatB>& p,
                                                 const Lift<typename T::CatB>& alpha) {
  using CatA = typename T::CatA;
  using CatS = typename T::CatS;
  require(lift_solves(p, alpha), "lift-does-not-solve",
          "candidate diagonal does not solve the source problem");
  auto k = u.cod();
  Lift<CatA> out{CatA::compose(unit(inst, f.cod(), k),
                               inst.lhom_mor(CatS::identity(k), alpha.diagonal))};
  require(lift_solves(phi_problem(inst, f, u, g, p), out), "transfer-postcondition",
          "transferred diagonal fails the target problem");
  return out;
}

template <ThcSituation T>
Lift<typename T::CatB> transfer_solution_from_lhom(const T& inst,
                                                   const ArrowObject<typename T::CatA>& f,
                                                   const ArrowObject<typename T::CatS>& u,
                                                   const ArrowObject<typename T::CatB>& g,
                                                   const LiftingProblem<typename T::CatB>& p,
                                                   const Lift<typename T::CatA>& beta) {
  using CatB = typename T::CatB;
  using CatS = typename T::CatS;
  require(lift_solves(phi_problem(inst, f, u, g, p), beta), "lift-does-not-solve",
          "candidate diagonal does not solve the source problem");
  auto k = u.cod();
  Lift<CatB> out{CatB::compose(inst.tensor_mor(beta.diagonal, CatS::identity(k)),
                               counit(inst, g.dom(), k))};
  require(lift_solves(p, out), "transfer-postcondition",
          "transferred diagonal fails the target problem");
  return out;
}

template <ThcSituation T>
Lift<typename T::CatS> transfer_solution_to_rhom(const T& inst,
                                                 const ArrowObject<typename T::CatA>& f,
                                                 const ArrowObject<typename T::CatS>& u,
                                                 const ArrowObject<typename T::CatB>& g,
                                                 const LiftingProblem<typename T::CatB>& p,
                                                 const Lift<typename T::CatB>& alpha) {
  using CatA = typename T::CatA;
  using CatS = typename T::CatS;
  require(lift_solves(p, alpha), "lift-does-not-solve",
          "candidate diagonal does not solve the source problem");
  auto b = f.cod();
  Lift<CatS> out{CatS::compose(unit_right(inst, u.cod(), b),
                               inst.rhom_mor(CatA::identity(b), alpha.diagonal))};
  require(lift_solves(phi_r_problem(inst, f, u, g, p), out), "transfer-postcondition",
          "transferred diagonal fails the target problem");
  return out;
}

template <ThcSituation T>
Lift<typename T::CatB> transfer_solution_from_rhom(const T& inst,
                                                   const ArrowObject<typename T::CatA>& f,
                                                   const ArrowObject<typename T::CatS>& u,
                                                   const ArrowObject<typename T::CatB>& g,
                                                   const LiftingProblem<typename T::CatB>& p,
                                                   const Lift<typename T::CatS>& gamma) {
  using CatA = typename T::CatA;
  using CatB = typename T::CatB;
  require(lift_solves(phi_r_problem(inst, f, u, g, p), gamma), "lift-does-not-solve",
          "candidate diagonal does not solve the source problem");
  auto b = f.cod();
  Lift<CatB> out{CatB::compose(inst.tensor_mor(CatA::identity(b), gamma.diagonal),
                               counit_right(inst, g.dom(), b))};
  require(lift_solves(p, out), "transfer-postcondition",
          "transferred diagonal fails the target problem");
  return out;
}

template <ThcSituation T>
Lift<typename T::CatS> transfer_solution_lhom_to_rhom(const T& inst,
                                                      const ArrowObject<typename T::CatA>& f,
                                                      const ArrowObject<typename T::CatS>& u,
                                                      const ArrowObject<typename T::CatB>& g,
                                                      const LiftingProblem<typename T::CatB>& p,
                                                      const Lift<typename T::CatA>& beta) {
  return transfer_solution_to_rhom(inst, f, u, g, p,
                                   transfer_solution_from_lhom(inst, f, u, g, p, beta));
}

template <ThcSituation T>
Lift<typename T::CatA> transfer_solution_rhom_to_lhom(const T& inst,
                                                      const ArrowObject<typename T::CatA>& f,
                                                      const ArrowObject<typename T::CatS>& u,
                                                      const ArrowObject<typename T::CatB>& g,
                                                      const LiftingProblem<typename T::CatB>& p,
                                                      const Lift<typename T::CatS>& gamma) {
  return transfer_solution_to_lhom(inst, f, u, g, p,
                                   transfer_solution_from_rhom(inst, f, u, g, p, gamma));
}

// ---------------------------------------------------------------------------
// Three-way equivalence of the lifting properties.

struct EquivalenceReport {
  bool prod_side = false;  // pushout-product vs g
  bool lhom_side = false;  // f vs the lhom construction
  bool rhom_side = false;  // u vs the rhom construction

  bool agree() const { return prod_side == lhom_side && lhom_side == rhom_side; }
};

template <ThcSituation T>
EquivalenceReport check_tri_equivalence(const T& inst, const ArrowObject<typename T::CatA>& f,
                                        const ArrowObject<typename T::CatS>& u,
                                        const ArrowObject<typename T::CatB>& g) {
  auto prod = pushout_product(inst, f, u);
  auto lh = pullback_lhom(inst, u, g);
  auto rh = pullback_rhom(inst, f, g);
  return EquivalenceReport{has_lifting_property<typename T::CatB>(prod.result, g),
                           has_lifting_property<typename T::CatA>(f, lh.result),
                           has_lifting_property<typename T::CatS>(u, rh.result)};
}

}  // namespace thc
