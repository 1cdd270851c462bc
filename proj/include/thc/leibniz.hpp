#pragma once

// Leibniz operations on arrow categories, and the square-transport bijections
// between the three induced hom-sets.
//
// For f: A -> B, u: L -> K, g: X -> Y:
//   pushout_product   f<>u : P -> B(x)K,   P = po(A(x)u, f(x)L)
//   pullback_lhom   <<u,g>> : lhom(K,X) -> Q,  Q = pb(lhom(L,g), lhom(u,Y))
//   pullback_rhom   <<f,g>> : rhom(B,X) -> R,  R = pb(rhom(A,g), rhom(f,Y))
// Each result carries its mediating pushout/pullback so callers can reuse the
// canonical injections/projections.
//
// phi/psi transport squares between Hom(f<>u, g) and Hom(f, <<u,g>>);
// phi_r/psi_r between Hom(f<>u, g) and Hom(u, <<f,g>>). They are written as
// explicit unit/counit formulas componentwise; the cone/cocone compatibility
// equations they rely on are asserted at runtime on every call, and the
// resulting squares are re-validated at construction.

#include <string>

#include "thc/arrow.hpp"
#include "thc/category.hpp"
#include "thc/error.hpp"
#include "thc/situation.hpp"

namespace thc {

template <ThcSituation T>
struct TensorLeibniz {
  ArrowObject<typename T::CatB> result;      // P -> B(x)K
  typename T::CatB::PushoutResult mediator;  // P; inj_first from A(x)K, inj_second from B(x)L
};

template <ThcSituation T>
struct LhomLeibniz {
  ArrowObject<typename T::CatA> result;       // lhom(K,X) -> Q
  typename T::CatA::PullbackResult mediator;  // Q; proj_first to lhom(L,X), proj_second to lhom(K,Y)
};

template <ThcSituation T>
struct RhomLeibniz {
  ArrowObject<typename T::CatS> result;       // rhom(B,X) -> R
  typename T::CatS::PullbackResult mediator;  // R; proj_first to rhom(A,X), proj_second to rhom(B,Y)
};

template <ThcSituation T>
TensorLeibniz<T> pushout_product(const T& inst, const ArrowObject<typename T::CatA>& f,
                                 const ArrowObject<typename T::CatS>& u) {
  using CatA = typename T::CatA;
  using CatS = typename T::CatS;
  using CatB = typename T::CatB;
  auto id_a = CatA::identity(f.dom());
  auto id_b = CatA::identity(f.cod());
  auto id_l = CatS::identity(u.dom());
  auto id_k = CatS::identity(u.cod());
  auto po = CatB::pushout(inst.tensor_mor(id_a, u.morphism), inst.tensor_mor(f.morphism, id_l));
  auto arrow = CatB::copair(po, inst.tensor_mor(f.morphism, id_k),
                            inst.tensor_mor(id_b, u.morphism));
  return TensorLeibniz<T>{ArrowObject<CatB>{std::move(arrow)}, std::move(po)};
}

template <ThcSituation T>
LhomLeibniz<T> pullback_lhom(const T& inst, const ArrowObject<typename T::CatS>& u,
                             const ArrowObject<typename T::CatB>& g) {
  using CatA = typename T::CatA;
  using CatS = typename T::CatS;
  using CatB = typename T::CatB;
  auto id_l = CatS::identity(u.dom());
  auto id_k = CatS::identity(u.cod());
  auto id_x = CatB::identity(g.dom());
  auto id_y = CatB::identity(g.cod());
  auto pb = CatA::pullback(inst.lhom_mor(id_l, g.morphism), inst.lhom_mor(u.morphism, id_y));
  auto arrow = CatA::pair_into(pb, inst.lhom_mor(u.morphism, id_x),
                               inst.lhom_mor(id_k, g.morphism));
  return LhomLeibniz<T>{ArrowObject<CatA>{std::move(arrow)}, std::move(pb)};
}

template <ThcSituation T>
RhomLeibniz<T> pullback_rhom(const T& inst, const ArrowObject<typename T::CatA>& f,
                             const ArrowObject<typename T::CatB>& g) {
  using CatA = typename T::CatA;
  using CatS = typename T::CatS;
  using CatB = typename T::CatB;
  auto id_a = CatA::identity(f.dom());
  auto id_b = CatA::identity(f.cod());
  auto id_x = CatB::identity(g.dom());
  auto id_y = CatB::identity(g.cod());
  auto pb = CatS::pullback(inst.rhom_mor(id_a, g.morphism), inst.rhom_mor(f.morphism, id_y));
  auto arrow = CatS::pair_into(pb, inst.rhom_mor(f.morphism, id_x),
                               inst.rhom_mor(id_b, g.morphism));
  return RhomLeibniz<T>{ArrowObject<CatS>{std::move(arrow)}, std::move(pb)};
}

// ---------------------------------------------------------------------------
// Functorial action on squares. Contravariant slots reverse direction:
// a pair of squares (f -> f2, u -> u2) induces f<>u -> f2<>u2, while
// (u -> u2, g -> g2) induces <<u2,g>> -> <<u,g2>> and similarly for rhom.

template <ThcSituation T>
Square<typename T::CatB> leibniz_on_squares(const T& inst, const Square<typename T::CatA>& sf,
                                            const Square<typename T::CatS>& su) {
  using CatB = typename T::CatB;
  auto src = pushout_product(inst, sf.source, su.source);
  auto dst = pushout_product(inst, sf.target, su.target);
  auto top = CatB::copair(
      src.mediator,
      CatB::compose(inst.tensor_mor(sf.top, su.bottom), dst.mediator.inj_first),
      CatB::compose(inst.tensor_mor(sf.bottom, su.top), dst.mediator.inj_second));
  auto bottom = inst.tensor_mor(sf.bottom, su.bottom);
  return make_square<CatB>(src.result, dst.result, top, bottom);
}

template <ThcSituation T>
Square<typename T::CatA> lhom_leibniz_on_squares(const T& inst, const Square<typename T::CatS>& su,
                                                 const Square<typename T::CatB>& sg) {
  using CatA = typename T::CatA;
  auto src = pullback_lhom(inst, su.target, sg.source);
  auto dst = pullback_lhom(inst, su.source, sg.target);
  auto top = inst.lhom_mor(su.bottom, sg.top);
  auto bottom = CatA::pair_into(
      dst.mediator,
      CatA::compose(src.mediator.proj_first, inst.lhom_mor(su.top, sg.top)),
      CatA::compose(src.mediator.proj_second, inst.lhom_mor(su.bottom, sg.bottom)));
  return make_square<CatA>(src.result, dst.result, top, bottom);
}

template <ThcSituation T>
Square<typename T::CatS> rhom_leibniz_on_squares(const T& inst, const Square<typename T::CatA>& sf,
                                                 const Square<typename T::CatB>& sg) {
  using CatS = typename T::CatS;
  auto src = pullback_rhom(inst, sf.target, sg.source);
  auto dst = pullback_rhom(inst, sf.source, sg.target);
  auto top = inst.rhom_mor(sf.bottom, sg.top);
  auto bottom = CatS::pair_into(
      dst.mediator,
      CatS::compose(src.mediator.proj_first, inst.rhom_mor(sf.top, sg.top)),
      CatS::compose(src.mediator.proj_second, inst.rhom_mor(sf.bottom, sg.bottom)));
  return make_square<CatS>(src.result, dst.result, top, bottom);
}

// ---------------------------------------------------------------------------
// Square transport. phi sends a square (a, b): f<>u -> g to the square
// (a-hat, b-hat): f -> <<u,g>> whose components are mates of a and b composed
// with the canonical injections; psi is its inverse, built from counits and
// the projections. The pair of projection equations that makes b-hat well
// defined (and the dual cocone equation inside psi) is checked explicitly:
// the pullback projections are jointly monic and the pushout injections
// jointly epic, so these equations pin the result uniquely.

template <ThcSituation T>
Square<typename T::CatA> phi(const T& inst, const ArrowObject<typename T::CatA>& f,
                             const ArrowObject<typename T::CatS>& u,
                             const ArrowObject<typename T::CatB>& g,
                             const Square<typename T::CatB>& sq) {
  using CatA = typename T::CatA;
  using CatS = typename T::CatS;
  using CatB = typename T::CatB;
  auto prod = pushout_product(inst, f, u);
  require(sq.source == prod.result, "phi-shape",
          "square source is not the canonical pushout-product of the given arrows");
  require(sq.target == g, "phi-shape", "square target is not the given arrow");
  auto lh = pullback_lhom(inst, u, g);

  auto id_l = CatS::identity(u.dom());
  auto id_k = CatS::identity(u.cod());
  const auto& a = sq.top;
  const auto& b = sq.bottom;

  auto a_hat = CatA::compose(unit(inst, f.dom(), u.cod()),
                             inst.lhom_mor(id_k, CatB::compose(prod.mediator.inj_first, a)));
  auto b_lx = CatA::compose(unit(inst, f.cod(), u.dom()),
                            inst.lhom_mor(id_l, CatB::compose(prod.mediator.inj_second, a)));
  auto b_ky = CatA::compose(unit(inst, f.cod(), u.cod()), inst.lhom_mor(id_k, b));
  auto b_hat = CatA::pair_into(lh.mediator, b_lx, b_ky);

  // Joint monicity of the projections reduces commutativity of the result to
  // these two equations; check them, then let the constructor re-verify.
  auto lhs = CatA::compose(a_hat, lh.result.morphism);
  auto rhs = CatA::compose(f.morphism, b_hat);
  require(CatA::compose(lhs, lh.mediator.proj_first) == CatA::compose(rhs, lh.mediator.proj_first),
          "phi-projection", "first projection equation failed");
  require(CatA::compose(lhs, lh.mediator.proj_second) ==
              CatA::compose(rhs, lh.mediator.proj_second),
          "phi-projection", "second projection equation failed");
  return make_square<CatA>(f, lh.result, a_hat, b_hat);
}

template <ThcSituation T>
Square<typename T::CatB> psi(const T& inst, const ArrowObject<typename T::CatA>& f,
                             const ArrowObject<typename T::CatS>& u,
                             const ArrowObject<typename T::CatB>& g,
                             const Square<typename T::CatA>& sq) {
  using CatA = typename T::CatA;
  using CatS = typename T::CatS;
  using CatB = typename T::CatB;
  auto lh = pullback_lhom(inst, u, g);
  require(sq.source == f, "psi-shape", "square source is not the given arrow");
  require(sq.target == lh.result, "psi-shape",
          "square target is not the canonical pullback construction for the given arrows");
  auto prod = pushout_product(inst, f, u);

  auto id_l = CatS::identity(u.dom());
  auto id_k = CatS::identity(u.cod());
  const auto& x = sq.top;
  const auto& y = sq.bottom;

  auto x_ak = CatB::compose(inst.tensor_mor(x, id_k), counit(inst, g.dom(), u.cod()));
  auto x_bl = CatB::compose(inst.tensor_mor(CatA::compose(y, lh.mediator.proj_first), id_l),
                            counit(inst, g.dom(), u.dom()));
  // copair rejects the pair unless it agrees on every identified element,
  // which is exactly the cocone equation the construction needs.
  auto x_tilde = CatB::copair(prod.mediator, x_ak, x_bl);
  auto y_tilde = CatB::compose(inst.tensor_mor(CatA::compose(y, lh.mediator.proj_second), id_k),
                               counit(inst, g.cod(), u.cod()));
  return make_square<CatB>(prod.result, g, x_tilde, y_tilde);
}

// Role-swapped transport along the second adjunction: squares f<>u -> g
// correspond to squares u -> <<f,g>> with mates taken through rhom.

template <ThcSituation T>
Square<typename T::CatS> phi_r(const T& inst, const ArrowObject<typename T::CatA>& f,
                               const ArrowObject<typename T::CatS>& u,
                               const ArrowObject<typename T::CatB>& g,
                               const Square<typename T::CatB>& sq) {
  using CatA = typename T::CatA;
  using CatS = typename T::CatS;
  using CatB = typename T::CatB;
  auto prod = pushout_product(inst, f, u);
  require(sq.source == prod.result, "phi-shape",
          "square source is not the canonical pushout-product of the given arrows");
  require(sq.target == g, "phi-shape", "square target is not the given arrow");
  auto rh = pullback_rhom(inst, f, g);

  auto id_a = CatA::identity(f.dom());
  auto id_b = CatA::identity(f.cod());
  const auto& a = sq.top;
  const auto& b = sq.bottom;

  auto a_check = CatS::compose(unit_right(inst, u.dom(), f.cod()),
                               inst.rhom_mor(id_b, CatB::compose(prod.mediator.inj_second, a)));
  auto b_ax = CatS::compose(unit_right(inst, u.cod(), f.dom()),
                            inst.rhom_mor(id_a, CatB::compose(prod.mediator.inj_first, a)));
  auto b_by = CatS::compose(unit_right(inst, u.cod(), f.cod()), inst.rhom_mor(id_b, b));
  auto b_check = CatS::pair_into(rh.mediator, b_ax, b_by);

  auto lhs = CatS::compose(a_check, rh.result.morphism);
  auto rhs = CatS::compose(u.morphism, b_check);
  require(CatS::compose(lhs, rh.mediator.proj_first) == CatS::compose(rhs, rh.mediator.proj_first),
          "phi-projection", "first projection equation failed");
  require(CatS::compose(lhs, rh.mediator.proj_second) ==
              CatS::compose(rhs, rh.mediator.proj_second),
          "phi-projection", "second projection equation failed");
  return make_square<CatS>(u, rh.result, a_check, b_check);
}

template <ThcSituation T>
Square<typename T::CatB> psi_r(const T& inst, const ArrowObject<typename T::CatA>& f,
                               const ArrowObject<typename T::CatS>& u,
                               const ArrowObject<typename T::CatB>& g,
                               const Square<typename T::CatS>& sq) {
  using CatA = typename T::CatA;
  using CatS = typename T::CatS;
  using CatB = typename T::CatB;
  auto rh = pullback_rhom(inst, f, g);
  require(sq.source == u, "psi-shape", "square source is not the given arrow");
  require(sq.target == rh.result, "psi-shape",
          "square target is not the canonical pullback construction for the given arrows");
  auto prod = pushout_product(inst, f, u);

  auto id_a = CatA::identity(f.dom());
  auto id_b = CatA::identity(f.cod());
  const auto& x = sq.top;
  const auto& y = sq.bottom;

  auto x_bl = CatB::compose(inst.tensor_mor(id_b, x), counit_right(inst, g.dom(), f.cod()));
  auto x_ak = CatB::compose(inst.tensor_mor(id_a, CatS::compose(y, rh.mediator.proj_first)),
                            counit_right(inst, g.dom(), f.dom()));
  auto x_tilde = CatB::copair(prod.mediator, x_ak, x_bl);
  auto y_tilde = CatB::compose(inst.tensor_mor(id_b, CatS::compose(y, rh.mediator.proj_second)),
                               counit_right(inst, g.cod(), f.cod()));
  return make_square<CatB>(prod.result, g, x_tilde, y_tilde);
}

}  // namespace thc
