#pragma once

// Exhaustive verification of a two-variable adjunction over finite pools:
// both transposes are mutually inverse bijections, natural in all three
// variables, the triangle identities hold, and units/counits satisfy their
// wedge conditions. Checks are grouped into records; a record carries the
// number of individual cases it covered and, on failure, a witness naming
// the offending data.

#include <cstdint>
#include <string>
#include <vector>

#include "thc/situation.hpp"

namespace thc {

struct CheckRecord {
  std::string id;
  std::uint64_t cases = 0;
  bool ok = true;
  std::string witness;  // empty on pass
};

struct VerificationReport {
  std::vector<CheckRecord> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }

  std::uint64_t total_cases() const {
    std::uint64_t n = 0;
    for (const auto& c : checks) n += c.cases;
    return n;
  }
};

template <ThcSituation T>
struct VerifyPools {
  std::vector<typename T::CatA::Object> objects_a;
  std::vector<typename T::CatS::Object> objects_s;
  std::vector<typename T::CatB::Object> objects_b;
  std::vector<typename T::CatA::Morphism> morphisms_a;
  std::vector<typename T::CatS::Morphism> morphisms_s;
  std::vector<typename T::CatB::Morphism> morphisms_b;
};

namespace detail {

template <class Cat>
std::string triple_tag(const typename Cat::Object&) = delete;

}  // namespace detail

template <ThcSituation T>
VerificationReport verify_thc(const T& inst, const VerifyPools<T>& pools) {
  using CatA = typename T::CatA;
  using CatS = typename T::CatS;
  using CatB = typename T::CatB;
  VerificationReport report;

  auto record = [&](std::string id, std::uint64_t cases, bool ok, std::string witness) {
    report.checks.push_back(CheckRecord{std::move(id), cases, ok, std::move(witness)});
  };

  for (const auto& a : pools.objects_a)
    for (const auto& k : pools.objects_s)
      for (const auto& b : pools.objects_b) {
        std::string tag = " a=" + CatA::describe_object(a) + " k=" + CatS::describe_object(k) +
                          " b=" + CatB::describe_object(b);
        auto ak = inst.tensor(a, k);
        auto lkb = inst.lhom_obj(k, b);
        auto rab = inst.rhom_obj(a, b);
        auto hom_tensor = CatB::hom(ak, b);
        auto hom_left = CatA::hom(a, lkb);
        auto hom_right = CatS::hom(k, rab);

        {  // left transposes: mutually inverse bijections
          bool ok = true;
          std::string witness;
          std::uint64_t cases = 0;
          for (const auto& m : hom_tensor) {
            ++cases;
            auto n = inst.transpose_left(a, k, m);
            if (!(inst.untranspose_left(a, k, b, n) == m)) {
              ok = false;
              witness = "m=" + CatB::describe(m);
              break;
            }
          }
          record("left-transpose-roundtrip" + tag, cases, ok, witness);
        }
        {
          bool ok = true;
          std::string witness;
          std::uint64_t cases = 0;
          for (const auto& n : hom_left) {
            ++cases;
            auto m = inst.untranspose_left(a, k, b, n);
            if (!(inst.transpose_left(a, k, m) == n)) {
              ok = false;
              witness = "n=" + CatA::describe(n);
              break;
            }
          }
          record("left-untranspose-roundtrip" + tag, cases, ok, witness);
        }
        {  // right transposes
          bool ok = true;
          std::string witness;
          std::uint64_t cases = 0;
          for (const auto& m : hom_tensor) {
            ++cases;
            auto n = inst.transpose_right(a, k, m);
            if (!(inst.untranspose_right(a, k, b, n) == m)) {
              ok = false;
              witness = "m=" + CatB::describe(m);
              break;
            }
          }
          record("right-transpose-roundtrip" + tag, cases, ok, witness);
        }
        {
          bool ok = true;
          std::string witness;
          std::uint64_t cases = 0;
          for (const auto& n : hom_right) {
            ++cases;
            auto m = inst.untranspose_right(a, k, b, n);
            if (!(inst.transpose_right(a, k, m) == n)) {
              ok = false;
              witness = "n=" + CatS::describe(n);
              break;
            }
          }
          record("right-untranspose-roundtrip" + tag, cases, ok, witness);
        }

        {  // mate agreement: composite route equals the direct transpose
          bool ok_l = true, ok_r = true;
          std::string wit_l, wit_r;
          std::uint64_t cases = 0;
          for (const auto& m : hom_tensor) {
            ++cases;
            if (ok_l && !(mate_left(inst, a, k, m) == inst.transpose_left(a, k, m))) {
              ok_l = false;
              wit_l = "m=" + CatB::describe(m);
            }
            if (ok_r && !(mate_right(inst, a, k, m) == inst.transpose_right(a, k, m))) {
              ok_r = false;
              wit_r = "m=" + CatB::describe(m);
            }
          }
          record("mate-left-agreement" + tag, cases, ok_l, wit_l);
          record("mate-right-agreement" + tag, cases, ok_r, wit_r);
        }

        {  // naturality of both transposes in all three variables
          bool ok_a_l = true, ok_s_l = true, ok_b_l = true;
          bool ok_a_r = true, ok_s_r = true, ok_b_r = true;
          std::string wit_a_l, wit_s_l, wit_b_l, wit_a_r, wit_s_r, wit_b_r;
          std::uint64_t n_a = 0, n_s = 0, n_b = 0;
          auto id_a = CatA::identity(a);
          auto id_k = CatS::identity(k);
          auto id_b = CatB::identity(b);
          for (const auto& m : hom_tensor) {
            auto tl = inst.transpose_left(a, k, m);
            auto tr = inst.transpose_right(a, k, m);
            for (const auto& al : pools.morphisms_a) {
              if (!(CatA::cod(al) == a)) continue;
              ++n_a;
              auto shifted = CatB::compose(inst.tensor_mor(al, id_k), m);
              if (ok_a_l &&
                  !(inst.transpose_left(CatA::dom(al), k, shifted) == CatA::compose(al, tl))) {
                ok_a_l = false;
                wit_a_l = "m=" + CatB::describe(m) + " alpha=" + CatA::describe(al);
              }
              if (ok_a_r && !(inst.transpose_right(CatA::dom(al), k, shifted) ==
                              CatS::compose(tr, inst.rhom_mor(al, id_b)))) {
                ok_a_r = false;
                wit_a_r = "m=" + CatB::describe(m) + " alpha=" + CatA::describe(al);
              }
            }
            for (const auto& sg : pools.morphisms_s) {
              if (!(CatS::cod(sg) == k)) continue;
              ++n_s;
              auto shifted = CatB::compose(inst.tensor_mor(id_a, sg), m);
              if (ok_s_l && !(inst.transpose_left(a, CatS::dom(sg), shifted) ==
                              CatA::compose(tl, inst.lhom_mor(sg, id_b)))) {
                ok_s_l = false;
                wit_s_l = "m=" + CatB::describe(m) + " sigma=" + CatS::describe(sg);
              }
              if (ok_s_r &&
                  !(inst.transpose_right(a, CatS::dom(sg), shifted) == CatS::compose(sg, tr))) {
                ok_s_r = false;
                wit_s_r = "m=" + CatB::describe(m) + " sigma=" + CatS::describe(sg);
              }
            }
            for (const auto& be : pools.morphisms_b) {
              if (!(CatB::dom(be) == b)) continue;
              ++n_b;
              auto shifted = CatB::compose(m, be);
              if (ok_b_l && !(inst.transpose_left(a, k, shifted) ==
                              CatA::compose(tl, inst.lhom_mor(id_k, be)))) {
                ok_b_l = false;
                wit_b_l = "m=" + CatB::describe(m) + " beta=" + CatB::describe(be);
              }
              if (ok_b_r && !(inst.transpose_right(a, k, shifted) ==
                              CatS::compose(tr, inst.rhom_mor(id_a, be)))) {
                ok_b_r = false;
                wit_b_r = "m=" + CatB::describe(m) + " beta=" + CatB::describe(be);
              }
            }
          }
          record("left-naturality-in-a" + tag, n_a, ok_a_l, wit_a_l);
          record("left-naturality-in-s" + tag, n_s, ok_s_l, wit_s_l);
          record("left-naturality-in-b" + tag, n_b, ok_b_l, wit_b_l);
          record("right-naturality-in-a" + tag, n_a, ok_a_r, wit_a_r);
          record("right-naturality-in-s" + tag, n_s, ok_s_r, wit_s_r);
          record("right-naturality-in-b" + tag, n_b, ok_b_r, wit_b_r);
        }
      }

  // triangle identities
  for (const auto& a : pools.objects_a)
    for (const auto& k : pools.objects_s) {
      std::string tag = " a=" + CatA::describe_object(a) + " k=" + CatS::describe_object(k);
      auto ak = inst.tensor(a, k);
      bool ok1 = CatB::compose(inst.tensor_mor(unit(inst, a, k), CatS::identity(k)),
                               counit(inst, ak, k)) == CatB::identity(ak);
      record("left-triangle-tensor" + tag, 1, ok1, ok1 ? "" : "a=" + CatA::describe_object(a));
      bool ok2 = CatB::compose(inst.tensor_mor(CatA::identity(a), unit_right(inst, k, a)),
                               counit_right(inst, ak, a)) == CatB::identity(ak);
      record("right-triangle-tensor" + tag, 1, ok2, ok2 ? "" : "a=" + CatA::describe_object(a));
    }
  for (const auto& y : pools.objects_b)
    for (const auto& k : pools.objects_s) {
      std::string tag = " y=" + CatB::describe_object(y) + " k=" + CatS::describe_object(k);
      auto lky = inst.lhom_obj(k, y);
      bool ok = CatA::compose(unit(inst, lky, k),
                              inst.lhom_mor(CatS::identity(k), counit(inst, y, k))) ==
                CatA::identity(lky);
      record("left-triangle-lhom" + tag, 1, ok, ok ? "" : "y=" + CatB::describe_object(y));
    }
  for (const auto& y : pools.objects_b)
    for (const auto& a : pools.objects_a) {
      std::string tag = " y=" + CatB::describe_object(y) + " a=" + CatA::describe_object(a);
      auto ray = inst.rhom_obj(a, y);
      bool ok = CatS::compose(unit_right(inst, ray, a),
                              inst.rhom_mor(CatA::identity(a), counit_right(inst, y, a))) ==
                CatS::identity(ray);
      record("right-triangle-rhom" + tag, 1, ok, ok ? "" : "y=" + CatB::describe_object(y));
    }

  // wedge conditions: the unit is dinatural in the hom variable
  for (const auto& a : pools.objects_a) {
    bool ok = true;
    std::string witness;
    std::uint64_t cases = 0;
    for (const auto& sg : pools.morphisms_s) {
      ++cases;
      auto k = CatS::cod(sg);
      auto k2 = CatS::dom(sg);
      auto lhs = CatA::compose(unit(inst, a, k), inst.lhom_mor(sg, CatB::identity(inst.tensor(a, k))));
      auto rhs = CatA::compose(unit(inst, a, k2),
                               inst.lhom_mor(CatS::identity(k2),
                                             inst.tensor_mor(CatA::identity(a), sg)));
      if (!(lhs == rhs)) {
        ok = false;
        witness = "sigma=" + CatS::describe(sg);
        break;
      }
    }
    record("unit-wedge a=" + CatA::describe_object(a), cases, ok, witness);
  }
  for (const auto& k : pools.objects_s) {
    bool ok = true;
    std::string witness;
    std::uint64_t cases = 0;
    for (const auto& al : pools.morphisms_a) {
      ++cases;
      auto a = CatA::cod(al);
      auto a2 = CatA::dom(al);
      auto lhs = CatS::compose(unit_right(inst, k, a),
                               inst.rhom_mor(al, CatB::identity(inst.tensor(a, k))));
      auto rhs = CatS::compose(unit_right(inst, k, a2),
                               inst.rhom_mor(CatA::identity(a2),
                                             inst.tensor_mor(al, CatS::identity(k))));
      if (!(lhs == rhs)) {
        ok = false;
        witness = "alpha=" + CatA::describe(al);
        break;
      }
    }
    record("unit-right-wedge k=" + CatS::describe_object(k), cases, ok, witness);
  }
  // counit wedges
  for (const auto& y : pools.objects_b) {
    bool ok = true;
    std::string witness;
    std::uint64_t cases = 0;
    for (const auto& sg : pools.morphisms_s) {
      ++cases;
      auto k = CatS::cod(sg);
      auto k2 = CatS::dom(sg);
      auto lhs = CatB::compose(inst.tensor_mor(inst.lhom_mor(sg, CatB::identity(y)),
                                               CatS::identity(k2)),
                               counit(inst, y, k2));
      auto rhs = CatB::compose(inst.tensor_mor(CatA::identity(inst.lhom_obj(k, y)), sg),
                               counit(inst, y, k));
      if (!(lhs == rhs)) {
        ok = false;
        witness = "sigma=" + CatS::describe(sg);
        break;
      }
    }
    record("counit-wedge y=" + CatB::describe_object(y), cases, ok, witness);
  }
  for (const auto& y : pools.objects_b) {
    bool ok = true;
    std::string witness;
    std::uint64_t cases = 0;
    for (const auto& al : pools.morphisms_a) {
      ++cases;
      auto a = CatA::cod(al);
      auto a2 = CatA::dom(al);
      auto lhs = CatB::compose(inst.tensor_mor(CatA::identity(a2),
                                               inst.rhom_mor(al, CatB::identity(y))),
                               counit_right(inst, y, a2));
      auto rhs = CatB::compose(inst.tensor_mor(al, CatS::identity(inst.rhom_obj(a, y))),
                               counit_right(inst, y, a));
      if (!(lhs == rhs)) {
        ok = false;
        witness = "alpha=" + CatA::describe(al);
        break;
      }
    }
    record("counit-right-wedge y=" + CatB::describe_object(y), cases, ok, witness);
  }

  return report;
}

}  // namespace thc
