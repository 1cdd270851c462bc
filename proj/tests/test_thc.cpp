#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "helpers.hpp"
#include "thc/category.hpp"
#include "thc/situation.hpp"
#include "thc/verify.hpp"

using thc::FinMorphism;
using thc::FinObject;
using thc::FinSetCartesian;

namespace {

FinMorphism fm(int dom, int cod, std::vector<int> table) {
  return thc::make_fin_morphism(FinObject{dom}, FinObject{cod}, std::move(table));
}

template <class T = FinSetCartesian>
thc::VerifyPools<T> finset_pools(int max_size) {
  thc::VerifyPools<T> pools;
  for (int n = 0; n <= max_size; ++n) {
    pools.objects_a.push_back(FinObject{n});
    pools.objects_s.push_back(FinObject{n});
    pools.objects_b.push_back(FinObject{n});
  }
  for (int a = 0; a <= max_size; ++a)
    for (int b = 0; b <= max_size; ++b)
      for (const auto& m : thc::hom(FinObject{a}, FinObject{b})) {
        pools.morphisms_a.push_back(m);
        pools.morphisms_s.push_back(m);
        pools.morphisms_b.push_back(m);
      }
  return pools;
}

thc::VerifyPools<thc::PosetCartesian> poset_pools() {
  thc::VerifyPools<thc::PosetCartesian> pools;
  std::vector<thc::PosetObject> objs = {thc::chain(0), thc::chain(1), thc::chain(2),
                                        thc::antichain(2)};
  pools.objects_a = objs;
  pools.objects_s = objs;
  pools.objects_b = objs;
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& m : thc::hom(x, y)) {
        pools.morphisms_a.push_back(m);
        pools.morphisms_s.push_back(m);
        pools.morphisms_b.push_back(m);
      }
  return pools;
}

}  // namespace

static_assert(thc::Category<thc::FinSetCat>);
static_assert(thc::Category<thc::PosetCat>);
static_assert(thc::ThcSituation<thc::FinSetCartesian>);
static_assert(thc::ThcSituation<thc::PosetCartesian>);

TEST_CASE("cartesian operations on finite sets", "[thc]") {
  FinSetCartesian inst;
  CHECK(inst.tensor(FinObject{2}, FinObject{3}) == FinObject{6});
  CHECK(inst.lhom_obj(FinObject{2}, FinObject{3}) == FinObject{9});
  CHECK(inst.rhom_obj(FinObject{2}, FinObject{3}) == FinObject{9});

  // one-variable actions on a point inclusion
  FinMorphism u = fm(1, 2, {0});
  FinMorphism id2 = thc::identity(FinObject{2});
  CHECK(inst.tensor_mor(u, id2) == thc::product_map(u, id2));
  CHECK(inst.lhom_mor(u, id2).table == std::vector<int>{0, 0, 1, 1});
  CHECK(inst.rhom_mor(u, id2).table == std::vector<int>{0, 0, 1, 1});

  // both functor actions preserve identities and composition
  FinMorphism v = fm(2, 2, {1, 1});
  FinMorphism g = fm(2, 3, {2, 0});
  CHECK(inst.lhom_mor(thc::identity(FinObject{2}), thc::identity(FinObject{3})) ==
        thc::identity(FinObject{9}));
  CHECK(inst.lhom_mor(thc::compose(u, v), g) ==
        thc::compose(inst.lhom_mor(v, thc::identity(FinObject{2})), inst.lhom_mor(u, g)));
  CHECK(inst.rhom_mor(thc::compose(u, v), g) ==
        thc::compose(inst.rhom_mor(v, thc::identity(FinObject{2})), inst.rhom_mor(u, g)));
}

TEST_CASE("transposes on frozen examples", "[thc]") {
  FinSetCartesian inst;
  FinMorphism m = fm(2, 2, {0, 1});
  CHECK(inst.transpose_left(FinObject{1}, FinObject{2}, m).table == std::vector<int>{1});
  CHECK(inst.transpose_right(FinObject{2}, FinObject{1}, m).table == std::vector<int>{1});

  CHECK(thc::unit(inst, FinObject{1}, FinObject{3}).table == std::vector<int>{5});
  CHECK(thc::counit(inst, FinObject{2}, FinObject{1}).table == std::vector<int>{0, 1});
  CHECK(thc::unit_right(inst, FinObject{1}, FinObject{3}).table == std::vector<int>{5});
  CHECK(thc::counit_right(inst, FinObject{2}, FinObject{1}).table == std::vector<int>{0, 1});

  // triangle identities spelled out at a fixed shape
  FinObject a{2}, k{2};
  FinObject ak = inst.tensor(a, k);
  CHECK(thc::compose(inst.tensor_mor(thc::unit(inst, a, k), thc::identity(k)),
                     thc::counit(inst, ak, k)) == thc::identity(ak));
  CHECK(thc::compose(inst.tensor_mor(thc::identity(a), thc::unit_right(inst, k, a)),
                     thc::counit_right(inst, ak, a)) == thc::identity(ak));
}

TEST_CASE("mates agree with transposes and are bijective", "[thc]") {
  FinSetCartesian inst;
  FinObject a{2}, k{2}, b{2};
  FinObject ak = inst.tensor(a, k);
  std::set<std::vector<int>> left_mates, right_mates;
  for (const auto& m : thc::hom(ak, b)) {
    FinMorphism left = thc::mate_left(inst, a, k, m);
    CHECK(left == inst.transpose_left(a, k, m));
    CHECK(thc::unmate_left(inst, a, k, b, left) == m);
    left_mates.insert(left.table);

    FinMorphism right = thc::mate_right(inst, a, k, m);
    CHECK(right == inst.transpose_right(a, k, m));
    CHECK(thc::unmate_right(inst, a, k, b, right) == m);
    right_mates.insert(right.table);
  }
  CHECK(left_mates.size() == 16);
  CHECK(right_mates.size() == 16);
}

TEST_CASE("adjunction verifier passes on finite sets", "[thc]") {
  FinSetCartesian inst;
  auto report = thc::verify_thc(inst, finset_pools<>(2));
  for (const auto& c : report.checks) {
    INFO(c.id << " witness: " << c.witness);
    CHECK(c.ok);
  }
  CHECK(report.passed());
  CHECK(report.total_cases() > 1000);
}

TEST_CASE("adjunction verifier passes on posets", "[thc]") {
  thc::PosetCartesian inst;
  auto report = thc::verify_thc(inst, poset_pools());
  for (const auto& c : report.checks) {
    INFO(c.id << " witness: " << c.witness);
    CHECK(c.ok);
  }
  CHECK(report.passed());
}

TEST_CASE("verifier is vacuous on empty pools", "[thc]") {
  FinSetCartesian inst;
  auto report = thc::verify_thc(inst, {});
  CHECK(report.passed());
  CHECK(report.total_cases() == 0);
}

TEST_CASE("verifier detects a corrupted transpose", "[thc]") {
  using Broken = thc::SwapTransposeLeft<FinSetCartesian>;
  Broken broken{FinSetCartesian{}, FinObject{2}, FinObject{2}, FinObject{2}, 0, 1};
  auto report = thc::verify_thc(broken, finset_pools<Broken>(2));
  CHECK_FALSE(report.passed());

  bool roundtrip_failed = false;
  for (const auto& c : report.checks) {
    if (!c.ok) {
      // the fault only touches the left transpose
      CHECK(c.id.find("left") != std::string::npos);
      CHECK_FALSE(c.witness.empty());
    }
    if (c.id == "left-transpose-roundtrip a=2 k=2 b=2" && !c.ok) roundtrip_failed = true;
  }
  CHECK(roundtrip_failed);
}
