#include <catch2/catch_amalgamated.hpp>

#include <utility>
#include <vector>

#include "helpers.hpp"
#include "thc/poset.hpp"

using thc::antichain;
using thc::chain;
using thc::make_monotone;
using thc::make_poset;
using thc::MonotoneMap;
using thc::PosetObject;
using testutil::error_code_of;

namespace {

// Unique-factorization counters, mirrors of the finset ones.
int poset_pushout_factorizations(const thc::PosetPushout& po, const MonotoneMap& j1,
                                 const MonotoneMap& j2) {
  int n = 0;
  for (const auto& h : thc::hom(po.object, j1.cod))
    if (thc::compose(po.inj_first, h) == j1 && thc::compose(po.inj_second, h) == j2) ++n;
  return n;
}

int poset_pullback_factorizations(const thc::PosetPullback& pb, const MonotoneMap& c1,
                                  const MonotoneMap& c2) {
  int n = 0;
  for (const auto& h : thc::hom(c1.dom, pb.object))
    if (thc::compose(h, pb.proj_first) == c1 && thc::compose(h, pb.proj_second) == c2) ++n;
  return n;
}

}  // namespace

TEST_CASE("poset construction", "[poset]") {
  PosetObject c3 = chain(3);
  CHECK(c3.size == 3);
  CHECK(c3.le(0, 2));  // transitive closure
  CHECK(c3.le(1, 1));
  CHECK_FALSE(c3.le(2, 0));
  CHECK(thc::describe(chain(2)) == "poset2{0<=1}");

  PosetObject a2 = antichain(2);
  CHECK_FALSE(a2.le(0, 1));
  CHECK_FALSE(a2.le(1, 0));

  CHECK(error_code_of([] { make_poset(2, {{0, 1}, {1, 0}}); }) == "poset-antisymmetry");
  CHECK(error_code_of([] { make_poset(2, {{0, 2}}); }) == "poset-pair-range");
  CHECK(error_code_of([] { make_poset(-1, {}); }) == "poset-size");
}

TEST_CASE("monotone maps", "[poset]") {
  CHECK(error_code_of([] { make_monotone(chain(2), chain(2), {1, 0}); }) == "not-monotone");
  CHECK(error_code_of([] { make_monotone(chain(2), chain(2), {0}); }) == "morphism-table-length");
  CHECK(error_code_of([] { make_monotone(chain(2), chain(2), {0, 2}); }) ==
        "morphism-table-range");
  // from an antichain every table is monotone
  CHECK(error_code_of([] { make_monotone(antichain(2), chain(2), {1, 0}); }).empty());

  auto maps = thc::hom(chain(2), chain(2));
  REQUIRE(maps.size() == 3);
  CHECK(maps[0].table == std::vector<int>{0, 0});
  CHECK(maps[1].table == std::vector<int>{0, 1});
  CHECK(maps[2].table == std::vector<int>{1, 1});

  CHECK(thc::hom(chain(3), chain(2)).size() == 4);   // non-decreasing 3 -> 2
  CHECK(thc::hom(antichain(2), chain(2)).size() == 4);
  CHECK(thc::hom(chain(0), chain(2)).size() == 1);
  CHECK(thc::hom(chain(2), chain(0)).empty());

  // composition agrees with table substitution and is associative
  for (const auto& f : thc::hom(chain(2), antichain(2)))
    for (const auto& g : thc::hom(antichain(2), chain(2)))
      for (const auto& h : thc::hom(chain(2), chain(3)))
        CHECK(thc::compose(thc::compose(f, g), h) == thc::compose(f, thc::compose(g, h)));
}

TEST_CASE("poset products", "[poset]") {
  PosetObject grid = thc::poset_product(chain(2), chain(2));
  REQUIRE(grid.size == 4);
  // row-major pairs: 0=(0,0) 1=(0,1) 2=(1,0) 3=(1,1), ordered componentwise
  CHECK(grid.le(0, 3));
  CHECK(grid.le(0, 1));
  CHECK(grid.le(2, 3));
  CHECK_FALSE(grid.le(1, 2));
  CHECK_FALSE(grid.le(2, 1));

  MonotoneMap f = thc::identity(chain(2));
  MonotoneMap g = make_monotone(chain(2), chain(2), {0, 0});
  CHECK(thc::poset_product_map(f, g).table == std::vector<int>{0, 0, 2, 2});
}

TEST_CASE("poset exponentials", "[poset]") {
  auto e = thc::poset_exponential(chain(2), chain(2));
  REQUIRE(e.object.size == 3);
  CHECK(e.tables[0] == std::vector<int>{0, 0});
  CHECK(e.tables[1] == std::vector<int>{0, 1});
  CHECK(e.tables[2] == std::vector<int>{1, 1});
  // pointwise order makes this a chain
  CHECK(e.object.le(0, 1));
  CHECK(e.object.le(1, 2));
  CHECK(e.object.le(0, 2));
  CHECK_FALSE(e.object.le(1, 0));

  // functions from a 2-antichain form the 2x2 grid
  auto sq = thc::poset_exponential(antichain(2), chain(2));
  REQUIRE(sq.object.size == 4);
  int comparable = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && sq.object.le(i, j)) ++comparable;
  CHECK(comparable == 5);  // bottom<all (3) + all<top (3) minus double-counted bottom<top

  for (std::size_t r = 0; r < e.tables.size(); ++r)
    CHECK(thc::monotone_rank(e, e.tables[r]) == static_cast<int>(r));
  CHECK(error_code_of([&] { thc::monotone_rank(e, {1, 0}); }) == "exponential-rank");
}

TEST_CASE("poset currying is the exponential adjunction", "[poset]") {
  PosetObject a = chain(2), k = chain(2), x = chain(2);
  MonotoneMap meet = make_monotone(thc::poset_product(a, k), x, {0, 0, 0, 1});
  MonotoneMap n = thc::poset_curry(a, k, meet);
  CHECK(n.table == std::vector<int>{0, 1});
  CHECK(thc::poset_uncurry(a, k, x, n) == meet);

  // bijection hom(a x k, x) <-> hom(a, x^k) for mixed shapes
  for (const auto& ka : {chain(2), antichain(2)}) {
    PosetObject prod = thc::poset_product(a, ka);
    PosetObject expo = thc::poset_exponential(ka, x).object;
    auto lhs = thc::hom(prod, x);
    auto rhs = thc::hom(a, expo);
    CHECK(lhs.size() == rhs.size());
    for (const auto& f : lhs) {
      MonotoneMap c = thc::poset_curry(a, ka, f);
      CHECK(c.cod == expo);
      CHECK(thc::poset_uncurry(a, ka, x, c) == f);
    }
    for (const auto& m : rhs) {
      MonotoneMap u = thc::poset_uncurry(a, ka, x, m);
      CHECK(thc::poset_curry(a, ka, u) == m);
    }
  }
}

TEST_CASE("poset pushouts", "[poset]") {
  SECTION("amalgam of two chains is a longer chain") {
    MonotoneMap f = make_monotone(chain(1), chain(2), {1});
    MonotoneMap g = make_monotone(chain(1), chain(2), {0});
    auto po = thc::poset_pushout(f, g);
    CHECK(po.object == chain(3));
    CHECK(po.inj_first.table == std::vector<int>{0, 1});
    CHECK(po.inj_second.table == std::vector<int>{1, 2});
    CHECK(po.class_of == std::vector<int>{0, 1, 1, 2});
  }

  SECTION("order cycles collapse to a point") {
    MonotoneMap f = make_monotone(antichain(2), chain(2), {0, 1});
    MonotoneMap g = make_monotone(antichain(2), chain(2), {1, 0});
    auto po = thc::poset_pushout(f, g);
    CHECK(po.object.size == 1);
    CHECK(po.inj_first.table == std::vector<int>{0, 0});
    CHECK(po.inj_second.table == std::vector<int>{0, 0});
  }

  SECTION("copair factors cocones uniquely") {
    MonotoneMap f = make_monotone(chain(1), chain(2), {1});
    MonotoneMap g = make_monotone(chain(1), chain(2), {0});
    auto po = thc::poset_pushout(f, g);
    int cocones = 0;
    for (const auto& j1 : thc::hom(chain(2), chain(3)))
      for (const auto& j2 : thc::hom(chain(2), chain(3))) {
        if (thc::compose(f, j1) != thc::compose(g, j2)) continue;
        ++cocones;
        MonotoneMap h = thc::poset_copair(po, j1, j2);
        CHECK(thc::compose(po.inj_first, h) == j1);
        CHECK(thc::compose(po.inj_second, h) == j2);
        CHECK(poset_pushout_factorizations(po, j1, j2) == 1);
      }
    CHECK(cocones > 0);
    CHECK(error_code_of([&] {
            thc::poset_copair(po, make_monotone(chain(2), chain(2), {0, 0}),
                              make_monotone(chain(2), chain(2), {1, 1}));
          }) == "copair-cocone");
  }
}

TEST_CASE("poset pullbacks", "[poset]") {
  SECTION("pullback over a point is the product") {
    MonotoneMap f = make_monotone(chain(2), chain(1), {0, 0});
    MonotoneMap g = make_monotone(chain(2), chain(1), {0, 0});
    auto pb = thc::poset_pullback(f, g);
    CHECK(pb.object == thc::poset_product(chain(2), chain(2)));
    CHECK(pb.pairs ==
          std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  }

  SECTION("fiber of a point inclusion") {
    MonotoneMap f = thc::identity(chain(2));
    MonotoneMap g = make_monotone(chain(1), chain(2), {1});
    auto pb = thc::poset_pullback(f, g);
    CHECK(pb.object.size == 1);
    CHECK(pb.pairs == std::vector<std::pair<int, int>>{{1, 0}});
  }

  SECTION("pair_into factors cones uniquely") {
    MonotoneMap f = make_monotone(chain(2), chain(1), {0, 0});
    MonotoneMap g = make_monotone(antichain(2), chain(1), {0, 0});
    auto pb = thc::poset_pullback(f, g);
    for (const auto& c1 : thc::hom(chain(2), chain(2)))
      for (const auto& c2 : thc::hom(chain(2), antichain(2))) {
        MonotoneMap h = thc::poset_pair_into(pb, c1, c2);
        CHECK(thc::compose(h, pb.proj_first) == c1);
        CHECK(thc::compose(h, pb.proj_second) == c2);
        CHECK(poset_pullback_factorizations(pb, c1, c2) == 1);
      }

    MonotoneMap id2 = thc::identity(chain(2));
    MonotoneMap pt = make_monotone(chain(1), chain(2), {1});
    auto narrow = thc::poset_pullback(id2, pt);
    CHECK(error_code_of([&] {
            thc::poset_pair_into(narrow, make_monotone(chain(1), chain(2), {0}),
                                 thc::identity(chain(1)));
          }) == "pair-cone");
  }
}

TEST_CASE("poset category trait", "[poset]") {
  using C = thc::PosetCat;
  CHECK(C::is_iso(thc::identity(chain(2))));
  // monotone bijection that does not reflect order
  CHECK_FALSE(C::is_iso(make_monotone(antichain(2), chain(2), {0, 1})));
  CHECK_FALSE(C::is_iso(make_monotone(chain(2), chain(2), {0, 0})));

  CHECK(C::find_iso(chain(2), chain(2)) == thc::identity(chain(2)));
  CHECK_FALSE(C::find_iso(antichain(2), chain(2)).has_value());
  PosetObject flipped = make_poset(2, {{1, 0}});
  auto iso = C::find_iso(chain(2), flipped);
  REQUIRE(iso.has_value());
  CHECK(iso->table == std::vector<int>{1, 0});
  CHECK(C::is_iso(*iso));
}
