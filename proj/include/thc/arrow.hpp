#pragma once

// Arrow categories. An object is a morphism of the base category, a morphism
// from f to g is a commuting square (top, bottom) with cod(top) = dom(g),
// i.e. compose(top, g) == compose(f, bottom).
//
// Canonical enumeration order for squares: lexicographic in
// (top table, bottom table).

#include <algorithm>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "thc/category.hpp"
#include "thc/error.hpp"
#include "thc/finset.hpp"

namespace thc {

template <Category C>
struct ArrowObject {
  typename C::Morphism morphism;

  typename C::Object dom() const { return C::dom(morphism); }
  typename C::Object cod() const { return C::cod(morphism); }

  friend auto operator<=>(const ArrowObject&, const ArrowObject&) = default;
};

template <Category C>
struct Square {
  ArrowObject<C> source;
  ArrowObject<C> target;
  typename C::Morphism top;     // dom(source) -> dom(target)
  typename C::Morphism bottom;  // cod(source) -> cod(target)

  friend auto operator<=>(const Square&, const Square&) = default;
};

template <Category C>
std::string describe(const Square<C>& s) {
  return "square[" + C::describe(s.source.morphism) + " => " + C::describe(s.target.morphism) +
         "; top " + C::describe(s.top) + ", bottom " + C::describe(s.bottom) + "]";
}

// Commutativity is checked at construction; squares built any other way are
// not trusted by the rest of the code.
template <Category C>
Square<C> make_square(const ArrowObject<C>& source, const ArrowObject<C>& target,
                      const typename C::Morphism& top, const typename C::Morphism& bottom) {
  require(C::dom(top) == source.dom() && C::cod(top) == target.dom(), "square-shape",
          "top " + C::describe(top) + " does not run dom(" + C::describe(source.morphism) +
              ") -> dom(" + C::describe(target.morphism) + ")");
  require(C::dom(bottom) == source.cod() && C::cod(bottom) == target.cod(), "square-shape",
          "bottom " + C::describe(bottom) + " does not run cod(" + C::describe(source.morphism) +
              ") -> cod(" + C::describe(target.morphism) + ")");
  require(C::compose(top, target.morphism) == C::compose(source.morphism, bottom),
          "square-not-commuting",
          "square does not commute: top " + C::describe(top) + ", bottom " + C::describe(bottom));
  return Square<C>{source, target, top, bottom};
}

template <Category C>
Square<C> identity_square(const ArrowObject<C>& f) {
  return Square<C>{f, f, C::identity(f.dom()), C::identity(f.cod())};
}

template <Category C>
Square<C> compose_squares(const Square<C>& s, const Square<C>& t) {
  require(s.target == t.source, "square-compose-mismatch",
          "middle arrow objects differ: " + C::describe(s.target.morphism) + " vs " +
              C::describe(t.source.morphism));
  return Square<C>{s.source, t.target, C::compose(s.top, t.top), C::compose(s.bottom, t.bottom)};
}

// Number of commuting squares f -> g. For finite sets this is the closed
// product-of-fibers form; other categories count by filtering.
template <Category C>
std::uint64_t count_squares(const ArrowObject<C>& f, const ArrowObject<C>& g) {
  if constexpr (std::is_same_v<C, FinSetCat>) {
    // Pick bottom freely on each element of cod(f); every element of a fiber
    // of f then independently picks a preimage under g.
    int nb = f.cod().size;
    int ny = g.cod().size;
    std::vector<int> fiber_size(static_cast<std::size_t>(nb), 0);
    for (int v : f.morphism.table) ++fiber_size[v];
    std::vector<std::uint64_t> g_fiber(static_cast<std::size_t>(ny), 0);
    for (int v : g.morphism.table) ++g_fiber[v];
    std::uint64_t total = 1;
    for (int b = 0; b < nb; ++b) {
      std::uint64_t term = 0;
      for (int y = 0; y < ny; ++y)
        term = checked_add(term, ipow(g_fiber[y], static_cast<std::uint64_t>(fiber_size[b])));
      total = checked_mul(total, term);
    }
    return total;
  } else {
    std::uint64_t n = 0;
    auto tops = C::hom(f.dom(), g.dom());
    auto bottoms = C::hom(f.cod(), g.cod());
    for (const auto& top : tops) {
      auto want = C::compose(top, g.morphism);
      for (const auto& bottom : bottoms)
        if (want == C::compose(f.morphism, bottom)) ++n;
    }
    return n;
  }
}

// All commuting squares f -> g, lexicographic in (top, bottom). Refuses to
// materialize more than `cap` squares.
template <Category C>
std::vector<Square<C>> enumerate_squares(const ArrowObject<C>& f, const ArrowObject<C>& g,
                                         std::uint64_t cap = (1u << 22)) {
  std::uint64_t n = count_squares(f, g);
  require(n <= cap, "enumeration-too-large",
          "hom set of squares has " + std::to_string(n) + " elements, cap is " +
              std::to_string(cap));
  std::vector<Square<C>> out;
  out.reserve(static_cast<std::size_t>(n));
  if constexpr (std::is_same_v<C, FinSetCat>) {
    int na = f.dom().size;
    int nb = f.cod().size;
    int nx = g.dom().size;
    int ny = g.cod().size;
    std::vector<std::vector<int>> f_fiber(static_cast<std::size_t>(nb));
    for (int a = 0; a < na; ++a) f_fiber[f.morphism.table[a]].push_back(a);
    std::vector<std::vector<int>> g_fiber(static_cast<std::size_t>(ny));
    for (int x = 0; x < nx; ++x) g_fiber[g.morphism.table[x]].push_back(x);
    std::vector<int> top(static_cast<std::size_t>(na), 0);
    std::vector<int> bottom(static_cast<std::size_t>(nb), 0);
    auto fill_fiber = [&](auto&& self, auto&& next, int b, std::size_t pos) -> void {
      if (pos == f_fiber[b].size()) {
        next(next, b + 1);
        return;
      }
      for (int x : g_fiber[bottom[b]]) {
        top[f_fiber[b][pos]] = x;
        self(self, next, b, pos + 1);
      }
    };
    auto pick = [&](auto&& self, int b) -> void {
      if (b == nb) {
        out.push_back(Square<C>{f, g, FinMorphism{f.dom(), g.dom(), top},
                                FinMorphism{f.cod(), g.cod(), bottom}});
        return;
      }
      for (int y = 0; y < ny; ++y) {
        bottom[b] = y;
        fill_fiber(fill_fiber, self, b, 0);
      }
    };
    pick(pick, 0);
    std::sort(out.begin(), out.end(), [](const Square<C>& s, const Square<C>& t) {
      if (s.top.table != t.top.table) return s.top.table < t.top.table;
      return s.bottom.table < t.bottom.table;
    });
  } else {
    auto tops = C::hom(f.dom(), g.dom());
    auto bottoms = C::hom(f.cod(), g.cod());
    for (const auto& top : tops) {
      auto want = C::compose(top, g.morphism);
      for (const auto& bottom : bottoms)
        if (want == C::compose(f.morphism, bottom)) out.push_back(Square<C>{f, g, top, bottom});
    }
  }
  return out;
}

}  // namespace thc
