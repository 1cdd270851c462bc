#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <vector>

namespace thc {

// A small enumerable category with chosen pushouts and pullbacks. Morphism
// equality is structural, so hom sets can be deduplicated and compared
// directly; hom(x, y) must be deterministic and lexicographically ordered.
template <class C>
concept Category =
    std::totally_ordered<typename C::Object> && std::totally_ordered<typename C::Morphism> &&
    requires(const typename C::Object& x, const typename C::Object& y,
             const typename C::Morphism& f, const typename C::Morphism& g) {
      { C::dom(f) } -> std::convertible_to<typename C::Object>;
      { C::cod(f) } -> std::convertible_to<typename C::Object>;
      { C::identity(x) } -> std::convertible_to<typename C::Morphism>;
      { C::compose(f, g) } -> std::convertible_to<typename C::Morphism>;
      { C::hom(x, y) } -> std::convertible_to<std::vector<typename C::Morphism>>;
      { C::is_iso(f) } -> std::convertible_to<bool>;
      { C::pushout(f, g) } -> std::convertible_to<typename C::PushoutResult>;
      { C::pullback(f, g) } -> std::convertible_to<typename C::PullbackResult>;
      { C::find_iso(x, y) } -> std::convertible_to<std::optional<typename C::Morphism>>;
      { C::describe(f) } -> std::convertible_to<std::string>;
      { C::describe_object(x) } -> std::convertible_to<std::string>;
    };

}  // namespace thc
