#pragma once

// Shared test utilities: error probes and independent oracles the library
// must agree with. Everything here is deliberately naive; speed does not
// matter, independence from the code under test does.

#include <optional>
#include <string>
#include <vector>

#include "thc/error.hpp"
#include "thc/finset.hpp"

namespace testutil {

// Runs f and reports the thrown error code, or "" when nothing was thrown.
template <class F>
std::string error_code_of(F&& f) {
  try {
    f();
  } catch (const thc::Error& e) {
    return e.code();
  }
  return {};
}

// Number of maps h out of the pushout apex with inj_first;h == j1 and
// inj_second;h == j2. The universal property demands exactly one.
inline int pushout_factorizations(const thc::Pushout& po, const thc::FinMorphism& j1,
                                  const thc::FinMorphism& j2) {
  int n = 0;
  for (const auto& h : thc::hom(po.object.carrier, j1.cod))
    if (thc::compose(po.inj_first, h) == j1 && thc::compose(po.inj_second, h) == j2) ++n;
  return n;
}

// Number of maps h into the pullback apex with h;proj_first == c1 and
// h;proj_second == c2. The universal property demands exactly one.
inline int pullback_factorizations(const thc::Pullback& pb, const thc::FinMorphism& c1,
                                   const thc::FinMorphism& c2) {
  int n = 0;
  for (const auto& h : thc::hom(c1.dom, pb.object.carrier))
    if (thc::compose(h, pb.proj_first) == c1 && thc::compose(h, pb.proj_second) == c2) ++n;
  return n;
}

}  // namespace testutil
