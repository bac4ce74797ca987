#pragma once

#include <optional>

#include "stripcover/radsc.hpp"

namespace stripcover::radsc {

/// Largest feasible candidate by testing every candidate; the O(n^3) baseline
/// the binary search must agree with.
inline std::optional<Rational> linear_scan(const Instance& inst) {
  std::optional<Rational> best;
  for (const auto& c : candidate_lifetimes(inst)) {
    if (is_feasible(inst, c.value) && (!best || c.value > *best)) best = c.value;
  }
  return best;
}

}  // namespace stripcover::radsc
