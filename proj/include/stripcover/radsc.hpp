#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "stripcover/core.hpp"
#include "stripcover/roundrobin.hpp"

namespace stripcover::radsc {

/// Sensor pair (i, k), i < k, over augmented indices: 0 is a zero-battery
/// dummy at location 0, n+1 a zero-battery dummy at location 1, and real
/// sensor j (0-based) has augmented index j+1.
using SensorPair = std::pair<std::size_t, std::size_t>;

struct CandidateLifetime {
  Rational value;
  SensorPair pair;
};

struct RadscSolution {
  Rational lifetime;
  RadialAssignment assignment;
  SensorPair witness_pair;
};

namespace detail {

struct AugmentedSensor {
  Rational location;
  Rational battery;
};

inline std::vector<AugmentedSensor> augment(const Instance& inst) {
  std::vector<AugmentedSensor> out;
  out.reserve(inst.size() + 2);
  out.push_back({Rational(0), Rational(0)});
  for (std::size_t i = 0; i < inst.size(); ++i) out.push_back({inst.location(i), inst.battery(i)});
  out.push_back({Rational(1), Rational(0)});
  return out;
}

inline std::vector<Interval> intervals_at(const Instance& inst, const Rational& lifetime) {
  std::vector<Interval> out;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (inst.battery(i) == 0) continue;
    const Rational rho = inst.battery(i) / lifetime;
    out.push_back({inst.location(i) - rho, inst.location(i) + rho});
  }
  return out;
}

}  // namespace detail

/// All (b_i + b_k) / (x_k - x_i) over augmented pairs with x_i < x_k, sorted
/// ascending with duplicates merged (first witness kept). Zero values are
/// dropped.
inline std::vector<CandidateLifetime> candidate_lifetimes(const Instance& inst) {
  const auto aug = detail::augment(inst);
  std::vector<CandidateLifetime> out;
  out.reserve(aug.size() * (aug.size() - 1) / 2);
  for (std::size_t i = 0; i < aug.size(); ++i) {
    for (std::size_t k = i + 1; k < aug.size(); ++k) {
      if (!(aug[i].location < aug[k].location)) continue;
      const Rational sum = aug[i].battery + aug[k].battery;
      if (sum == 0) continue;
      out.push_back({sum / (aug[k].location - aug[i].location), {i, k}});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.value < b.value; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) { return a.value == b.value; }),
            out.end());
  return out;
}

/// Whether radii b_l / T make the real sensors cover [0,1].
inline bool is_feasible(const Instance& inst, const Rational& lifetime) {
  if (lifetime <= 0) {
    throw Error(ErrorKind::nonpositive_lifetime, "feasibility needs T > 0, got " + lifetime.str());
  }
  return covers_unit_interval(detail::intervals_at(inst, lifetime));
}

inline RadialAssignment exhaust_at(const Instance& inst, const Rational& lifetime) {
  RadialAssignment a;
  a.radii.reserve(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) a.radii.push_back(inst.battery(i) / lifetime);
  return a;
}

/// Optimal RadSC lifetime by binary search over the sorted candidates.
inline RadscSolution solve(const Instance& inst) {
  if (inst.size() == 1) {
    const auto& x = inst.location(0);
    const auto& b = inst.battery(0);
    if (b == 0) throw Error(ErrorKind::infeasible_instance, "the only sensor has no battery");
    const Rational rho = roundrobin::solo_radius(x);
    // r = 1 - x pairs the sensor with the dummy at 1, r = x with the one at 0
    const SensorPair pair = (x <= Rational(1, 2)) ? SensorPair{1, 2} : SensorPair{0, 1};
    return {b / rho, RadialAssignment{{rho}}, pair};
  }

  const auto candidates = candidate_lifetimes(inst);
  if (candidates.empty() || !is_feasible(inst, candidates.front().value)) {
    throw Error(ErrorKind::infeasible_instance, "no candidate lifetime is feasible");
  }
  // Feasibility is monotone decreasing in T: find the last feasible index.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  if (!is_feasible(inst, candidates[hi].value)) {
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (is_feasible(inst, candidates[mid].value)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  } else {
    lo = hi;
  }
  const auto& best = candidates[lo];
  return {best.value, exhaust_at(inst, best.value), best.pair};
}

/// Properization at lifetime T: start from b/T and deactivate sensors in
/// increasing index order while coverage survives.
inline RadialAssignment make_proper(const Instance& inst, const Rational& lifetime) {
  if (!is_feasible(inst, lifetime)) {
    throw Error(ErrorKind::infeasible_instance, "lifetime " + lifetime.str() + " is not feasible");
  }
  auto assignment = exhaust_at(inst, lifetime);
  auto intervals_without = [&](std::size_t skip) {
    std::vector<Interval> out;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      if (i == skip || assignment.radii[i] == 0) continue;
      out.push_back({inst.location(i) - assignment.radii[i], inst.location(i) + assignment.radii[i]});
    }
    return out;
  };
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (assignment.radii[i] == 0) continue;
    if (covers_unit_interval(intervals_without(i))) assignment.radii[i] = Rational(0);
  }
  return assignment;
}

}  // namespace stripcover::radsc
