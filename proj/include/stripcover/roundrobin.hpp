#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "stripcover/core.hpp"

namespace stripcover::roundrobin {

/// Radius a sensor at `x` needs to cover [0,1] alone: max(x, 1-x).
inline Rational solo_radius(const Rational& x) { return std::max(x, Rational(1) - x); }

struct RoundRobinResult {
  Schedule schedule;
  Rational lifetime;
  Rational rr_prime;  // 0 when the instance holds no battery
  std::vector<Rational> per_sensor_radii;
};

/// Weighted-harmonic lower bound B^2 / sum(b_i r_i) on the RoundRobin lifetime.
inline Rational rr_prime(const Instance& inst) {
  const Rational total = inst.total_battery();
  if (total == 0) throw Error(ErrorKind::zero_total_battery, "RR' needs positive total battery");
  Rational weighted(0);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    weighted += inst.battery(i) * solo_radius(inst.location(i));
  }
  return total * total / weighted;
}

/// RoundRobin with the rotation visiting sensors in `order`. Zero-battery
/// sensors get radius 0 and do not advance the clock.
inline RoundRobinResult round_robin_in_order(const Instance& inst,
                                             std::span<const std::size_t> order) {
  const std::size_t n = inst.size();
  std::vector<Rational> radii(n, Rational(0));
  std::vector<Rational> taus(n, Rational(0));
  std::vector<Rational> solo(n);
  std::vector<bool> seen(n, false);
  if (order.size() != n) throw Error(ErrorKind::size_mismatch, "rotation order must list every sensor");
  Rational clock(0);
  for (std::size_t i : order) {
    if (i >= n || seen[i]) throw Error(ErrorKind::size_mismatch, "rotation order is not a permutation");
    seen[i] = true;
    solo[i] = solo_radius(inst.location(i));
    taus[i] = clock;
    if (inst.battery(i) == 0) continue;
    radii[i] = solo[i];
    clock += inst.battery(i) / solo[i];
  }
  RoundRobinResult result{Schedule(std::move(radii), std::move(taus)), clock, Rational(0),
                          std::move(solo)};
  if (inst.total_battery() > 0) result.rr_prime = rr_prime(inst);
  return result;
}

/// Sensors take turns left to right, each covering [0,1] alone.
inline RoundRobinResult round_robin(const Instance& inst) {
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return round_robin_in_order(inst, order);
}

}  // namespace stripcover::roundrobin
