#pragma once

// Independent reference implementations used only by the tests. They share
// nothing with the library beyond Rational and the data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "stripcover/stripcover.hpp"

namespace testing_support {

using stripcover::Instance;
using stripcover::Rational;
using stripcover::Schedule;

inline Rational q(long p, long d = 1) { return Rational(p, d); }

inline std::vector<Rational> qs(std::initializer_list<std::pair<long, long>> values) {
  std::vector<Rational> out;
  for (auto [p, d] : values) out.emplace_back(p, d);
  return out;
}

// Is every point of [0,1] inside one of the closed intervals [c-r, c+r]?
inline bool point_cover(std::vector<std::pair<Rational, Rational>> ivs) {
  std::sort(ivs.begin(), ivs.end());
  Rational reach(0);
  bool started = false;
  for (const auto& [lo, hi] : ivs) {
    if (!started) {
      if (lo > 0) return false;
      if (hi >= 0) {
        started = true;
        reach = hi;
      }
      continue;
    }
    if (lo > reach) return false;
    reach = std::max(reach, hi);
  }
  return started && reach >= 1;
}

// Slab-by-slab lifetime: the first instant at which some slab is uncovered.
inline Rational oracle_lifetime(const Instance& inst, const Schedule& s) {
  std::set<Rational> events{Rational(0)};
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (s.radius(i) > 0 && inst.battery(i) > 0) {
      events.insert(s.activation(i));
      events.insert(s.activation(i) + inst.battery(i) / s.radius(i));
    }
  }
  for (const Rational& t : events) {
    std::vector<std::pair<Rational, Rational>> ivs;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      if (s.radius(i) == 0 || inst.battery(i) == 0) continue;
      const Rational end = s.activation(i) + inst.battery(i) / s.radius(i);
      if (s.activation(i) <= t && t < end) {
        ivs.emplace_back(inst.location(i) - s.radius(i), inst.location(i) + s.radius(i));
      }
    }
    if (!point_cover(ivs)) return t;
  }
  return *events.rbegin();
}

// Every pairwise candidate with dummy sensors at 0 and 1, tried largest first;
// each one checked by running the exhausting schedule through the verifier.
inline Rational oracle_radsc(const Instance& inst) {
  std::vector<Rational> xs{Rational(0)};
  std::vector<Rational> bs{Rational(0)};
  for (std::size_t i = 0; i < inst.size(); ++i) {
    xs.push_back(inst.location(i));
    bs.push_back(inst.battery(i));
  }
  xs.push_back(Rational(1));
  bs.push_back(Rational(0));
  std::vector<Rational> candidates;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t k = i + 1; k < xs.size(); ++k) {
      if (xs[k] > xs[i] && bs[i] + bs[k] > 0) candidates.push_back((bs[i] + bs[k]) / (xs[k] - xs[i]));
    }
  }
  std::sort(candidates.rbegin(), candidates.rend());
  for (const Rational& t : candidates) {
    std::vector<Rational> radii;
    for (std::size_t i = 0; i < inst.size(); ++i) radii.push_back(inst.battery(i) / t);
    const Schedule s(radii, std::vector<Rational>(inst.size(), Rational(0)));
    if (oracle_lifetime(inst, s) >= t) return t;
  }
  return Rational(0);
}

// Best duty cycle by assigning each sensor to an existing or a new shift.
inline Rational oracle_duty_cycle(const Instance& inst) {
  const std::size_t n = inst.size();
  std::vector<std::vector<std::size_t>> blocks;
  Rational best(0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      Rational total(0);
      for (const auto& b : blocks) {
        const Instance sub = inst.subset(b);
        if (sub.total_battery() > 0) total += oracle_radsc(sub);
      }
      best = std::max(best, total);
      return;
    }
    // by index: the recursion appends to `blocks`
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      blocks[k].push_back(i);
      rec(i + 1);
      blocks[k].pop_back();
    }
    blocks.push_back({i});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
  return best;
}

inline Instance random_grid_instance(std::mt19937_64& rng, std::size_t n, long bmax = 9, long den = 24) {
  stripcover::RandomInstanceOptions opt;
  opt.sensors = n;
  opt.battery_max = bmax;
  opt.denominator = den;
  return stripcover::random_instance(rng, opt);
}

}  // namespace testing_support
