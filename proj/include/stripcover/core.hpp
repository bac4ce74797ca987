#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stripcover/error.hpp"
#include "stripcover/rational.hpp"

namespace stripcover {

/// Sensor locations with their batteries, sorted by location.
///
/// The public constructor requires every location to lie in [0,1]. The
/// analysis pipeline produces unit instances whose children may fall outside
/// the barrier; those are built through `Instance::unbounded`.
class Instance {
 public:
  Instance(std::vector<Rational> locations, std::vector<Rational> batteries)
      : Instance(std::move(locations), std::move(batteries), true) {}

  static Instance unbounded(std::vector<Rational> locations, std::vector<Rational> batteries) {
    return Instance(std::move(locations), std::move(batteries), false);
  }

  std::size_t size() const { return locations_.size(); }
  const Rational& location(std::size_t i) const { return locations_.at(i); }
  const Rational& battery(std::size_t i) const { return batteries_.at(i); }
  std::span<const Rational> locations() const { return locations_; }
  std::span<const Rational> batteries() const { return batteries_; }

  Rational total_battery() const {
    return std::accumulate(batteries_.begin(), batteries_.end(), Rational(0));
  }

  bool within_unit_interval() const {
    return std::all_of(locations_.begin(), locations_.end(),
                       [](const Rational& x) { return x >= 0 && x <= 1; });
  }

  /// Sub-instance over the given (ascending) indices.
  Instance subset(std::span<const std::size_t> indices) const {
    std::vector<Rational> xs;
    std::vector<Rational> bs;
    for (std::size_t i : indices) {
      xs.push_back(location(i));
      bs.push_back(battery(i));
    }
    return Instance(std::move(xs), std::move(bs), false);
  }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance(std::vector<Rational> locations, std::vector<Rational> batteries, bool unit_range) {
    if (locations.size() != batteries.size()) {
      throw Error(ErrorKind::invalid_instance, "locations and batteries differ in length");
    }
    if (locations.empty()) throw Error(ErrorKind::invalid_instance, "instance has no sensors");
    std::vector<std::size_t> order(locations.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return locations[a] < locations[b]; });
    for (std::size_t i : order) {
      if (batteries[i] < 0) throw Error(ErrorKind::invalid_instance, "negative battery");
      if (unit_range && (locations[i] < 0 || locations[i] > 1)) {
        throw Error(ErrorKind::invalid_instance,
                    "location " + locations[i].str() + " outside [0,1]");
      }
      locations_.push_back(locations[i]);
      batteries_.push_back(batteries[i]);
    }
  }

  std::vector<Rational> locations_;
  std::vector<Rational> batteries_;
};

/// Set-once schedule: one radius and one activation time per sensor. A zero
/// radius marks an inactive sensor.
class Schedule {
 public:
  Schedule() = default;
  Schedule(std::vector<Rational> radii, std::vector<Rational> activations)
      : radii_(std::move(radii)), activations_(std::move(activations)) {
    if (radii_.size() != activations_.size()) {
      throw Error(ErrorKind::invalid_schedule, "radii and activations differ in length");
    }
    for (std::size_t i = 0; i < radii_.size(); ++i) {
      if (radii_[i] < 0) throw Error(ErrorKind::invalid_schedule, "negative radius");
      if (activations_[i] < 0) throw Error(ErrorKind::invalid_schedule, "negative activation time");
    }
  }

  static Schedule inactive(std::size_t n) {
    return Schedule(std::vector<Rational>(n, Rational(0)), std::vector<Rational>(n, Rational(0)));
  }

  std::size_t size() const { return radii_.size(); }
  const Rational& radius(std::size_t i) const { return radii_.at(i); }
  const Rational& activation(std::size_t i) const { return activations_.at(i); }
  std::span<const Rational> radii() const { return radii_; }
  std::span<const Rational> activations() const { return activations_; }

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<Rational> radii_;
  std::vector<Rational> activations_;
};

/// Radii only; every activation time is implicitly 0.
struct RadialAssignment {
  std::vector<Rational> radii;

  Schedule to_schedule() const {
    return Schedule(radii, std::vector<Rational>(radii.size(), Rational(0)));
  }

  friend bool operator==(const RadialAssignment&, const RadialAssignment&) = default;
};

/// Space-time coverage rectangle of one active sensor.
struct Rect {
  Rational left;
  Rational right;
  Rational start;
  Rational end;

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Closed interval [left, right].
struct Interval {
  Rational left;
  Rational right;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Open interval (left, right); used to report uncovered stretches.
struct OpenInterval {
  Rational left;
  Rational right;

  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// Maximal open subintervals of [0,1] not covered by the closed intervals.
inline std::vector<OpenInterval> uncovered_parts(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  std::vector<OpenInterval> gaps;
  // [0, frontier] is covered once `reached` is set.
  Rational frontier(0);
  bool reached = false;
  for (const auto& iv : intervals) {
    if (iv.right < 0 || iv.left > 1) continue;
    if (!reached) {
      if (iv.left > 0) gaps.push_back({Rational(0), iv.left});
      frontier = iv.right;
      reached = true;
    } else if (iv.left > frontier) {
      gaps.push_back({frontier, iv.left});
      frontier = iv.right;
    } else if (iv.right > frontier) {
      frontier = iv.right;
    }
    if (frontier >= 1) return gaps;
  }
  gaps.push_back({reached ? frontier : Rational(0), Rational(1)});
  return gaps;
}

/// True iff the closed intervals jointly cover [0,1].
inline bool covers_unit_interval(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  Rational frontier(0);
  bool reached = false;
  for (const auto& iv : intervals) {
    if (iv.right < 0) continue;
    if (iv.left > frontier) return false;
    if (!reached || iv.right > frontier) frontier = iv.right;
    reached = true;
    if (frontier >= 1) return true;
  }
  return false;
}

namespace detail {

inline void check_pair(const Instance& inst, const Schedule& sched) {
  if (inst.size() != sched.size()) {
    throw Error(ErrorKind::size_mismatch, "schedule has " + std::to_string(sched.size()) +
                                              " entries for " + std::to_string(inst.size()) +
                                              " sensors");
  }
}

/// Active means positive radius and positive battery.
inline bool is_active(const Instance& inst, const Schedule& sched, std::size_t i) {
  return sched.radius(i) > 0 && inst.battery(i) > 0;
}

inline Rational end_time(const Instance& inst, const Schedule& sched, std::size_t i) {
  return sched.activation(i) + inst.battery(i) / sched.radius(i);
}

inline std::vector<Interval> active_intervals_at(const Instance& inst, const Schedule& sched,
                                                 const Rational& t) {
  std::vector<Interval> out;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (!is_active(inst, sched, i)) continue;
    if (sched.activation(i) <= t && t < end_time(inst, sched, i)) {
      out.push_back({inst.location(i) - sched.radius(i), inst.location(i) + sched.radius(i)});
    }
  }
  return out;
}

}  // namespace detail

/// Upper bound 2 * sum(b_i) on the lifetime of any schedule.
inline Rational max_lifetime_bound(const Instance& inst) { return 2 * inst.total_battery(); }

inline Rect sensor_rect(const Instance& inst, const Schedule& sched, std::size_t i) {
  detail::check_pair(inst, sched);
  if (sched.radius(i) == 0) {
    throw Error(ErrorKind::inactive_sensor, "sensor " + std::to_string(i) + " has radius 0");
  }
  const auto& x = inst.location(i);
  const auto& rho = sched.radius(i);
  return Rect{x - rho, x + rho, sched.activation(i),
              sched.activation(i) + inst.battery(i) / rho};
}

/// Sorted distinct event times: 0 plus every activation and death of an
/// active sensor.
inline std::vector<Rational> event_times(const Instance& inst, const Schedule& sched) {
  detail::check_pair(inst, sched);
  std::vector<Rational> events{Rational(0)};
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (!detail::is_active(inst, sched, i)) continue;
    events.push_back(sched.activation(i));
    events.push_back(detail::end_time(inst, sched, i));
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());
  return events;
}

/// Exact lifetime of a set-once schedule: the supremum T such that [0,1] is
/// covered at every t in [0,T). Sensors are active on [tau, tau + b/rho).
inline Rational evaluate_lifetime(const Instance& inst, const Schedule& sched) {
  const auto events = event_times(inst, sched);
  // The active set is constant on [events[j], events[j+1]); after the last
  // event nothing is active, so the loop always returns.
  for (const auto& e : events) {
    if (!covers_unit_interval(detail::active_intervals_at(inst, sched, e))) return e;
  }
  return events.back();
}

inline std::vector<OpenInterval> coverage_gaps_at(const Instance& inst, const Schedule& sched,
                                                  const Rational& t) {
  detail::check_pair(inst, sched);
  return uncovered_parts(detail::active_intervals_at(inst, sched, t));
}

}  // namespace stripcover
