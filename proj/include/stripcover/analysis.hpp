#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stripcover/core.hpp"
#include "stripcover/radsc.hpp"
#include "stripcover/roundrobin.hpp"

namespace stripcover::analysis {

/// A time slab of a schedule during which the active set is constant. The
/// members are sorted by location and keep their original sensor indices.
/// Invariant: batteries[i] == radii[i] * duration.
struct Strip {
  std::vector<std::size_t> members;
  std::vector<Rational> locations;
  std::vector<Rational> batteries;
  std::vector<Rational> radii;
  Rational duration;
  Rational start;

  std::size_t size() const { return members.size(); }

  Instance instance() const { return Instance::unbounded(locations, batteries); }

  std::vector<Interval> intervals() const {
    std::vector<Interval> out;
    for (std::size_t i = 0; i < size(); ++i) {
      out.push_back({locations[i] - radii[i], locations[i] + radii[i]});
    }
    return out;
  }
};

/// Unit-battery instance; locations may fall outside [0,1] but at least one
/// lies inside.
class UnitInstance {
 public:
  explicit UnitInstance(std::vector<Rational> locations) : locations_(std::move(locations)) {
    if (locations_.empty()) throw Error(ErrorKind::invalid_instance, "unit instance is empty");
    std::sort(locations_.begin(), locations_.end());
    const bool any_inside = std::any_of(locations_.begin(), locations_.end(),
                                        [](const Rational& x) { return x >= 0 && x <= 1; });
    if (!any_inside) {
      throw Error(ErrorKind::no_sensor_in_unit_interval, "no unit sensor lies in [0,1]");
    }
  }

  std::size_t size() const { return locations_.size(); }
  const Rational& location(std::size_t i) const { return locations_.at(i); }
  const std::vector<Rational>& locations() const { return locations_; }

  bool within_unit_interval() const {
    return locations_.front() >= 0 && locations_.back() <= 1;
  }

  Instance as_instance() const {
    return Instance::unbounded(locations_, std::vector<Rational>(size(), Rational(1)));
  }

  friend bool operator==(const UnitInstance&, const UnitInstance&) = default;

 private:
  std::vector<Rational> locations_;
};

struct UnitReduction {
  UnitInstance children;
  std::vector<Rational> sigma;       // child radii
  std::vector<std::size_t> parent;   // strip-local index of each child's parent
};

/// Cuts a feasible schedule at every activation and death inside [0, T].
inline std::vector<Strip> cut_into_strips(const Instance& inst, const Schedule& sched) {
  const Rational lifetime = evaluate_lifetime(inst, sched);
  if (lifetime == 0) throw Error(ErrorKind::zero_lifetime, "schedule never covers [0,1]");

  std::vector<Rational> cuts;
  for (const auto& e : event_times(inst, sched)) {
    if (e <= lifetime) cuts.push_back(e);
  }
  if (cuts.back() != lifetime) cuts.push_back(lifetime);

  std::vector<Strip> strips;
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    Strip s;
    s.start = cuts[j];
    s.duration = cuts[j + 1] - cuts[j];
    for (std::size_t i = 0; i < inst.size(); ++i) {
      if (!stripcover::detail::is_active(inst, sched, i)) continue;
      if (sched.activation(i) <= cuts[j] && cuts[j + 1] <= stripcover::detail::end_time(inst, sched, i)) {
        s.members.push_back(i);
        s.locations.push_back(inst.location(i));
        s.radii.push_back(sched.radius(i));
        s.batteries.push_back(sched.radius(i) * s.duration);
      }
    }
    strips.push_back(std::move(s));
  }
  return strips;
}

namespace detail {

inline Strip without(const Strip& s, std::size_t drop) {
  Strip out;
  out.duration = s.duration;
  out.start = s.start;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == drop) continue;
    out.members.push_back(s.members[i]);
    out.locations.push_back(s.locations[i]);
    out.batteries.push_back(s.batteries[i]);
    out.radii.push_back(s.radii[i]);
  }
  return out;
}

inline std::vector<Interval> intervals_except(const Strip& s, std::size_t skip) {
  std::vector<Interval> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != skip) out.push_back({s.locations[i] - s.radii[i], s.locations[i] + s.radii[i]});
  }
  return out;
}

/// Smallest radius for sensor `i` that keeps [0,1] covered given the others;
/// nullopt when the others already cover everything.
inline std::optional<Rational> needed_radius(const Strip& s, std::size_t i) {
  const auto gaps = uncovered_parts(intervals_except(s, i));
  if (gaps.empty()) return std::nullopt;
  const Rational& x = s.locations[i];
  return std::max({x - gaps.front().left, gaps.back().right - x, Rational(0)});
}

inline void shrink(Strip& s, std::size_t i) {
  if (auto need = needed_radius(s, i); need && *need < s.radii[i]) {
    s.radii[i] = *need;
    s.batteries[i] = *need * s.duration;
  }
}

}  // namespace detail

/// Drops redundant sensors in ascending order (single pass), then shrinks the
/// leftmost and the rightmost sensor to the least radius keeping [0,1]
/// covered. Batteries follow as radius * duration.
inline Strip prune_strip(const Strip& strip) {
  if (!covers_unit_interval(strip.intervals())) {
    throw Error(ErrorKind::invalid_schedule, "strip does not cover [0,1]");
  }
  Strip s = strip;
  for (std::size_t i = 0; i < s.size();) {
    if (s.size() > 1 && covers_unit_interval(detail::intervals_except(s, i))) {
      s = detail::without(s, i);
    } else {
      ++i;
    }
  }
  detail::shrink(s, 0);
  detail::shrink(s, s.size() - 1);
  return s;
}

/// Scales batteries and duration by the least beta making every battery an
/// integer of at least 3. Returns the scaled strip and beta.
inline std::pair<Strip, Rational> integerize_strip(const Strip& strip) {
  mpz_class lcm_den(1);
  for (const auto& b : strip.batteries) {
    if (b <= 0) throw Error(ErrorKind::non_integer_battery, "strip battery must be positive");
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), b.denominator().get_mpz_t());
  }
  // every valid multiplier is an integer multiple of base = lcm / gcd
  mpz_class gcd_num(0);
  mpz_class smallest;
  for (const auto& b : strip.batteries) {
    const mpz_class scaled = b.numerator() * (lcm_den / b.denominator());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
  }
  for (const auto& b : strip.batteries) {
    const mpz_class unit = b.numerator() * (lcm_den / b.denominator()) / gcd_num;
    if (smallest == 0 || unit < smallest) smallest = unit;
  }
  const Rational base(lcm_den, gcd_num);
  const Rational beta = base * Rational(ceil(Rational(mpz_class(3), smallest)), mpz_class(1));

  Strip out = strip;
  for (auto& b : out.batteries) b *= beta;
  out.duration *= beta;
  return {std::move(out), beta};
}

/// Replaces each sensor of integer battery b with b unit children at the
/// midpoints of b equal pieces of its covered interval; child radius rho/b.
inline UnitReduction unit_battery_reduction(const Strip& strip) {
  struct Child {
    Rational location;
    Rational sigma;
    std::size_t parent;
  };
  std::vector<Child> children;
  for (std::size_t i = 0; i < strip.size(); ++i) {
    const auto& b = strip.batteries[i];
    if (!b.is_integer() || b < 3) {
      throw Error(ErrorKind::non_integer_battery,
                  "battery " + b.str() + " is not an integer >= 3; integerize first");
    }
    const unsigned long count = b.numerator().get_ui();
    const Rational piece = strip.radii[i] / b;  // half-width of each sub-interval
    const Rational left = strip.locations[i] - strip.radii[i];
    for (unsigned long j = 0; j < count; ++j) {
      children.push_back({left + piece * Rational(2 * j + 1), piece, i});
    }
  }
  std::stable_sort(children.begin(), children.end(),
                   [](const Child& a, const Child& b) { return a.location < b.location; });
  std::vector<Rational> ys;
  std::vector<Rational> sigma;
  std::vector<std::size_t> parent;
  for (auto& c : children) {
    ys.push_back(c.location);
    sigma.push_back(c.sigma);
    parent.push_back(c.parent);
  }
  return {UnitInstance(std::move(ys)), std::move(sigma), std::move(parent)};
}

struct DeltaParts {
  std::size_t first_inside;  // i0, 0-based
  std::size_t last_inside;   // i1, 0-based
  Rational left;             // Delta_0
  Rational right;            // Delta_1
  Rational internal;         // max gap between i0 and i1 (0 if i0 == i1)
  Rational delta;
};

inline DeltaParts delta_parts(const UnitInstance& u) {
  const auto& x = u.locations();
  const std::size_t n = x.size();
  std::size_t i0 = 0;
  while (x[i0] < 0) ++i0;
  std::size_t i1 = n - 1;
  while (x[i1] > 1) --i1;

  DeltaParts d{i0, i1, Rational(0), Rational(0), Rational(0), Rational(0)};
  d.left = (i0 > 0 && -x[i0 - 1] < x[i0]) ? x[i0] - x[i0 - 1] : 2 * x[i0];
  d.right = (i1 + 1 < n && x[i1 + 1] - 1 < 1 - x[i1]) ? x[i1 + 1] - x[i1] : 2 * (1 - x[i1]);
  for (std::size_t i = i0; i < i1; ++i) d.internal = std::max(d.internal, x[i + 1] - x[i]);
  d.delta = std::max({d.left, d.right, d.internal});
  return d;
}

/// Largest effective gap of a unit instance.
inline Rational compute_delta(const UnitInstance& u) { return delta_parts(u).delta; }

/// Optimal simultaneous lifetime of a unit instance, 2 / Delta.
inline Rational unit_opt(const UnitInstance& u) {
  const Rational delta = compute_delta(u);
  if (delta == 0) throw Error(ErrorKind::degenerate_delta, "Delta is 0; lifetime unbounded");
  return Rational(2) / delta;
}

/// Index of the location closest to 1/2, smallest index on ties.
inline std::size_t closest_to_half(const UnitInstance& u) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (abs(u.location(i) - Rational(1, 2)) < abs(u.location(k) - Rational(1, 2))) k = i;
  }
  return k;
}

/// The stretch layout exactly as the textbook formula states it: sensor
/// ceil(n/2) sits at 1 - r_k (k closest to 1/2) and the rest follow at gaps of
/// Delta. Puts ceil(n/2) sensors at or left of 1/2, but can pull sensors
/// toward the center when k != ceil(n/2); see stretch_instance.
inline UnitInstance stretch_by_formula(const UnitInstance& u) {
  const Rational delta = compute_delta(u);
  const std::size_t k = closest_to_half(u);
  const Rational anchor = Rational(1) - roundrobin::solo_radius(u.location(k));
  const long pivot = static_cast<long>((u.size() + 1) / 2);  // ceil(n/2), 1-based
  std::vector<Rational> xs;
  for (std::size_t i = 0; i < u.size(); ++i) {
    xs.push_back(anchor + Rational(static_cast<long>(i) + 1 - pivot) * delta);
  }
  return UnitInstance(std::move(xs));
}

/// Stretched instance: the sensor k closest to 1/2 stays in place and every
/// other sensor moves to x_k + (i - k) * Delta. All gaps are at most Delta, so
/// each sensor moves away from 1/2. Agrees with stretch_by_formula whenever
/// k = ceil(n/2) and x_k <= 1/2.
inline UnitInstance stretch_instance(const UnitInstance& u) {
  const Rational delta = compute_delta(u);
  const std::size_t k = closest_to_half(u);
  std::vector<Rational> xs;
  for (std::size_t i = 0; i < u.size(); ++i) {
    xs.push_back(u.location(k) + Rational(static_cast<long>(i) - static_cast<long>(k)) * delta);
  }
  return UnitInstance(std::move(xs));
}

/// RoundRobin lifetime of a strip: sum of b_i / max(x_i, 1 - x_i).
inline Rational strip_rr(const Strip& s) {
  Rational total(0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    total += s.batteries[i] / roundrobin::solo_radius(s.locations[i]);
  }
  return total;
}

inline Rational rr_prime(const UnitInstance& u) { return roundrobin::rr_prime(u.as_instance()); }

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

/// Everything the pipeline computes for one strip.
struct StripAnalysis {
  Strip cut;
  Strip pruned;
  Strip scaled;  // pruned, after integerize_strip
  Rational scale;
  UnitReduction reduction;
  UnitInstance stretched;
  Rational rr;                  // strip_rr(cut)
  Rational rr_prime_strip;      // rr_prime(pruned)
  Rational rr_prime_unit;       // rr_prime(children) / scale
  Rational rr_prime_stretched;  // rr_prime(stretched) / scale
  Rational delta;
  Rational unit_opt;            // 2 / delta, in scaled time
  Rational ratio;               // rr_prime(children) / unit_opt
  std::vector<Check> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

struct PipelineReport {
  Rational lifetime;
  Rational round_robin;
  std::vector<StripAnalysis> strips;
  std::vector<Check> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }) &&
           std::all_of(strips.begin(), strips.end(), [](const StripAnalysis& s) { return s.ok(); });
  }

  std::vector<Check> failures() const {
    std::vector<Check> out;
    for (const auto& c : checks) {
      if (!c.passed) out.push_back(c);
    }
    for (std::size_t j = 0; j < strips.size(); ++j) {
      for (const auto& c : strips[j].checks) {
        if (!c.passed) out.push_back({"strip " + std::to_string(j + 1) + ": " + c.name, false, c.detail});
      }
    }
    return out;
  }
};

namespace detail {

inline Check compare(std::string name, bool passed, const Rational& lhs, const char* op,
                     const Rational& rhs) {
  return {std::move(name), passed, lhs.str() + " " + op + " " + rhs.str()};
}

inline bool boundary_observation(const Strip& s) {
  const std::size_t m = s.size() - 1;
  const Rational left_reach = s.locations[0] + s.radii[0];
  bool left_ok = s.radii[0] == s.locations[0];
  if (!left_ok) {
    left_ok = true;
    for (std::size_t k = 1; k < s.size(); ++k) {
      const Rational a = s.locations[k] - s.radii[k];
      const Rational b = s.locations[k] + s.radii[k];
      if (b >= 0 && a < left_reach) left_ok = false;
    }
  }
  const Rational right_reach = s.locations[m] - s.radii[m];
  bool right_ok = s.radii[m] == Rational(1) - s.locations[m];
  if (!right_ok) {
    right_ok = true;
    for (std::size_t k = 0; k < m; ++k) {
      const Rational a = s.locations[k] - s.radii[k];
      const Rational b = s.locations[k] + s.radii[k];
      if (a <= 1 && b > right_reach) right_ok = false;
    }
  }
  return left_ok && right_ok;
}

inline bool none_redundant(const Strip& s) {
  if (s.size() == 1) return true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (covers_unit_interval(intervals_except(s, i))) return false;
  }
  return true;
}

inline Rational max_consecutive_gap(const std::vector<Rational>& x, std::size_t from, std::size_t to) {
  Rational best(0);
  for (std::size_t i = from; i < to; ++i) best = std::max(best, x[i + 1] - x[i]);
  return best;
}

inline StripAnalysis analyze_strip(const Strip& cut) {
  std::vector<Check> checks;
  bool identity = true;
  for (std::size_t i = 0; i < cut.size(); ++i) {
    identity = identity && cut.batteries[i] == cut.radii[i] * cut.duration;
  }
  checks.push_back({"strip battery equals radius times duration", identity, ""});
  checks.push_back({"strip covers [0,1]", covers_unit_interval(cut.intervals()), ""});

  Strip pruned = prune_strip(cut);
  checks.push_back({"pruned strip covers [0,1]", covers_unit_interval(pruned.intervals()), ""});
  checks.push_back({"pruned strip has no redundant sensor", none_redundant(pruned), ""});
  checks.push_back({"boundary sensors are tight or sole cover of the ends", boundary_observation(pruned), ""});

  auto [scaled, beta] = integerize_strip(pruned);
  UnitReduction red = unit_battery_reduction(scaled);
  const UnitInstance& u = red.children;
  const Rational scaled_duration = scaled.duration;

  // children survive exactly the (scaled) strip duration and cover [0,1]
  bool sigma_ok = true;
  for (const auto& s : red.sigma) sigma_ok = sigma_ok && Rational(1) / s == scaled_duration;
  checks.push_back({"children die exactly at the strip duration", sigma_ok, ""});
  const Rational child_life = evaluate_lifetime(u.as_instance(), Schedule(red.sigma, std::vector<Rational>(u.size(), Rational(0))));
  checks.push_back(compare("child schedule lifetime equals strip duration", child_life == scaled_duration,
                           child_life, "==", scaled_duration));

  bool mean_ok = true;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    Rational sum(0);
    for (std::size_t c = 0; c < u.size(); ++c) {
      if (red.parent[c] == i) sum += u.location(c);
    }
    mean_ok = mean_ok && sum == scaled.locations[i] * scaled.batteries[i];
  }
  checks.push_back({"children average at their parent", mean_ok, ""});

  const Rational rr_prime_scaled = roundrobin::rr_prime(scaled.instance());
  const Rational rr_prime_children = rr_prime(u);
  checks.push_back(compare("RR' does not increase under unit reduction", rr_prime_children <= rr_prime_scaled,
                           rr_prime_children, "<=", rr_prime_scaled));

  const auto parts = delta_parts(u);
  const Rational all_gaps = max_consecutive_gap(u.locations(), 0, u.size() - 1);
  checks.push_back(compare("internal gap inside [0,1] equals the overall max gap", parts.internal == all_gaps,
                           parts.internal, "==", all_gaps));

  const Rational opt = unit_opt(u);
  checks.push_back(compare("unit optimum is 2/Delta", opt * parts.delta == 2, opt, "==", Rational(2) / parts.delta));
  checks.push_back(compare("unit optimum is at least the strip duration", opt >= scaled_duration, opt, ">=",
                           scaled_duration));
  if (u.within_unit_interval()) {
    const Rational solved = radsc::solve(Instance(u.locations(), std::vector<Rational>(u.size(), Rational(1)))).lifetime;
    checks.push_back(compare("unit optimum agrees with the RadSC solver", solved == opt, solved, "==", opt));
  }

  UnitInstance stretched = stretch_instance(u);
  const Rational opt_stretched = unit_opt(stretched);
  const Rational rr_prime_stretched = rr_prime(stretched);
  checks.push_back(compare("stretching preserves the unit optimum", opt_stretched == opt, opt_stretched, "==", opt));
  checks.push_back(compare("RR' does not increase under stretching", rr_prime_stretched <= rr_prime_children,
                           rr_prime_stretched, "<=", rr_prime_children));
  std::size_t left_half = 0;
  const UnitInstance formula_layout = stretch_by_formula(u);
  for (const auto& x : formula_layout.locations()) left_half += x <= Rational(1, 2) ? 1 : 0;
  checks.push_back({"formula layout puts ceil(n/2) sensors at or left of 1/2",
                    left_half == (u.size() + 1) / 2,
                    std::to_string(left_half) + " of " + std::to_string(u.size())});

  const Rational two_thirds(2, 3);
  checks.push_back(compare("unit RR' is at least 2/3 of the unit optimum", rr_prime_children >= two_thirds * opt,
                           rr_prime_children, ">=", two_thirds * opt));
  checks.push_back(compare("stretched RR' is at least 2/3 of its optimum",
                           rr_prime_stretched >= two_thirds * opt_stretched, rr_prime_stretched, ">=",
                           two_thirds * opt_stretched));

  const Rational rr_prime_pruned = roundrobin::rr_prime(pruned.instance());
  checks.push_back(compare("strip RR' is at least 2/3 of the strip duration",
                           rr_prime_pruned >= two_thirds * pruned.duration, rr_prime_pruned, ">=",
                           two_thirds * pruned.duration));
  checks.push_back(compare("strip RR' is at most strip RoundRobin", rr_prime_pruned <= strip_rr(pruned),
                           rr_prime_pruned, "<=", strip_rr(pruned)));

  const Rational rr = strip_rr(cut);
  return StripAnalysis{cut,
                       std::move(pruned),
                       std::move(scaled),
                       beta,
                       std::move(red),
                       std::move(stretched),
                       rr,
                       rr_prime_pruned,
                       rr_prime_children / beta,
                       rr_prime_stretched / beta,
                       parts.delta,
                       opt,
                       rr_prime_children / opt,
                       std::move(checks)};
}

}  // namespace detail

/// Runs the whole strip pipeline on a feasible schedule and checks every
/// invariant the approximation argument relies on.
inline PipelineReport analyze_schedule(const Instance& inst, const Schedule& sched) {
  PipelineReport report;
  report.lifetime = evaluate_lifetime(inst, sched);
  report.round_robin = roundrobin::round_robin(inst).lifetime;
  const auto strips = cut_into_strips(inst, sched);

  Rational total_duration(0);
  Rational rr_sum(0);
  std::vector<Rational> used(inst.size(), Rational(0));
  for (const auto& s : strips) {
    total_duration += s.duration;
    for (std::size_t i = 0; i < s.size(); ++i) used[s.members[i]] += s.batteries[i];
    report.strips.push_back(detail::analyze_strip(s));
    rr_sum += report.strips.back().rr;
  }

  report.checks.push_back(detail::compare("strip durations sum to the lifetime", total_duration == report.lifetime,
                                          total_duration, "==", report.lifetime));
  bool conserved = true;
  for (std::size_t i = 0; i < inst.size(); ++i) conserved = conserved && used[i] <= inst.battery(i);
  report.checks.push_back({"no sensor spends more battery across strips than it has", conserved, ""});
  report.checks.push_back(detail::compare("sum of strip RoundRobin lifetimes is at most RoundRobin",
                                          rr_sum <= report.round_robin, rr_sum, "<=", report.round_robin));
  const Rational bound = Rational(2, 3) * report.lifetime;
  report.checks.push_back(detail::compare("RoundRobin is at least 2/3 of the schedule lifetime",
                                          report.round_robin >= bound, report.round_robin, ">=", bound));
  return report;
}

}  // namespace stripcover::analysis
