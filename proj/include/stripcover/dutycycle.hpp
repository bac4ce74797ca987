#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "stripcover/core.hpp"
#include "stripcover/radsc.hpp"

namespace stripcover::dutycycle {

using Shift = std::vector<std::size_t>;

/// Ordered shifts; each is a nonempty ascending set of sensor indices and
/// together they partition {0..n-1}.
struct ShiftPartition {
  std::vector<Shift> shifts;

  friend bool operator==(const ShiftPartition&, const ShiftPartition&) = default;
};

struct DutyCycleResult {
  ShiftPartition partition;
  std::vector<Rational> shift_lifetimes;
  Rational total;
  Schedule schedule;
};

inline void validate(const ShiftPartition& p, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (const auto& shift : p.shifts) {
    if (shift.empty()) throw Error(ErrorKind::invalid_partition, "empty shift");
    for (std::size_t i : shift) {
      if (i >= n) throw Error(ErrorKind::invalid_partition, "sensor index out of range");
      if (seen[i]) throw Error(ErrorKind::invalid_partition, "sensor appears in two shifts");
      seen[i] = true;
      ++count;
    }
  }
  if (count != n) throw Error(ErrorKind::invalid_partition, "partition misses a sensor");
}

namespace detail {

inline Instance shift_instance(const Instance& inst, Shift shift) {
  std::sort(shift.begin(), shift.end());
  return inst.subset(shift);
}

inline Rational shift_optimum(const Instance& inst, const Shift& shift) {
  if (shift.empty()) throw Error(ErrorKind::invalid_partition, "empty shift");
  const Instance sub = shift_instance(inst, shift);
  if (sub.total_battery() == 0) return Rational(0);
  return radsc::solve(sub).lifetime;
}

inline DutyCycleResult assemble(const Instance& inst, ShiftPartition partition,
                                std::vector<Rational> lifetimes) {
  std::vector<Rational> radii(inst.size(), Rational(0));
  std::vector<Rational> taus(inst.size(), Rational(0));
  Rational clock(0);
  for (std::size_t s = 0; s < partition.shifts.size(); ++s) {
    for (std::size_t i : partition.shifts[s]) {
      taus[i] = clock;
      if (lifetimes[s] > 0) radii[i] = inst.battery(i) / lifetimes[s];
    }
    clock += lifetimes[s];
  }
  return {std::move(partition), std::move(lifetimes), clock,
          Schedule(std::move(radii), std::move(taus))};
}

}  // namespace detail

/// Best simultaneous lifetime of one shift working alone (its RadSC optimum);
/// 0 for a shift without battery.
inline Rational shift_lifetime(const Instance& inst, const Shift& shift) {
  for (std::size_t i : shift) {
    if (i >= inst.size()) throw Error(ErrorKind::invalid_partition, "sensor index out of range");
  }
  return detail::shift_optimum(inst, shift);
}

inline DutyCycleResult evaluate_partition(const Instance& inst, const ShiftPartition& p) {
  validate(p, inst.size());
  std::vector<Rational> lifetimes;
  for (const auto& shift : p.shifts) lifetimes.push_back(detail::shift_optimum(inst, shift));
  return detail::assemble(inst, p, std::move(lifetimes));
}

/// Calls `visit` once per set partition of {0..n-1}, in lexicographic order
/// of restricted growth strings. Blocks come out ordered by their minimum.
inline void for_each_partition(std::size_t n, const std::function<void(const ShiftPartition&)>& visit) {
  if (n == 0) return;
  std::vector<std::size_t> growth(n, 0);  // growth[i] = block of sensor i
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    ShiftPartition p;
    for (std::size_t i = 0; i < n; ++i) {
      if (growth[i] == p.shifts.size()) p.shifts.emplace_back();
      p.shifts[growth[i]].push_back(i);
    }
    visit(p);
    // advance to the next restricted growth string
    std::size_t i = n - 1;
    while (i > 0 && growth[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++growth[i];
    prefix_max[i] = std::max(prefix_max[i - 1], growth[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      growth[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

inline constexpr std::size_t default_n_limit = 10;

/// Exhaustive best duty cycle over all Bell(n) set partitions. Ties keep the
/// first partition in enumeration order.
inline DutyCycleResult best_partition(const Instance& inst, std::size_t n_limit = default_n_limit) {
  const std::size_t n = inst.size();
  if (n > n_limit || n > 62) {
    throw Error(ErrorKind::too_large, std::to_string(n) + " sensors exceed the enumeration limit " +
                                          std::to_string(n_limit));
  }
  std::unordered_map<std::uint64_t, Rational> memo;
  auto lifetime_of = [&](const Shift& shift) -> const Rational& {
    std::uint64_t mask = 0;
    for (std::size_t i : shift) mask |= std::uint64_t{1} << i;
    auto it = memo.find(mask);
    if (it == memo.end()) it = memo.emplace(mask, detail::shift_optimum(inst, shift)).first;
    return it->second;
  };

  std::optional<ShiftPartition> best;
  Rational best_total(-1);
  for_each_partition(n, [&](const ShiftPartition& p) {
    Rational total(0);
    for (const auto& shift : p.shifts) total += lifetime_of(shift);
    if (total > best_total) {
      best_total = total;
      best = p;
    }
  });
  std::vector<Rational> lifetimes;
  for (const auto& shift : best->shifts) lifetimes.push_back(lifetime_of(shift));
  return detail::assemble(inst, std::move(*best), std::move(lifetimes));
}

}  // namespace stripcover::dutycycle
