#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "stripcover/core.hpp"

namespace stripcover::reductions {

/// A Partition instance: positive integers y_1..y_n.
struct PartitionInput {
  std::vector<long> values;

  explicit PartitionInput(std::vector<long> v) : values(std::move(v)) {
    if (values.empty()) throw Error(ErrorKind::invalid_instance, "partition input is empty");
    for (long y : values) {
      if (y <= 0) throw Error(ErrorKind::invalid_instance, "partition values must be positive");
    }
  }

  /// Half the total, B = sum(y) / 2.
  Rational half_sum() const {
    return Rational(std::accumulate(values.begin(), values.end(), 0L), 2L);
  }
};

/// Sensors (1/6, 1/2, ..., 1/2, 5/6) with batteries (B, y_1, ..., y_n, B).
inline Instance partition_to_instance(const PartitionInput& p) {
  std::vector<Rational> xs{Rational(1, 6)};
  std::vector<Rational> bs{p.half_sum()};
  for (long y : p.values) {
    xs.emplace_back(1, 2);
    bs.emplace_back(y);
  }
  xs.emplace_back(5, 6);
  bs.push_back(p.half_sum());
  return Instance(std::move(xs), std::move(bs));
}

/// Indices into `values` (0-based) of the two halves.
struct Split {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

/// Schedule attaining 8B from a balanced split: boundary sensors and the
/// first half hold radius 1/6 from time 0 (the first half one after another
/// over [1/3, 2/3]); the second half then covers [0,1] alone with radius 1/2.
inline Schedule certificate_to_schedule(const PartitionInput& p, const Split& split) {
  const std::size_t n = p.values.size();
  std::vector<bool> seen(n, false);
  long first_sum = 0;
  long second_sum = 0;
  auto mark = [&](const std::vector<std::size_t>& half, long& sum) {
    for (std::size_t i : half) {
      if (i >= n || seen[i]) {
        throw Error(ErrorKind::unbalanced_split, "split is not a partition of the value indices");
      }
      seen[i] = true;
      sum += p.values[i];
    }
  };
  mark(split.first, first_sum);
  mark(split.second, second_sum);
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorKind::unbalanced_split, "split misses a value");
  }
  if (first_sum != second_sum) {
    throw Error(ErrorKind::unbalanced_split,
                "halves sum to " + std::to_string(first_sum) + " and " + std::to_string(second_sum));
  }

  // instance order: left boundary, y_1..y_n, right boundary
  std::vector<Rational> radii(n + 2, Rational(0));
  std::vector<Rational> taus(n + 2, Rational(0));
  radii.front() = Rational(1, 6);
  radii.back() = Rational(1, 6);
  Rational clock(0);
  for (std::size_t i : split.first) {
    radii[i + 1] = Rational(1, 6);
    taus[i + 1] = clock;
    clock += Rational(p.values[i]) * 6;
  }
  for (std::size_t i : split.second) {
    radii[i + 1] = Rational(1, 2);
    taus[i + 1] = clock;
    clock += Rational(p.values[i]) * 2;
  }
  return Schedule(std::move(radii), std::move(taus));
}

}  // namespace stripcover::reductions
