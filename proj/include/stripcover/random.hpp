#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "stripcover/core.hpp"

namespace stripcover {

struct RandomInstanceOptions {
  std::size_t sensors = 5;
  long battery_min = 1;
  long battery_max = 9;
  long denominator = 24;  // locations are multiples of 1/denominator
};

/// Random instance with locations on the 1/denominator grid in [0,1] and
/// integer batteries in [battery_min, battery_max].
inline Instance random_instance(std::mt19937_64& rng, const RandomInstanceOptions& opt) {
  if (opt.sensors == 0) throw Error(ErrorKind::invalid_instance, "need at least one sensor");
  if (opt.battery_min < 0 || opt.battery_max < opt.battery_min) {
    throw Error(ErrorKind::invalid_instance, "bad battery range");
  }
  if (opt.denominator <= 0) throw Error(ErrorKind::invalid_instance, "denominator must be positive");
  std::uniform_int_distribution<long> where(0, opt.denominator);
  std::uniform_int_distribution<long> charge(opt.battery_min, opt.battery_max);
  std::vector<Rational> xs;
  std::vector<Rational> bs;
  for (std::size_t i = 0; i < opt.sensors; ++i) {
    xs.emplace_back(where(rng), opt.denominator);
    bs.emplace_back(charge(rng));
  }
  return Instance(std::move(xs), std::move(bs));
}

inline Instance random_instance(std::uint64_t seed, const RandomInstanceOptions& opt) {
  std::mt19937_64 rng(seed);
  return random_instance(rng, opt);
}

}  // namespace stripcover
