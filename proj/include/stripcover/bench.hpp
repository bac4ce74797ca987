#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stripcover/analysis.hpp"
#include "stripcover/core.hpp"
#include "stripcover/dutycycle.hpp"
#include "stripcover/oracle.hpp"
#include "stripcover/radsc.hpp"
#include "stripcover/random.hpp"
#include "stripcover/reductions.hpp"
#include "stripcover/roundrobin.hpp"

namespace stripcover::bench {

/// The worked instances from the literature the bench reproduces.
namespace fixtures {

inline Instance two_quarters() { return Instance({Rational(1, 4), Rational(3, 4)}, {Rational(1), Rational(1)}); }

inline Instance duty_cycle_witness() {
  return Instance({Rational(1, 4), Rational(3, 4), Rational(3, 4)}, {Rational(2), Rational(1), Rational(1)});
}

/// Sensor 3 takes over [1/2,1] at time 4.
inline Schedule duty_cycle_witness_optimum() {
  return Schedule({Rational(1, 4), Rational(1, 4), Rational(1, 4)}, {Rational(0), Rational(0), Rational(4)});
}

inline reductions::PartitionInput partition_1234() { return reductions::PartitionInput({1, 2, 3, 4}); }

/// Y0 = {2,3}, Y1 = {1,4} as 0-based value indices.
inline reductions::Split partition_1234_split() { return {{1, 2}, {0, 3}}; }

/// Strip with sensors (1/4, 19/24), radii (1/4, 1/3) over 12 time units.
inline analysis::Strip children_strip() {
  analysis::Strip s;
  s.members = {0, 1};
  s.locations = {Rational(1, 4), Rational(19, 24)};
  s.radii = {Rational(1, 4), Rational(1, 3)};
  s.duration = Rational(12);
  s.start = Rational(0);
  s.batteries = {s.radii[0] * s.duration, s.radii[1] * s.duration};
  return s;
}

}  // namespace fixtures

struct Pin {
  std::string name;
  Rational expected;
};

inline std::vector<Pin> default_pins() {
  std::vector<Pin> pins{
      {"quarters.optimum", Rational(4)},
      {"quarters.round_robin", Rational(8, 3)},
      {"quarters.ratio", Rational(3, 2)},
      {"quarters.max_bound", Rational(4)},
      {"witness.verify", Rational(8)},
      {"witness.max_bound", Rational(8)},
      {"witness.round_robin", Rational(16, 3)},
      {"witness.best_duty_cycle", Rational(16, 3)},
      {"witness.shifts_12_3", Rational(16, 3)},
      {"witness.partition_count", Rational(5)},
      {"witness.ratio", Rational(3, 2)},
      {"hardness.verify", Rational(40)},
      {"hardness.max_bound", Rational(40)},
  };
  const Rational children[] = {Rational(1, 12),  Rational(3, 12),  Rational(5, 12),  Rational(13, 24),
                               Rational(17, 24), Rational(21, 24), Rational(25, 24)};
  for (std::size_t i = 0; i < 7; ++i) pins.push_back({"reduction.child" + std::to_string(i + 1), children[i]});
  pins.push_back({"reduction.child_count", Rational(7)});
  pins.push_back({"reduction.sigma_min", Rational(1, 12)});
  pins.push_back({"reduction.sigma_max", Rational(1, 12)});
  pins.push_back({"reduction.child_lifetime", Rational(12)});
  return pins;
}

/// Recomputes every pinned quantity from scratch.
inline std::map<std::string, Rational> compute_values() {
  std::map<std::string, Rational> v;

  const Instance quarters = fixtures::two_quarters();
  v["quarters.optimum"] = radsc::solve(quarters).lifetime;
  v["quarters.round_robin"] = roundrobin::round_robin(quarters).lifetime;
  v["quarters.ratio"] = v["quarters.optimum"] / v["quarters.round_robin"];
  v["quarters.max_bound"] = max_lifetime_bound(quarters);

  const Instance witness = fixtures::duty_cycle_witness();
  v["witness.verify"] = evaluate_lifetime(witness, fixtures::duty_cycle_witness_optimum());
  v["witness.max_bound"] = max_lifetime_bound(witness);
  v["witness.round_robin"] = roundrobin::round_robin(witness).lifetime;
  v["witness.best_duty_cycle"] = dutycycle::best_partition(witness).total;
  v["witness.shifts_12_3"] = dutycycle::evaluate_partition(witness, {{{0, 1}, {2}}}).total;
  long partitions = 0;
  dutycycle::for_each_partition(witness.size(), [&](const dutycycle::ShiftPartition&) { ++partitions; });
  v["witness.partition_count"] = Rational(partitions);
  v["witness.ratio"] = v["witness.verify"] / v["witness.best_duty_cycle"];

  const auto p = fixtures::partition_1234();
  const Instance hardness = reductions::partition_to_instance(p);
  v["hardness.verify"] = evaluate_lifetime(hardness, reductions::certificate_to_schedule(p, fixtures::partition_1234_split()));
  v["hardness.max_bound"] = max_lifetime_bound(hardness);

  const auto strip = fixtures::children_strip();
  const auto red = analysis::unit_battery_reduction(strip);
  for (std::size_t i = 0; i < red.children.size(); ++i) {
    v["reduction.child" + std::to_string(i + 1)] = red.children.location(i);
  }
  v["reduction.child_count"] = Rational(static_cast<long>(red.children.size()));
  v["reduction.sigma_min"] = *std::min_element(red.sigma.begin(), red.sigma.end());
  v["reduction.sigma_max"] = *std::max_element(red.sigma.begin(), red.sigma.end());
  v["reduction.child_lifetime"] = evaluate_lifetime(
      red.children.as_instance(), Schedule(red.sigma, std::vector<Rational>(red.sigma.size(), Rational(0))));
  return v;
}

struct Outcome {
  std::string name;
  Rational expected;
  std::optional<Rational> actual;
  bool passed;
};

inline std::vector<Outcome> run(const std::vector<Pin>& pins) {
  const auto values = compute_values();
  std::vector<Outcome> out;
  for (const auto& pin : pins) {
    auto it = values.find(pin.name);
    if (it == values.end()) {
      out.push_back({pin.name, pin.expected, std::nullopt, false});
    } else {
      out.push_back({pin.name, pin.expected, it->second, it->second == pin.expected});
    }
  }
  return out;
}

struct FuzzCase {
  std::size_t index;
  std::uint64_t seed;
  Instance instance;
  std::vector<std::string> failures;
};

/// Runs one random instance through every cross-module invariant.
inline std::vector<std::string> check_invariants(const Instance& inst, std::size_t duty_cycle_limit = 8) {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  const Rational bound = max_lifetime_bound(inst);
  const auto rr = roundrobin::round_robin(inst);
  expect(evaluate_lifetime(inst, rr.schedule) == rr.lifetime, "RoundRobin schedule verifies to its lifetime");
  expect(rr.lifetime >= inst.total_battery(), "RoundRobin >= sum of batteries");
  if (inst.total_battery() > 0) expect(rr.rr_prime <= rr.lifetime, "RR' <= RoundRobin");

  if (inst.total_battery() == 0) return failures;
  const auto sol = radsc::solve(inst);
  const auto scan = radsc::linear_scan(inst);
  expect(scan && *scan == sol.lifetime, "binary search agrees with the linear scan");
  expect(evaluate_lifetime(inst, sol.assignment.to_schedule()) >= sol.lifetime, "RadSC assignment verifies");
  expect(sol.lifetime <= bound, "RadSC optimum within 2*sum(b)");
  for (const Rational& f : {Rational(1, 2), Rational(9, 10), Rational(1, 3)}) {
    expect(radsc::is_feasible(inst, sol.lifetime * f), "feasibility is monotone below the optimum");
  }

  for (const auto& sched : {sol.assignment.to_schedule(), rr.schedule}) {
    const auto report = analysis::analyze_schedule(inst, sched);
    for (const auto& f : report.failures()) failures.push_back("pipeline: " + f.name + " " + f.detail);
  }

  if (inst.size() <= duty_cycle_limit) {
    const auto dc = dutycycle::best_partition(inst, duty_cycle_limit);
    expect(evaluate_lifetime(inst, dc.schedule) == dc.total, "duty-cycle schedule verifies to its total");
    expect(dc.total >= rr.lifetime, "best duty cycle >= RoundRobin");
    expect(dc.total <= bound, "best duty cycle within 2*sum(b)");
    expect(rr.lifetime * 3 >= dc.total * 2, "RoundRobin >= 2/3 best duty cycle");
    const auto report = analysis::analyze_schedule(inst, dc.schedule);
    for (const auto& f : report.failures()) failures.push_back("pipeline: " + f.name + " " + f.detail);
  }
  return failures;
}

inline std::vector<FuzzCase> fuzz(std::uint64_t seed, std::size_t count, std::size_t max_sensors = 8) {
  std::vector<FuzzCase> cases;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t case_seed = seed + i;
    std::mt19937_64 rng(case_seed);
    RandomInstanceOptions opt;
    opt.sensors = 1 + static_cast<std::size_t>(rng() % max_sensors);
    Instance inst = random_instance(rng, opt);
    auto failures = check_invariants(inst);
    cases.push_back({i, case_seed, std::move(inst), std::move(failures)});
  }
  return cases;
}

}  // namespace stripcover::bench
