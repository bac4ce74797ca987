#include <catch_amalgamated.hpp>

#include "stripcover/oracle.hpp"
#include "stripcover/radsc.hpp"
#include "support.hpp"

using namespace stripcover;
using testing_support::q;

namespace {

const Instance quarters({q(1, 4), q(3, 4)}, {q(1), q(1)});

bool has_candidate(const Instance& inst, const Rational& t) {
  for (const auto& c : radsc::candidate_lifetimes(inst)) {
    if (c.value == t) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("candidates of the two-quarters instance") {
  const auto c = radsc::candidate_lifetimes(quarters);
  CHECK(has_candidate(quarters, q(4, 3)));
  CHECK(has_candidate(quarters, q(4)));
  CHECK(c.back().value == q(4));
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1].value < c[i].value);
}

TEST_CASE("candidates skip co-located and empty pairs") {
  const auto single = radsc::candidate_lifetimes(Instance({q(1, 2)}, {q(1)}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].value == q(2));

  const auto twins = radsc::candidate_lifetimes(Instance({q(1, 2), q(1, 2)}, {q(1), q(1)}));
  CHECK(twins.back().value == q(2));
  for (const auto& c : twins) CHECK(c.pair != radsc::SensorPair{1, 2});
}

TEST_CASE("feasibility") {
  CHECK(radsc::is_feasible(quarters, q(4)));
  CHECK_FALSE(radsc::is_feasible(quarters, q(5)));
  CHECK(radsc::is_feasible(Instance({q(1, 2)}, {q(1)}), q(2)));
  CHECK_THROWS_AS(radsc::is_feasible(quarters, q(0)), Error);
  CHECK_THROWS_AS(radsc::is_feasible(quarters, q(-1)), Error);
}

TEST_CASE("solve on worked instances") {
  const auto a = radsc::solve(quarters);
  CHECK(a.lifetime == q(4));
  CHECK(a.assignment.radii == std::vector<Rational>{q(1, 4), q(1, 4)});

  const auto b = radsc::solve(Instance({q(1, 2)}, {q(3)}));
  CHECK(b.lifetime == q(6));
  CHECK(b.assignment.radii == std::vector<Rational>{q(1, 2)});

  const auto off_centre = radsc::solve(Instance({q(1, 5)}, {q(4)}));
  CHECK(off_centre.lifetime == q(5));
}

TEST_CASE("three sensors at sixths reach 24, not just 18") {
  const Instance inst({q(1, 6), q(1, 2), q(5, 6)}, {q(5), q(3), q(5)});
  CHECK(testing_support::oracle_radsc(inst) == q(24));
  CHECK(radsc::solve(inst).lifetime == q(24));
  CHECK(radsc::is_feasible(inst, q(18)));
  CHECK_FALSE(radsc::is_feasible(inst, q(30)));
  CHECK(evaluate_lifetime(inst, radsc::exhaust_at(inst, q(24)).to_schedule()) == q(24));
}

TEST_CASE("instances with no battery are infeasible") {
  CHECK_THROWS_AS(radsc::solve(Instance({q(1, 4), q(3, 4)}, {q(0), q(0)})), Error);
  CHECK_THROWS_AS(radsc::solve(Instance({q(1, 2)}, {q(0)})), Error);
}

TEST_CASE("properization") {
  const Instance three({q(1, 4), q(1, 2), q(3, 4)}, {q(1), q(2), q(1)});
  CHECK(radsc::make_proper(three, q(4)).radii == std::vector<Rational>{q(0), q(1, 2), q(0)});
  CHECK(radsc::make_proper(quarters, q(4)).radii == std::vector<Rational>{q(1, 4), q(1, 4)});
  CHECK(radsc::make_proper(Instance({q(1, 2)}, {q(1)}), q(2)).radii == std::vector<Rational>{q(1, 2)});
  CHECK_THROWS_AS(radsc::make_proper(quarters, q(5)), Error);
}

TEST_CASE("solve agrees with the verifier-driven oracle") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing_support::random_grid_instance(rng, 1 + rng() % 7);
    const auto sol = radsc::solve(inst);
    INFO("trial " << trial);
    CHECK(sol.lifetime == testing_support::oracle_radsc(inst));
    CHECK(sol.lifetime == *radsc::linear_scan(inst));
    CHECK(testing_support::oracle_lifetime(inst, sol.assignment.to_schedule()) >= sol.lifetime);
    CHECK(sol.lifetime <= max_lifetime_bound(inst));
    CHECK(sol.lifetime >= roundrobin::round_robin(inst).lifetime / Rational(static_cast<long>(inst.size())));

    const auto proper = radsc::make_proper(inst, sol.lifetime);
    const Schedule ps = proper.to_schedule();
    CHECK(testing_support::oracle_lifetime(inst, ps) >= sol.lifetime);
    for (std::size_t i = 0; i < inst.size(); ++i) {
      if (proper.radii[i] == 0) continue;
      // every surviving sensor is needed
      auto dropped = proper.radii;
      dropped[i] = Rational(0);
      CHECK(evaluate_lifetime(inst, Schedule(dropped, std::vector<Rational>(inst.size(), Rational(0)))) <
            sol.lifetime);
    }
  }
}

TEST_CASE("feasibility is monotone") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing_support::random_grid_instance(rng, 1 + rng() % 6);
    const Rational best = radsc::solve(inst).lifetime;
    CHECK_FALSE(radsc::is_feasible(inst, best + Rational(1, 1000)));
    for (int k = 1; k <= 10; ++k) CHECK(radsc::is_feasible(inst, best * Rational(k, 10)));
  }
}
