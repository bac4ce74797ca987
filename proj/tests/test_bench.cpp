#include <catch_amalgamated.hpp>

#include "stripcover/bench.hpp"
#include "stripcover/report.hpp"

using namespace stripcover;

TEST_CASE("every pinned value is reproduced") {
  for (const auto& o : bench::run(bench::default_pins())) {
    INFO(o.name);
    CHECK(o.passed);
  }
}

TEST_CASE("a mutated pin fails") {
  auto pins = bench::default_pins();
  for (std::size_t i = 0; i < pins.size(); ++i) {
    auto mutated = pins;
    mutated[i].expected += Rational(1, 1000);
    const auto outcomes = bench::run(mutated);
    INFO(pins[i].name);
    CHECK_FALSE(outcomes[i].passed);
  }
  CHECK_FALSE(bench::run({{"no.such.value", Rational(1)}}).front().passed);
}

TEST_CASE("fuzzing is deterministic and clean") {
  const auto a = bench::fuzz(12, 25);
  const auto b = bench::fuzz(12, 25);
  REQUIRE(a.size() == 25);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].instance == b[i].instance);
    CHECK(a[i].seed == 12 + i);
    CHECK(a[i].failures.empty());
  }
}

TEST_CASE("reports serialize exact values") {
  Report r;
  r.command = "demo";
  r.add("lifetime", Rational(16, 3));
  r.check("fine", true);
  r.check("broken", false, "why");
  const auto j = r.to_json();
  CHECK(j["results"][0]["exact"] == "16/3");
  CHECK(j["results"][0]["decimal"] == "5.33333333333");
  CHECK(j["ok"] == false);
  CHECK(j["checks"][1]["detail"] == "why");
  const std::string text = r.to_text();
  CHECK(text.find("lifetime 16/3") != std::string::npos);
  CHECK(text.find("[FAIL] broken") != std::string::npos);
}
