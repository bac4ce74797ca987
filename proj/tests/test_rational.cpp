#include <catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "stripcover/rational.hpp"

using stripcover::ErrorKind;
using stripcover::Rational;
using stripcover::parse_rational;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const stripcover::Error& e) {
    return e.kind();
  }
  FAIL("no stripcover::Error thrown");
  return ErrorKind::parse_error;
}

}  // namespace

TEST_CASE("fractions stay in lowest terms") {
  CHECK(Rational(6, 8).str() == "3/4");
  CHECK(Rational(-6, -8).str() == "3/4");
  CHECK(Rational(3, -4).str() == "-3/4");
  CHECK(Rational(4).str() == "4/1");
  CHECK(Rational(0, 5).str() == "0/1");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) < Rational(0));
  CHECK(Rational(1, 3) < Rational(34, 100));
}

TEST_CASE("division by zero is an error") {
  CHECK(kind_of([] { Rational(1, 0); }) == ErrorKind::division_by_zero);
  CHECK(kind_of([] { Rational(1) / Rational(0); }) == ErrorKind::division_by_zero);
  CHECK(kind_of([] { parse_rational("3/0"); }) == ErrorKind::division_by_zero);
}

TEST_CASE("long long values beyond 32 bits survive") {
  const long long big = 9'000'000'000'000LL;
  CHECK(Rational(big).str() == "9000000000000/1");
}

TEST_CASE("parsing integers, decimals and fractions") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("+7/2") == Rational(7, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("2.") == Rational(2));
  CHECK(parse_rational("12/16") == Rational(3, 4));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-1.125") == Rational(-9, 8));
}

TEST_CASE("malformed numbers are rejected") {
  for (const char* bad : {"", "-", ".", "1/", "/2", "1/2/3", "1e3", "a", "1.2.3", "--1", "1/-2", " 1"}) {
    INFO(bad);
    CHECK(kind_of([&] { parse_rational(bad); }) == ErrorKind::parse_error);
  }
}

TEST_CASE("round trip through str and parse") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 5000);
  for (int i = 0; i < 500; ++i) {
    const Rational r(num(rng), den(rng));
    CHECK(parse_rational(r.str()) == r);
  }
}

TEST_CASE("decimal display rounds half to even") {
  CHECK(Rational(16, 3).decimal() == "5.33333333333");
  CHECK(Rational(2, 3).decimal() == "0.666666666667");
  CHECK(Rational(4).decimal() == "4");
  CHECK(Rational(0).decimal() == "0");
  CHECK(Rational(-1, 8).decimal() == "-0.125");
  CHECK(Rational(1, 8).decimal(2) == "0.12");   // tie, 2 is even
  CHECK(Rational(3, 8).decimal(2) == "0.38");   // tie, 7 rounds up to 8
  CHECK(Rational(5, 2).decimal(1) == "2");
  CHECK(Rational(7, 2).decimal(1) == "4");
  CHECK(Rational(999999, 1000000).decimal(3) == "1");
  CHECK(Rational(1, 3000000).decimal(3) == "3.33e-7");
  CHECK(Rational(1, 1000000).decimal(3) == "0.000001");
}

TEST_CASE("ceil rounds toward positive infinity") {
  CHECK(stripcover::ceil(Rational(7, 2)) == 4);
  CHECK(stripcover::ceil(Rational(-7, 2)) == -3);
  CHECK(stripcover::ceil(Rational(3)) == 3);
  CHECK(stripcover::abs(Rational(-2, 5)) == Rational(2, 5));
}
