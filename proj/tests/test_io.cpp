#include <catch_amalgamated.hpp>

#include <sstream>

#include "stripcover/io.hpp"
#include "support.hpp"

using namespace stripcover;
using testing_support::q;

namespace {

io::ParsedInstance parse(const std::string& text) {
  std::istringstream in(text);
  return io::parse_instance(in);
}

Schedule parse_sched(const std::string& text) {
  std::istringstream in(text);
  return io::parse_schedule(in);
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::invalid_instance;
}

}  // namespace

TEST_CASE("instance files accept comments, blanks and every number form") {
  const auto p = parse("# header\n\n0.25 1   # left\n3/4 1.0\n");
  CHECK(p.was_sorted);
  CHECK(p.instance == Instance({q(1, 4), q(3, 4)}, {q(1), q(1)}));
}

TEST_CASE("unsorted files are sorted and flagged") {
  const auto p = parse("3/4 2\n1/4 1\n");
  CHECK_FALSE(p.was_sorted);
  CHECK(p.instance.location(0) == q(1, 4));
  CHECK(p.instance.battery(0) == q(1));
}

TEST_CASE("bad files are parse errors") {
  CHECK(kind_of([] { parse(""); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse("# nothing\n"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse("1/2\n"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse("1/2 1 3\n"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse("1/2 x\n"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse("3/2 1\n"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse("1/2 -1\n"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_sched("1/4 -1\n"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { io::read_instance_file("/nonexistent/stripcover.inst"); }) == ErrorKind::parse_error);
}

TEST_CASE("an empty schedule file is an empty schedule") {
  CHECK(parse_sched("# nothing here\n").size() == 0);
}

TEST_CASE("exact values round-trip through the file formats") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Instance inst = testing_support::random_grid_instance(rng, 1 + rng() % 8, 1000, 997);
    CHECK(parse(io::format_instance(inst)).instance == inst);
    std::vector<Rational> radii;
    std::vector<Rational> taus;
    for (std::size_t k = 0; k < inst.size(); ++k) {
      radii.emplace_back(static_cast<long>(rng() % 100000), 1 + static_cast<long>(rng() % 9999));
      taus.emplace_back(static_cast<long>(rng() % 100000), 1 + static_cast<long>(rng() % 9999));
    }
    const Schedule s(radii, taus);
    CHECK(parse_sched(io::format_schedule(s)) == s);
  }
}
