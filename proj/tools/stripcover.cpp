// Command-line front end: solve-radsc, round-robin, verify, analyze,
// duty-cycle, gen, bench.

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "stripcover/bench.hpp"
#include "stripcover/report.hpp"
#include "stripcover/stripcover.hpp"

namespace {

using namespace stripcover;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::string join_indices(const std::vector<std::size_t>& indices) {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    out += (i ? "," : "") + std::to_string(indices[i] + 1);
  }
  return out + "}";
}

std::string join_values(std::span<const Rational> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].str();
  return out + ")";
}

int emit(const Report& report, bool json) {
  if (json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.ok() ? exit_ok : exit_failure;
}

Instance load_instance(Report& report, const std::string& path, bool require_sorted = false) {
  auto parsed = io::read_instance_file(path);
  if (require_sorted && !parsed.was_sorted) {
    throw Error(ErrorKind::parse_error,
                "instance file '" + path + "' is not sorted by location; schedule lines would be ambiguous");
  }
  report.inputs.push_back({path, sha256_file(path)});
  return std::move(parsed.instance);
}

Schedule load_schedule(Report& report, const std::string& path) {
  auto sched = io::read_schedule_file(path);
  report.inputs.push_back({path, sha256_file(path)});
  return sched;
}

int cmd_solve_radsc(const std::string& path, bool proper, bool oracle, bool json) {
  Report report;
  report.command = "solve-radsc";
  const Instance inst = load_instance(report, path);
  const auto sol = radsc::solve(inst);
  report.add("lifetime", sol.lifetime);
  report.lines.push_back("assignment " + join_values(sol.assignment.radii));
  report.lines.push_back("witness pair (" + std::to_string(sol.witness_pair.first) + ", " +
                         std::to_string(sol.witness_pair.second) + ")");
  if (proper) {
    const auto p = radsc::make_proper(inst, sol.lifetime);
    report.lines.push_back("proper assignment " + join_values(p.radii));
  }
  if (oracle) {
    const auto scan = radsc::linear_scan(inst);
    report.check("binary search matches linear scan", scan && *scan == sol.lifetime,
                 scan ? scan->str() : std::string("no feasible candidate"));
  }
  report.check("assignment verifies", evaluate_lifetime(inst, sol.assignment.to_schedule()) >= sol.lifetime);
  return emit(report, json);
}

int cmd_round_robin(const std::string& path, bool json) {
  Report report;
  report.command = "round-robin";
  const Instance inst = load_instance(report, path);
  const auto rr = roundrobin::round_robin(inst);
  report.add("lifetime", rr.lifetime);
  report.add("rr_prime", rr.rr_prime);
  report.add("max_bound", max_lifetime_bound(inst));
  report.lines.push_back("radii " + join_values(rr.schedule.radii()));
  report.lines.push_back("activations " + join_values(rr.schedule.activations()));
  report.check("schedule verifies to the lifetime", evaluate_lifetime(inst, rr.schedule) == rr.lifetime);
  report.check("RR' <= RoundRobin", rr.rr_prime <= rr.lifetime);
  return emit(report, json);
}

int cmd_verify(const std::string& inst_path, const std::string& sched_path, bool json) {
  Report report;
  report.command = "verify";
  const Instance inst = load_instance(report, inst_path, true);
  const Schedule sched = load_schedule(report, sched_path);
  const Schedule paired = sched.size() == 0 ? Schedule::inactive(inst.size()) : sched;
  const Rational lifetime = evaluate_lifetime(inst, paired);
  report.add("lifetime", lifetime);
  report.add("max_bound", max_lifetime_bound(inst));
  const auto gaps = coverage_gaps_at(inst, paired, lifetime);
  if (!gaps.empty()) {
    std::string line = "first uncovered at t=" + lifetime.str() + ", gaps";
    for (const auto& g : gaps) line += " (" + g.left.str() + ", " + g.right.str() + ")";
    report.lines.push_back(line);
  }
  return emit(report, json);
}

int cmd_analyze(const std::string& inst_path, const std::string& sched_path, bool json) {
  Report report;
  report.command = "analyze";
  const Instance inst = load_instance(report, inst_path, true);
  const Schedule sched = load_schedule(report, sched_path);
  const auto result = analysis::analyze_schedule(inst, sched);
  report.add("lifetime", result.lifetime);
  report.add("round_robin", result.round_robin);
  for (std::size_t j = 0; j < result.strips.size(); ++j) {
    const auto& s = result.strips[j];
    const std::string tag = "strip" + std::to_string(j + 1) + ".";
    report.add(tag + "duration", s.cut.duration);
    report.add(tag + "round_robin", s.rr);
    report.add(tag + "rr_prime_before", s.rr_prime_strip);
    report.add(tag + "rr_prime_after", s.rr_prime_unit);
    report.add(tag + "scale", s.scale);
    report.add(tag + "delta", s.delta);
    report.add(tag + "unit_opt", s.unit_opt);
    report.add(tag + "ratio", s.ratio);
    report.lines.push_back("strip " + std::to_string(j + 1) + " from t=" + s.cut.start.str() + " members " +
                           join_indices(s.cut.members) + " pruned to " + join_indices(s.pruned.members) + ", " +
                           std::to_string(s.reduction.children.size()) + " unit children");
    for (const auto& c : s.checks) report.check("strip " + std::to_string(j + 1) + ": " + c.name, c.passed, c.detail);
  }
  for (const auto& c : result.checks) report.check(c.name, c.passed, c.detail);
  return emit(report, json);
}

int cmd_duty_cycle(const std::string& path, std::size_t max_n, bool json) {
  Report report;
  report.command = "duty-cycle";
  const Instance inst = load_instance(report, path);
  const auto best = dutycycle::best_partition(inst, max_n);
  std::string shifts = "partition";
  for (const auto& shift : best.partition.shifts) shifts += " " + join_indices(shift);
  report.lines.push_back(shifts);
  for (std::size_t s = 0; s < best.shift_lifetimes.size(); ++s) {
    report.add("shift" + std::to_string(s + 1), best.shift_lifetimes[s]);
  }
  report.add("total", best.total);
  report.add("round_robin", roundrobin::round_robin(inst).lifetime);
  report.add("max_bound", max_lifetime_bound(inst));
  report.check("schedule verifies to the total", evaluate_lifetime(inst, best.schedule) == best.total);
  return emit(report, json);
}

std::vector<std::size_t> to_indices(const std::vector<long>& one_based, std::size_t n) {
  std::vector<std::size_t> out;
  for (long v : one_based) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw Error(ErrorKind::parse_error, "split index " + std::to_string(v) + " out of range");
    }
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse_error, "cannot write '" + path + "'");
  out << text;
}

int cmd_gen_partition(const std::vector<long>& values, const std::vector<long>& split,
                      const std::string& inst_out, const std::string& sched_out) {
  const reductions::PartitionInput p(values);
  write_text(inst_out, io::format_instance(reductions::partition_to_instance(p)));
  if (!split.empty()) {
    reductions::Split s;
    s.first = to_indices(split, values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (std::find(s.first.begin(), s.first.end(), i) == s.first.end()) s.second.push_back(i);
    }
    if (inst_out.empty() && sched_out.empty()) std::cout << "# --- schedule ---\n";
    write_text(sched_out, io::format_schedule(reductions::certificate_to_schedule(p, s)));
  }
  return exit_ok;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("STRIPCOVER_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse_error, "STRIPCOVER_SEED is not an unsigned integer");
    }
  }
  return 1;
}

int cmd_bench(bool json, std::size_t fuzz_count, std::uint64_t seed, std::size_t max_n,
              const std::vector<std::string>& overrides) {
  auto pins = bench::default_pins();
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::parse_error, "--pin expects name=value, got '" + o + "'");
    const std::string name = o.substr(0, eq);
    const Rational value = parse_rational(o.substr(eq + 1));
    auto it = std::find_if(pins.begin(), pins.end(), [&](const auto& p) { return p.name == name; });
    if (it == pins.end()) throw Error(ErrorKind::parse_error, "no pinned value named '" + name + "'");
    it->expected = value;
  }

  Report report;
  report.command = "bench";
  for (const auto& o : bench::run(pins)) {
    if (o.actual) report.add(o.name, *o.actual);
    report.check(o.name, o.passed,
                 "expected " + o.expected.str() + ", got " + (o.actual ? o.actual->str() : std::string("nothing")));
  }
  if (fuzz_count > 0) {
    const auto cases = bench::fuzz(seed, fuzz_count, max_n);
    std::size_t failed = 0;
    for (const auto& c : cases) {
      if (c.failures.empty()) continue;
      ++failed;
      for (const auto& f : c.failures) {
        report.lines.push_back("fuzz case " + std::to_string(c.index) + " (seed " + std::to_string(c.seed) + "): " + f);
      }
    }
    report.check("fuzz: " + std::to_string(fuzz_count) + " random instances from seed " + std::to_string(seed),
                 failed == 0, std::to_string(failed) + " failing");
  }
  return emit(report, json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact barrier-coverage lifetime tools"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string inst_path;
  std::string sched_path;

  auto* solve = app.add_subcommand("solve-radsc", "optimal lifetime with every sensor starting at time 0");
  bool proper = false;
  bool oracle = false;
  solve->add_option("instance", inst_path, "instance file")->required();
  solve->add_flag("--proper", proper, "also print the properized assignment");
  solve->add_flag("--oracle", oracle, "cross-check against a linear scan of all candidates");
  solve->add_flag("--json", json, "machine-readable output");

  auto* rr = app.add_subcommand("round-robin", "RoundRobin schedule and its RR' bound");
  rr->add_option("instance", inst_path, "instance file")->required();
  rr->add_flag("--json", json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "exact lifetime of a schedule");
  verify->add_option("instance", inst_path, "instance file")->required();
  verify->add_option("schedule", sched_path, "schedule file")->required();
  verify->add_flag("--json", json, "machine-readable output");

  auto* analyze = app.add_subcommand("analyze", "strip pipeline with every invariant checked");
  analyze->add_option("instance", inst_path, "instance file")->required();
  analyze->add_option("schedule", sched_path, "schedule file")->required();
  analyze->add_flag("--json", json, "machine-readable output");

  auto* duty = app.add_subcommand("duty-cycle", "best duty-cycle schedule by exhaustive search");
  std::size_t max_n = dutycycle::default_n_limit;
  duty->add_option("instance", inst_path, "instance file")->required();
  duty->add_option("--max-n", max_n, "largest instance to enumerate")->capture_default_str();
  duty->add_flag("--json", json, "machine-readable output");

  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  auto* gen_partition = gen->add_subcommand("partition", "hardness construction from a Partition instance");
  std::vector<long> values;
  std::vector<long> split;
  std::string inst_out;
  std::string sched_out;
  gen_partition->add_option("--values", values, "positive integers, comma separated")->required()->delimiter(',');
  gen_partition->add_option("--split", split, "1-based indices of the first half")->delimiter(',');
  gen_partition->add_option("--instance-out", inst_out, "write the instance here instead of stdout");
  gen_partition->add_option("--schedule-out", sched_out, "write the schedule here instead of stdout");

  auto* gen_random = gen->add_subcommand("random", "random sorted instance");
  RandomInstanceOptions ropt;
  std::uint64_t gen_seed = 0;
  bool gen_seed_given = false;
  gen_random->add_option("-n,--sensors", ropt.sensors, "number of sensors")->capture_default_str();
  gen_random->add_option("--seed", gen_seed, "random seed (default: STRIPCOVER_SEED or 1)")
      ->each([&](const std::string&) { gen_seed_given = true; });
  gen_random->add_option("--battery-min", ropt.battery_min, "smallest battery")->capture_default_str();
  gen_random->add_option("--battery-max", ropt.battery_max, "largest battery")->capture_default_str();
  gen_random->add_option("--denominator", ropt.denominator, "location grid 1/d")->capture_default_str();
  gen_random->add_option("-o,--instance-out", inst_out, "write the instance here instead of stdout");

  auto* bench_cmd = app.add_subcommand("bench", "reproduce the pinned reference values");
  std::size_t fuzz_count = 0;
  std::uint64_t bench_seed = 0;
  bool bench_seed_given = false;
  std::size_t fuzz_max_n = 8;
  std::vector<std::string> overrides;
  bench_cmd->add_flag("--json", json, "machine-readable output");
  bench_cmd->add_option("--fuzz", fuzz_count, "random instances to push through the invariant suite");
  bench_cmd->add_option("--seed", bench_seed, "fuzz seed (default: STRIPCOVER_SEED or 1)")
      ->each([&](const std::string&) { bench_seed_given = true; });
  bench_cmd->add_option("--fuzz-max-n", fuzz_max_n, "largest fuzz instance")->capture_default_str();
  bench_cmd->add_option("--pin", overrides, "override a pinned value: name=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*solve) return cmd_solve_radsc(inst_path, proper, oracle, json);
    if (*rr) return cmd_round_robin(inst_path, json);
    if (*verify) return cmd_verify(inst_path, sched_path, json);
    if (*analyze) return cmd_analyze(inst_path, sched_path, json);
    if (*duty) return cmd_duty_cycle(inst_path, max_n, json);
    if (*gen_partition) return cmd_gen_partition(values, split, inst_out, sched_out);
    if (*gen_random) {
      const auto inst = random_instance(gen_seed_given ? gen_seed : default_seed(), ropt);
      write_text(inst_out, io::format_instance(inst));
      return exit_ok;
    }
    if (*bench_cmd) {
      return cmd_bench(json, fuzz_count, bench_seed_given ? bench_seed : default_seed(), fuzz_max_n, overrides);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::parse_error:
      case ErrorKind::size_mismatch:
      case ErrorKind::invalid_instance:
      case ErrorKind::invalid_schedule:
      case ErrorKind::invalid_partition:
      case ErrorKind::unbalanced_split:
      case ErrorKind::too_large:
        return exit_usage;
      default:
        return exit_failure;
    }
  }
  return exit_usage;
}
