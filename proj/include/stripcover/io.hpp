#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stripcover/core.hpp"

namespace stripcover::io {

/// One pair of numbers per non-blank line; '#' starts a comment.
inline std::vector<std::pair<Rational, Rational>> parse_pairs(std::istream& in,
                                                               const std::string& what) {
  std::vector<std::pair<Rational, Rational>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw Error(ErrorKind::parse_error, what + " line " + std::to_string(line_no) +
                                              ": expected 2 numbers, found " +
                                              std::to_string(tokens.size()));
    }
    try {
      rows.emplace_back(parse_rational(tokens[0]), parse_rational(tokens[1]));
    } catch (const Error& e) {
      throw Error(ErrorKind::parse_error, what + " line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

struct ParsedInstance {
  Instance instance;
  bool was_sorted;  // file order already nondecreasing in location
};

inline ParsedInstance parse_instance(std::istream& in) {
  const auto rows = parse_pairs(in, "instance");
  if (rows.empty()) throw Error(ErrorKind::parse_error, "instance has no sensors");
  std::vector<Rational> xs;
  std::vector<Rational> bs;
  bool sorted = true;
  for (const auto& [x, b] : rows) {
    if (!xs.empty() && x < xs.back()) sorted = false;
    xs.push_back(x);
    bs.push_back(b);
  }
  try {
    return {Instance(std::move(xs), std::move(bs)), sorted};
  } catch (const Error& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

inline Schedule parse_schedule(std::istream& in) {
  std::vector<Rational> radii;
  std::vector<Rational> taus;
  for (auto& [rho, tau] : parse_pairs(in, "schedule")) {
    radii.push_back(std::move(rho));
    taus.push_back(std::move(tau));
  }
  try {
    return Schedule(std::move(radii), std::move(taus));
  } catch (const Error& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open '" + path + "'");
  return in;
}

inline ParsedInstance read_instance_file(const std::string& path) {
  auto in = open_input(path);
  return parse_instance(in);
}

inline Schedule read_schedule_file(const std::string& path) {
  auto in = open_input(path);
  return parse_schedule(in);
}

inline std::string format_instance(const Instance& inst) {
  std::string out = "# location battery\n";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    out += inst.location(i).str() + " " + inst.battery(i).str() + "\n";
  }
  return out;
}

inline std::string format_schedule(const Schedule& sched) {
  std::string out = "# radius activation\n";
  for (std::size_t i = 0; i < sched.size(); ++i) {
    out += sched.radius(i).str() + " " + sched.activation(i).str() + "\n";
  }
  return out;
}

}  // namespace stripcover::io
