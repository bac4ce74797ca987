#pragma once

#include <stdexcept>
#include <string>

namespace stripcover {

enum class ErrorKind {
  division_by_zero,
  invalid_instance,
  invalid_schedule,
  size_mismatch,
  inactive_sensor,
  zero_total_battery,
  nonpositive_lifetime,
  infeasible_instance,
  too_large,
  zero_lifetime,
  non_integer_battery,
  no_sensor_in_unit_interval,
  degenerate_delta,
  invalid_partition,
  unbalanced_split,
  parse_error,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::invalid_instance: return "invalid-instance";
    case ErrorKind::invalid_schedule: return "invalid-schedule";
    case ErrorKind::size_mismatch: return "size-mismatch";
    case ErrorKind::inactive_sensor: return "inactive-sensor";
    case ErrorKind::zero_total_battery: return "zero-total-battery";
    case ErrorKind::nonpositive_lifetime: return "nonpositive-lifetime";
    case ErrorKind::infeasible_instance: return "infeasible-instance";
    case ErrorKind::too_large: return "too-large";
    case ErrorKind::zero_lifetime: return "zero-lifetime";
    case ErrorKind::non_integer_battery: return "non-integer-battery";
    case ErrorKind::no_sensor_in_unit_interval: return "no-sensor-in-unit-interval";
    case ErrorKind::degenerate_delta: return "degenerate-delta";
    case ErrorKind::invalid_partition: return "invalid-partition";
    case ErrorKind::unbalanced_split: return "unbalanced-split";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stripcover
