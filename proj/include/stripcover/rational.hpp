#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "stripcover/error.hpp"

namespace stripcover {

/// Exact arbitrary-precision fraction, always in lowest terms with a
/// positive denominator. Backed by GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value) : value_(mpz_class(std::to_string(value))) {}  // NOLINT
  Rational(unsigned long value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) {
      throw Error(ErrorKind::division_by_zero, "rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }

  Rational(long numerator, long denominator)
      : Rational(mpz_class(numerator), mpz_class(denominator)) {}

  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs) {
    if (rhs.value_ == 0) throw Error(ErrorKind::division_by_zero, "rational division by zero");
    value_ /= rhs.value_;
    return *this;
  }

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& v) { return Rational(mpq_class(-v.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Canonical exact form "p/q" (q = 1 for integers).
  std::string str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  /// Display-only decimal with `digits` significant digits, round-half-even.
  std::string decimal(int digits = 12) const;

  double to_double() const { return value_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

 private:
  mpq_class value_;
};

inline Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

/// The smallest integer not below `v`.
inline mpz_class ceil(const Rational& v) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v.numerator().get_mpz_t(), v.denominator().get_mpz_t());
  return q;
}

inline mpz_class pow10(unsigned long exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return r;
}

inline std::string Rational::decimal(int digits) const {
  if (digits < 1) digits = 1;
  if (value_ == 0) return "0";
  const bool negative = sgn(value_) < 0;
  const mpz_class num = abs(value_.get_num());
  const mpz_class den = value_.get_den();

  // exponent e with 10^e <= num/den < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto scaled_cmp = [&](long exp) {
    // compare num/den against 10^exp
    if (exp >= 0) return cmp(num, den * pow10(static_cast<unsigned long>(exp)));
    return cmp(num * pow10(static_cast<unsigned long>(-exp)), den);
  };
  while (scaled_cmp(e) < 0) --e;
  while (scaled_cmp(e + 1) >= 0) ++e;

  const long shift = digits - 1 - e;
  mpz_class top = num;
  mpz_class bottom = den;
  if (shift >= 0) {
    top *= pow10(static_cast<unsigned long>(shift));
  } else {
    bottom *= pow10(static_cast<unsigned long>(-shift));
  }
  mpz_class q;
  mpz_class r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), bottom.get_mpz_t());
  const int half = cmp(mpz_class(2 * r), bottom);
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  if (q == pow10(static_cast<unsigned long>(digits))) {
    q /= 10;
    ++e;
  }

  std::string ds = q.get_str();  // exactly `digits` characters
  std::string out = negative ? "-" : "";
  auto trim = [](std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };
  if (e >= -6 && e < digits) {
    std::string body;
    if (e >= 0) {
      body = ds.substr(0, static_cast<std::size_t>(e + 1)) + "." +
             ds.substr(static_cast<std::size_t>(e + 1));
    } else {
      body = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
    }
    return out + trim(body);
  }
  return out + trim(ds.substr(0, 1) + "." + ds.substr(1)) + "e" + (e >= 0 ? "+" : "") +
         std::to_string(e);
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

/// Parses an integer ("3"), an exact decimal ("0.25", ".5") or a fraction
/// ("3/4"). A leading sign is accepted on the integer part only.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorKind::parse_error, "malformed number '" + std::string(text) + "'");
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return fail();

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto p = s.substr(0, slash);
    const auto q = s.substr(slash + 1);
    if (!detail::all_digits(p) || !detail::all_digits(q)) return fail();
    const mpz_class den(std::string(q), 10);
    if (den == 0) throw Error(ErrorKind::division_by_zero, "zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(p), 10), den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !detail::all_digits(whole)) return fail();
    if (!frac.empty() && !detail::all_digits(frac)) return fail();
    const std::string digits = std::string(whole) + std::string(frac);
    value = Rational(mpz_class(digits.empty() ? "0" : digits, 10), pow10(frac.size()));
  } else {
    if (!detail::all_digits(s)) return fail();
    value = Rational(mpz_class(std::string(s), 10), mpz_class(1));
  }
  return negative ? -value : value;
}

}  // namespace stripcover
