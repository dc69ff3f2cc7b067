// Exact rational arithmetic plus the parsing/formatting conventions used in
// instance files and reports: "num/den", plain integers, or decimal strings.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "mapr/errors.hpp"

namespace mapr {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

// Largest integer <= r.
inline BigInt rat_floor(const Rat& r) {
  BigInt q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return q;
}

inline BigInt rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

inline double to_double(const Rat& r) {
  return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

// Canonical form: "num" when the denominator is 1, otherwise "num/den".
inline std::string to_string(const Rat& r) {
  std::string s = r.numerator().str();
  if (r.denominator() != 1) {
    s += '/';
    s += r.denominator().str();
  }
  return s;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

// Accepts "3/4", "-3/4", "7", "0.55", "-1.25". Throws DomainError on
// anything else (including a zero denominator).
inline Rat rat_from_string(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto fail = [&] {
    throw DomainError("not a rational: '" + std::string(text) + "'");
  };
  if (s.empty()) fail();

  auto slash = s.find('/');
  auto dot = s.find('.');
  Rat value;
  if (slash != std::string_view::npos) {
    if (dot != std::string_view::npos) fail();
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) fail();
    BigInt d{std::string(den)};
    if (d == 0) throw DomainError("zero denominator: '" + std::string(text) + "'");
    value = Rat(BigInt{std::string(num)}, d);
  } else if (dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (!detail::all_digits(whole) || !detail::all_digits(frac)) fail();
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rat(BigInt{std::string(whole)} * scale + BigInt{std::string(frac)}, scale);
  } else {
    if (!detail::all_digits(s)) fail();
    value = Rat(BigInt{std::string(s)});
  }
  return negative ? -value : value;
}

}  // namespace mapr
