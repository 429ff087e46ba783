#pragma once

#include <cctype>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "gears/error.hpp"

namespace gears {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", an integer, or a finite decimal such as "1.5" or "-0.25"
/// into an exact rational. Exponent notation is rejected.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&] { return validation_error("not an exact rational: '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw bad();
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw bad();
    }
    // Leading zeros would make the BigInt parser read octal.
    std::size_t first = i;
    while (first + 1 < s.size() && s[first] == '0') ++first;
    const BigInt magnitude(s.substr(first));
    return s[0] == '-' ? BigInt(-magnitude) : magnitude;
  };
  if (slash != std::string::npos) {
    const BigInt num = parse_int(text.substr(0, slash));
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_int(text));
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.empty()) throw bad();
  const std::string digits = (whole.empty() || whole == "-" || whole == "+" ? std::string(whole) + "0" : whole);
  BigInt num = parse_int(digits + frac);
  BigInt den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace gears
