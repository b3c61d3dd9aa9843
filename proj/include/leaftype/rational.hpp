#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace leaftype {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(Rational const& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(Rational const& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integer(Rational const& q) { return denominator(q) == 1; }

// Largest integer <= q.
Integer floor(Rational const& q);

// q - floor(q), in [0, 1).
Rational fractional_part(Rational const& q);

// "p" or "p/q", lowest terms.
std::string to_string(Rational const& q);

// Accepts "p", "-p", "p/q"; throws InvalidInput otherwise.
Rational parse_rational(std::string_view text);

}  // namespace leaftype
