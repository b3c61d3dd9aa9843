#include "leaftype/rational.hpp"

#include <cctype>

#include "leaftype/error.hpp"

namespace leaftype {

Integer floor(Rational const& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer quot = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) {
    quot -= 1;
  }
  return quot;
}

Rational fractional_part(Rational const& q) { return q - Rational(floor(q)); }

std::string to_string(Rational const& q) {
  if (is_integer(q)) {
    return numerator(q).str();
  }
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidInput("not a rational number: '" + std::string(text) + "'");
  }
  Integer d{std::string(den)};
  if (d == 0) {
    throw InvalidInput("zero denominator: '" + std::string(text) + "'");
  }
  Rational q(Integer{std::string(num)}, d);
  return negative ? Rational(-q) : q;
}

}  // namespace leaftype
