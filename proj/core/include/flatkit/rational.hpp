#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace flatkit {

// All arithmetic in this library is exact. Integers are arbitrary precision;
// rationals are kept in lowest terms with positive denominator by the backing
// type (zero is 0/1).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "p/q" with the denominator always present ("6" -> "6/1").
inline std::string fraction_str(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Int parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("bad integer literal: " + std::string(text));
  }
  return Int(std::string(text));
}

// Accepts "p" or "p/q" with integer p, q and q != 0.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Int num = parse_integer(text.substr(0, slash));
  Int den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

// Renders "p/q", or just "p" when the value is integral.
inline std::string rational_str(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return fraction_str(q);
}

}  // namespace flatkit
