#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace soncray {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const Integer& z) { return z.str(); }

// Canonical form "p" or "p/q"; denominators are positive and in lowest terms.
inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational rational_from_string(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Integer(text));
  Integer num(text.substr(0, slash));
  Integer den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num) / den;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Integer& z) { return z.convert_to<double>(); }

// Smallest integer >= r.
inline Integer rational_ceil(const Rational& r) {
  Integer num = numerator(r);
  Integer den = denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (num > 0 && num % den != 0) ++q;
  return q;
}

// Bits in |z|; 0 for z == 0.
inline std::size_t bit_length(Integer z) {
  if (z == 0) return 0;
  if (z < 0) z = -z;
  return static_cast<std::size_t>(boost::multiprecision::msb(z)) + 1;
}

}  // namespace soncray
