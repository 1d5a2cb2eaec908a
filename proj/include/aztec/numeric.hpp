#pragma once

#include <gmpxx.h>

#include <string>

namespace aztec {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }

inline std::string to_string(const Rational& value) {
  return value.get_den() == 1 ? value.get_num().get_str() : value.get_str();
}

// num/den in lowest terms.
inline Rational fraction(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

inline Integer pow2(unsigned long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, exponent);
  return result;
}

inline Rational pow(const Rational& base, long exponent) {
  Rational result = 1;
  Rational factor = exponent >= 0 ? base : Rational(1) / base;
  for (long e = exponent >= 0 ? exponent : -exponent; e > 0; --e) {
    result *= factor;
  }
  return result;
}

}  // namespace aztec
