#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace cubeshift {

// Exact arithmetic substrate. Every probability and polynomial value in the
// library is an integer or a reduced fraction of these; floating point enters
// only at the sampling/reporting boundary.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational's component constructor rejects negative denominators.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

// 2^k for any sign of k.
inline Rational pow2_rational(long k) {
  if (k >= 0) return Rational(BigInt(1) << k);
  return make_rational(1, BigInt(1) << (-k));
}

inline BigInt pow2_int(long k) { return BigInt(1) << k; }

// q^e for e >= 0.
inline Rational pow_rational(const Rational& q, unsigned long e) {
  using boost::multiprecision::pow;
  return make_rational(pow(numerator(q), static_cast<unsigned>(e)),
                       pow(denominator(q), static_cast<unsigned>(e)));
}

// Conversion that stays accurate for values far outside the naive
// numerator/denominator double range: scale the quotient to ~64 bits and
// re-apply the exponent with ldexp. Magnitudes below ~2^-1074 flush to zero.
double to_double(const BigInt& x);
double to_double(const Rational& q);

// Natural log of a positive rational, usable when the value itself would
// over- or underflow a double.
double log_to_double(const Rational& q);

// Accepts "123", "-4/7" and plain decimals like "0.25" (parsed exactly).
Rational parse_rational(const std::string& text);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& q);

}  // namespace cubeshift
