#include "cubeshift/exact.hpp"

#include <stdexcept>

namespace cubeshift {

namespace {

// Top ~64 bits of |x| as a double, plus the left-over binary exponent.
std::pair<double, long> frexp_big(const BigInt& x) {
  if (x == 0) return {0.0, 0};
  const BigInt mag = abs(x);
  const long bits = static_cast<long>(msb(mag)) + 1;
  long shift = bits - 64;
  if (shift < 0) shift = 0;
  const BigInt top = mag >> shift;
  double d = top.convert_to<double>();
  if (x < 0) d = -d;
  return {d, shift};
}

}  // namespace

double to_double(const BigInt& x) {
  auto [d, shift] = frexp_big(x);
  return std::ldexp(d, static_cast<int>(shift));
}

double to_double(const Rational& q) {
  if (q == 0) return 0.0;
  const BigInt& num = numerator(q);
  const BigInt& den = denominator(q);
  const long ln = static_cast<long>(msb(abs(num)));
  const long ld = static_cast<long>(msb(den));
  // Shift so the integer quotient carries ~64 significant bits.
  const long s = ld - ln + 64;
  BigInt quot;
  if (s >= 0) {
    quot = (num << s) / den;
  } else {
    quot = num / (den << (-s));
  }
  auto [d, extra] = frexp_big(quot);
  return std::ldexp(d, static_cast<int>(extra - s));
}

double log_to_double(const Rational& q) {
  if (q <= 0) throw std::domain_error("log of non-positive rational");
  auto [dn, en] = frexp_big(numerator(q));
  auto [dd, ed] = frexp_big(denominator(q));
  constexpr double kLn2 = 0.6931471805599453;
  return std::log(dn) - std::log(dd) + (en - ed) * kLn2;
}

namespace {

// cpp_int's string constructor treats a leading 0 as octal; parse plain
// decimal with explicit sign handling instead.
BigInt parse_decimal(const std::string& text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i >= text.size()) throw std::invalid_argument("malformed integer: " + text);
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("malformed integer: " + text);
    value = value * 10 + (text[i] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    return make_rational(parse_decimal(text.substr(0, slash)),
                         parse_decimal(text.substr(slash + 1)));
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_decimal(text));
  const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const long frac_digits = static_cast<long>(text.size() - dot - 1);
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("malformed rational: " + text);
  BigInt den = 1;
  for (long i = 0; i < frac_digits; ++i) den *= 10;
  return make_rational(parse_decimal(digits), den);
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace cubeshift
