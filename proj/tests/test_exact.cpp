#include <doctest.h>

#include <cmath>

#include "cubeshift/exact.hpp"

using namespace cubeshift;

TEST_SUITE("exact") {

TEST_CASE("make_rational reduces and fixes the sign") {
  Rational q = make_rational(6, -4);
  CHECK(numerator(q) == -3);
  CHECK(denominator(q) == 2);
  CHECK(make_rational(0, 7) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("pow2_rational covers both signs of the exponent") {
  CHECK(pow2_rational(0) == 1);
  CHECK(pow2_rational(10) == 1024);
  CHECK(pow2_rational(-3) == Rational(1, 8));
  CHECK(pow2_rational(-1) * pow2_rational(1) == 1);
}

TEST_CASE("to_double is accurate at ordinary scale") {
  CHECK(to_double(Rational(1, 3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(to_double(Rational(-7, 2)) == -3.5);
  CHECK(to_double(BigInt(1) << 100) == doctest::Approx(std::ldexp(1.0, 100)));
  CHECK(to_double(Rational(0)) == 0.0);
}

TEST_CASE("to_double survives magnitudes beyond the naive range") {
  // value ~ 2^-700: both components huge, quotient tiny but representable
  Rational tiny = make_rational(BigInt(1) << 300, BigInt(1) << 1000);
  CHECK(to_double(tiny) == std::ldexp(1.0, -700));
  Rational big = make_rational(BigInt(3) << 900, BigInt(1) << 100);
  CHECK(to_double(big) == doctest::Approx(3.0 * std::ldexp(1.0, 800)));
}

TEST_CASE("log_to_double works far outside double range") {
  CHECK(log_to_double(pow2_rational(-5000)) ==
        doctest::Approx(-5000 * std::log(2.0)).epsilon(1e-12));
  CHECK(log_to_double(Rational(3, 4)) ==
        doctest::Approx(std::log(0.75)).epsilon(1e-12));
  CHECK_THROWS_AS(log_to_double(Rational(0)), std::domain_error);
}

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(parse_rational("42") == 42);
  CHECK(parse_rational("-3/9") == Rational(-1, 3));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("1.5") == Rational(3, 2));
  CHECK(parse_rational("-0.05") == Rational(-1, 20));
  CHECK_THROWS(parse_rational("."));
}

TEST_CASE("to_string round-trips through parse_rational") {
  for (long num = -7; num <= 7; ++num) {
    for (long den = 1; den <= 5; ++den) {
      Rational q = make_rational(num, den);
      CHECK(parse_rational(to_string(q)) == q);
    }
  }
}

TEST_CASE("randomized to_double agrees with long-double division") {
  std::uint64_t state = 12345;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 16;
  };
  for (int i = 0; i < 200; ++i) {
    const long long num = static_cast<long long>(next() % 1000000007) - 500000003;
    const long long den = static_cast<long long>(next() % 999999937) + 1;
    const double got = to_double(make_rational(num, den));
    const double want = static_cast<double>(static_cast<long double>(num) / den);
    CHECK(got == doctest::Approx(want).epsilon(1e-15));
  }
}

}  // TEST_SUITE
