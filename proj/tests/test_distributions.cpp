#include <doctest.h>

#include <bit>
#include <cstdint>
#include <vector>

#include "cubeshift/binomial.hpp"
#include "cubeshift/distributions.hpp"
#include "cubeshift/errors.hpp"
#include "cubeshift/rng.hpp"

using namespace cubeshift;

namespace {

// Independent oracle: per-outcome character sums by the double loop, no
// transform involved.
Rational pi_brute(const std::vector<std::uint64_t>& set, int n,
                  std::uint64_t z) {
  long long cs = 0;
  for (auto y : set) cs += (std::popcount(y & z) & 1) ? -1 : 1;
  return make_rational(BigInt(cs) * cs, BigInt(set.size()) << n);
}

std::vector<std::uint64_t> random_subset(RngState& rng, int n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (1ULL << n); ++x)
    if (rng.next_below(4) == 0) out.push_back(x);
  if (out.empty()) out.push_back(rng.next_below(1ULL << n));
  return out;
}

}  // namespace

TEST_SUITE("distributions") {

TEST_CASE("full cube concentrates on the zero string") {
  SubsetSpec spec(4, Ball{4});
  const auto dist = pi_subset(spec);
  CHECK(dist.prob(0) == 1);
  for (std::uint64_t z = 1; z < 16; ++z) CHECK(dist.prob(z) == 0);
  CHECK(dist.total() == 1);
}

TEST_CASE("two-point line in n = 2 lands uniformly on the dual line") {
  SubsetSpec spec(2, ExplicitSet{{0b00, 0b11}});
  const auto dist = pi_subset(spec);
  CHECK(dist.prob(0b00) == Rational(1, 2));
  CHECK(dist.prob(0b11) == Rational(1, 2));
  CHECK(dist.prob(0b01) == 0);
  CHECK(dist.prob(0b10) == 0);
}

TEST_CASE("explicit sphere collapses onto the sphere weight distribution") {
  SubsetSpec spec(3, Sphere{1});
  const auto collapsed = collapse_by_weight(pi_subset(spec));
  const auto direct = pi_sphere(3, 1);
  CHECK(collapsed.probs == direct.probs);
}

TEST_CASE("pi_subset agrees with the per-outcome brute force") {
  RngState rng(2024);
  for (int n = 2; n <= 8; ++n) {
    const auto set = random_subset(rng, n);
    SubsetSpec spec(n, ExplicitSet{set});
    const auto dist = pi_subset(spec);
    for (std::uint64_t z = 0; z < (1ULL << n); ++z)
      CHECK(dist.prob(z) == pi_brute(set, n, z));
  }
}

TEST_CASE("shifting the subset leaves the distribution untouched") {
  RngState rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng.next_below(10));  // up to 12
    const auto set = random_subset(rng, n);
    const std::uint64_t shift = rng.next_below(1ULL << n);
    std::vector<std::uint64_t> shifted;
    for (auto y : set) shifted.push_back(y ^ shift);
    const auto a = pi_subset(SubsetSpec(n, ExplicitSet{set}));
    const auto b = pi_subset(SubsetSpec(n, ExplicitSet{shifted}));
    for (std::uint64_t z = 0; z < (1ULL << n); ++z)
      CHECK(a.prob(z) == b.prob(z));
  }
}

TEST_CASE("zero-string probability equals the subset density") {
  RngState rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(11));  // up to 12
    const auto set = random_subset(rng, n);
    const auto dist = pi_subset(SubsetSpec(n, ExplicitSet{set}));
    CHECK(dist.prob(0) == make_rational(set.size(), BigInt(1) << n));
  }
}

TEST_CASE("pi_subset enforces its capacity limit") {
  CHECK_THROWS_AS(pi_subset(SubsetSpec(21, Sphere{1})), CapacityError);
}

TEST_CASE("sphere distribution basics") {
  SUBCASE("radius zero is the binomial distribution") {
    for (long n : {3L, 6L, 9L}) {
      const auto dist = pi_sphere(n, 0);
      for (long x = 0; x <= n; ++x)
        CHECK(dist.probs[x] == make_rational(binomial(n, x), BigInt(1) << n));
    }
  }
  SUBCASE("pinned entries") {
    CHECK(pi_sphere(4, 2).probs[2] == Rational(1, 4));
    CHECK(pi_sphere(4, 1).probs[2] == 0);
  }
  SUBCASE("radius above n/2 is rejected") {
    CHECK_THROWS_AS(pi_sphere(4, 3), std::domain_error);
  }
  SUBCASE("sums to one exactly") {
    for (long n = 1; n <= 20; ++n)
      for (long r = 0; 2 * r <= n; ++r) CHECK(pi_sphere(n, r).total() == 1);
  }
}

TEST_CASE("sphere weight collapse equals the explicit-subset route") {
  for (int n = 1; n <= 14; ++n) {
    for (long r = 0; 2 * r <= n; ++r) {
      const auto direct = pi_sphere(n, r);
      const auto collapsed =
          collapse_by_weight(pi_subset(SubsetSpec(n, Sphere{r})));
      CHECK(direct.probs == collapsed.probs);
    }
  }
}

TEST_CASE("ball distribution basics") {
  SUBCASE("radius n is the full cube: all samples have weight zero") {
    const auto dist = pi_ball(5, 5);
    CHECK(dist.probs[0] == 1);
    for (long x = 1; x <= 5; ++x) CHECK(dist.probs[x] == 0);
  }
  SUBCASE("radius zero is a single point: binomial outcomes") {
    const auto dist = pi_ball(3, 0);
    for (long x = 0; x <= 3; ++x)
      CHECK(dist.probs[x] == make_rational(binomial(3, x), 8));
  }
  SUBCASE("matches the explicit-subset route") {
    for (int n = 1; n <= 12; ++n)
      for (long r = 0; r <= n; ++r) {
        const auto direct = pi_ball(n, r);
        const auto collapsed =
            collapse_by_weight(pi_subset(SubsetSpec(n, Ball{r})));
        CHECK(direct.probs == collapsed.probs);
      }
  }
  SUBCASE("sums to one exactly") {
    for (long n = 1; n <= 20; ++n)
      for (long r = 0; r <= n; ++r) CHECK(pi_ball(n, r).total() == 1);
  }
}

TEST_CASE("central closed forms at pinned points") {
  const auto c42 = central_probs(4, 2);
  CHECK(*c42.center == Rational(1, 4));
  const auto c41 = central_probs(4, 1);
  CHECK(*c41.center == 0);
  CHECK(c41.flank == Rational(1, 2));
  const auto c31 = central_probs(3, 1);
  CHECK(!c31.center.has_value());
  CHECK(c31.flank == Rational(1, 4));
}

TEST_CASE("central closed forms equal the generic entries exactly") {
  for (long n = 1; n <= 24; ++n) {
    for (long r = 0; 2 * r <= n; ++r) {
      const auto dist = pi_sphere(n, r);
      const auto closed = central_probs(n, r);
      if (n % 2 == 0) {
        REQUIRE(closed.center.has_value());
        CHECK(*closed.center == dist.probs[n / 2]);
        CHECK(closed.flank == dist.probs[n / 2 - 1] + dist.probs[n / 2 + 1]);
        // the two flanking weights carry identical mass
        CHECK(dist.probs[n / 2 - 1] == dist.probs[n / 2 + 1]);
      } else {
        CHECK(!closed.center.has_value());
        CHECK(closed.flank ==
              dist.probs[(n - 1) / 2] + dist.probs[(n + 1) / 2]);
      }
    }
  }
}

TEST_CASE("center gap formula equals the direct difference and is positive") {
  CHECK(center_gap_even(8, 0) ==
        pi_sphere(8, 0).probs[4] - pi_sphere(8, 2).probs[4]);
  CHECK(center_gap_even(6, 0) > 0);
  CHECK(center_gap_even(12, 4) ==
        pi_sphere(12, 4).probs[6] - pi_sphere(12, 6).probs[6]);
  for (long n = 4; n <= 24; n += 2)
    for (long r = 0; r <= n / 2 - 2; r += 2) {
      const Rational gap = center_gap_even(n, r);
      CHECK(gap > 0);
      CHECK(gap == pi_sphere(n, r).probs[n / 2] -
                       pi_sphere(n, r + 2).probs[n / 2]);
    }
  CHECK_THROWS_AS(center_gap_even(8, 1), std::domain_error);
  CHECK_THROWS_AS(center_gap_even(7, 0), std::domain_error);
  CHECK_THROWS_AS(center_gap_even(8, 4), std::domain_error);
}

TEST_CASE("flank gap formulas equal the direct differences") {
  CHECK(flank_gap_even(10, 1) ==
        central_probs(10, 3).flank - central_probs(10, 1).flank);
  CHECK(flank_gap_odd(9, 1) ==
        central_probs(9, 3).flank - central_probs(9, 1).flank);
  CHECK(flank_gap_even(8, 1) > 0);
  for (long n = 6; n <= 24; n += 2)
    for (long r = 1; r + 2 <= n / 2; r += 2) {
      const Rational gap = flank_gap_even(n, r);
      CHECK(gap > 0);
      CHECK(gap == central_probs(n, r + 2).flank - central_probs(n, r).flank);
    }
  for (long n = 7; n <= 25; n += 2)
    for (long r = 1; 2 * (r + 2) <= n; r += 2) {
      const Rational gap = flank_gap_odd(n, r);
      CHECK(gap > 0);
      CHECK(gap == central_probs(n, r + 2).flank - central_probs(n, r).flank);
    }
  CHECK_THROWS_AS(flank_gap_even(10, 2), std::domain_error);
  CHECK_THROWS_AS(flank_gap_even(9, 1), std::domain_error);
  CHECK_THROWS_AS(flank_gap_odd(8, 1), std::domain_error);
  CHECK_THROWS_AS(flank_gap_odd(9, 3), std::domain_error);
}

TEST_CASE("center mass dominates an inverse-polynomial floor") {
  // pi_r(n/2) >= (1/pi) / sqrt(r (n-r)) for even r > 0, certified with a
  // rational lower bound on pi so the comparison stays exact.
  const Rational pi_lo(BigInt("314159265358979"), BigInt("100000000000000"));
  for (long n = 2; n <= 32; n += 2) {
    for (long r = 2; 2 * r <= n; r += 2) {
      const Rational lhs = pi_sphere(n, r).probs[n / 2];
      CHECK(lhs * lhs * pi_lo * pi_lo * Rational(r * (n - r)) >= 1);
    }
    const Rational lhs0 = pi_sphere(n, 0).probs[n / 2];
    // pi_0(n/2) >= 0.56 / sqrt(n)
    CHECK(lhs0 * lhs0 * Rational(n) >= Rational(3136, 10000));
  }
}

TEST_CASE("central binomial coefficient sandwich") {
  const Rational pi_lo(BigInt("314159265358979"), BigInt("100000000000000"));
  const Rational pi_hi(BigInt("314159265358980"), BigInt("100000000000000"));
  for (long m = 1; m <= 32; ++m) {
    const Rational c(binomial(2 * m, m));
    CHECK(c * c * pi_hi * m <= pow2_rational(4 * m));
    CHECK(c * c * 2 * pi_lo * m >= pow2_rational(4 * m));
  }
}

}  // TEST_SUITE
