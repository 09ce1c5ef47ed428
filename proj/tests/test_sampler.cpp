#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cubeshift/distributions.hpp"
#include "cubeshift/errors.hpp"
#include "cubeshift/rng.hpp"
#include "cubeshift/sampler.hpp"
#include "support/stats.hpp"

using namespace cubeshift;

namespace {
constexpr double kTol = 0x1.0p-40;
}

TEST_SUITE("sampler") {

TEST_CASE("identical rng state replays the identical sequence") {
  RngState a(123, 7), b(123, 7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  RngState c(123, 8);
  bool all_equal = true;
  RngState a2(123, 7);
  for (int i = 0; i < 100; ++i) all_equal &= (a2.next_u64() == c.next_u64());
  CHECK(!all_equal);
  CHECK(RngState::kAlgorithm == std::string_view("splitmix64"));
}

TEST_CASE("next_below stays in range and is unbiased enough to use") {
  RngState rng(5);
  std::vector<long> counts(10, 0);
  for (int i = 0; i < 100000; ++i) ++counts[rng.next_below(10)];
  for (long c : counts) CHECK(std::abs(c - 10000) < 500);
  CHECK_THROWS_AS(rng.next_below(0), std::domain_error);
}

TEST_CASE("walsh_hadamard is an involution") {
  RngState rng(31337);
  std::vector<double> f(1 << 10);
  for (auto& v : f) v = rng.next_double() - 0.5;
  auto g = f;
  walsh_hadamard(g);
  walsh_hadamard(g);
  for (size_t i = 0; i < f.size(); ++i)
    CHECK(std::abs(f[i] - g[i]) < kTol);
}

TEST_CASE("shifted states put equal amplitude on the translated subset") {
  SUBCASE("single point at the origin") {
    SubsetSpec spec(3, ExplicitSet{{0}});
    const auto state = make_shifted_state(spec, 0);
    CHECK(state.amplitudes[0] == 1.0);
    for (size_t i = 1; i < state.amplitudes.size(); ++i)
      CHECK(state.amplitudes[i] == 0.0);
  }
  SUBCASE("weight-1 sphere in n = 2 shifted by the second variable") {
    SubsetSpec spec(2, Sphere{1});
    const auto state = make_shifted_state(spec, parse_bits("10", 2));
    const double amp = 1.0 / std::sqrt(2.0);
    CHECK(state.amplitudes[0b00] == doctest::Approx(amp));
    CHECK(state.amplitudes[0b11] == doctest::Approx(amp));
    CHECK(state.amplitudes[0b01] == 0.0);
    CHECK(state.amplitudes[0b10] == 0.0);
  }
  SUBCASE("zero shift keeps the support on the subset itself") {
    SubsetSpec spec(5, Sphere{2});
    const auto state = make_shifted_state(spec, 0);
    const auto elems = spec.materialize();
    long nonzero = 0;
    const double amp = 1.0 / std::sqrt(static_cast<double>(elems.size()));
    for (size_t z = 0; z < state.amplitudes.size(); ++z) {
      if (state.amplitudes[z] == 0.0) continue;
      ++nonzero;
      CHECK(state.amplitudes[z] == doctest::Approx(amp));
      CHECK(spec.contains(z));
    }
    CHECK(nonzero == static_cast<long>(elems.size()));
  }
  SUBCASE("unit norm") {
    SubsetSpec spec(9, Ball{3});
    const auto state = make_shifted_state(spec, 0b101);
    double norm = 0;
    for (double a : state.amplitudes) norm += a * a;
    CHECK(std::abs(norm - 1.0) < kTol);
  }
  SUBCASE("capacity limit") {
    CHECK_THROWS_AS(make_shifted_state(SubsetSpec(21, Sphere{1}), 0),
                    CapacityError);
  }
}

TEST_CASE("fourier samples from the full cube are always the zero string") {
  SubsetSpec spec(4, Ball{4});
  const auto state = make_shifted_state(spec, 0b0110);
  FourierSampler sampler(state);
  RngState rng(1);
  for (int i = 0; i < 1000; ++i) CHECK(sampler.sample(rng) == 0);
}

TEST_CASE("parity-set outcomes are the mask or zero, each half the time") {
  const std::uint64_t t = parse_bits("101", 3);
  SubsetSpec spec(3, ParitySet{t});
  const auto state = make_shifted_state(spec, 0b010);
  FourierSampler sampler(state);
  CHECK(sampler.probabilities()[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sampler.probabilities()[t] == doctest::Approx(0.5).epsilon(1e-12));
  RngState rng(9);
  long hits = 0;
  const long total = 100000;
  for (long i = 0; i < total; ++i) {
    const auto z = sampler.sample(rng);
    if (z == t)
      ++hits;
    else
      CHECK(z == 0);
  }
  CHECK(std::abs(hits / double(total) - 0.5) < 0.02);
}

TEST_CASE("the hidden shift does not move the outcome distribution") {
  SubsetSpec spec(8, Sphere{2});
  const FourierSampler a(make_shifted_state(spec, 0));
  const FourierSampler b(make_shifted_state(spec, 0b10110101));
  // exact at the probability level, up to transform rounding
  for (size_t z = 0; z < a.probabilities().size(); ++z)
    CHECK(std::abs(a.probabilities()[z] - b.probabilities()[z]) < kTol);
  // and the exact distribution matches the subset formula
  const auto exact = pi_subset(spec);
  for (size_t z = 0; z < a.probabilities().size(); ++z)
    CHECK(std::abs(a.probabilities()[z] - to_double(exact.prob(z))) < kTol);
}

TEST_CASE("empirical fourier samples pass a chi-square test") {
  SubsetSpec spec(6, Sphere{2});
  const std::uint64_t shift = 0b011010;
  const auto state = make_shifted_state(spec, shift);
  FourierSampler sampler(state);
  const auto exact = pi_subset(spec);
  const long total = 100000;
  RngState rng(4242);
  std::vector<long> counts(1 << 6, 0);
  for (long i = 0; i < total; ++i) ++counts[sampler.sample(rng)];
  std::vector<double> expected(1 << 6);
  for (std::uint64_t z = 0; z < expected.size(); ++z)
    expected[z] = to_double(exact.prob(z)) * total;
  CHECK(teststat::chi_square_pvalue(expected, counts) > 0.001);
}

TEST_CASE("empirical fourier samples pass chi-square at n = 14") {
  SubsetSpec spec(14, Sphere{3});
  const auto state = make_shifted_state(spec, 0b10011010010110);
  FourierSampler sampler(state);
  const auto exact = pi_subset(spec);
  const long total = 100000;
  RngState rng(171717);
  std::vector<long> counts(1 << 14, 0);
  for (long i = 0; i < total; ++i) ++counts[sampler.sample(rng)];
  std::vector<double> expected(1 << 14);
  for (std::uint64_t z = 0; z < expected.size(); ++z)
    expected[z] = to_double(exact.prob(z)) * total;
  CHECK(teststat::chi_square_pvalue(expected, counts) > 0.001);
}

TEST_CASE("weight sampling honours the exact distribution") {
  SUBCASE("point mass") {
    const auto dist = pi_ball(6, 6);  // all mass at weight 0
    WeightSampler ws(dist);
    RngState rng(2);
    for (int i = 0; i < 200; ++i) CHECK(ws.sample(rng) == 0);
  }
  SUBCASE("zero-probability weights are never drawn") {
    const auto dist = pi_sphere(4, 1);
    REQUIRE(dist.probs[2] == 0);
    WeightSampler ws(dist);
    RngState rng(3);
    for (long i = 0; i < 100000; ++i) CHECK(ws.sample(rng) != 2);
  }
  SUBCASE("frequencies converge to the exact values") {
    const auto dist = pi_sphere(4, 2);
    REQUIRE(dist.probs[2] == Rational(1, 4));
    WeightSampler ws(dist);
    RngState rng(4);
    long hits = 0;
    const long total = 100000;
    for (long i = 0; i < total; ++i)
      if (ws.sample(rng) == 2) ++hits;
    CHECK(std::abs(hits / double(total) - 0.25) < 0.01);
  }
  SUBCASE("one-shot helper draws from the same distribution") {
    const auto dist = pi_sphere(6, 1);
    RngState rng(5);
    for (int i = 0; i < 50; ++i) {
      const int w = sample_weight(dist, rng);
      CHECK(dist.probs[w] > 0);
    }
  }
}

}  // TEST_SUITE
