#include "cubeshift/distributions.hpp"

#include <stdexcept>

#include "cubeshift/binomial.hpp"
#include "cubeshift/errors.hpp"
#include "cubeshift/krawtchouk.hpp"
#include "cubeshift/walsh.hpp"

namespace cubeshift {

namespace {
constexpr int kCubeLimit = 20;
}

CubeDistribution::CubeDistribution(int n, std::int64_t subset_size,
                                   std::vector<std::int64_t> charsums)
    : n_(n), size_(subset_size), charsums_(std::move(charsums)) {
  if (size_ <= 0) throw std::domain_error("cube distribution: empty subset");
  if (charsums_.size() != (size_t{1} << n_))
    throw std::domain_error("cube distribution: wrong charsum length");
}

Rational CubeDistribution::prob(std::uint64_t z) const {
  const BigInt cs = charsums_.at(z);
  return make_rational(cs * cs, BigInt(size_) << n_);
}

Rational CubeDistribution::total() const {
  BigInt sum = 0;
  for (auto cs : charsums_) sum += BigInt(cs) * cs;
  return make_rational(sum, BigInt(size_) << n_);
}

Rational WeightDistribution::total() const {
  Rational sum = 0;
  for (const auto& p : probs) sum += p;
  return sum;
}

CubeDistribution pi_subset(const SubsetSpec& spec) {
  if (spec.n() > kCubeLimit)
    throw CapacityError("pi_subset: full-cube distribution limited to n <= 20");
  const auto elems = spec.materialize();
  std::vector<std::int64_t> indicator(size_t{1} << spec.n(), 0);
  for (auto e : elems) indicator[e] = 1;
  walsh_butterflies(indicator);
  return CubeDistribution(spec.n(), static_cast<std::int64_t>(elems.size()),
                          std::move(indicator));
}

WeightDistribution collapse_by_weight(const CubeDistribution& dist) {
  WeightDistribution out;
  out.n = dist.n();
  std::vector<BigInt> sums(dist.n() + 1, BigInt(0));
  const auto& cs = dist.charsums();
  for (std::uint64_t z = 0; z < cs.size(); ++z)
    sums[hamming_weight(z)] += BigInt(cs[z]) * cs[z];
  const BigInt den = BigInt(dist.subset_size()) << dist.n();
  out.probs.reserve(dist.n() + 1);
  for (const auto& s : sums) out.probs.push_back(make_rational(s, den));
  return out;
}

WeightDistribution pi_sphere(long n, long r) {
  if (n < 1) throw std::domain_error("pi_sphere: n must be >= 1");
  if (r < 0 || 2 * r > n)
    throw std::domain_error(
        "pi_sphere: radius must satisfy 0 <= r <= n/2 (larger radii give "
        "the same outcome distribution as n - r)");
  const auto row = kraw_row(n, r);
  const BigInt den = binomial(n, r) << n;
  WeightDistribution out;
  out.n = static_cast<int>(n);
  out.probs.reserve(n + 1);
  for (long x = 0; x <= n; ++x)
    out.probs.push_back(make_rational(binomial(n, x) * row[x] * row[x], den));
  return out;
}

WeightDistribution pi_ball(long n, long r) {
  if (n < 1) throw std::domain_error("pi_ball: n must be >= 1");
  if (r < 0 || r > n) throw std::domain_error("pi_ball: radius out of [0,n]");
  const BigInt ball_size = binomial_prefix_sum(n, r);
  const BigInt den = ball_size << n;
  WeightDistribution out;
  out.n = static_cast<int>(n);
  out.probs.assign(n + 1, Rational(0));
  // At x = 0 every character sum contributes C(n,s), totalling |B_r|.
  out.probs[0] = make_rational(ball_size * ball_size, den);
  if (r <= n - 1) {
    const auto row = kraw_row(n - 1, r);
    for (long x = 1; x <= n; ++x)
      out.probs[x] =
          make_rational(binomial(n, x) * row[x - 1] * row[x - 1], den);
  }
  return out;
}

CentralProbs central_probs(long n, long r) {
  if (n < 1) throw std::domain_error("central_probs: n must be >= 1");
  if (r < 0 || 2 * r > n)
    throw std::domain_error("central_probs: radius must satisfy 0 <= r <= n/2");
  CentralProbs out;
  if (n % 2 == 0) {
    if (r % 2 == 0) {
      const BigInt cc = binomial(r, r / 2) * binomial(n - r, (n - r) / 2);
      out.center = pow2_rational(-n) * Rational(cc);
      out.flank = pow2_rational(1 - n) *
                  make_rational(BigInt(n - 2 * r) * (n - 2 * r) * cc,
                                BigInt(n) * (n + 2));
    } else {
      out.center = Rational(0);
      const BigInt cc =
          binomial(r - 1, (r - 1) / 2) * binomial(n - r - 1, (n - r - 1) / 2);
      out.flank = pow2_rational(5 - n) *
                  make_rational(BigInt(r) * (n - r) * cc, BigInt(n) * (n + 2));
    }
  } else {
    if (r % 2 == 0) {
      const BigInt cc =
          binomial(r, r / 2) * binomial(n - r - 1, (n - r - 1) / 2);
      out.flank =
          pow2_rational(2 - n) * make_rational(BigInt(n - r) * cc, n + 1);
    } else {
      const BigInt cc =
          binomial(r - 1, (r - 1) / 2) * binomial(n - r, (n - r) / 2);
      out.flank = pow2_rational(2 - n) * make_rational(BigInt(r) * cc, n + 1);
    }
  }
  return out;
}

Rational center_gap_even(long n, long r) {
  if (n < 4 || n % 2 != 0)
    throw std::domain_error("center_gap_even: n must be even and >= 4");
  if (r < 0 || r % 2 != 0 || r > n / 2 - 2)
    throw std::domain_error("center_gap_even: need even r <= n/2 - 2");
  const BigInt cc = binomial(r, r / 2) * binomial(n - r, (n - r) / 2);
  return pow2_rational(-n) *
         make_rational(BigInt(n - 2 * (r + 1)) * cc,
                       BigInt(n - r - 1) * (r + 2));
}

Rational flank_gap_even(long n, long r) {
  if (n < 6 || n % 2 != 0)
    throw std::domain_error("flank_gap_even: n must be even and >= 6");
  if (r < 1 || r % 2 != 1 || r + 2 > n / 2)
    throw std::domain_error("flank_gap_even: need odd r with r + 2 <= n/2");
  const BigInt cc =
      binomial(r - 1, (r - 1) / 2) * binomial(n - r - 1, (n - r - 1) / 2);
  return pow2_rational(5 - n) *
         make_rational(BigInt(r) * (n - 2 * (r + 1)) * cc,
                       BigInt(n) * (n + 2) * (r + 1));
}

Rational flank_gap_odd(long n, long r) {
  if (n < 7 || n % 2 != 1)
    throw std::domain_error("flank_gap_odd: n must be odd and >= 7");
  if (r < 1 || r % 2 != 1 || 2 * (r + 2) > n)
    throw std::domain_error("flank_gap_odd: need odd r with r + 2 <= n/2");
  const BigInt cc =
      binomial(r - 1, (r - 1) / 2) * binomial(n - r, (n - r) / 2);
  return pow2_rational(2 - n) *
         make_rational(BigInt(r) * cc, BigInt(r + 1) * (n - r - 1));
}

}  // namespace cubeshift
