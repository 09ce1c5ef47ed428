#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubeshift/exact.hpp"
#include "cubeshift/subset.hpp"

namespace cubeshift {

// Exact Fourier-sampling distribution over all of {0,1}^n for a subset S:
//   prob(z) = charsum(z)^2 / (|S| 2^n),  charsum(z) = sum_{y in S} (-1)^(y.z).
// Stored as the integer character sums, so 2^n entries stay compact and
// every probability is reproduced exactly on demand.
class CubeDistribution {
 public:
  CubeDistribution(int n, std::int64_t subset_size,
                   std::vector<std::int64_t> charsums);

  int n() const { return n_; }
  std::int64_t subset_size() const { return size_; }
  const std::vector<std::int64_t>& charsums() const { return charsums_; }

  Rational prob(std::uint64_t z) const;

  // Exact sum of all probabilities (1 by Parseval; asserted in tests).
  Rational total() const;

 private:
  int n_;
  std::int64_t size_;
  std::vector<std::int64_t> charsums_;
};

// Exact distribution over Hamming weights 0..n.
struct WeightDistribution {
  int n = 0;
  std::vector<Rational> probs;  // n+1 entries

  Rational total() const;
};

// Brute-force Fourier-sampling distribution of an arbitrary subset
// (n <= 20); shift-invariant by construction since only squared character
// sums enter.
CubeDistribution pi_subset(const SubsetSpec& spec);

// Collapse a cube distribution onto Hamming weights.
WeightDistribution collapse_by_weight(const CubeDistribution& dist);

// Weight distribution of Fourier samples from a hidden sphere of radius r:
//   prob(x) = C(n,x) K_r(x)^2 / (C(n,r) 2^n),  0 <= r <= n/2.
WeightDistribution pi_sphere(long n, long r);

// Weight distribution for a hidden ball of radius r (any 0 <= r <= n):
//   prob(x) = C(n,x) K_r^{n-1}(x-1)^2 / (2^n sum_{k<=r} C(n,k))   (x >= 1)
// with the x = 0 entry from the direct sum of the sphere character sums.
WeightDistribution pi_ball(long n, long r);

// Closed forms for the high-probability outcomes. For even n the center is
// the weight-n/2 probability and the flank is the weight n/2-1 plus n/2+1
// mass; for odd n only the flank (weights (n-1)/2 and (n+1)/2) exists.
struct CentralProbs {
  std::optional<Rational> center;
  Rational flank;
};
CentralProbs central_probs(long n, long r);

// pi_r(n/2) - pi_{r+2}(n/2) in closed form; n even, r even, r <= n/2 - 2.
// Strictly positive on its domain.
Rational center_gap_even(long n, long r);

// Flank-mass increment p(r+2) - p(r) for odd r, even n, r + 2 <= n/2.
Rational flank_gap_even(long n, long r);

// Flank-mass increment p'(r+2) - p'(r) for odd r, odd n, r + 2 <= n/2.
Rational flank_gap_odd(long n, long r);

}  // namespace cubeshift
