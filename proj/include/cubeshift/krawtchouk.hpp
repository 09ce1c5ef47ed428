#pragma once

#include <utility>
#include <vector>

#include "cubeshift/exact.hpp"

namespace cubeshift {

// Krawtchouk polynomial K_r^n(x) = sum_{i=0}^{r} (-1)^i C(x,i) C(n-x,r-i),
// the character sum of the weight-r slice of {0,1}^n against any string of
// weight x. Everything here is exact integer arithmetic.

// Direct alternating-sum evaluation. Throws std::domain_error outside
// 0 <= r <= n, 0 <= x <= n.
BigInt kraw_direct(long n, long r, long x);

// One full row K_r^n(0..n) via the three-term recurrence in x,
//   (n-x) K_r(x+1) = (n-2r) K_r(x) - x K_r(x-1),
// seeded from K_r(0) = C(n,r) and K_r(1) = C(n-1,r) - C(n-1,r-1).
// Each division is exact. O(n) big-integer steps.
std::vector<BigInt> kraw_row(long n, long r);

// All of K_r^n(x) for 0 <= r,x <= n, filled dimension by dimension with
//   K_r^n(x) = K_r^{n-1}(x) + K_{r-1}^{n-1}(x)        (x <= n-1)
//   K_r^n(n) = K_r^{n-1}(n-1) - K_{r-1}^{n-1}(n-1)
// starting from the single entry K_0^0(0) = 1.
class KrawtchoukTable {
 public:
  explicit KrawtchoukTable(long n);

  long n() const { return n_; }
  const BigInt& at(long r, long x) const;

 private:
  long n_;
  std::vector<std::vector<BigInt>> entries_;  // entries_[r][x]
};

// Coefficients of (1-z)^x (1+z)^{n-x}; the coefficient of z^r is K_r^n(x).
std::vector<BigInt> kraw_gf_coefficients(long n, long x);

// Both sides of sum_{s=0}^{r} K_s^n(x) = K_r^{n-1}(x-1). Requires x >= 1.
std::pair<BigInt, BigInt> kraw_ball_identity(long n, long r, long x);

// Residuals of the two recurrences
//   x K_r(x-1) - (n-2r) K_r(x) + (n-x) K_r(x+1)        (1 <= x <= n-1)
//   K_r(x-1) - K_{r-1}(x) - K_{r-1}(x-1) - K_r(x)      (x >= 1, r >= 1)
// Both are identically zero; returned for verification.
std::pair<BigInt, BigInt> kraw_recurrence_residuals(long n, long r, long x);

}  // namespace cubeshift
