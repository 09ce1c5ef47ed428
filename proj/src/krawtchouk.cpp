#include "cubeshift/krawtchouk.hpp"

#include <cassert>
#include <stdexcept>

#include "cubeshift/binomial.hpp"

namespace cubeshift {

namespace {

void check_domain(long n, long r, long x) {
  if (n < 0) throw std::domain_error("krawtchouk: n < 0");
  if (r < 0 || r > n) throw std::domain_error("krawtchouk: r out of [0,n]");
  if (x < 0 || x > n) throw std::domain_error("krawtchouk: x out of [0,n]");
}

}  // namespace

BigInt kraw_direct(long n, long r, long x) {
  check_domain(n, r, x);
  BigInt sum = 0;
  for (long i = 0; i <= r; ++i) {
    const BigInt term = binomial(x, i) * binomial(n - x, r - i);
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

std::vector<BigInt> kraw_row(long n, long r) {
  if (n < 0 || r < 0 || r > n) throw std::domain_error("kraw_row: bad n or r");
  std::vector<BigInt> row(n + 1);
  row[0] = binomial(n, r);
  if (n == 0) return row;
  row[1] = binomial(n - 1, r) - binomial(n - 1, r - 1);
  for (long x = 1; x < n; ++x) {
    BigInt num = (n - 2 * r) * row[x] - x * row[x - 1];
    BigInt q, rem;
    divide_qr(num, BigInt(n - x), q, rem);
    assert(rem == 0);
    row[x + 1] = std::move(q);
  }
  return row;
}

KrawtchoukTable::KrawtchoukTable(long n) : n_(n) {
  if (n < 0) throw std::domain_error("KrawtchoukTable: n < 0");
  // prev[r][x] holds the dimension-(m-1) table while building dimension m.
  std::vector<std::vector<BigInt>> prev{{BigInt(1)}};
  for (long m = 1; m <= n; ++m) {
    std::vector<std::vector<BigInt>> cur(m + 1, std::vector<BigInt>(m + 1));
    auto prev_at = [&](long r, long x) -> BigInt {
      if (r < 0 || r > m - 1) return 0;
      return prev[r][x];
    };
    for (long r = 0; r <= m; ++r) {
      for (long x = 0; x < m; ++x)
        cur[r][x] = prev_at(r, x) + prev_at(r - 1, x);
      cur[r][m] = prev_at(r, m - 1) - prev_at(r - 1, m - 1);
    }
    prev = std::move(cur);
  }
  entries_ = std::move(prev);
}

const BigInt& KrawtchoukTable::at(long r, long x) const {
  if (r < 0 || r > n_ || x < 0 || x > n_)
    throw std::domain_error("KrawtchoukTable: index out of range");
  return entries_[r][x];
}

std::vector<BigInt> kraw_gf_coefficients(long n, long x) {
  if (n < 0 || x < 0 || x > n)
    throw std::domain_error("kraw_gf_coefficients: bad n or x");
  // Multiply out (1-z)^x, then (1+z)^{n-x}, truncating nothing: the result
  // has degree exactly n.
  std::vector<BigInt> poly{BigInt(1)};
  poly.reserve(n + 1);
  for (long i = 0; i < x; ++i) {
    std::vector<BigInt> next(poly.size() + 1);
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] -= poly[j];
    }
    poly = std::move(next);
  }
  for (long i = 0; i < n - x; ++i) {
    std::vector<BigInt> next(poly.size() + 1);
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] += poly[j];
    }
    poly = std::move(next);
  }
  return poly;
}

std::pair<BigInt, BigInt> kraw_ball_identity(long n, long r, long x) {
  check_domain(n, r, x);
  if (x < 1) throw std::domain_error("kraw_ball_identity: x must be >= 1");
  BigInt lhs = 0;
  for (long s = 0; s <= r; ++s) lhs += kraw_direct(n, s, x);
  // The right side lives in dimension n-1; degree r = n exceeds it, where
  // the polynomial is identically zero.
  BigInt rhs = (r <= n - 1) ? kraw_direct(n - 1, r, x - 1) : BigInt(0);
  return {lhs, rhs};
}

std::pair<BigInt, BigInt> kraw_recurrence_residuals(long n, long r, long x) {
  check_domain(n, r, x);
  if (x < 1 || x > n - 1)
    throw std::domain_error("kraw_recurrence_residuals: need 1 <= x <= n-1");
  if (r < 1)
    throw std::domain_error("kraw_recurrence_residuals: need r >= 1");
  const BigInt km1 = kraw_direct(n, r, x - 1);
  const BigInt k0 = kraw_direct(n, r, x);
  const BigInt kp1 = kraw_direct(n, r, x + 1);
  const BigInt jm1 = kraw_direct(n, r - 1, x - 1);
  const BigInt j0 = kraw_direct(n, r - 1, x);
  const BigInt first = x * km1 - (n - 2 * r) * k0 + (n - x) * kp1;
  const BigInt second = km1 - j0 - jm1 - k0;
  return {first, second};
}

}  // namespace cubeshift
