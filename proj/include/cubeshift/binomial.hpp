#pragma once

#include "cubeshift/exact.hpp"

namespace cubeshift {

// C(n, k), exact; 0 for k < 0 or k > n. Cached Pascal triangle behind a
// mutex, so repeated lookups are cheap and thread-safe.
BigInt binomial(long n, long k);

// C(n,0) + C(n,1) + ... + C(n,r).
BigInt binomial_prefix_sum(long n, long r);

}  // namespace cubeshift
