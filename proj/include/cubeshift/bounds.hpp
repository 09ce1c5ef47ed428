#pragma once

#include <cstdint>
#include <vector>

#include "cubeshift/distributions.hpp"
#include "cubeshift/exact.hpp"

namespace cubeshift {

// Orthonormal Fourier transform over Z_2^n for a real function given as a
// length-2^n table: out(x) = 2^{-n/2} sum_y (-1)^(x.y) f(y). Involutive.
std::vector<double> walsh_transform(std::vector<double> f);

// Same butterflies without the normaliser, exact over rationals:
// out(x) = sum_y (-1)^(x.y) f(y); applying twice multiplies by 2^n.
std::vector<Rational> walsh_transform_scaled(std::vector<Rational> f);

// (f * g)(x) = 2^{-n/2} sum_y f(y) g(x + y); the transform turns this into
// pointwise multiplication.
std::vector<double> convolve(const std::vector<double>& f,
                             const std::vector<double>& g);

// l1 distance between outcome distributions, exact.
Rational trace_distance(const WeightDistribution& p,
                        const WeightDistribution& q);
Rational trace_distance(const CubeDistribution& p, const CubeDistribution& q);

// Squared Bhattacharyya overlap (the fidelity of the corresponding diagonal
// states). The cube version is exact because Fourier-sample probabilities
// are squared character sums; the weight version rounds through doubles.
double fidelity(const WeightDistribution& p, const WeightDistribution& q);
Rational fidelity(const CubeDistribution& p, const CubeDistribution& q);

// Smallest integer count m with (1/F)^m >= (N/eps)^2: enough copies to
// identify one of N states with pairwise fidelity at most F, failing with
// probability at most eps. Requires 0 < F < 1.
long copies_bound(long num_states, const Rational& fidelity_cap,
                  const Rational& eps);

// Copy count sufficient when all pairwise trace distances are at least T,
// via the fidelity bound F <= 1 - T^2/4 at error probability 1/3. T = 2
// (disjoint supports) degenerates to a single copy.
long copies_bound_from_trace(long num_states, const Rational& min_trace);

// Lower bound on || pi_S - pi_T ||_1 from the autocorrelations of the two
// characteristic functions (Hausdorff-Young); exact. Elements are n-bit
// strings, n <= 20.
Rational hy_lower_bound(const std::vector<std::uint64_t>& set_a,
                        const std::vector<std::uint64_t>& set_b, int n);

// Pairwise distance survey of the sphere outcome distributions, all exact.
struct DistanceReport {
  int radius_a = 0;
  int radius_b = 0;
  Rational trace;     // l1 distance
  Rational fidelity;  // squared Bhattacharyya overlap
  Rational hy_bound;  // Hausdorff-Young lower bound on trace
};
std::vector<DistanceReport> sphere_distance_survey(long n);

}  // namespace cubeshift
