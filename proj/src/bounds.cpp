#include "cubeshift/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cubeshift/binomial.hpp"
#include "cubeshift/errors.hpp"
#include "cubeshift/krawtchouk.hpp"
#include "cubeshift/walsh.hpp"

namespace cubeshift {

std::vector<double> walsh_transform(std::vector<double> f) {
  if (f.size() > (size_t{1} << 20))
    throw CapacityError("walsh_transform: limited to n <= 20");
  walsh_butterflies(f);
  const double scale = std::pow(0.5, 0.5 * log2_of_pow2(f.size()));
  for (auto& v : f) v *= scale;
  return f;
}

std::vector<Rational> walsh_transform_scaled(std::vector<Rational> f) {
  walsh_butterflies(f);
  return f;
}

std::vector<double> convolve(const std::vector<double>& f,
                             const std::vector<double>& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("convolve: dimension mismatch");
  auto fh = walsh_transform(f);
  const auto gh = walsh_transform(g);
  for (size_t i = 0; i < fh.size(); ++i) fh[i] *= gh[i];
  return walsh_transform(std::move(fh));
}

Rational trace_distance(const WeightDistribution& p,
                        const WeightDistribution& q) {
  if (p.n != q.n)
    throw std::invalid_argument("trace_distance: dimension mismatch");
  Rational sum = 0;
  for (size_t i = 0; i < p.probs.size(); ++i)
    sum += abs(p.probs[i] - q.probs[i]);
  return sum;
}

Rational trace_distance(const CubeDistribution& p, const CubeDistribution& q) {
  if (p.n() != q.n())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  const BigInt dp = BigInt(p.subset_size()) << p.n();
  const BigInt dq = BigInt(q.subset_size()) << q.n();
  // |a^2/dp - b^2/dq| summed with the common denominator dp*dq.
  BigInt num = 0;
  const auto& ca = p.charsums();
  const auto& cb = q.charsums();
  for (size_t z = 0; z < ca.size(); ++z) {
    BigInt term = BigInt(ca[z]) * ca[z] * dq - BigInt(cb[z]) * cb[z] * dp;
    num += abs(term);
  }
  return make_rational(num, dp * dq);
}

double fidelity(const WeightDistribution& p, const WeightDistribution& q) {
  if (p.n != q.n) throw std::invalid_argument("fidelity: dimension mismatch");
  double overlap = 0.0;
  for (size_t i = 0; i < p.probs.size(); ++i)
    overlap += std::sqrt(to_double(p.probs[i]) * to_double(q.probs[i]));
  return overlap * overlap;
}

Rational fidelity(const CubeDistribution& p, const CubeDistribution& q) {
  if (p.n() != q.n())
    throw std::invalid_argument("fidelity: dimension mismatch");
  // sqrt(prob_p(z) prob_q(z)) = |cs_p(z) cs_q(z)| / sqrt(dp dq), so the
  // squared sum is exactly rational.
  BigInt overlap = 0;
  const auto& ca = p.charsums();
  const auto& cb = q.charsums();
  for (size_t z = 0; z < ca.size(); ++z) overlap += abs(BigInt(ca[z]) * cb[z]);
  const BigInt dp = BigInt(p.subset_size()) << p.n();
  const BigInt dq = BigInt(q.subset_size()) << q.n();
  return make_rational(overlap * overlap, dp * dq);
}

long copies_bound(long num_states, const Rational& fidelity_cap,
                  const Rational& eps) {
  if (num_states < 2) throw std::domain_error("copies_bound: need N >= 2");
  if (fidelity_cap >= 1)
    throw std::domain_error("copies_bound: fidelity cap must be < 1");
  if (fidelity_cap <= 0)
    throw std::domain_error("copies_bound: fidelity cap must be > 0");
  if (eps <= 0 || eps >= 1)
    throw std::domain_error("copies_bound: eps must lie in (0,1)");

  const double x = 2.0 *
                   (std::log2(static_cast<double>(num_states)) -
                    std::log2(to_double(eps))) /
                   -std::log2(to_double(fidelity_cap));
  long m = std::max<long>(1, static_cast<long>(std::ceil(x - 1e-9)));

  // For moderate counts, settle the boundary exactly:
  // (1/F)^m >= (N/eps)^2.
  if (m <= 4096) {
    const Rational rhs =
        pow_rational(Rational(num_states) / eps, 2);
    const Rational inv_f = Rational(1) / fidelity_cap;
    auto sufficient = [&](long k) {
      return pow_rational(inv_f, static_cast<unsigned long>(k)) >= rhs;
    };
    while (!sufficient(m)) ++m;
    while (m > 1 && sufficient(m - 1)) --m;
  }
  return m;
}

long copies_bound_from_trace(long num_states, const Rational& min_trace) {
  if (min_trace <= 0)
    throw std::domain_error("copies_bound_from_trace: need T > 0");
  if (min_trace > 2)
    throw std::domain_error("copies_bound_from_trace: trace distance <= 2");
  const Rational f_cap = Rational(1) - min_trace * min_trace / 4;
  if (f_cap <= 0) return 1;  // disjoint supports: one sample identifies
  return copies_bound(num_states, f_cap, Rational(1, 3));
}

namespace {

// autocorr(z) = #{(a,b) in S x S : a xor b = z}, via two integer Walsh
// transforms: W(W(1_S)^2) = 2^n autocorr.
std::vector<BigInt> autocorrelation(const std::vector<std::uint64_t>& set,
                                    int n) {
  std::vector<std::int64_t> indicator(size_t{1} << n, 0);
  for (auto e : set) {
    if (e >> n) throw std::domain_error("autocorrelation: element out of range");
    indicator[e] = 1;
  }
  walsh_butterflies(indicator);
  std::vector<BigInt> sq(indicator.size());
  for (size_t i = 0; i < indicator.size(); ++i)
    sq[i] = BigInt(indicator[i]) * indicator[i];
  walsh_butterflies(sq);
  std::vector<BigInt> out(sq.size());
  for (size_t i = 0; i < sq.size(); ++i) {
    BigInt q, r;
    divide_qr(sq[i], BigInt(1) << n, q, r);
    if (r != 0) throw std::logic_error("autocorrelation: inexact division");
    out[i] = std::move(q);
  }
  return out;
}

}  // namespace

Rational hy_lower_bound(const std::vector<std::uint64_t>& set_a,
                        const std::vector<std::uint64_t>& set_b, int n) {
  if (n < 1 || n > 20) throw CapacityError("hy_lower_bound: n out of [1,20]");
  if (set_a.empty() || set_b.empty())
    throw std::domain_error("hy_lower_bound: empty set");
  const auto auto_a = autocorrelation(set_a, n);
  const auto auto_b = autocorrelation(set_b, n);
  // sqrt(2^n) || 1_S*1_S/|S| - 1_T*1_T/|T| ||_inf; the convolution's
  // 2^{-n/2} normaliser cancels the sqrt(2^n) factor, leaving plain
  // autocorrelation counts over subset sizes.
  const BigInt sa(set_a.size()), sb(set_b.size());
  Rational best = 0;
  for (size_t z = 0; z < auto_a.size(); ++z) {
    Rational v = abs(make_rational(auto_a[z], sa) - make_rational(auto_b[z], sb));
    if (v > best) best = v;
  }
  return best;
}

std::vector<DistanceReport> sphere_distance_survey(long n) {
  if (n < 1) throw std::domain_error("sphere_distance_survey: n must be >= 1");
  const long rmax = n / 2;
  std::vector<WeightDistribution> dists;
  std::vector<std::vector<BigInt>> rows;
  for (long r = 0; r <= rmax; ++r) {
    dists.push_back(pi_sphere(n, r));
    rows.push_back(kraw_row(n, r));
  }
  // Sphere autocorrelation depends only on |z| = w:
  // C(w, w/2) C(n-w, r - w/2) for even w, else 0.
  auto sphere_autocorr = [&](long r, long w) -> BigInt {
    if (w % 2 != 0) return 0;
    return binomial(w, w / 2) * binomial(n - w, r - w / 2);
  };
  std::vector<DistanceReport> out;
  for (long a = 0; a <= rmax; ++a) {
    for (long b = a; b <= rmax; ++b) {
      DistanceReport rep;
      rep.radius_a = static_cast<int>(a);
      rep.radius_b = static_cast<int>(b);
      rep.trace = trace_distance(dists[a], dists[b]);
      BigInt overlap = 0;
      for (long x = 0; x <= n; ++x)
        overlap += binomial(n, x) * abs(rows[a][x] * rows[b][x]);
      rep.fidelity = make_rational(
          overlap * overlap,
          (binomial(n, a) * binomial(n, b)) << (2 * n));
      const BigInt size_a = binomial(n, a), size_b = binomial(n, b);
      Rational best = 0;
      for (long w = 0; w <= n; w += 2) {
        Rational v = abs(make_rational(sphere_autocorr(a, w), size_a) -
                         make_rational(sphere_autocorr(b, w), size_b));
        if (v > best) best = v;
      }
      rep.hy_bound = best;
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace cubeshift
