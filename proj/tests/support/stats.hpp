#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

// Pearson chi-square goodness-of-fit against known probabilities, with
// low-expectation cells pooled. P-values come from the regularized upper
// incomplete gamma function Q(df/2, stat/2).
namespace teststat {

inline double gammln(double x) {
  static const double cof[6] = {76.18009172947146,  -86.50532032941677,
                                24.01409824083091,  -1.231739572450155,
                                0.1208650973866179e-2, -0.5395239384953e-5};
  double y = x;
  double tmp = x + 5.5;
  tmp -= (x + 0.5) * std::log(tmp);
  double ser = 1.000000000190015;
  for (int j = 0; j < 6; ++j) ser += cof[j] / ++y;
  return -tmp + std::log(2.5066282746310005 * ser / x);
}

inline double gamma_p_series(double a, double x) {
  const double gln = gammln(a);
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ++ap;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-14)
      return sum * std::exp(-x + a * std::log(x) - gln);
  }
  throw std::runtime_error("gamma_p_series: no convergence");
}

inline double gamma_q_contfrac(double a, double x) {
  const double gln = gammln(a);
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-14) break;
  }
  return std::exp(-x + a * std::log(x) - gln) * h;
}

// Q(a, x) = 1 - P(a, x), the upper regularized incomplete gamma.
inline double gammq(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::domain_error("gammq: bad arguments");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_contfrac(a, x);
}

inline double chi_square_pvalue(const std::vector<double>& expected_counts,
                                const std::vector<long>& observed) {
  if (expected_counts.size() != observed.size())
    throw std::invalid_argument("chi_square: size mismatch");
  // Pool cells whose expectation is below 5 into one bucket.
  double pooled_exp = 0.0;
  long pooled_obs = 0;
  double stat = 0.0;
  long cells = 0;
  for (size_t i = 0; i < observed.size(); ++i) {
    if (expected_counts[i] < 5.0) {
      pooled_exp += expected_counts[i];
      pooled_obs += observed[i];
      continue;
    }
    const double d = observed[i] - expected_counts[i];
    stat += d * d / expected_counts[i];
    ++cells;
  }
  if (pooled_exp >= 5.0) {
    const double d = pooled_obs - pooled_exp;
    stat += d * d / pooled_exp;
    ++cells;
  } else if (pooled_obs > 0 && pooled_exp > 0.0) {
    const double d = pooled_obs - pooled_exp;
    stat += d * d / pooled_exp;
    ++cells;
  }
  if (cells < 2) return 1.0;
  return gammq(0.5 * (cells - 1), 0.5 * stat);
}

}  // namespace teststat
