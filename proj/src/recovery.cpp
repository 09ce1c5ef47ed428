#include "cubeshift/recovery.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cubeshift/errors.hpp"

namespace cubeshift {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

// Index of the candidate value nearest to the exact estimate; ties go to
// the earlier (smaller-radius) candidate.
size_t nearest_candidate(const std::vector<Rational>& values,
                         const Rational& estimate) {
  size_t best = 0;
  Rational best_dist = abs(values[0] - estimate);
  for (size_t i = 1; i < values.size(); ++i) {
    Rational d = abs(values[i] - estimate);
    if (d < best_dist) {
      best = i;
      best_dist = std::move(d);
    }
  }
  return best;
}

template <class Result, class Run>
Result majority_of(const SampleBudget& budget, const Run& run,
                   int Result::* answer) {
  const int reps = budget.repetitions;
  require(reps >= 1 && reps % 2 == 1, "budget repetitions must be odd");
  if (reps == 1) return run();
  std::map<int, int> votes;
  std::vector<Result> results;
  long total_samples = 0;
  for (int i = 0; i < reps; ++i) {
    results.push_back(run());
    total_samples += results.back().samples_used;
    ++votes[results.back().*answer];
  }
  int winner = votes.begin()->first;
  for (const auto& [value, count] : votes)
    if (count > votes[winner]) winner = value;
  for (auto& res : results) {
    if (res.*answer == winner) {
      res.samples_used = total_samples;
      return res;
    }
  }
  return results.front();
}

}  // namespace

long SampleBudget::phase_samples(const std::string& phase,
                                 double default_count) const {
  if (auto it = phase_override.find(phase); it != phase_override.end()) {
    require(it->second > 0, "budget override must be positive");
    return it->second;
  }
  const double scaled = default_count * multiplier;
  require(scaled >= 1.0, "budget multiplier leaves no samples");
  return static_cast<long>(std::ceil(scaled));
}

ParityRecovery recover_radius_parity(int n, const WeightSource& draw,
                                     const SampleBudget& budget) {
  require(n >= 2 && n % 2 == 0, "radius parity needs even n >= 2");
  const long k = budget.phase_samples("parity", 8.0 * n);
  ParityRecovery out;
  out.samples_used = k;
  for (long i = 0; i < k; ++i)
    if (draw() == n / 2) ++out.center_hits;
  out.parity_bit = out.center_hits > 0 ? 0 : 1;
  return out;
}

RadiusRecovery recover_radius_even_n(int n, const WeightSource& draw,
                                     const SampleBudget& budget) {
  require(n >= 2 && n % 2 == 0, "even-n radius recovery needs even n >= 2");
  auto run = [&]() {
    const long k =
        budget.phase_samples("radius", 4.0 * std::pow(double(n), 6.0));
    RadiusRecovery out;
    out.samples_used = k;
    for (long i = 0; i < k; ++i) {
      const int w = draw();
      if (w == n / 2) ++out.center_hits;
      if (w == n / 2 - 1 || w == n / 2 + 1) ++out.flank_hits;
    }
    out.center_estimate = make_rational(out.center_hits, k);
    out.flank_estimate = make_rational(out.flank_hits, k);
    std::vector<Rational> values;
    std::vector<int> radii;
    if (out.center_hits > 0) {
      // Weight n/2 only ever occurs for even radii.
      out.used_center_branch = true;
      for (int r = 0; r <= n / 2; r += 2) {
        values.push_back(*central_probs(n, r).center);
        radii.push_back(r);
      }
      out.radius = radii[nearest_candidate(values, out.center_estimate)];
    } else {
      for (int r = 1; r <= n / 2; r += 2) {
        values.push_back(central_probs(n, r).flank);
        radii.push_back(r);
      }
      out.radius = radii[nearest_candidate(values, out.flank_estimate)];
    }
    return out;
  };
  return majority_of<RadiusRecovery>(budget, run, &RadiusRecovery::radius);
}

RadiusRecovery recover_radius_odd_n(int n, const WeightSource& draw,
                                    const SampleBudget& budget) {
  require(n >= 1 && n % 2 == 1, "odd-n radius recovery needs odd n");
  auto run = [&]() {
    const long k =
        budget.phase_samples("radius", 4.0 * std::pow(double(n), 4.0));
    RadiusRecovery out;
    out.samples_used = k;
    for (long i = 0; i < k; ++i) {
      const int w = draw();
      if (w == (n - 1) / 2 || w == (n + 1) / 2) ++out.flank_hits;
    }
    out.flank_estimate = make_rational(out.flank_hits, k);
    std::vector<Rational> values;
    for (int r = 0; r <= n / 2; ++r)
      values.push_back(central_probs(n, r).flank);
    out.radius = static_cast<int>(
        nearest_candidate(values, out.flank_estimate));
    return out;
  };
  return majority_of<RadiusRecovery>(budget, run, &RadiusRecovery::radius);
}

RadiusRecovery recover_radius(int n, const WeightSource& draw,
                              const SampleBudget& budget) {
  return n % 2 == 0 ? recover_radius_even_n(n, draw, budget)
                    : recover_radius_odd_n(n, draw, budget);
}

RadiusRecovery recover_ball_radius(int n, const WeightSource& draw,
                                   const SampleBudget& budget) {
  require(n >= 1, "ball recovery needs n >= 1");
  std::vector<std::vector<double>> log_probs(n + 1);
  for (int r = 0; r <= n; ++r) {
    const auto dist = pi_ball(n, r);
    log_probs[r].resize(n + 1);
    for (int w = 0; w <= n; ++w)
      log_probs[r][w] = dist.probs[w] == 0
                            ? -std::numeric_limits<double>::infinity()
                            : log_to_double(dist.probs[w]);
  }
  auto run = [&]() {
    const long k = budget.phase_samples("ball", 4.0 * std::pow(double(n), 4.0));
    RadiusRecovery out;
    out.samples_used = k;
    std::vector<long> hist(n + 1, 0);
    for (long i = 0; i < k; ++i) ++hist[draw()];
    double best_ll = -std::numeric_limits<double>::infinity();
    out.radius = -1;
    for (int r = 0; r <= n; ++r) {
      double ll = 0.0;
      for (int w = 0; w <= n; ++w) {
        if (hist[w] == 0) continue;
        ll += hist[w] * log_probs[r][w];
      }
      if (ll > best_ll) {
        best_ll = ll;
        out.radius = r;
      }
    }
    return out;
  };
  return majority_of<RadiusRecovery>(budget, run, &RadiusRecovery::radius);
}

SizeEstimate estimate_size(int n, const OutcomeSource& draw,
                           const Rational& eps, const SampleBudget& budget) {
  require(n >= 1, "size estimation needs n >= 1");
  require(eps > 0 && eps < 1, "size estimation needs 0 < eps < 1");
  const double e = to_double(eps);
  const long k =
      budget.phase_samples("size", std::ceil(2.0 * std::log(6.0) / (e * e)));
  SizeEstimate out;
  out.samples_used = k;
  for (long i = 0; i < k; ++i)
    if (draw() == 0) ++out.zero_hits;
  out.estimate = make_rational(out.zero_hits, k);
  return out;
}

JuntaRecovery recover_junta(int n, const std::vector<Junta>& family,
                            const OutcomeSource& draw,
                            const SampleBudget& budget) {
  require(!family.empty(), "junta recovery needs a non-empty family");
  std::vector<std::uint64_t> masks;
  std::uint64_t seen = 0;
  for (const auto& junta : family) {
    std::uint64_t m = 0;
    for (int v : junta.vars) {
      require(v >= 1 && v <= n, "junta variable out of range");
      m |= 1ULL << (v - 1);
    }
    require((m & seen) == 0, "junta family must be pairwise disjoint");
    seen |= m;
    masks.push_back(m);
  }
  const long k = budget.phase_samples("junta", 64.0);
  JuntaRecovery out;
  for (long i = 0; i < k; ++i) {
    const std::uint64_t z = draw();
    out.samples_used = i + 1;
    if (z == 0) continue;
    for (size_t j = 0; j < masks.size(); ++j) {
      if ((z & ~masks[j]) == 0) {
        out.index = static_cast<int>(j);
        out.witness = z;
        return out;
      }
    }
    // The Fourier support of a junta is confined to its own variables, so
    // a straddling outcome means the source does not match the family.
    throw std::domain_error(
        "junta recovery: outcome support not confined to one family member");
  }
  throw InconclusiveError("junta recovery: only zero outcomes in budget");
}

MaskRecovery recover_parity_set(int n, const OutcomeSource& draw,
                                const SampleBudget& budget) {
  require(n >= 1, "parity-set recovery needs n >= 1");
  const long k = budget.phase_samples("parity_set", 20.0);
  MaskRecovery out;
  for (long i = 0; i < k; ++i) {
    const std::uint64_t z = draw();
    out.samples_used = i + 1;
    if (z != 0) {
      out.mask = z;
      return out;
    }
  }
  throw InconclusiveError("parity-set recovery: only zero outcomes in budget");
}

MaskRecovery recover_generalised_parity(int n, int prefix_len,
                                        const OutcomeSource& draw,
                                        const SampleBudget& budget) {
  require(n >= 1 && prefix_len >= 1 && prefix_len <= n,
          "generalised parity: bad prefix length");
  const std::uint64_t prefix_mask =
      prefix_len >= 64 ? ~0ULL : ((1ULL << prefix_len) - 1);
  const long k = budget.phase_samples("gen_parity", 30.0);
  MaskRecovery out;
  for (long i = 0; i < k; ++i) {
    const std::uint64_t z = draw();
    out.samples_used = i + 1;
    const std::uint64_t prefix = z & prefix_mask;
    if (prefix != 0) {
      out.mask = prefix;
      return out;
    }
  }
  throw InconclusiveError(
      "generalised parity recovery: no outcome with non-zero prefix "
      "(hidden prefix may be the zero string, which is unrecoverable)");
}

}  // namespace cubeshift
