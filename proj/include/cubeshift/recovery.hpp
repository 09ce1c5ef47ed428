#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cubeshift/distributions.hpp"
#include "cubeshift/exact.hpp"
#include "cubeshift/subset.hpp"

namespace cubeshift {

// A stream of measurement outcomes: Hamming weights for the radius
// algorithms, full n-bit strings for the rest. Sources already carry their
// randomness, so recovery itself is a pure consumer.
using WeightSource = std::function<int()>;
using OutcomeSource = std::function<std::uint64_t()>;

// Sample budgets. Defaults follow the asymptotic costs of the decoding
// arguments with calibrated constants (documented in the README):
//   parity      8 n
//   radius      4 n^6   (even n)
//   radius      4 n^4   (odd n)
//   ball        4 n^4
//   size        ceil(2 ln(6) / eps^2)
//   junta       64
//   parity_set  20
//   gen_parity  30
// `multiplier` rescales those; `phase_override` pins a phase to an explicit
// count. `repetitions` (odd) majority-votes whole runs for amplification.
struct SampleBudget {
  double multiplier = 1.0;
  std::map<std::string, long> phase_override;
  int repetitions = 1;

  long phase_samples(const std::string& phase, double default_count) const;
};

// Parity of the sphere radius, even n. Even is reported iff any weight-n/2
// outcome arrives; when the true radius is odd that weight has probability
// exactly zero, so the error is one-sided.
struct ParityRecovery {
  int parity_bit = 0;  // r mod 2
  long samples_used = 0;
  long center_hits = 0;
};
ParityRecovery recover_radius_parity(int n, const WeightSource& draw,
                                     const SampleBudget& budget = {});

// Full radius recovery from weight samples. Decoding compares exact
// frequency estimates against the exact candidate probabilities and picks
// the nearest, breaking ties toward the smaller radius.
struct RadiusRecovery {
  int radius = -1;
  long samples_used = 0;
  long center_hits = 0;   // outcomes at weight n/2 (even n only)
  long flank_hits = 0;    // outcomes at the flanking weights
  bool used_center_branch = false;
  Rational center_estimate;
  Rational flank_estimate;
};
RadiusRecovery recover_radius_even_n(int n, const WeightSource& draw,
                                     const SampleBudget& budget = {});
RadiusRecovery recover_radius_odd_n(int n, const WeightSource& draw,
                                    const SampleBudget& budget = {});

// Dispatches on the parity of n.
RadiusRecovery recover_radius(int n, const WeightSource& draw,
                              const SampleBudget& budget = {});

// Maximum-likelihood radius of a hidden ball over the exact per-radius
// weight distributions.
RadiusRecovery recover_ball_radius(int n, const WeightSource& draw,
                                   const SampleBudget& budget = {});

// |S| / 2^n from the frequency of all-zero outcomes; additive error eps
// with constant failure probability at the default budget.
struct SizeEstimate {
  Rational estimate;
  long samples_used = 0;
  long zero_hits = 0;
};
SizeEstimate estimate_size(int n, const OutcomeSource& draw,
                           const Rational& eps,
                           const SampleBudget& budget = {});

// Identify which junta of a family of pairwise-disjoint juntas is hidden:
// any non-zero outcome has support inside exactly one family member.
// InconclusiveError if only zero outcomes arrive within the budget.
struct JuntaRecovery {
  int index = -1;
  long samples_used = 0;
  std::uint64_t witness = 0;
};
JuntaRecovery recover_junta(int n, const std::vector<Junta>& family,
                            const OutcomeSource& draw,
                            const SampleBudget& budget = {});

// The non-zero outcome of a parity-set distribution is the mask itself.
struct MaskRecovery {
  std::uint64_t mask = 0;
  long samples_used = 0;
};
MaskRecovery recover_parity_set(int n, const OutcomeSource& draw,
                                const SampleBudget& budget = {});

// Generalised family: outcomes have prefix 0^k or the hidden prefix t, so
// the first outcome with a non-zero prefix reveals t. A hidden t = 0^k is
// indistinguishable from perpetual bad luck and surfaces as
// InconclusiveError; the family is normally used with t != 0.
MaskRecovery recover_generalised_parity(int n, int prefix_len,
                                        const OutcomeSource& draw,
                                        const SampleBudget& budget = {});

}  // namespace cubeshift
