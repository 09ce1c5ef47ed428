#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubeshift/distributions.hpp"
#include "cubeshift/rng.hpp"
#include "cubeshift/subset.hpp"

namespace cubeshift {

// O(1)-per-draw discrete sampler (Walker alias method). Zero-probability
// cells are pinned so they can never be returned.
class AliasTable {
 public:
  explicit AliasTable(const std::vector<double>& probs);

  size_t sample(RngState& rng) const;

 private:
  std::vector<double> threshold_;
  std::vector<size_t> alias_;
};

// Equal superposition over a subset translated by a hidden shift. The shift
// is kept only so tests can introspect it; nothing downstream reads it.
struct ShiftedState {
  int n = 0;
  std::vector<double> amplitudes;  // 2^n entries
  std::uint64_t shift = 0;
};

// Amplitude 1/sqrt(|S|) at y ^ shift for every y in S. CapacityError for
// n > 20.
ShiftedState make_shifted_state(const SubsetSpec& spec, std::uint64_t shift);

// In-place orthonormal Walsh-Hadamard transform (1/sqrt(2) per stage);
// applying it twice restores the input up to rounding.
void walsh_hadamard(std::vector<double>& amplitudes);

// Hadamard-then-measure on a prepared state: precomputes the outcome
// distribution once, then draws by inverse CDF. The outcome distribution
// does not depend on the hidden shift.
class FourierSampler {
 public:
  explicit FourierSampler(const ShiftedState& state);

  std::uint64_t sample(RngState& rng) const;
  const std::vector<double>& probabilities() const { return probs_; }

 private:
  std::vector<double> probs_;
  std::optional<AliasTable> table_;
};

// Single-shot convenience; prefer FourierSampler for repeated draws.
std::uint64_t fourier_sample(const ShiftedState& state, RngState& rng);

// Inverse-CDF sampling of a Hamming weight over the n+1 exact entries
// converted to floats. Exactly-zero entries can never be drawn.
class WeightSampler {
 public:
  explicit WeightSampler(const WeightDistribution& dist);

  int sample(RngState& rng) const;

 private:
  std::vector<double> cdf_;
};

int sample_weight(const WeightDistribution& dist, RngState& rng);

}  // namespace cubeshift
