#include "cubeshift/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cubeshift/errors.hpp"
#include "cubeshift/walsh.hpp"

namespace cubeshift {

namespace {
constexpr int kStateLimit = 20;
}

// Walker/Vose alias table: one column pick and one threshold test per draw.
// Cells with probability exactly zero keep threshold 0.0 and can never be
// returned, which the one-sided recovery guarantees rely on.
AliasTable::AliasTable(const std::vector<double>& probs) {
  const size_t count = probs.size();
  if (count == 0) throw std::domain_error("alias table: empty distribution");
  double sum = 0.0;
  size_t argmax = 0;
  for (size_t i = 0; i < count; ++i) {
    if (probs[i] < 0.0)
      throw std::domain_error("alias table: negative probability");
    if (probs[i] > probs[argmax]) argmax = i;
    sum += probs[i];
  }
  if (!(sum > 0.0))
    throw std::domain_error("alias table: no probability mass");
  threshold_.assign(count, 1.0);
  alias_.resize(count);
  std::vector<double> scaled(count);
  std::vector<size_t> small, large;
  for (size_t i = 0; i < count; ++i) {
    alias_[i] = i;
    // probs[i] == 0 scales to exactly 0, lands in `small`, and keeps
    // threshold exactly 0 when paired: such a cell is never returned.
    scaled[i] = probs[i] * count / sum;
    if (scaled[i] < 1.0)
      small.push_back(i);
    else
      large.push_back(i);
  }
  while (!small.empty() && !large.empty()) {
    const size_t s = small.back();
    small.pop_back();
    const size_t l = large.back();
    large.pop_back();
    threshold_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] -= 1.0 - scaled[s];
    if (scaled[l] < 1.0)
      small.push_back(l);
    else
      large.push_back(l);
  }
  // Leftovers sit within rounding of a full unit, except that a massless
  // cell must stay unreachable no matter what floating drift produced.
  for (size_t s : small) {
    if (probs[s] > 0.0) {
      threshold_[s] = 1.0;
    } else {
      threshold_[s] = 0.0;
      alias_[s] = argmax;
    }
  }
  for (size_t l : large) threshold_[l] = 1.0;
}

size_t AliasTable::sample(RngState& rng) const {
  // multiply-shift column pick; the O(2^-64) non-uniformity is far below
  // every statistical tolerance in the tests
  const size_t col = static_cast<size_t>(
      (static_cast<unsigned __int128>(rng.next_u64()) * threshold_.size()) >>
      64);
  return rng.next_double() < threshold_[col] ? col : alias_[col];
}

ShiftedState make_shifted_state(const SubsetSpec& spec, std::uint64_t shift) {
  if (spec.n() > kStateLimit)
    throw CapacityError("shifted state vectors limited to n <= 20");
  const auto elems = spec.materialize();
  ShiftedState state;
  state.n = spec.n();
  state.shift = shift;
  state.amplitudes.assign(size_t{1} << spec.n(), 0.0);
  const double amp = 1.0 / std::sqrt(static_cast<double>(elems.size()));
  for (auto y : elems) state.amplitudes[y ^ shift] = amp;
  return state;
}

void walsh_hadamard(std::vector<double>& amplitudes) {
  walsh_butterflies(amplitudes);
  const double scale = std::pow(0.5, 0.5 * log2_of_pow2(amplitudes.size()));
  for (auto& a : amplitudes) a *= scale;
}

FourierSampler::FourierSampler(const ShiftedState& state) {
  std::vector<double> amps = state.amplitudes;
  walsh_hadamard(amps);
  probs_.resize(amps.size());
  for (size_t z = 0; z < amps.size(); ++z) probs_[z] = amps[z] * amps[z];
  table_.emplace(probs_);
}

std::uint64_t FourierSampler::sample(RngState& rng) const {
  return table_->sample(rng);
}

std::uint64_t fourier_sample(const ShiftedState& state, RngState& rng) {
  return FourierSampler(state).sample(rng);
}

WeightSampler::WeightSampler(const WeightDistribution& dist) {
  cdf_.reserve(dist.probs.size());
  double acc = 0.0;
  size_t last_mass = 0;
  for (size_t i = 0; i < dist.probs.size(); ++i) {
    acc += to_double(dist.probs[i]);
    cdf_.push_back(acc);
    if (dist.probs[i] > 0) last_mass = i;
  }
  if (!(acc > 0.0)) throw std::domain_error("weight sampler: no mass");
  // Pin the tail at exactly 1 from the last weight with mass, so rounding
  // shortfall can neither drop a draw off the end nor reach a weight of
  // probability zero.
  for (size_t i = last_mass; i < cdf_.size(); ++i) cdf_[i] = 1.0;
}

int WeightSampler::sample(RngState& rng) const {
  const double u = rng.next_double();
  return static_cast<int>(std::upper_bound(cdf_.begin(), cdf_.end(), u) -
                          cdf_.begin());
}

int sample_weight(const WeightDistribution& dist, RngState& rng) {
  return WeightSampler(dist).sample(rng);
}

}  // namespace cubeshift
