#pragma once

#include <cstdint>
#include <string_view>

namespace cubeshift {

// splitmix64 with explicit (seed, stream) addressing. The same pair yields
// the same sequence on every platform, which is what makes the statistical
// experiments replayable. Distinct streams are decorrelated by hashing the
// stream index into the initial state.
class RngState {
 public:
  static constexpr std::string_view kAlgorithm = "splitmix64";

  explicit RngState(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53 random bits.
  double next_double();

  // Uniform in [0, bound); unbiased via rejection.
  std::uint64_t next_below(std::uint64_t bound);

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t state_;
};

}  // namespace cubeshift
