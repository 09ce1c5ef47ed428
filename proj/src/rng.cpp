#include "cubeshift/rng.hpp"

#include <stdexcept>

namespace cubeshift {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t RngState::mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

RngState::RngState(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed),
      stream_(stream),
      state_(seed ^ mix(stream * kGolden + 0x6A09E667F3BCC909ULL)) {}

std::uint64_t RngState::next_u64() {
  state_ += kGolden;
  return mix(state_);
}

double RngState::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngState::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("next_below: zero bound");
  const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t v = next_u64();
    if (v >= threshold) return v % bound;
  }
}

}  // namespace cubeshift
