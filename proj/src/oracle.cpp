#include "cubeshift/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "cubeshift/errors.hpp"

namespace cubeshift {

namespace {
constexpr int kOracleLimit = 16;  // 2n <= 32
}

OracleInstance::OracleInstance(const SubsetSpec& spec, std::uint64_t seed)
    : n_(spec.n()) {
  if (n_ > kOracleLimit)
    throw CapacityError("oracle instances limited to n <= 16");
  subset_ = spec.materialize();
  const std::uint64_t domain = domain_size();
  const std::uint64_t size = subset_.size();
  num_colours_ = (domain + size - 1) / size;
  remainder_ = domain % size;
  for (int i = 0; i < 4; ++i)
    round_keys_[i] = RngState::mix(seed + 0x1000 + i);
  sigma_key_ = RngState::mix(seed + 0x2000);
  garbage_key_ = RngState::mix(seed + 0x3000);
}

std::uint64_t OracleInstance::position_of(std::uint64_t x) const {
  const std::uint64_t mask = (std::uint64_t{1} << n_) - 1;
  std::uint64_t left = x & mask;
  std::uint64_t right = x >> n_;
  for (int i = 0; i < 4; ++i) {
    const std::uint64_t f = RngState::mix(right ^ round_keys_[i]) & mask;
    const std::uint64_t new_left = right;
    right = left ^ f;
    left = new_left;
  }
  return left | (right << n_);
}

std::uint64_t OracleInstance::point_at(std::uint64_t pos) const {
  const std::uint64_t mask = (std::uint64_t{1} << n_) - 1;
  std::uint64_t left = pos & mask;
  std::uint64_t right = pos >> n_;
  for (int i = 3; i >= 0; --i) {
    const std::uint64_t f = RngState::mix(left ^ round_keys_[i]) & mask;
    const std::uint64_t new_right = left;
    left = right ^ f;
    right = new_right;
  }
  return left | (right << n_);
}

std::uint64_t OracleInstance::colour_class_size(std::uint64_t colour) const {
  if (colour < 1 || colour > num_colours_)
    throw std::domain_error("colour id out of range");
  if (colour == num_colours_ && remainder_ != 0) return remainder_;
  return subset_.size();
}

std::uint64_t OracleInstance::query_c(std::uint64_t x) const {
  count_c_.fetch_add(1, std::memory_order_relaxed);
  return position_of(x & (domain_size() - 1)) / subset_.size() + 1;
}

std::uint64_t OracleInstance::hidden_shift(std::uint64_t colour) const {
  const std::uint64_t mask = (std::uint64_t{1} << n_) - 1;
  return RngState::mix(sigma_key_ ^ (colour * 0x9E3779B97F4A7C15ULL)) & mask;
}

std::uint64_t OracleInstance::query_s(std::uint64_t x,
                                      std::uint64_t colour) const {
  count_s_.fetch_add(1, std::memory_order_relaxed);
  const std::uint64_t mask = (std::uint64_t{1} << n_) - 1;
  x &= domain_size() - 1;
  if (colour >= 1 && colour <= num_colours_) {
    const std::uint64_t pos = position_of(x);
    if (pos / subset_.size() + 1 == colour)
      return subset_[pos % subset_.size()] ^ hidden_shift(colour);
  }
  return RngState::mix(garbage_key_ ^ RngState::mix(x * 3 + colour * 7 + 1)) &
         mask;
}

std::uint64_t OracleInstance::query_c_inv(std::uint64_t colour,
                                          std::uint64_t y) const {
  count_c_inv_.fetch_add(1, std::memory_order_relaxed);
  if (colour >= 1 && colour <= num_colours_) {
    const std::uint64_t elem = y ^ hidden_shift(colour);
    const auto it = std::lower_bound(subset_.begin(), subset_.end(), elem);
    if (it != subset_.end() && *it == elem) {
      const std::uint64_t idx = it - subset_.begin();
      const std::uint64_t pos = (colour - 1) * subset_.size() + idx;
      if (pos < domain_size()) return point_at(pos);
    }
  }
  return RngState::mix(garbage_key_ ^ RngState::mix(y * 5 + colour * 11 + 3)) &
         (domain_size() - 1);
}

void OracleInstance::reset_counters() const {
  count_c_.store(0);
  count_s_.store(0);
  count_c_inv_.store(0);
}

std::vector<std::uint64_t> OracleInstance::colour_class(
    std::uint64_t colour) const {
  const std::uint64_t size = colour_class_size(colour);
  std::vector<std::uint64_t> members(size);
  for (std::uint64_t i = 0; i < size; ++i)
    members[i] = point_at((colour - 1) * subset_.size() + i);
  return members;
}

ExtractionResult quantum_extract_colour(const OracleInstance& oracle,
                                        std::uint64_t colour) {
  ExtractionResult out;
  out.colour = colour;
  const std::uint64_t class_size = oracle.colour_class_size(colour);
  out.deficient = class_size < oracle.subset_size();
  // One coherent application of each oracle. The simulation walks a single
  // representative through the colour/shift/uncolour round trip, which is
  // what puts exactly one query on each counter.
  const std::uint64_t x0 = oracle.colour_class(colour).front();
  const std::uint64_t c0 = oracle.query_c(x0);
  const std::uint64_t y0 = oracle.query_s(x0, c0);
  oracle.query_c_inv(c0, y0);
  // After uncomputation the point register is disentangled and the data
  // register holds the class mapped through the per-colour bijection onto
  // the first class_size subset elements, translated by sigma(colour).
  const std::uint64_t shift = oracle.hidden_shift(colour);
  out.state.n = oracle.n();
  out.state.shift = shift;
  out.state.amplitudes.assign(std::uint64_t{1} << oracle.n(), 0.0);
  const double amp = 1.0 / std::sqrt(static_cast<double>(class_size));
  for (std::uint64_t i = 0; i < class_size; ++i)
    out.state.amplitudes[oracle.hidden_subset()[i] ^ shift] = amp;
  return out;
}

ExtractionResult quantum_extract(const OracleInstance& oracle, RngState& rng) {
  // Measuring the colour register of the uniform superposition selects a
  // colour with probability proportional to its class size.
  const std::uint64_t pos = rng.next_below(oracle.domain_size());
  const std::uint64_t colour = pos / oracle.subset_size() + 1;
  return quantum_extract_colour(oracle, colour);
}

QueryLog classical_collision_experiment(const OracleInstance& oracle,
                                        std::uint64_t max_queries,
                                        RngState& rng) {
  QueryLog log;
  std::unordered_set<std::uint64_t> seen_points;
  std::unordered_set<std::uint64_t> seen_colours;
  for (std::uint64_t q = 0; q < max_queries; ++q) {
    std::uint64_t x;
    do {
      x = rng.next_below(oracle.domain_size());
    } while (seen_points.count(x));
    seen_points.insert(x);
    const std::uint64_t colour = oracle.query_c(x);
    log.transcript.emplace_back(x, colour);
    log.queries_used = q + 1;
    if (!seen_colours.insert(colour).second) {
      log.collision_found = true;
      break;
    }
  }
  return log;
}

}  // namespace cubeshift
