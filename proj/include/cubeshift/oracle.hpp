#pragma once

#include <atomic>
#include <cstdint>
#include <utility>
#include <vector>

#include "cubeshift/rng.hpp"
#include "cubeshift/sampler.hpp"
#include "cubeshift/subset.hpp"

namespace cubeshift {

// Black-box instance hiding a subset S of {0,1}^n behind three oracles on
// the doubled cube {0,1}^{2n}:
//   c      colours the 2n-cube with ceil(4^n / |S|) colours, |S| points per
//          colour (one possibly smaller remainder colour),
//   s      maps a point x of colour c0 to S[bijection_{c0}(x)] + sigma(c0),
//   c_inv  inverts (c0, s(x, c0)) back to x.
// The colouring comes from a keyed Feistel permutation of the 2n-cube, so
// instances are reproducible from their seed and need no 4^n tables.
// Replies to invalid queries are keyed hashes: arbitrary but deterministic.
class OracleInstance {
 public:
  OracleInstance(const SubsetSpec& spec, std::uint64_t seed);

  int n() const { return n_; }
  std::uint64_t domain_size() const { return std::uint64_t{1} << (2 * n_); }
  std::uint64_t subset_size() const { return subset_.size(); }
  std::uint64_t num_colours() const { return num_colours_; }
  std::uint64_t colour_class_size(std::uint64_t colour) const;

  // The oracles. Each call bumps the matching query counter.
  std::uint64_t query_c(std::uint64_t x) const;
  std::uint64_t query_s(std::uint64_t x, std::uint64_t colour) const;
  std::uint64_t query_c_inv(std::uint64_t colour, std::uint64_t y) const;

  std::uint64_t count_c() const { return count_c_.load(); }
  std::uint64_t count_s() const { return count_s_.load(); }
  std::uint64_t count_c_inv() const { return count_c_inv_.load(); }
  void reset_counters() const;

  // Hidden data, exposed for verification only.
  const std::vector<std::uint64_t>& hidden_subset() const { return subset_; }
  std::uint64_t hidden_shift(std::uint64_t colour) const;

  // Members of a colour class, in bijection order (test support; does not
  // count as an oracle query).
  std::vector<std::uint64_t> colour_class(std::uint64_t colour) const;

 private:
  std::uint64_t position_of(std::uint64_t x) const;  // Feistel encrypt
  std::uint64_t point_at(std::uint64_t pos) const;   // Feistel decrypt

  int n_;
  std::vector<std::uint64_t> subset_;  // ordered S
  std::uint64_t num_colours_;
  std::uint64_t remainder_;  // size of the last colour class (0 if exact)
  std::uint64_t round_keys_[4];
  std::uint64_t sigma_key_;
  std::uint64_t garbage_key_;
  mutable std::atomic<std::uint64_t> count_c_{0};
  mutable std::atomic<std::uint64_t> count_s_{0};
  mutable std::atomic<std::uint64_t> count_c_inv_{0};
};

// One pass of the three-query extraction: pick a colour by measuring c on
// the uniform superposition, apply s, uncompute with c_inv. The result is
// the shifted subset state |S + sigma(colour)>; the remainder colour (when
// |S| does not divide 4^n) yields a state over a truncated copy of S and is
// flagged.
struct ExtractionResult {
  std::uint64_t colour = 0;
  ShiftedState state;
  bool deficient = false;
};
ExtractionResult quantum_extract(const OracleInstance& oracle, RngState& rng);

// Deterministic variant used for exhaustive verification.
ExtractionResult quantum_extract_colour(const OracleInstance& oracle,
                                        std::uint64_t colour);

// Classical baseline: query c on distinct uniformly random points until two
// share a colour or the budget runs out.
struct QueryLog {
  std::uint64_t queries_used = 0;
  bool collision_found = false;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> transcript;
};
QueryLog classical_collision_experiment(const OracleInstance& oracle,
                                        std::uint64_t max_queries,
                                        RngState& rng);

}  // namespace cubeshift
