#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cubeshift/exact.hpp"

namespace cubeshift {

// Bit i of a string is bit i of the word, so "first k bits" means the k
// low-order bits. Rendered strings put variable 1 (bit 0) leftmost.
std::string format_bits(std::uint64_t x, int n);
std::uint64_t parse_bits(const std::string& text, int n);
int hamming_weight(std::uint64_t x);
int parity_dot(std::uint64_t a, std::uint64_t b);

struct ExplicitSet {
  std::vector<std::uint64_t> elements;
};

struct Sphere {
  long radius;  // 0 <= radius <= n/2
};

struct Ball {
  long radius;  // 0 <= radius <= n
};

// Indicator depends only on the listed variables; truth has 2^|vars|
// entries indexed by the packed variable bits, and must be non-constant.
struct Junta {
  std::vector<int> vars;
  std::vector<std::uint8_t> truth;
};

// Strings with odd parity on the variables of the non-zero mask.
struct ParitySet {
  std::uint64_t mask;
};

// Indicator(x) = parity(x & prefix_mask) xor suffix_truth[x >> prefix_len],
// where prefix_mask is confined to the low prefix_len bits.
struct GeneralisedParity {
  int prefix_len;
  std::uint64_t prefix_mask;
  std::vector<std::uint8_t> suffix_truth;  // 2^(n - prefix_len) entries
};

class SubsetSpec {
 public:
  using Kind =
      std::variant<ExplicitSet, Sphere, Ball, Junta, ParitySet, GeneralisedParity>;

  SubsetSpec(int n, Kind kind);

  int n() const { return n_; }
  const Kind& kind() const { return kind_; }

  // |S| without materialising.
  BigInt size() const;

  // Whether the given point is in the subset.
  bool contains(std::uint64_t x) const;

  // Sorted element list; CapacityError above n = 24.
  std::vector<std::uint64_t> materialize() const;

  std::string describe() const;

 private:
  void validate() const;

  int n_;
  Kind kind_;
};

}  // namespace cubeshift
