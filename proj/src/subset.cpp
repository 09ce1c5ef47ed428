#include "cubeshift/subset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cubeshift/binomial.hpp"
#include "cubeshift/errors.hpp"

namespace cubeshift {

namespace {
constexpr int kMaterializeLimit = 24;

std::uint64_t mask_of(int n) {
  return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
}
}  // namespace

std::string format_bits(std::uint64_t x, int n) {
  std::string out(n, '0');
  for (int i = 0; i < n; ++i)
    if ((x >> i) & 1) out[i] = '1';
  return out;
}

std::uint64_t parse_bits(const std::string& text, int n) {
  if (static_cast<int>(text.size()) != n)
    throw std::invalid_argument("bit string has wrong length: " + text);
  std::uint64_t x = 0;
  for (int i = 0; i < n; ++i) {
    if (text[i] == '1')
      x |= 1ULL << i;
    else if (text[i] != '0')
      throw std::invalid_argument("bit string has non-binary digit: " + text);
  }
  return x;
}

int hamming_weight(std::uint64_t x) { return std::popcount(x); }

int parity_dot(std::uint64_t a, std::uint64_t b) {
  return std::popcount(a & b) & 1;
}

SubsetSpec::SubsetSpec(int n, Kind kind) : n_(n), kind_(std::move(kind)) {
  validate();
}

void SubsetSpec::validate() const {
  if (n_ < 1 || n_ > 63) throw std::domain_error("subset: n out of [1,63]");
  const std::uint64_t mask = mask_of(n_);
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ExplicitSet>) {
          if (k.elements.empty())
            throw std::domain_error("explicit subset must be non-empty");
          for (auto e : k.elements)
            if (e & ~mask)
              throw std::domain_error("explicit subset element out of range");
        } else if constexpr (std::is_same_v<T, Sphere>) {
          if (k.radius < 0 || 2 * k.radius > n_)
            throw std::domain_error("sphere radius must satisfy 0 <= r <= n/2");
        } else if constexpr (std::is_same_v<T, Ball>) {
          if (k.radius < 0 || k.radius > n_)
            throw std::domain_error("ball radius must satisfy 0 <= r <= n");
        } else if constexpr (std::is_same_v<T, Junta>) {
          if (k.vars.empty() || k.vars.size() > 20)
            throw std::domain_error("junta variable set size out of range");
          for (int v : k.vars)
            if (v < 1 || v > n_)
              throw std::domain_error("junta variable index out of range");
          if (k.truth.size() != (1ULL << k.vars.size()))
            throw std::domain_error("junta truth table has wrong size");
          bool any0 = false, any1 = false;
          for (auto b : k.truth) (b ? any1 : any0) = true;
          if (!any0 || !any1)
            throw std::domain_error("junta function must be non-constant");
        } else if constexpr (std::is_same_v<T, ParitySet>) {
          if (k.mask == 0 || (k.mask & ~mask))
            throw std::domain_error("parity mask must be non-zero and in range");
        } else if constexpr (std::is_same_v<T, GeneralisedParity>) {
          if (k.prefix_len < 1 || k.prefix_len > n_)
            throw std::domain_error("generalised parity: bad prefix length");
          if (k.prefix_mask & ~mask_of(k.prefix_len))
            throw std::domain_error(
                "generalised parity: mask exceeds the prefix");
          if (k.suffix_truth.size() != (1ULL << (n_ - k.prefix_len)))
            throw std::domain_error(
                "generalised parity: suffix table has wrong size");
          if (k.prefix_mask == 0) {
            bool any1 = false;
            for (auto b : k.suffix_truth) any1 |= (b != 0);
            if (!any1)
              throw std::domain_error("generalised parity: empty subset");
          }
        }
      },
      kind_);
}

BigInt SubsetSpec::size() const {
  return std::visit(
      [&](const auto& k) -> BigInt {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ExplicitSet>) {
          auto sorted = k.elements;
          std::sort(sorted.begin(), sorted.end());
          sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
          return BigInt(sorted.size());
        } else if constexpr (std::is_same_v<T, Sphere>) {
          return binomial(n_, k.radius);
        } else if constexpr (std::is_same_v<T, Ball>) {
          return binomial_prefix_sum(n_, k.radius);
        } else if constexpr (std::is_same_v<T, Junta>) {
          long ones = 0;
          for (auto b : k.truth) ones += (b != 0);
          return BigInt(ones) * pow2_int(n_ - static_cast<long>(k.vars.size()));
        } else if constexpr (std::is_same_v<T, ParitySet>) {
          return pow2_int(n_ - 1);
        } else {
          if (k.prefix_mask != 0) return pow2_int(n_ - 1);
          long ones = 0;
          for (auto b : k.suffix_truth) ones += (b != 0);
          return BigInt(ones) * pow2_int(k.prefix_len);
        }
      },
      kind_);
}

bool SubsetSpec::contains(std::uint64_t x) const {
  return std::visit(
      [&](const auto& k) -> bool {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ExplicitSet>) {
          return std::find(k.elements.begin(), k.elements.end(), x) !=
                 k.elements.end();
        } else if constexpr (std::is_same_v<T, Sphere>) {
          return hamming_weight(x) == k.radius;
        } else if constexpr (std::is_same_v<T, Ball>) {
          return hamming_weight(x) <= k.radius;
        } else if constexpr (std::is_same_v<T, Junta>) {
          std::uint64_t idx = 0;
          for (size_t i = 0; i < k.vars.size(); ++i)
            idx |= ((x >> (k.vars[i] - 1)) & 1) << i;
          return k.truth[idx] != 0;
        } else if constexpr (std::is_same_v<T, ParitySet>) {
          return parity_dot(x, k.mask) == 1;
        } else {
          const int p = parity_dot(x & mask_of(k.prefix_len), k.prefix_mask);
          const int f = k.suffix_truth[x >> k.prefix_len] ? 1 : 0;
          return (p ^ f) == 1;
        }
      },
      kind_);
}

std::vector<std::uint64_t> SubsetSpec::materialize() const {
  if (const auto* ex = std::get_if<ExplicitSet>(&kind_)) {
    auto sorted = ex->elements;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return sorted;
  }
  if (n_ > kMaterializeLimit)
    throw CapacityError("subset materialisation limited to n <= 24");
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (1ULL << n_); ++x)
    if (contains(x)) out.push_back(x);
  if (out.empty()) throw std::domain_error("subset is empty");
  return out;
}

std::string SubsetSpec::describe() const {
  return std::visit(
      [&](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ExplicitSet>)
          return "explicit(" + std::to_string(k.elements.size()) + " points)";
        else if constexpr (std::is_same_v<T, Sphere>)
          return "sphere(r=" + std::to_string(k.radius) + ")";
        else if constexpr (std::is_same_v<T, Ball>)
          return "ball(r=" + std::to_string(k.radius) + ")";
        else if constexpr (std::is_same_v<T, Junta>)
          return "junta(" + std::to_string(k.vars.size()) + " vars)";
        else if constexpr (std::is_same_v<T, ParitySet>)
          return "parity(t=" + format_bits(k.mask, n_) + ")";
        else
          return "generalised-parity(k=" + std::to_string(k.prefix_len) + ")";
      },
      kind_);
}

}  // namespace cubeshift
