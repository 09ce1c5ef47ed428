#include "cubeshift/binomial.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace cubeshift {

namespace {

std::mutex g_mutex;
std::vector<std::vector<BigInt>> g_rows;  // g_rows[n][k] = C(n,k)

void extend_locked(long n) {
  if (g_rows.empty()) g_rows.push_back({BigInt(1)});
  while (static_cast<long>(g_rows.size()) <= n) {
    const auto& prev = g_rows.back();
    std::vector<BigInt> row(prev.size() + 1);
    row.front() = 1;
    row.back() = 1;
    for (size_t k = 1; k < prev.size(); ++k) row[k] = prev[k - 1] + prev[k];
    g_rows.push_back(std::move(row));
  }
}

}  // namespace

BigInt binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (k < 0 || k > n) return 0;
  std::lock_guard<std::mutex> lock(g_mutex);
  extend_locked(n);
  return g_rows[n][k];
}

BigInt binomial_prefix_sum(long n, long r) {
  if (r < 0) return 0;
  if (r > n) r = n;
  std::lock_guard<std::mutex> lock(g_mutex);
  extend_locked(n);
  BigInt sum = 0;
  for (long k = 0; k <= r; ++k) sum += g_rows[n][k];
  return sum;
}

}  // namespace cubeshift
