#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cubeshift {

// In-place Walsh-Hadamard butterflies without normalisation:
// out[z] = sum_y (-1)^(z.y) in[y]. Applying twice multiplies by 2^n.
// Works for any ring-like T (int64, double, Rational).
template <class T>
void walsh_butterflies(std::vector<T>& v) {
  const size_t size = v.size();
  if (size == 0 || (size & (size - 1)) != 0)
    throw std::invalid_argument("walsh: length must be a power of two");
  for (size_t h = 1; h < size; h <<= 1) {
    for (size_t i = 0; i < size; i += h << 1) {
      for (size_t j = i; j < i + h; ++j) {
        T a = v[j];
        T b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

inline int log2_of_pow2(size_t size) {
  int n = 0;
  while ((size_t{1} << n) < size) ++n;
  return n;
}

}  // namespace cubeshift
