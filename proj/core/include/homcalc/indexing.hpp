#pragma once

#include <cstddef>
#include <vector>

namespace homcalc {

// Multi-indices (i_1, ..., i_len) over {0..dim-1} are flattened
// lexicographically with the last coordinate varying fastest.

inline std::size_t pow_size(int dim, int len) {
  std::size_t r = 1;
  for (int k = 0; k < len; ++k) r *= static_cast<std::size_t>(dim);
  return r;
}

inline std::size_t flat_index(const std::vector<int>& idx, int dim) {
  std::size_t f = 0;
  for (int i : idx) f = f * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i);
  return f;
}

inline std::vector<int> unflatten_index(std::size_t flat, int dim, int len) {
  std::vector<int> idx(static_cast<std::size_t>(len));
  for (int k = len - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] = static_cast<int>(flat % static_cast<std::size_t>(dim));
    flat /= static_cast<std::size_t>(dim);
  }
  return idx;
}

// Odometer step; returns false after the last tuple.
inline bool next_index(std::vector<int>& idx, int dim) {
  for (std::size_t k = idx.size(); k-- > 0;) {
    if (++idx[k] < dim) return true;
    idx[k] = 0;
  }
  return false;
}

}  // namespace homcalc
