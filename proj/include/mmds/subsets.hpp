#pragma once

#include <cstddef>
#include <vector>

namespace mmds {

/// Visits index subsets of {0..n-1} by increasing size, lexicographically
/// within a size, up to max_size elements. Stops as soon as `visit` returns
/// true; returns whether that happened.
template <class Visit>
bool for_each_subset_by_size(std::size_t n, std::size_t max_size, Visit&& visit) {
  std::vector<std::size_t> idx;
  if (max_size > n) max_size = n;
  for (std::size_t r = 0; r <= max_size; ++r) {
    idx.resize(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      if (visit(static_cast<const std::vector<std::size_t>&>(idx))) return true;
      // advance to the next r-combination
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

}  // namespace mmds
