#pragma once

#include <algorithm>
#include <vector>

#include "codedcache/config.hpp"

namespace testsupport {

// Every valid (K1, K2, t1, t2) with K1 in [k1_lo, k1_hi], K2 in [k2_lo, k2_hi].
inline std::vector<codedcache::SystemConfig> grid(int k1_lo, int k1_hi, int k2_lo, int k2_hi, int n) {
  std::vector<codedcache::SystemConfig> out;
  for (int k1 = k1_lo; k1 <= k1_hi; ++k1)
    for (int k2 = k2_lo; k2 <= k2_hi; ++k2)
      for (int t1 = 1; t1 < k1; ++t1)
        for (int t2 = 1; t2 < k2; ++t2) out.push_back(codedcache::validate_config(k1, k2, t1, t2, n < 0 ? k1 + k2 : n));
  return out;
}

// Subsets of {first..first+count-1} of a given size by filtering all masks.
inline std::vector<std::vector<int>> brute_subsets(int first, int count, int size) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << count); ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    std::vector<int> s;
    for (int i = 0; i < count; ++i)
      if (mask >> i & 1u) s.push_back(first + i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testsupport
