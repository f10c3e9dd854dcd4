#pragma once

#include <span>
#include <vector>

namespace mds {

/// Calls f(coords) for every t-subset of {0..n-1} in lexicographic order.
/// Stops early when f returns false.
template <typename F>
void for_each_subset(int n, int t, F&& f) {
  if (t < 0 || t > n) return;
  std::vector<int> idx(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!f(std::span<const int>(idx))) return;
    int i = t - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - t + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace mds
