#pragma once

#include <algorithm>
#include <span>
#include <vector>

namespace shq::detail {

// Calls f(args) once for every tuple in S^arity that contains the newest
// element at least once, where S = `seen` and the newest element is
// seen.back(). Tuples are grouped by the first position holding the newest
// element: earlier positions range over the older elements only, later ones
// over all of S. Summed over a growing S this visits every tuple once.
template <class F>
void for_each_tuple_with_newest(std::span<const int> seen, int arity, F&& f) {
  if (arity == 0 || seen.empty()) return;
  const int newest = seen.back();
  const std::size_t old_count = seen.size() - 1;
  std::vector<int> args(arity);
  std::vector<std::size_t> pos(arity);
  for (int first = 0; first < arity; ++first) {
    if (first > 0 && old_count == 0) break;
    std::fill(pos.begin(), pos.end(), 0);
    while (true) {
      for (int i = 0; i < arity; ++i) {
        args[i] = i == first ? newest : seen[pos[i]];
      }
      f(std::span<const int>(args));
      int i = arity - 1;
      for (; i >= 0; --i) {
        if (i == first) continue;
        std::size_t limit = i < first ? old_count : seen.size();
        if (++pos[i] < limit) break;
        pos[i] = 0;
      }
      if (i < 0) break;
    }
  }
}

// Odometer over {0..n-1}^arity.
template <class F>
void for_each_tuple(int n, int arity, F&& f) {
  std::vector<int> args(arity, 0);
  if (n == 0 && arity > 0) return;
  while (true) {
    f(std::span<const int>(args));
    int i = arity - 1;
    for (; i >= 0; --i) {
      if (++args[i] < n) break;
      args[i] = 0;
    }
    if (i < 0) break;
  }
}

}  // namespace shq::detail
