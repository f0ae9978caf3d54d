#pragma once

// Brute-force references used by the tests. Nothing here calls
// forced_extension or the constrained enumerator.

#include <functional>
#include <set>
#include <vector>

#include "shq/checks.hpp"

namespace oracle {

using shq::AlgebraPtr;
using shq::Homomorphism;

/// Calls f on every map {0..n-1} -> {0..m-1} in lexicographic order.
inline void for_each_map(int n, int m, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> map(n, 0);
  while (true) {
    f(map);
    int i = n - 1;
    while (i >= 0 && map[i] == m - 1) map[i--] = 0;
    if (i < 0) return;
    ++map[i];
  }
}

/// Every homomorphism A -> B by trying all |B|^|A| maps.
inline std::vector<std::vector<int>> all_homs(const AlgebraPtr& a, const AlgebraPtr& b) {
  std::vector<std::vector<int>> out;
  for_each_map(a->order(), b->order(), [&](const std::vector<int>& m) {
    if (!shq::find_hom_violation(*a, *b, m)) out.push_back(m);
  });
  return out;
}

/// Restricted growth strings of length n: every set partition once.
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      out.push_back(p);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      p[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n > 0) {
    p[0] = 0;
    rec(1, 1);
  }
  return out;
}

inline bool compatible(const shq::FiniteAlgebra& a, const std::vector<int>& p) {
  const int n = a.order();
  for (std::size_t op = 0; op < a.signature().ops().size(); ++op) {
    const int ar = a.signature().ops()[op].arity;
    if (ar == 0) continue;
    bool ok = true;
    // Compare every pair of argument tuples that agree blockwise.
    for_each_map(ar, n, [&](const std::vector<int>& x) {
      if (!ok) return;
      for_each_map(ar, n, [&](const std::vector<int>& y) {
        if (!ok) return;
        for (int i = 0; i < ar; ++i) {
          if (p[x[i]] != p[y[i]]) return;
        }
        if (p[a.apply(static_cast<int>(op), x)] != p[a.apply(static_cast<int>(op), y)]) ok = false;
      });
    });
    if (!ok) return false;
  }
  return true;
}

/// Every congruence, as normalised block labels.
inline std::vector<std::vector<int>> all_congruences(const AlgebraPtr& a) {
  std::vector<std::vector<int>> out;
  for (auto& p : all_partitions(a->order())) {
    if (compatible(*a, p)) out.push_back(shq::normalize_partition(p));
  }
  return out;
}

/// Normal subgroup test by conjugation, for the group signature.
inline bool normal_in_group(const AlgebraPtr& g, const std::vector<int>& subset) {
  std::set<int> s(subset.begin(), subset.end());
  const int mul = *g->signature().op_index("*");
  const int inv = *g->signature().op_index("inv");
  for (int x = 0; x < g->order(); ++x) {
    for (int h : subset) {
      const int conj = g->apply2(mul, g->apply2(mul, x, h), g->table(inv)[x]);
      if (!s.count(conj)) return false;
    }
  }
  return true;
}

/// Every homomorphism apex -> target satisfying the cone equations, from
/// all_homs.
inline std::vector<std::vector<int>> witnesses(const shq::WitnessProblem& p) {
  std::vector<std::vector<int>> out;
  for (auto& m : all_homs(p.apex(), p.target())) {
    bool ok = true;
    for (const auto& leg : p.cone) {
      for (int x = 0; x < leg.into_apex.dom()->order() && ok; ++x) {
        ok = m[leg.into_apex(x)] == leg.value(x);
      }
    }
    if (ok) out.push_back(m);
  }
  return out;
}

}  // namespace oracle
