#pragma once

// Exhaustive enumeration used by oracles, counting tests and the CLI.
//
// Feasible arrays of length n are exactly the tuples with y[1] = n and
// y[i] in 0..n+1-i, so there are n * (n-1) * ... * 1 = n! of them.  They
// are visited in ascending lexicographic order.

#include <utility>
#include <vector>

#include "core.hpp"

namespace indetstr {

template <typename Visit>
void for_each_feasible(int n, Visit&& visit) {
  if (n < 1) return;
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  v[0] = n;
  for (;;) {
    visit(IntArray(v));
    // Odometer step: rightmost digit first keeps the order lexicographic.
    int i = n - 1;
    while (i >= 1) {
      if (v[static_cast<std::size_t>(i)] < n - i) {  // digit i+1 caps at n+1-(i+1)
        ++v[static_cast<std::size_t>(i)];
        break;
      }
      v[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 1) return;
  }
}

inline std::vector<IntArray> enumerate_feasible(int n) {
  std::vector<IntArray> out;
  for_each_feasible(n, [&](const IntArray& y) { out.push_back(y); });
  return out;
}

// Visits every set partition of 1..n as a restricted growth string c
// (c[1..n], c[0] unused; block ids are 1-based, numbered by first
// appearance) in ascending lexicographic order of c.
template <typename Visit>
void for_each_set_partition(int n, Visit&& visit) {
  if (n < 1) return;
  std::vector<int> c(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (v > n) {
      visit(std::as_const(c));
      return;
    }
    for (int b = 1; b <= used + 1; ++b) {
      c[static_cast<std::size_t>(v)] = b;
      self(self, v + 1, std::max(used, b));
    }
  };
  rec(rec, 1, 0);
}

}  // namespace indetstr
