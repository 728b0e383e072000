#pragma once

// Prefix arrays of indeterminate strings.
//
// The prefix array y of x[1..n] has y[1] = n and, for i >= 2, y[i] = the
// length of the longest prefix of x that matches x[i..i+y[i]-1] letter by
// letter.  Because matching is intransitive, prefix arrays of indeterminate
// strings cannot be computed with the standard Z-array shortcuts; we extend
// every position's match naively, which is O(n + sum y[i]) letter matches.

#include <random>
#include <vector>

#include "core.hpp"

namespace indetstr {

inline IntArray compute_prefix_array(const IndetString& x) {
  const int n = x.length();
  std::vector<int> y(static_cast<std::size_t>(n));
  if (n == 0) return IntArray(std::move(y));
  y[0] = n;
  for (int i = 2; i <= n; ++i) {
    int len = 0;
    while (i + len <= n && letters_match(x[1 + len], x[i + len])) ++len;
    y[static_cast<std::size_t>(i) - 1] = len;
  }
  return IntArray(std::move(y));
}

// Checks that y is exactly the prefix array of x: every claimed match run
// holds and, where the run stops inside the string, the next letters fail
// to match.  Length disagreement is a contract violation, not a "no".
inline bool verify_prefix_array(const IndetString& x, const IntArray& y) {
  const int n = x.length();
  if (y.size() != n)
    throw std::invalid_argument("string and array lengths differ");
  if (n == 0) return true;
  if (y[1] != n) return false;
  for (int i = 2; i <= n; ++i) {
    if (y[i] < 0 || i + y[i] > n + 1) return false;
    for (int h = 0; h < y[i]; ++h)
      if (!letters_match(x[1 + h], x[i + h])) return false;
    if (i + y[i] <= n && letters_match(x[1 + y[i]], x[i + y[i]])) return false;
  }
  return true;
}

// Border lengths of x in ascending order, starting with the empty border 0.
// b in 1..n-1 is a border iff the prefix and suffix of length b match, which
// the prefix array records as y[n+1-b] = b (the match run reaching the end).
inline std::vector<int> borders(const IndetString& x) {
  const int n = x.length();
  std::vector<int> out{0};
  if (n == 0) return out;
  const IntArray y = compute_prefix_array(x);
  for (int b = 1; b < n; ++b) {
    const int i = n + 1 - b;
    if (i + y[i] == n + 1) out.push_back(b);
  }
  return out;
}

// Uniform random regular string over symbol ids 1..sigma, deterministic in
// the seed.  Used by benchmarks and property tests.
inline IndetString random_regular_string(int n, int sigma,
                                         std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("length must be >= 0");
  if (sigma < 1) throw std::invalid_argument("sigma must be >= 1");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<SymbolId> pick(1,
                                               static_cast<SymbolId>(sigma));
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) letters.push_back(Letter::single(pick(gen)));
  return IndetString(std::move(letters));
}

}  // namespace indetstr
