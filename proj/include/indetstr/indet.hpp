#pragma once

// Positions forced to hold an indeterminate letter.
//
// In any string realizing a feasible array y, position i must be
// indeterminate whenever some r and s both match i (positive edges (i,r)
// and (i,s) in the prefix graph) while r and s must not match each other
// (negative edge (r,s)).  A regular letter at i would make x[r] = x[i] =
// x[s], contradicting the negative edge; intransitive matching has no such
// obstruction.
//
// is_indet_position is an independent arithmetic reformulation that reads the
// witnesses straight off the array, split by how i orders against r < s:
//   (a) i < r < s:  y[r] >= i, y[s] >= i, y[s-r+1] = i+r-2
//   (b) r < i < s:  r+y[r] > i, y[s] >= i, y[s+r-1] = i-r
//   (c) r < s < i:  r+y[r] > i, s+y[s] > i, y[s-r+1] = i-s
// Here r and s are offsets relative to i rather than absolute positions.
// Both views are checked against each other exhaustively in the tests.

#include <map>
#include <vector>

#include "core.hpp"
#include "prefix_graph.hpp"

namespace indetstr {

struct IndetWitness {
  int i = 0;  // the forced-indeterminate position
  int r = 0;  // matching neighbours of i: (i,r), (i,s) positive, (r,s) negative
  int s = 0;
  char kind = '?';  // 'a' i < r < s, 'b' r < i < s, 'c' r < s < i
};

// Every forced-indeterminate position of y with its least witness pair
// (r, s), keyed by position.  Witnesses are minimal in lexicographic (r, s)
// order among all valid pairs for that position.
inline std::map<int, IndetWitness> indet_positions(const IntArray& y) {
  const PrefixGraph g = build_prefix_graph(y);
  const int n = g.n;

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : g.e_plus) {
    adj[static_cast<std::size_t>(e.i)].push_back(e.j);
    adj[static_cast<std::size_t>(e.j)].push_back(e.i);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  auto negative = [&](int a, int b) {
    return std::binary_search(g.e_minus.begin(), g.e_minus.end(),
                              Edge{std::min(a, b), std::max(a, b)});
  };

  std::map<int, IndetWitness> out;
  for (int i = 1; i <= n; ++i) {
    const auto& nb = adj[static_cast<std::size_t>(i)];
    bool found = false;
    for (std::size_t a = 0; a + 1 < nb.size() && !found; ++a) {
      for (std::size_t b = a + 1; b < nb.size() && !found; ++b) {
        if (negative(nb[a], nb[b])) {
          const int r = nb[a], s = nb[b];
          char kind = i < r ? 'a' : (i < s ? 'b' : 'c');
          out.emplace(i, IndetWitness{i, r, s, kind});
          found = true;
        }
      }
    }
  }
  return out;
}

// Arithmetic test for one position (see header comment); r and s range over
// offsets 1..n with index guards, no case analysis on their order needed.
inline bool is_indet_position(const IntArray& y, int i) {
  require_feasible(y);
  const int n = y.size();
  if (i < 1 || i > n)
    throw std::out_of_range("position " + std::to_string(i) + " not in 1.." +
                            std::to_string(n));
  auto in_range = [&](int idx) { return idx >= 1 && idx <= n; };
  for (int r = 1; r <= n; ++r) {
    for (int s = 1; s <= n; ++s) {
      // (a)
      if (in_range(s - r + 1) && y[r] >= i && y[s] >= i &&
          y[s - r + 1] == i + r - 2)
        return true;
      // (b)
      if (in_range(s + r - 1) && r + y[r] > i && y[s] >= i &&
          y[s + r - 1] == i - r)
        return true;
      // (c)
      if (in_range(s - r + 1) && r + y[r] > i && s + y[s] > i &&
          y[s - r + 1] == i - s)
        return true;
    }
  }
  return false;
}

// A feasible array is strongly indeterminate when no regular string
// realizes it.
inline bool is_strongly_indeterminate(const IntArray& y) {
  return !is_regular(y);
}

}  // namespace indetstr
