#pragma once

// Prefix graphs of feasible arrays.
//
// An integer array y[1..n] is feasible iff y[1] = n and 0 <= y[i] <= n+1-i
// for i >= 2.  Its prefix graph P(y) on vertices 1..n has
//   positive edges  (h, i+h-1) for every i in 2..n and h in 1..y[i],
//   negative edges  (1+y[i], i+y[i]) for every i in 2..n with i+y[i] <= n.
// A positive edge asserts that its endpoint letters must match in any
// string realizing y; a negative edge asserts they must not.
//
// y is regular (realizable by a regular string) iff no negative edge joins
// two vertices connected by positive edges, which we test with union-find.

#include <optional>
#include <vector>

#include "core.hpp"
#include "prefix.hpp"
#include "union_find.hpp"

namespace indetstr {

inline bool is_feasible(const IntArray& y) {
  const int n = y.size();
  if (n == 0) return false;
  if (y[1] != n) return false;
  for (int i = 2; i <= n; ++i)
    if (y[i] > n + 1 - i) return false;
  return true;
}

inline void require_feasible(const IntArray& y) {
  if (!is_feasible(y))
    throw infeasible_error("array is not feasible: need y[1] = n and y[i] <= n+1-i");
}

struct PrefixGraph {
  int n = 0;
  std::vector<Edge> e_plus;   // ascending lexicographic
  std::vector<Edge> e_minus;  // ascending lexicographic

  friend bool operator==(const PrefixGraph&, const PrefixGraph&) = default;
};

// The generation rule never repeats a positive edge: edges produced for
// index i all have endpoint difference i-1, and within one i the smaller
// endpoint h is strictly increasing.  So |e_plus| = sum of y[i], i >= 2.
inline PrefixGraph build_prefix_graph(const IntArray& y) {
  require_feasible(y);
  const int n = y.size();
  PrefixGraph g;
  g.n = n;
  std::size_t plus_total = 0;
  for (int i = 2; i <= n; ++i) plus_total += static_cast<std::size_t>(y[i]);
  g.e_plus.reserve(plus_total);
  for (int i = 2; i <= n; ++i) {
    for (int h = 1; h <= y[i]; ++h)
      g.e_plus.push_back(Edge{h, i + h - 1});
    if (i + y[i] <= n) g.e_minus.push_back(Edge{1 + y[i], i + y[i]});
  }
  std::sort(g.e_plus.begin(), g.e_plus.end());
  // Negative edges are pairwise distinct too: i is recoverable from the
  // edge (a, b) as b-a+1, so each index contributes a fresh edge.
  std::sort(g.e_minus.begin(), g.e_minus.end());
  return g;
}

struct AugmentedPrefixGraph {
  PrefixGraph base;
  std::vector<Edge> extra_minus;  // edges (1+y[i], n+1), ascending

  friend bool operator==(const AugmentedPrefixGraph&,
                         const AugmentedPrefixGraph&) = default;
};

// Adds a sink vertex n+1 and one negative edge (1+y[i], n+1) for every
// index i >= 2 whose match run reaches the end of the string.  Every index
// i in 2..n now carries exactly one negative edge (plain or augmented), so
// |e_minus| + |extra_minus| = n-1.
inline AugmentedPrefixGraph augment(const IntArray& y) {
  AugmentedPrefixGraph a;
  a.base = build_prefix_graph(y);
  const int n = y.size();
  for (int i = 2; i <= n; ++i)
    if (i + y[i] == n + 1) a.extra_minus.push_back(Edge{1 + y[i], n + 1});
  std::sort(a.extra_minus.begin(), a.extra_minus.end());
  return a;
}

// Inverse of the negative-edge map: an edge (i, j) forces y[j-i+1] = i-1.
// Positions not named by any edge take the maximum value n-h+1 (their match
// run reaches the end, so they contribute no negative edge).  The result is
// validated by a full round trip; inconsistent or unsound edge sets throw.
inline IntArray reconstruct_prefix_array(int n, std::vector<Edge> e_minus) {
  if (n < 1) throw edge_set_error("need n >= 1");
  for (const Edge& e : e_minus)
    if (e.i < 1 || e.i >= e.j || e.j > n)
      throw edge_set_error("edge endpoints must satisfy 1 <= i < j <= n");
  std::sort(e_minus.begin(), e_minus.end());
  e_minus.erase(std::unique(e_minus.begin(), e_minus.end()), e_minus.end());

  std::vector<int> vals(static_cast<std::size_t>(n) + 1, -1);
  vals[1] = n;
  for (const Edge& e : e_minus) {
    const int pos = e.j - e.i + 1;  // in 2..n since i < j <= n
    const int val = e.i - 1;
    if (vals[pos] != -1 && vals[pos] != val)
      throw edge_set_error("edges assign conflicting values to y[" +
                           std::to_string(pos) + "]");
    vals[pos] = val;
  }
  for (int h = 2; h <= n; ++h)
    if (vals[h] == -1) vals[h] = n - h + 1;

  IntArray y(std::vector<int>(vals.begin() + 1, vals.end()));
  if (!is_feasible(y)) throw edge_set_error("edge set yields an infeasible array");
  if (build_prefix_graph(y).e_minus != e_minus)
    throw edge_set_error("edge set is not the negative edge set of any feasible array");
  return y;
}

namespace detail {

// Union-find over vertices 1..n with all positive edges applied.  Avoids
// materializing e_plus, so regularity testing stays near-linear in sum y[i]
// even for large n.
inline UnionFind positive_components(const IntArray& y) {
  const int n = y.size();
  UnionFind uf(n + 1);
  for (int i = 2; i <= n; ++i)
    for (int h = 1; h <= y[i]; ++h) uf.unite(h, i + h - 1);
  return uf;
}

}  // namespace detail

inline bool is_regular(const IntArray& y) {
  require_feasible(y);
  const int n = y.size();
  UnionFind uf = detail::positive_components(y);
  for (int i = 2; i <= n; ++i)
    if (i + y[i] <= n && uf.same(1 + y[i], i + y[i])) return false;
  return true;
}

struct RegularityResult {
  bool regular = false;
  // Connected components of (V, e_plus): each sorted ascending, components
  // ordered by smallest member.  For regular y these are exactly the groups
  // of positions that share one symbol in the least realizing string.
  std::vector<std::vector<int>> components;
  // First negative edge joining one component, when not regular.
  std::optional<Edge> violation;
};

inline RegularityResult regularity(const IntArray& y) {
  require_feasible(y);
  const int n = y.size();
  UnionFind uf = detail::positive_components(y);

  RegularityResult r;
  r.regular = true;
  for (int i = 2; i <= n; ++i) {
    if (i + y[i] <= n && uf.same(1 + y[i], i + y[i])) {
      r.regular = false;
      const Edge e{1 + y[i], i + y[i]};
      if (!r.violation || e < *r.violation) r.violation = e;
    }
  }

  std::vector<int> root_slot(static_cast<std::size_t>(n) + 1, -1);
  for (int v = 1; v <= n; ++v) {
    const int root = uf.find(v);
    if (root_slot[root] == -1) {
      root_slot[root] = static_cast<int>(r.components.size());
      r.components.emplace_back();
    }
    r.components[static_cast<std::size_t>(root_slot[root])].push_back(v);
  }
  // Scanning v ascending already yields members sorted and components
  // ordered by smallest member.
  return r;
}

// Indeterminate string over fresh symbols whose prefix array is y, built by
// giving every positive edge its own symbol shared by its two endpoints
// (edges numbered in generation order: i ascending, then h ascending) and
// one fresh symbol to each isolated vertex, in ascending vertex order.
inline IndetString witness_string(const IntArray& y) {
  require_feasible(y);
  const int n = y.size();
  std::vector<std::vector<SymbolId>> syms(static_cast<std::size_t>(n) + 1);
  SymbolId next = 0;
  for (int i = 2; i <= n; ++i) {
    for (int h = 1; h <= y[i]; ++h) {
      ++next;
      syms[static_cast<std::size_t>(h)].push_back(next);
      syms[static_cast<std::size_t>(i + h - 1)].push_back(next);
    }
  }
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    auto& s = syms[static_cast<std::size_t>(v)];
    if (s.empty()) s.push_back(++next);
    letters.emplace_back(std::move(s));
  }
  return IndetString(std::move(letters));
}

// Brute-force reference for regularity: the first set partition of 1..n (in
// lexicographic restricted-growth-string order) whose induced regular string
// has prefix array y, or nullopt.  Exponential; intended for small n.
inline std::optional<std::vector<std::vector<int>>> regular_partition_oracle(
    const IntArray& y) {
  require_feasible(y);
  const int n = y.size();

  // c[1..n] is the restricted growth string: c[v] = block of position v.
  std::vector<int> c(static_cast<std::size_t>(n) + 1, 0);
  auto matches = [&](void) -> bool {
    // Prefix array of the induced regular string, compared against y;
    // singleton letters match iff their blocks are equal.
    for (int i = 2; i <= n; ++i) {
      int len = 0;
      while (i + len <= n && c[1 + len] == c[i + len]) ++len;
      if (len != y[i]) return false;
    }
    return true;
  };

  std::optional<std::vector<std::vector<int>>> found;
  auto emit = [&]() {
    int blocks = 0;
    for (int v = 1; v <= n; ++v) blocks = std::max(blocks, c[v]);
    std::vector<std::vector<int>> part(static_cast<std::size_t>(blocks));
    for (int v = 1; v <= n; ++v)
      part[static_cast<std::size_t>(c[v]) - 1].push_back(v);
    found = std::move(part);  // blocks are numbered by first appearance
  };

  auto rec = [&](auto&& self, int v, int used) -> bool {
    if (v > n) {
      if (matches()) {
        emit();
        return true;
      }
      return false;
    }
    for (int b = 1; b <= used + 1; ++b) {
      c[v] = b;
      if (self(self, v + 1, std::max(used, b))) return true;
    }
    return false;
  };
  rec(rec, 1, 0);
  return found;
}

}  // namespace indetstr
