#pragma once

// Lexicographically least regular string realizing a regular feasible array.
//
// Scans positions j = 1..n left to right.  The negative edges ending at j
// name the earlier positions whose letters x[j] must avoid; x[j] takes the
// least letter not blocked.  Positive constraints need no bookkeeping: each
// blocked letter is recorded at the moment it becomes forbidden, and
// positions tied together by positive edges resolve to the same letter
// because they see the same blocked set.  A fresh letter (t -> t+1) appears
// exactly when j is adjacent in the negative graph to positions carrying
// all t letters so far, so the final t equals the clique number of the
// negative prefix graph, and t <= floor(log2 n) + 1.
//
// Cost is O(n): the edges are bucketed by counting sort and |e_minus| < n.

#include <vector>

#include "core.hpp"
#include "prefix_graph.hpp"

namespace indetstr {

struct AssignResult {
  IndetString string;
  int t = 0;  // alphabet size used = clique number of the negative graph
};

inline AssignResult assign(const IntArray& y) {
  require_feasible(y);
  if (!is_regular(y))
    throw not_regular_error("array is not regular; no regular string realizes it");
  const int n = y.size();

  // Negative edges (s, j), s < j, sorted by j then s with two stable
  // counting sorts (radix).  Generation order is arbitrary in both keys.
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 2; i <= n; ++i)
    if (i + y[i] <= n) edges.push_back(Edge{1 + y[i], i + y[i]});
  const std::size_t m = edges.size();
  std::vector<Edge> tmp(m);
  std::vector<int> cnt(static_cast<std::size_t>(n) + 2, 0);
  auto sort_by = [&](std::vector<Edge>& src, std::vector<Edge>& dst,
                     int Edge::*key) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (const Edge& e : src) ++cnt[static_cast<std::size_t>(e.*key)];
    for (std::size_t k = 1; k < cnt.size(); ++k) cnt[k] += cnt[k - 1];
    for (std::size_t k = m; k-- > 0;)
      dst[static_cast<std::size_t>(--cnt[static_cast<std::size_t>(src[k].*key)])] =
          src[k];
  };
  sort_by(edges, tmp, &Edge::i);
  sort_by(tmp, edges, &Edge::j);

  std::vector<SymbolId> x(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> blocked(static_cast<std::size_t>(n) + 2, 0);
  int t = 1;
  std::size_t k = 0;
  for (int j = 1; j <= n; ++j) {
    const std::size_t first = k;
    while (k < m && edges[k].j == j) {
      blocked[x[static_cast<std::size_t>(edges[k].i)]] = 1;
      ++k;
    }
    if (k == first) {
      x[static_cast<std::size_t>(j)] = 1;
      continue;
    }
    SymbolId l = 1;
    while (blocked[l]) ++l;
    if (static_cast<int>(l) > t) t = static_cast<int>(l);
    for (std::size_t p = first; p < k; ++p)
      blocked[x[static_cast<std::size_t>(edges[p].i)]] = 0;
    x[static_cast<std::size_t>(j)] = l;
  }

  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    letters.push_back(Letter::single(x[static_cast<std::size_t>(j)]));
  return AssignResult{IndetString(std::move(letters)), t};
}

// Clique number of the negative prefix graph, by branch and bound on the
// subgraph induced by negative-edge endpoints.  Exponential in general but
// |e_minus| < n keeps the instances small.
inline int clique_number_neg(const IntArray& y) {
  require_feasible(y);
  const PrefixGraph g = build_prefix_graph(y);
  if (g.e_minus.empty()) return 1;  // n >= 1, single vertices only

  // Compact the endpoint vertices.
  std::vector<int> verts;
  for (const Edge& e : g.e_minus) {
    verts.push_back(e.i);
    verts.push_back(e.j);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const int v = static_cast<int>(verts.size());
  auto index_of = [&](int orig) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), orig) -
                            verts.begin());
  };
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(v));
  for (const Edge& e : g.e_minus) {
    const int a = index_of(e.i), b = index_of(e.j);
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());

  int best = 1;
  // Candidates are kept sorted; extending by v keeps only later neighbours,
  // so every clique is generated once.
  auto expand = [&](auto&& self, int size, std::vector<int>& cand) -> void {
    if (size + static_cast<int>(cand.size()) <= best) return;
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    while (!cand.empty()) {
      if (size + static_cast<int>(cand.size()) <= best) return;
      const int u = cand.front();
      cand.erase(cand.begin());
      std::vector<int> next;
      const auto& nb = adj[static_cast<std::size_t>(u)];
      std::set_intersection(cand.begin(), cand.end(), nb.begin(), nb.end(),
                            std::back_inserter(next));
      self(self, size + 1, next);
    }
  };
  std::vector<int> all(static_cast<std::size_t>(v));
  for (int k = 0; k < v; ++k) all[static_cast<std::size_t>(k)] = k;
  expand(expand, 0, all);
  return best;
}

// Extremal regular string on t letters: p_1 = "a" and p_t is p_{t-1}
// followed by p_{t-1} with its last letter replaced by letter t.  Its
// length is 2^(t-1) and assign on its prefix array needs exactly t
// letters, witnessing that the log bound above is tight.
inline IndetString ruler_string(int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (t > 20)
    throw cap_error("ruler strings above t = 20 are refused (length 2^(t-1))");
  std::vector<SymbolId> p{1};
  for (int k = 2; k <= t; ++k) {
    std::vector<SymbolId> second(p);
    second.back() = static_cast<SymbolId>(k);
    p.insert(p.end(), second.begin(), second.end());
  }
  std::vector<Letter> letters;
  letters.reserve(p.size());
  for (SymbolId s : p) letters.push_back(Letter::single(s));
  return IndetString(std::move(letters));
}

}  // namespace indetstr
