#pragma once

// The string <-> graph duality.
//
// The associated graph of x[1..n] joins positions whose letters match.  A
// string is essentially regular when matching is transitive on it, i.e.
// when the associated graph is a disjoint union of cliques.
//
// Conversely, every graph is the associated graph of some string: pick a
// set of maximal cliques covering all edges and all vertices, give each
// chosen clique one symbol, and let x[v] collect the symbols of the chosen
// cliques containing v.  The minimum alphabet size equals the minimum
// number of maximal cliques in such a cover; we call the members of a fixed
// minimum cover the independent cliques and the rest dependent.
//
// Minimum cover is NP-hard in general, so the exact search is capped; the
// labelling heuristic classifies cliques as independent / dependent /
// undecided from free edges (edges lying in exactly one maximal clique)
// without any search.

#include <bit>
#include <vector>

#include "core.hpp"
#include "union_find.hpp"

namespace indetstr {

struct CliqueCaps {
  int max_n = 64;             // vertex cap for maximal-clique enumeration
  int max_exact_n = 16;       // exact cover runs when n <= max_exact_n ...
  int max_exact_cliques = 24; // ... or when there are at most this many cliques
};

inline LabelledGraph associated_graph(const IndetString& x) {
  const int n = x.length();
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (letters_match(x[i], x[j])) edges.push_back(Edge{i, j});
  return LabelledGraph(n, std::move(edges));
}

// Disjoint union of cliques: every vertex's degree is one less than the
// size of its connected component.
inline bool is_clique_union(const LabelledGraph& g) {
  const int n = g.order();
  UnionFind uf(n + 1);
  std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : g.edges()) {
    uf.unite(e.i, e.j);
    ++deg[static_cast<std::size_t>(e.i)];
    ++deg[static_cast<std::size_t>(e.j)];
  }
  for (int v = 1; v <= n; ++v)
    if (deg[static_cast<std::size_t>(v)] != uf.set_size(v) - 1) return false;
  return true;
}

// x is essentially regular iff any two letters matching a common letter
// match each other.  Checked directly on the neighbourhoods and, as a
// cross-check, via the clique-union criterion on the associated graph --
// the two are equivalent.
inline bool is_essentially_regular(const IndetString& x) {
  const LabelledGraph g = associated_graph(x);
  const auto adj = g.adjacency();
  bool direct = true;
  for (int i = 1; i <= g.order() && direct; ++i) {
    const auto& nb = adj[static_cast<std::size_t>(i)];
    for (std::size_t a = 0; a + 1 < nb.size() && direct; ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (!g.adjacent(nb[a], nb[b])) {
          direct = false;
          break;
        }
  }
  assert(direct == is_clique_union(g));
  return direct;
}

// All maximal cliques, each sorted ascending, listed in ascending
// lexicographic order.  Bron-Kerbosch with the greedy pivot (the vertex of
// P u X covering most of P; ties to the smallest id).  Output size can
// reach 3^(n/3), hence the vertex cap.
inline std::vector<std::vector<int>> maximal_cliques(const LabelledGraph& g,
                                                     const CliqueCaps& caps = {}) {
  const int n = g.order();
  if (n > caps.max_n)
    throw cap_error("maximal-clique enumeration capped at " +
                    std::to_string(caps.max_n) +
                    " vertices (worst case 3^(n/3) cliques)");
  if (n == 0) return {};
  const auto adj = g.adjacency();
  std::vector<std::vector<int>> out;

  auto bk = [&](auto&& self, std::vector<int>& r, std::vector<int> p,
                std::vector<int> x) -> void {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      std::sort(out.back().begin(), out.back().end());
      return;
    }
    int pivot = -1;
    std::size_t best = 0;
    auto consider = [&](int u) {
      const auto& nb = adj[static_cast<std::size_t>(u)];
      std::size_t cnt = 0;
      for (int w : p)
        if (std::binary_search(nb.begin(), nb.end(), w)) ++cnt;
      if (pivot == -1 || cnt > best || (cnt == best && u < pivot)) {
        pivot = u;
        best = cnt;
      }
    };
    for (int u : p) consider(u);
    for (int u : x) consider(u);

    const auto& pv = adj[static_cast<std::size_t>(pivot)];
    std::vector<int> ext;
    for (int v : p)
      if (!std::binary_search(pv.begin(), pv.end(), v)) ext.push_back(v);

    for (int v : ext) {
      const auto& nb = adj[static_cast<std::size_t>(v)];
      std::vector<int> p2, x2;
      std::set_intersection(p.begin(), p.end(), nb.begin(), nb.end(),
                            std::back_inserter(p2));
      std::set_intersection(x.begin(), x.end(), nb.begin(), nb.end(),
                            std::back_inserter(x2));
      r.push_back(v);
      self(self, r, std::move(p2), std::move(x2));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      auto pos = std::lower_bound(x.begin(), x.end(), v);
      x.insert(pos, v);
    }
  };

  std::vector<int> all(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) all[static_cast<std::size_t>(v) - 1] = v;
  std::vector<int> r;
  bk(bk, r, std::move(all), {});
  std::sort(out.begin(), out.end());
  return out;
}

// Edges contained in exactly one maximal clique.  Such an edge forces its
// clique into every cover, which is what the labelling heuristic exploits.
inline std::vector<Edge> free_edges(const LabelledGraph& g,
                                    const CliqueCaps& caps = {}) {
  const auto mcs = maximal_cliques(g, caps);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    int count = 0;
    for (const auto& c : mcs)
      if (std::binary_search(c.begin(), c.end(), e.i) &&
          std::binary_search(c.begin(), c.end(), e.j) &&
          ++count > 1)
        break;
    if (count == 1) out.push_back(e);
  }
  return out;
}

struct CliqueCover {
  std::vector<std::vector<int>> all_mc;  // every maximal clique, lex order
  std::vector<std::size_t> independent;  // indices into all_mc, ascending
  std::vector<std::size_t> dependent;    // the complement, ascending
  int sigma = 0;                         // = |independent|, the min alphabet
};

namespace detail {

// Fixed-width bitset helpers over vector<uint64_t>.
using Words = std::vector<std::uint64_t>;

inline void set_bit(Words& w, std::size_t b) { w[b >> 6] |= 1ull << (b & 63); }
inline bool any_and(const Words& a, const Words& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & b[k]) return true;
  return false;
}
inline bool is_zero(const Words& a) {
  for (auto w : a)
    if (w) return false;
  return true;
}

struct CoverProblem {
  // Cliques that cover at least one edge (indices into all_mc) and their
  // edge masks; singletons are excluded here and handled as forced picks.
  std::vector<std::size_t> clique_ids;
  std::vector<Words> edge_mask;             // per clique
  std::vector<std::vector<int>> covered_by; // per edge: cliques (local ids)
  std::size_t m = 0;                        // edge count
  std::size_t words = 0;
};

// Greedy lower bound: a set of uncovered edges no two of which lie in a
// common clique; each such edge needs its own clique in any completion.
inline int disjoint_edge_bound(const CoverProblem& pr, const Words& uncovered,
                               std::vector<Words>& edge_clique_mask,
                               std::size_t clique_words) {
  Words used(clique_words, 0);
  int lb = 0;
  for (std::size_t e = 0; e < pr.m; ++e) {
    if (!(uncovered[e >> 6] >> (e & 63) & 1)) continue;
    if (any_and(edge_clique_mask[e], used)) continue;
    ++lb;
    for (std::size_t k = 0; k < clique_words; ++k) used[k] |= edge_clique_mask[e][k];
  }
  return lb;
}

}  // namespace detail

// Minimum set of maximal cliques covering every edge and every vertex.
// Singleton maximal cliques (isolated vertices) belong to every cover and
// are taken as forced; the remaining edge-cover minimum is found by branch
// and bound, then the lexicographically least cover of that size (by
// ascending all_mc index sets) is selected so the result is deterministic.
inline CliqueCover independent_cliques_exact(const LabelledGraph& g,
                                             const CliqueCaps& caps = {}) {
  CliqueCover cover;
  cover.all_mc = maximal_cliques(g, caps);
  if (g.order() > caps.max_exact_n &&
      static_cast<int>(cover.all_mc.size()) > caps.max_exact_cliques)
    throw cap_error("exact cover capped: need n <= " +
                    std::to_string(caps.max_exact_n) + " or at most " +
                    std::to_string(caps.max_exact_cliques) +
                    " maximal cliques");

  detail::CoverProblem pr;
  std::vector<std::size_t> forced;  // singleton cliques = isolated vertices
  for (std::size_t c = 0; c < cover.all_mc.size(); ++c) {
    if (cover.all_mc[c].size() == 1)
      forced.push_back(c);
    else
      pr.clique_ids.push_back(c);
  }

  const auto& edges = g.edges();
  pr.m = edges.size();
  pr.words = (pr.m + 63) / 64 + (pr.m == 0);
  pr.covered_by.resize(pr.m);
  pr.edge_mask.assign(pr.clique_ids.size(), detail::Words(pr.words, 0));
  for (std::size_t lc = 0; lc < pr.clique_ids.size(); ++lc) {
    const auto& c = cover.all_mc[pr.clique_ids[lc]];
    for (std::size_t e = 0; e < pr.m; ++e)
      if (std::binary_search(c.begin(), c.end(), edges[e].i) &&
          std::binary_search(c.begin(), c.end(), edges[e].j)) {
        detail::set_bit(pr.edge_mask[lc], e);
        pr.covered_by[e].push_back(static_cast<int>(lc));
      }
  }

  const std::size_t nc = pr.clique_ids.size();
  const std::size_t cw = (nc + 63) / 64 + (nc == 0);
  std::vector<detail::Words> edge_clique_mask(pr.m, detail::Words(cw, 0));
  for (std::size_t e = 0; e < pr.m; ++e)
    for (int lc : pr.covered_by[e])
      detail::set_bit(edge_clique_mask[e], static_cast<std::size_t>(lc));

  detail::Words all_uncovered(pr.words, 0);
  for (std::size_t e = 0; e < pr.m; ++e) detail::set_bit(all_uncovered, e);

  auto subtract = [&](const detail::Words& from, const detail::Words& mask) {
    detail::Words r(from);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] &= ~mask[k];
    return r;
  };
  auto lower_bound_of = [&](const detail::Words& uncovered) {
    return detail::disjoint_edge_bound(pr, uncovered, edge_clique_mask, cw);
  };

  // Phase 1: minimum size.  Branch on the uncovered edge with fewest
  // covering cliques; try cliques covering most uncovered edges first.
  int best = static_cast<int>(nc) + 1;
  {
    auto search = [&](auto&& self, const detail::Words& uncovered,
                      int size) -> void {
      if (detail::is_zero(uncovered)) {
        best = std::min(best, size);
        return;
      }
      if (size + lower_bound_of(uncovered) >= best) return;
      std::size_t pick = pr.m;
      for (std::size_t e = 0; e < pr.m; ++e) {
        if (!(uncovered[e >> 6] >> (e & 63) & 1)) continue;
        if (pick == pr.m ||
            pr.covered_by[e].size() < pr.covered_by[pick].size())
          pick = e;
      }
      std::vector<int> order(pr.covered_by[pick]);
      auto gain = [&](int lc) {
        int cnt = 0;
        for (std::size_t k = 0; k < pr.words; ++k)
          cnt += std::popcount(pr.edge_mask[static_cast<std::size_t>(lc)][k] &
                               uncovered[k]);
        return cnt;
      };
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return gain(a) > gain(b); });
      for (int lc : order)
        self(self, subtract(uncovered, pr.edge_mask[static_cast<std::size_t>(lc)]),
             size + 1);
    };
    search(search, all_uncovered, 0);
  }

  // Phase 2: lexicographically least cover of the minimum size.  Walking
  // local ids ascending and preferring "include" finds it first; a clique
  // is only included while it covers something new, which every member of
  // a minimum cover does.
  std::vector<int> chosen;
  {
    // last_cover[e]: highest local id covering e, for a feasibility prune.
    std::vector<int> last_cover(pr.m, -1);
    for (std::size_t e = 0; e < pr.m; ++e)
      if (!pr.covered_by[e].empty()) last_cover[e] = pr.covered_by[e].back();

    std::vector<int> acc;
    auto dfs = [&](auto&& self, std::size_t lc, const detail::Words& uncovered,
                   int budget) -> bool {
      if (detail::is_zero(uncovered)) {
        chosen = acc;
        return true;
      }
      if (lc == nc || budget == 0) return false;
      if (lower_bound_of(uncovered) > budget) return false;
      for (std::size_t e = 0; e < pr.m; ++e)
        if ((uncovered[e >> 6] >> (e & 63) & 1) &&
            last_cover[e] < static_cast<int>(lc))
          return false;
      if (detail::any_and(pr.edge_mask[lc], uncovered)) {
        acc.push_back(static_cast<int>(lc));
        if (self(self, lc + 1, subtract(uncovered, pr.edge_mask[lc]),
                 budget - 1))
          return true;
        acc.pop_back();
      }
      return self(self, lc + 1, uncovered, budget);
    };
    dfs(dfs, 0, all_uncovered, best);
  }

  cover.independent = forced;
  for (int lc : chosen)
    cover.independent.push_back(pr.clique_ids[static_cast<std::size_t>(lc)]);
  std::sort(cover.independent.begin(), cover.independent.end());
  cover.sigma = static_cast<int>(cover.independent.size());
  for (std::size_t c = 0; c < cover.all_mc.size(); ++c)
    if (!std::binary_search(cover.independent.begin(), cover.independent.end(), c))
      cover.dependent.push_back(c);
  return cover;
}

enum class CliqueLabel : char {
  independent = 'I',
  dependent = 'D',
  undecided = 'U',
};

struct CliqueLabelling {
  std::vector<std::vector<int>> all_mc;  // every maximal clique, lex order
  std::vector<CliqueLabel> labels;       // parallel to all_mc
};

// Search-free labelling.  Cliques owning a free edge must be in every
// cover: label them I.  Then alternate to a fixed point: an unlabelled
// clique sharing an edge with an I clique is marked droppable (label D),
// and an unlabelled clique sharing an edge with a D clique is kept (label
// I).  Cliques still unlabelled stay U (undecided); the labelling is a
// cheap partial answer, not a minimum cover.
inline CliqueLabelling independent_cliques_heuristic(const LabelledGraph& g,
                                                     const CliqueCaps& caps = {}) {
  CliqueLabelling lab;
  lab.all_mc = maximal_cliques(g, caps);
  const std::size_t k = lab.all_mc.size();
  lab.labels.assign(k, CliqueLabel::undecided);

  // Two cliques share an edge iff they share two vertices.
  auto shares_edge = [&](std::size_t a, std::size_t b) {
    const auto& u = lab.all_mc[a];
    const auto& v = lab.all_mc[b];
    std::size_t i = 0, j = 0, common = 0;
    while (i < u.size() && j < v.size()) {
      if (u[i] == v[j]) {
        if (++common == 2) return true;
        ++i, ++j;
      } else if (u[i] < v[j]) {
        ++i;
      } else {
        ++j;
      }
    }
    return false;
  };

  // Free edges, mapped to the one clique that owns each.
  for (const Edge& e : g.edges()) {
    std::size_t owner = k;
    int count = 0;
    for (std::size_t c = 0; c < k; ++c)
      if (std::binary_search(lab.all_mc[c].begin(), lab.all_mc[c].end(), e.i) &&
          std::binary_search(lab.all_mc[c].begin(), lab.all_mc[c].end(), e.j)) {
        owner = c;
        if (++count > 1) break;
      }
    if (count == 1) lab.labels[owner] = CliqueLabel::independent;
  }
  // Isolated vertices are their own maximal clique and always independent.
  for (std::size_t c = 0; c < k; ++c)
    if (lab.all_mc[c].size() == 1) lab.labels[c] = CliqueLabel::independent;

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < k; ++c) {
      if (lab.labels[c] != CliqueLabel::undecided) continue;
      for (std::size_t d = 0; d < k; ++d)
        if (lab.labels[d] == CliqueLabel::independent && shares_edge(c, d)) {
          lab.labels[c] = CliqueLabel::dependent;
          changed = true;
          break;
        }
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (lab.labels[c] != CliqueLabel::undecided) continue;
      for (std::size_t d = 0; d < k; ++d)
        if (lab.labels[d] == CliqueLabel::dependent && shares_edge(c, d)) {
          lab.labels[c] = CliqueLabel::independent;
          changed = true;
          break;
        }
    }
  }
  return lab;
}

// A string whose associated graph is exactly g, over the minimum alphabet:
// symbol k is the k-th independent clique, and x[v] collects the symbols of
// the independent cliques containing v.
inline IndetString string_from_graph(const LabelledGraph& g,
                                     const CliqueCaps& caps = {}) {
  const CliqueCover cover = independent_cliques_exact(g, caps);
  const int n = g.order();
  std::vector<std::vector<SymbolId>> syms(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < cover.independent.size(); ++k)
    for (int v : cover.all_mc[cover.independent[k]])
      syms[static_cast<std::size_t>(v)].push_back(static_cast<SymbolId>(k + 1));
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v)
    letters.emplace_back(std::move(syms[static_cast<std::size_t>(v)]));
  return IndetString(std::move(letters));
}

// Fewest symbols any string with the same associated graph can use.
inline int min_alphabet(const IndetString& x, const CliqueCaps& caps = {}) {
  return independent_cliques_exact(associated_graph(x), caps).sigma;
}

}  // namespace indetstr
