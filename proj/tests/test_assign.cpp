#include <catch2/catch_amalgamated.hpp>

#include <optional>

#include "indetstr/assign.hpp"
#include "indetstr/enumerate.hpp"
#include "indetstr/prefix.hpp"
#include "indetstr/text.hpp"

using namespace indetstr;

namespace {

const IntArray kY1{8, 0, 1, 0, 3, 0, 1, 0};
const IntArray kY2{8, 0, 4, 2, 0, 3, 1, 1};
const IntArray kY20{20, 0, 1, 0, 3, 0, 3, 0, 3, 0,
                    1,  0, 7, 0, 1, 0, 4, 0, 1, 0};

// Reference: the lexicographically least symbol sequence realizing y, by
// trying every set partition of positions (as restricted growth strings,
// whose lexicographic order is the order of the induced strings).
std::optional<std::vector<int>> least_realization_brute(const IntArray& y) {
  const int n = y.size();
  std::optional<std::vector<int>> best;
  for_each_set_partition(n, [&](const std::vector<int>& c) {
    if (best) return;  // first match is least
    for (int i = 2; i <= n; ++i) {
      int len = 0;
      while (i + len <= n && c[1 + len] == c[i + len]) ++len;
      if (len != y[i]) return;
    }
    best = std::vector<int>(c.begin() + 1, c.end());
  });
  return best;
}

std::vector<int> symbol_ids(const IndetString& x) {
  std::vector<int> out;
  for (const Letter& l : x.letters())
    out.push_back(static_cast<int>(l.symbols().front()));
  return out;
}

// Least k such that the negative prefix graph has a proper k-colouring,
// by backtracking.  Independent of assign and of clique reasoning.
int chromatic_number_neg(const IntArray& y) {
  const PrefixGraph g = build_prefix_graph(y);
  const int n = g.n;
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : g.e_minus) {
    nbr[static_cast<std::size_t>(e.j)].push_back(e.i);
    nbr[static_cast<std::size_t>(e.i)].push_back(e.j);
  }
  std::vector<int> colour(static_cast<std::size_t>(n) + 1, 0);
  auto ok = [&](int v, int c) {
    for (int u : nbr[static_cast<std::size_t>(v)])
      if (colour[static_cast<std::size_t>(u)] == c) return false;
    return true;
  };
  auto rec = [&](auto&& self, int v, int k) -> bool {
    if (v > n) return true;
    for (int c = 1; c <= k; ++c)
      if (ok(v, c)) {
        colour[static_cast<std::size_t>(v)] = c;
        if (self(self, v + 1, k)) return true;
        colour[static_cast<std::size_t>(v)] = 0;
      }
    return false;
  };
  for (int k = 1;; ++k) {
    std::fill(colour.begin(), colour.end(), 0);
    if (rec(rec, 1, k)) return k;
  }
}

}  // namespace

TEST_CASE("assign reproduces the worked examples") {
  AssignResult r1 = assign(kY1);
  CHECK(format_string(r1.string) == "abacabad");
  CHECK(r1.t == 4);
  CHECK(compute_prefix_array(r1.string) == kY1);

  AssignResult r20 = assign(kY20);
  CHECK(format_string(r20.string) == "abacabababadabacabac");
  CHECK(r20.t == 4);
  CHECK(compute_prefix_array(r20.string) == kY20);

  CHECK(format_string(assign(IntArray{1}).string) == "a");
  CHECK(assign(IntArray{1}).t == 1);
  CHECK(format_string(assign(IntArray{4, 3, 2, 1}).string) == "aaaa");
  CHECK(format_string(assign(IntArray{4, 0, 0, 0}).string) == "abbb");
}

TEST_CASE("assign rejects non-regular and infeasible arrays") {
  CHECK_THROWS_AS(assign(kY2), not_regular_error);
  CHECK_THROWS_AS(assign(IntArray{2, 2}), infeasible_error);
  CHECK_THROWS_AS(assign(IntArray{}), infeasible_error);
}

TEST_CASE("assign is the least realization and uses omega letters (n <= 6)") {
  for (int n = 1; n <= 6; ++n) {
    for_each_feasible(n, [&](const IntArray& y) {
      auto least = least_realization_brute(y);
      if (!is_regular(y)) {
        REQUIRE_FALSE(least.has_value());
        REQUIRE_THROWS_AS(assign(y), not_regular_error);
        return;
      }
      AssignResult r = assign(y);
      REQUIRE(least.has_value());
      REQUIRE(symbol_ids(r.string) == *least);
      REQUIRE(compute_prefix_array(r.string) == y);
      REQUIRE(r.t == static_cast<int>(r.string.max_symbol()));
      REQUIRE(r.t == clique_number_neg(y));
      REQUIRE(r.t == chromatic_number_neg(y));

      // The string is a proper colouring of the negative graph.
      for (const Edge& e : build_prefix_graph(y).e_minus)
        REQUIRE(r.string[e.i] != r.string[e.j]);
    });
  }
}

TEST_CASE("alphabet size is at most floor(log2 n) + 1 (n <= 8)") {
  for (int n = 1; n <= 8; ++n) {
    int bound = 0;
    while ((1 << bound) <= n) ++bound;  // bound = floor(log2 n) + 1
    for_each_feasible(n, [&](const IntArray& y) {
      if (!is_regular(y)) return;
      REQUIRE(assign(y).t <= bound);
    });
  }
}

TEST_CASE("clique number of the negative graph") {
  CHECK(clique_number_neg(kY1) == 4);   // {1,2,4,8}
  CHECK(clique_number_neg(kY20) == 4);  // {1,2,4,12}, the unique maximum
  CHECK(clique_number_neg(IntArray{1}) == 1);
  CHECK(clique_number_neg(IntArray{4, 3, 2, 1}) == 1);  // no negative edges
  CHECK(clique_number_neg(IntArray{4, 0, 0, 0}) == 2);
  CHECK(clique_number_neg(kY2) == 2);  // defined for any feasible array
}

TEST_CASE("ruler strings attain the alphabet bound") {
  CHECK(format_string(ruler_string(1)) == "a");
  CHECK(format_string(ruler_string(2)) == "ab");
  CHECK(format_string(ruler_string(3)) == "abac");
  CHECK(format_string(ruler_string(4)) == "abacabad");
  CHECK(format_string(ruler_string(5)) == "abacabadabacabae");

  for (int t = 1; t <= 6; ++t) {
    IndetString p = ruler_string(t);
    REQUIRE(p.length() == 1 << (t - 1));
    IntArray y = compute_prefix_array(p);
    REQUIRE(is_regular(y));
    AssignResult r = assign(y);
    // The doubling construction is itself the least realization, and no
    // realization can do better than t letters.
    REQUIRE(r.string == p);
    REQUIRE(r.t == t);
  }

  CHECK_THROWS_AS(ruler_string(0), std::invalid_argument);
  CHECK_THROWS_AS(ruler_string(21), cap_error);
}
