#include <catch2/catch_amalgamated.hpp>

#include "indetstr/enumerate.hpp"
#include "indetstr/indet.hpp"
#include "indetstr/prefix_graph.hpp"

using namespace indetstr;

namespace {

const IntArray kY1{8, 0, 1, 0, 3, 0, 1, 0};
const IntArray kY2{8, 0, 4, 2, 0, 3, 1, 1};

std::vector<int> keys(const std::map<int, IndetWitness>& m) {
  std::vector<int> out;
  for (const auto& [i, w] : m) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("forced indeterminate positions of the worked examples") {
  auto m = indet_positions(IntArray{6, 5, 0, 3, 0, 1});
  CHECK(keys(m) == std::vector<int>{2, 4, 6});
  // Least witnesses: (1,3) is a negative edge and both 1 and 3 match each
  // of the flagged positions.
  CHECK(m.at(2).r == 1);
  CHECK(m.at(2).s == 3);
  CHECK(m.at(2).kind == 'b');
  CHECK(m.at(4).kind == 'c');
  CHECK(m.at(6).kind == 'c');

  auto m2 = indet_positions(kY2);
  CHECK(keys(m2) == std::vector<int>{1, 2, 3, 4, 7});
  CHECK(m2.at(1).r == 3);
  CHECK(m2.at(1).s == 6);
  CHECK(m2.at(1).kind == 'a');
  CHECK(m2.at(2).r == 5);
  CHECK(m2.at(2).s == 7);
  CHECK(m2.at(3).r == 1);
  CHECK(m2.at(3).s == 5);
  CHECK(m2.at(3).kind == 'b');
  CHECK(m2.at(4).r == 1);
  CHECK(m2.at(4).s == 2);
  CHECK(m2.at(7).kind == 'c');

  CHECK(indet_positions(kY1).empty());
  CHECK(indet_positions(IntArray{1}).empty());
}

TEST_CASE("witness invariants") {
  for (const IntArray& y : {kY2, IntArray{6, 5, 0, 3, 0, 1}}) {
    const PrefixGraph g = build_prefix_graph(y);
    auto in = [&](const std::vector<Edge>& es, int a, int b) {
      return std::binary_search(es.begin(), es.end(),
                                Edge{std::min(a, b), std::max(a, b)});
    };
    for (const auto& [i, w] : indet_positions(y)) {
      REQUIRE(w.i == i);
      REQUIRE(w.r < w.s);
      REQUIRE(in(g.e_plus, i, w.r));
      REQUIRE(in(g.e_plus, i, w.s));
      REQUIRE(in(g.e_minus, w.r, w.s));
      REQUIRE(w.kind == (i < w.r ? 'a' : (i < w.s ? 'b' : 'c')));
    }
  }
}

TEST_CASE("the arithmetic test agrees with the graph test (n <= 7)") {
  for (int n = 1; n <= 7; ++n) {
    for_each_feasible(n, [&](const IntArray& y) {
      auto m = indet_positions(y);
      for (int i = 1; i <= n; ++i)
        REQUIRE(is_indet_position(y, i) == (m.count(i) == 1));
      // A feasible array is regular exactly when no position is forced.
      REQUIRE(is_regular(y) == m.empty());
    });
  }
}

TEST_CASE("strong indeterminacy is non-regularity") {
  CHECK(is_strongly_indeterminate(kY2));
  CHECK_FALSE(is_strongly_indeterminate(kY1));
  // A border of length 2 but none of length 1 rules out regular strings:
  // the array of a{a,b}b is only realizable with indeterminate letters.
  CHECK(is_strongly_indeterminate(IntArray{3, 2, 0}));
  CHECK_FALSE(is_strongly_indeterminate(IntArray{3, 0, 1}));
  CHECK_THROWS_AS(is_strongly_indeterminate(IntArray{2, 2}),
                  infeasible_error);
  CHECK_THROWS_AS(is_indet_position(kY1, 0), std::out_of_range);
  CHECK_THROWS_AS(is_indet_position(kY1, 9), std::out_of_range);
  CHECK_THROWS_AS(is_indet_position(IntArray{2, 2}, 1), infeasible_error);
}
