#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "indetstr/prefix.hpp"
#include "indetstr/text.hpp"

using namespace indetstr;

namespace {

// Independent oracle for regular strings: the classical Z-array computed
// with the left/right window trick, no letter machinery involved.  For a
// regular string the prefix array is the Z-array with Z[1] := n.
std::vector<int> z_array(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> z(s.size(), 0);
  if (n == 0) return z;
  z[0] = n;
  int l = 0, r = 0;  // rightmost window [l, r) with s[l..] matching a prefix
  for (int i = 1; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

std::vector<int> symbols_of(const IndetString& x) {
  std::vector<int> s;
  for (const Letter& l : x.letters())
    s.push_back(static_cast<int>(l.symbols().front()));
  return s;
}

// Definition-level border check, independent of prefix arrays.
bool has_border(const IndetString& x, int b) {
  for (int k = 1; k <= b; ++k)
    if (!letters_match(x[k], x[x.length() - b + k])) return false;
  return true;
}

IndetString random_indet_string(int n, int sigma, std::mt19937_64& gen) {
  std::vector<Letter> letters;
  for (int i = 0; i < n; ++i) {
    std::vector<SymbolId> ids;
    const int k = 1 + static_cast<int>(gen() % 3);
    for (int j = 0; j < k; ++j)
      ids.push_back(1 + static_cast<SymbolId>(gen() % sigma));
    letters.push_back(Letter(ids));
  }
  return IndetString(std::move(letters));
}

}  // namespace

TEST_CASE("prefix array of the running examples") {
  CHECK(compute_prefix_array(parse_string("abacabad")) ==
        IntArray{8, 0, 1, 0, 3, 0, 1, 0});
  CHECK(compute_prefix_array(parse_string("{a,b,e}c{a,d}fbc{d,e}g")) ==
        IntArray{8, 0, 1, 0, 3, 0, 1, 0});
  CHECK(compute_prefix_array(parse_string("a{a,b}b")) == IntArray{3, 2, 0});
  CHECK(compute_prefix_array(IndetString()) == IntArray{});
  CHECK(compute_prefix_array(parse_string("aaaa")) == IntArray{4, 3, 2, 1});
  CHECK(compute_prefix_array(parse_string("abcd")) == IntArray{4, 0, 0, 0});
}

TEST_CASE("prefix array agrees with the Z-array on regular strings") {
  std::mt19937_64 gen(7);
  for (int iter = 0; iter < 400; ++iter) {
    const int n = static_cast<int>(gen() % 40);
    const int sigma = 1 + static_cast<int>(gen() % 4);
    IndetString x = random_regular_string(n, sigma, gen());
    CHECK(compute_prefix_array(x).values() == z_array(symbols_of(x)));
  }
}

TEST_CASE("verify accepts exactly the computed array") {
  std::mt19937_64 gen(11);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = 1 + static_cast<int>(gen() % 9);
    IndetString x = random_indet_string(n, 3, gen);
    IntArray y = compute_prefix_array(x);
    REQUIRE(verify_prefix_array(x, y));

    // Any single-position change to a legal alternative value must fail.
    for (int i = 1; i <= n; ++i) {
      std::vector<int> v = y.values();
      for (int alt = 0; alt <= n + 1 - i; ++alt) {
        if (alt == y[i]) continue;
        v[static_cast<std::size_t>(i) - 1] = alt;
        CHECK_FALSE(verify_prefix_array(x, IntArray(v)));
      }
      v[static_cast<std::size_t>(i) - 1] = y[i];
    }
  }
  CHECK_THROWS_AS(
      verify_prefix_array(parse_string("ab"), IntArray{3, 0, 0}),
      std::invalid_argument);
  CHECK(verify_prefix_array(IndetString(), IntArray{}));
}

TEST_CASE("every string's prefix array is feasible-shaped") {
  // Exhaustively over regular strings with n <= 5, sigma <= 3.
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<Letter> ls;
      for (int d : digits) ls.push_back(Letter::single(1 + d));
      IndetString x(ls);
      IntArray y = compute_prefix_array(x);
      REQUIRE(y[1] == n);
      for (int i = 2; i <= n; ++i) REQUIRE(y[i] <= n + 1 - i);
      REQUIRE(verify_prefix_array(x, y));
      int k = n - 1;
      while (k >= 0 && digits[static_cast<std::size_t>(k)] == 2) {
        digits[static_cast<std::size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
      ++digits[static_cast<std::size_t>(k)];
    }
  }
}

TEST_CASE("borders read off the prefix array match the definition") {
  // The motivating example: border of length 2 but none of length 1.
  CHECK(borders(parse_string("a{a,b}b")) == std::vector<int>{0, 2});
  CHECK(borders(parse_string("abab")) == std::vector<int>{0, 2});
  CHECK(borders(parse_string("aaaa")) == std::vector<int>{0, 1, 2, 3});
  CHECK(borders(parse_string("abc")) == std::vector<int>{0});
  CHECK(borders(IndetString()) == std::vector<int>{0});

  std::mt19937_64 gen(13);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(gen() % 10);
    IndetString x = random_indet_string(n, 2 + iter % 3, gen);
    std::vector<int> expect{0};
    for (int b = 1; b < n; ++b)
      if (has_border(x, b)) expect.push_back(b);
    CHECK(borders(x) == expect);
  }
}

TEST_CASE("random regular strings are deterministic in the seed") {
  IndetString a = random_regular_string(50, 4, 99);
  IndetString b = random_regular_string(50, 4, 99);
  IndetString c = random_regular_string(50, 4, 100);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a.length() == 50);
  CHECK(a.regular());
  CHECK(a.max_symbol() <= 4);
  CHECK(random_regular_string(0, 1, 1) == IndetString());
  CHECK_THROWS_AS(random_regular_string(5, 0, 1), std::invalid_argument);
  // All sigma symbols appear eventually.
  CHECK(random_regular_string(300, 4, 5).max_symbol() == 4);
}
