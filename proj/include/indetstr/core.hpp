#pragma once

// Domain types for indeterminate strings: symbols, letters, strings,
// 1-indexed integer arrays and labelled simple graphs.
//
// Positions, vertex ids and symbol ids are 1-based throughout the library,
// matching the usual stringology convention.  Letters are stored as sorted
// sets of integer symbol ids; optional text names live in a side table
// (Alphabet) and never influence the match relation.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace indetstr {

using SymbolId = std::uint32_t;  // 1-based canonical index

// Every domain failure carries a short machine-readable code; the CLI prints
// "error: <code>: <detail>" and maps codes to exit statuses.
class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct parse_error : error {
  explicit parse_error(const std::string& w) : error("parse", w) {}
};
struct infeasible_error : error {
  explicit infeasible_error(const std::string& w) : error("infeasible", w) {}
};
struct not_regular_error : error {
  explicit not_regular_error(const std::string& w) : error("not-regular", w) {}
};
struct cap_error : error {
  explicit cap_error(const std::string& w) : error("cap-exceeded", w) {}
};
struct edge_set_error : error {
  explicit edge_set_error(const std::string& w) : error("bad-edge-set", w) {}
};

// Nonempty set of symbol ids, kept sorted and duplicate-free.
class Letter {
 public:
  Letter(std::initializer_list<SymbolId> ids)
      : Letter(std::vector<SymbolId>(ids)) {}

  explicit Letter(std::vector<SymbolId> ids) : syms_(std::move(ids)) {
    std::sort(syms_.begin(), syms_.end());
    syms_.erase(std::unique(syms_.begin(), syms_.end()), syms_.end());
    if (syms_.empty()) throw std::invalid_argument("letter must be nonempty");
    if (syms_.front() == 0)
      throw std::invalid_argument("symbol ids are 1-based");
  }

  static Letter single(SymbolId s) { return Letter(std::vector<SymbolId>{s}); }

  bool regular() const { return syms_.size() == 1; }
  std::size_t size() const { return syms_.size(); }
  const std::vector<SymbolId>& symbols() const { return syms_; }
  SymbolId max_symbol() const { return syms_.back(); }

  bool contains(SymbolId s) const {
    return std::binary_search(syms_.begin(), syms_.end(), s);
  }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) {
    return a.syms_ <=> b.syms_;
  }

 private:
  std::vector<SymbolId> syms_;
};

// Two letters match iff their symbol sets intersect (reflexive, symmetric,
// not transitive).
inline bool letters_match(const Letter& a, const Letter& b) {
  const auto& u = a.symbols();
  const auto& v = b.symbols();
  std::size_t i = 0, j = 0;
  while (i < u.size() && j < v.size()) {
    if (u[i] == v[j]) return true;
    if (u[i] < v[j])
      ++i;
    else
      ++j;
  }
  return false;
}

// Finite sequence of letters; regular iff every letter is a singleton.
// The empty string is regular.
class IndetString {
 public:
  IndetString() = default;
  explicit IndetString(std::vector<Letter> letters)
      : letters_(std::move(letters)) {}

  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  // 1-based position access.
  const Letter& operator[](int i) const {
    assert(i >= 1 && i <= length());
    return letters_[static_cast<std::size_t>(i) - 1];
  }

  const std::vector<Letter>& letters() const { return letters_; }

  bool regular() const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const Letter& l) { return l.regular(); });
  }

  SymbolId max_symbol() const {
    SymbolId m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.max_symbol());
    return m;
  }

  friend bool operator==(const IndetString&, const IndetString&) = default;

 private:
  std::vector<Letter> letters_;
};

inline bool strings_match(const IndetString& a, const IndetString& b) {
  if (a.length() != b.length()) return false;
  for (int i = 1; i <= a.length(); ++i)
    if (!letters_match(a[i], b[i])) return false;
  return true;
}

// Integer array with 1-indexed access; values are nonnegative.  Feasibility
// is a property checked by an operation, not by the type.
class IntArray {
 public:
  IntArray() = default;
  IntArray(std::initializer_list<int> v) : IntArray(std::vector<int>(v)) {}

  explicit IntArray(std::vector<int> v) : v_(std::move(v)) {
    for (int x : v_)
      if (x < 0) throw std::invalid_argument("IntArray values are nonnegative");
  }

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }

  // 1-based access.
  int operator[](int i) const {
    assert(i >= 1 && i <= size());
    return v_[static_cast<std::size_t>(i) - 1];
  }

  const std::vector<int>& values() const { return v_; }

  friend bool operator==(const IntArray&, const IntArray&) = default;
  friend auto operator<=>(const IntArray& a, const IntArray& b) {
    return a.v_ <=> b.v_;
  }

 private:
  std::vector<int> v_;
};

// Unordered vertex pair stored with i < j.
struct Edge {
  int i = 0;
  int j = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge edge(int a, int b) {
  if (a == b) throw std::invalid_argument("loops are not allowed");
  if (a < 1 || b < 1) throw std::invalid_argument("vertex ids are 1-based");
  if (a > b) std::swap(a, b);
  return Edge{a, b};
}

// Simple undirected graph on vertices 1..n.
class LabelledGraph {
 public:
  LabelledGraph() = default;
  LabelledGraph(int n, std::vector<Edge> edges)
      : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be >= 0");
    for (const Edge& e : edges_) {
      if (e.i < 1 || e.i >= e.j || e.j > n_)
        throw std::invalid_argument("edge endpoints must satisfy 1 <= i < j <= n");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool adjacent(int a, int b) const {
    if (a == b) return false;
    return std::binary_search(edges_.begin(), edges_.end(),
                              edge(std::min(a, b), std::max(a, b)));
  }

  // Sorted neighbour lists, index 0 unused.
  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_) + 1);
    for (const Edge& e : edges_) {
      adj[static_cast<std::size_t>(e.i)].push_back(e.j);
      adj[static_cast<std::size_t>(e.j)].push_back(e.i);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    return adj;
  }

  friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // sorted lexicographically, unique
};

struct Symbol {
  SymbolId id = 0;
  std::string name;  // empty when unnamed
};

// Side table of symbol names for a base alphabet with ids 1..sigma.
// Names, when present, are unique; sigma is bounded by a configurable cap.
class Alphabet {
 public:
  static constexpr int kDefaultMaxSigma = 1024;

  explicit Alphabet(int sigma = 0, int max_sigma = kDefaultMaxSigma)
      : max_sigma_(max_sigma) {
    if (sigma < 0) throw std::invalid_argument("sigma must be >= 0");
    if (sigma > max_sigma_)
      throw cap_error("alphabet size " + std::to_string(sigma) +
                      " exceeds max sigma " + std::to_string(max_sigma_));
    names_.resize(static_cast<std::size_t>(sigma));
  }

  int sigma() const { return static_cast<int>(names_.size()); }
  int max_sigma() const { return max_sigma_; }

  SymbolId add(std::string name = "") {
    if (sigma() + 1 > max_sigma_)
      throw cap_error("alphabet would exceed max sigma " +
                      std::to_string(max_sigma_));
    if (!name.empty()) {
      if (by_name_.count(name))
        throw std::invalid_argument("duplicate symbol name: " + name);
      by_name_.emplace(name, static_cast<SymbolId>(sigma() + 1));
    }
    names_.push_back(std::move(name));
    return static_cast<SymbolId>(sigma());
  }

  const std::string& name(SymbolId id) const {
    assert(id >= 1 && static_cast<int>(id) <= sigma());
    return names_[id - 1];
  }

  std::optional<SymbolId> id_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  Symbol symbol(SymbolId id) const { return Symbol{id, name(id)}; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, SymbolId> by_name_;
  int max_sigma_ = kDefaultMaxSigma;
};

struct Canonicalized {
  IndetString string;
  std::vector<SymbolId> new_to_old;  // new_to_old[k-1] = original id of k
};

// Renumber symbols 1,2,... in order of first appearance, scanning positions
// left to right and symbols within a letter in ascending input order.  The
// match relation is preserved.
inline Canonicalized canonicalize(const IndetString& x) {
  std::unordered_map<SymbolId, SymbolId> old_to_new;
  std::vector<SymbolId> new_to_old;
  std::vector<Letter> out;
  out.reserve(x.letters().size());
  for (const Letter& l : x.letters()) {
    std::vector<SymbolId> remapped;
    remapped.reserve(l.size());
    for (SymbolId s : l.symbols()) {
      auto [it, inserted] =
          old_to_new.emplace(s, static_cast<SymbolId>(new_to_old.size() + 1));
      if (inserted) new_to_old.push_back(s);
      remapped.push_back(it->second);
    }
    out.emplace_back(std::move(remapped));
  }
  return Canonicalized{IndetString(std::move(out)), std::move(new_to_old)};
}

}  // namespace indetstr
