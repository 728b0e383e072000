#pragma once

// Text formats.
//
// Strings have two interchangeable encodings:
//   compact  symbols are single letters a..z (ids 1..26); indeterminate
//            letters are brace groups:  a{a,b}b{b,c}
//   words    whitespace-separated tokens; a token is either a spelled
//            symbol name (bijective base-26: a..z, aa, ab, ...) or a
//            decimal symbol id; brace groups as in compact mode:
//            a {a,b} b   or equivalently   1 {1,2} 2
//
// Integer arrays are whitespace-separated decimal values: "8 0 1 0 3 0 1 0".
//
// Edge lists are a header line "<n> <edge-count>" followed by one "i j"
// line per edge with i < j, in ascending lexicographic order.

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace indetstr {

enum class TextMode { compact, words };

// 1 -> "a", 26 -> "z", 27 -> "aa", ... (bijective base-26)
inline std::string default_symbol_name(SymbolId id) {
  assert(id >= 1);
  std::string s;
  while (id > 0) {
    --id;
    s.push_back(static_cast<char>('a' + id % 26));
    id /= 26;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

// Inverse of default_symbol_name; also accepts a decimal id.
// Returns nullopt on malformed tokens (including id 0).
inline std::optional<SymbolId> symbol_from_token(std::string_view tok) {
  if (tok.empty()) return std::nullopt;
  if (std::isdigit(static_cast<unsigned char>(tok.front()))) {
    std::uint64_t id = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      id = id * 10 + static_cast<std::uint64_t>(c - '0');
      if (id > (1u << 30)) return std::nullopt;
    }
    if (id == 0) return std::nullopt;
    return static_cast<SymbolId>(id);
  }
  std::uint64_t id = 0;
  for (char c : tok) {
    if (c < 'a' || c > 'z') return std::nullopt;
    id = id * 26 + static_cast<std::uint64_t>(c - 'a' + 1);
    if (id > (1u << 30)) return std::nullopt;
  }
  return static_cast<SymbolId>(id);
}

struct ParseOptions {
  TextMode mode = TextMode::compact;
  int max_sigma = Alphabet::kDefaultMaxSigma;
};

namespace detail {

inline void check_sigma(SymbolId id, int max_sigma) {
  if (static_cast<int>(id) > max_sigma)
    throw parse_error("symbol id " + std::to_string(id) +
                      " exceeds max sigma " + std::to_string(max_sigma));
}

inline IndetString parse_string_compact(std::string_view text, int max_sigma) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto sym = [&](char c) -> SymbolId {
    if (c < 'a' || c > 'z')
      throw parse_error(std::string("unexpected character '") + c +
                        "' in compact string");
    SymbolId id = static_cast<SymbolId>(c - 'a' + 1);
    check_sigma(id, max_sigma);
    return id;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '{') {
      std::vector<SymbolId> ids;
      ++i;
      bool closed = false;
      while (i < text.size()) {
        c = text[i];
        if (c == '}') {
          closed = true;
          ++i;
          break;
        }
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
          ++i;
          continue;
        }
        ids.push_back(sym(c));
        ++i;
      }
      if (!closed) throw parse_error("unterminated '{' in string");
      if (ids.empty()) throw parse_error("empty letter '{}' in string");
      letters.emplace_back(std::move(ids));
    } else {
      letters.push_back(Letter::single(sym(c)));
      ++i;
    }
  }
  return IndetString(std::move(letters));
}

inline IndetString parse_string_words(std::string_view text, int max_sigma) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto token_at = [&]() -> SymbolId {
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '{' && text[i] != '}' && text[i] != ',')
      ++i;
    std::string_view tok = text.substr(start, i - start);
    auto id = symbol_from_token(tok);
    if (!id) throw parse_error("bad symbol token '" + std::string(tok) + "'");
    check_sigma(*id, max_sigma);
    return *id;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '{') {
      std::vector<SymbolId> ids;
      ++i;
      bool closed = false;
      while (i < text.size()) {
        c = text[i];
        if (c == '}') {
          closed = true;
          ++i;
          break;
        }
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
          ++i;
          continue;
        }
        ids.push_back(token_at());
      }
      if (!closed) throw parse_error("unterminated '{' in string");
      if (ids.empty()) throw parse_error("empty letter '{}' in string");
      letters.emplace_back(std::move(ids));
    } else if (c == '}' || c == ',') {
      throw parse_error(std::string("unexpected '") + c + "' in string");
    } else {
      letters.push_back(Letter::single(token_at()));
    }
  }
  return IndetString(std::move(letters));
}

}  // namespace detail

inline IndetString parse_string(std::string_view text, ParseOptions opt = {}) {
  return opt.mode == TextMode::compact
             ? detail::parse_string_compact(text, opt.max_sigma)
             : detail::parse_string_words(text, opt.max_sigma);
}

// Token for one symbol: its Alphabet name when available, else the compact
// letter (compact mode) or the spelled base-26 name (word mode).
inline std::string symbol_token(SymbolId id, TextMode mode,
                                const Alphabet* names = nullptr) {
  if (names && static_cast<int>(id) <= names->sigma() &&
      !names->name(id).empty())
    return names->name(id);
  if (mode == TextMode::compact) {
    if (id > 26)
      throw cap_error("compact format needs symbol ids <= 26, got " +
                      std::to_string(id));
    return std::string(1, static_cast<char>('a' + id - 1));
  }
  return default_symbol_name(id);
}

inline std::string format_string(const IndetString& x,
                                 TextMode mode = TextMode::compact,
                                 const Alphabet* names = nullptr) {
  std::string out;
  bool first = true;
  for (const Letter& l : x.letters()) {
    if (mode == TextMode::words && !first) out.push_back(' ');
    first = false;
    if (l.regular()) {
      out += symbol_token(l.symbols().front(), mode, names);
    } else {
      out.push_back('{');
      for (std::size_t k = 0; k < l.size(); ++k) {
        if (k) out.push_back(',');
        out += symbol_token(l.symbols()[k], mode, names);
      }
      out.push_back('}');
    }
  }
  return out;
}

inline IntArray parse_int_array(std::string_view text) {
  std::vector<int> v;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t pos = 0;
      int val = std::stoi(tok, &pos);
      if (pos != tok.size() || val < 0)
        throw parse_error("bad array value '" + tok + "'");
      v.push_back(val);
    } catch (const std::logic_error&) {
      throw parse_error("bad array value '" + tok + "'");
    }
  }
  return IntArray(std::move(v));
}

inline std::string format_int_array(const IntArray& y) {
  std::string out;
  for (int i = 1; i <= y.size(); ++i) {
    if (i > 1) out.push_back(' ');
    out += std::to_string(y[i]);
  }
  return out;
}

struct EdgeList {
  int n = 0;
  std::vector<Edge> edges;  // normalized: i < j, ascending, unique
};

inline EdgeList parse_edge_list(std::istream& in) {
  int n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw parse_error("edge list needs a '<n> <count>' header");
  if (n < 0 || m < 0) throw parse_error("edge list header values must be >= 0");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    int a = 0, b = 0;
    if (!(in >> a >> b))
      throw parse_error("edge list ended before " + std::to_string(m) +
                        " edges were read");
    if (a == b) throw parse_error("edge list contains a loop");
    if (a < 1 || b < 1 || a > n || b > n)
      throw parse_error("edge endpoint out of range 1.." + std::to_string(n));
    edges.push_back(edge(a, b));
  }
  std::string leftover;
  if (in >> leftover) throw parse_error("trailing data after edge list");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return EdgeList{n, std::move(edges)};
}

inline EdgeList parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline std::string format_edge_list(int n, const std::vector<Edge>& edges) {
  std::string out =
      std::to_string(n) + " " + std::to_string(edges.size()) + "\n";
  for (const Edge& e : edges)
    out += std::to_string(e.i) + " " + std::to_string(e.j) + "\n";
  return out;
}

}  // namespace indetstr
