// Copyright 2026 The Bruhat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file
/// Permutations of {1..n} in one-line notation, with the statistics and
/// pattern machinery used by the Bruhat-order routines.
///
/// Positions and values are 1-based everywhere in the public surface.
/// Composition follows the functional convention (u*v)(i) = u(v(i)), so
/// multiplying by a simple reflection on the right swaps two positions and
/// multiplying on the left swaps two values.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bruhat/errors.hpp"
#include "bruhat/node_set.hpp"

namespace bruhat {

enum class Side { left, right };

class Permutation {
 public:
  /// The empty permutation of degree 0.
  Permutation() = default;

  /// Takes the one-line notation w(1), ..., w(n). Throws ValidationError if
  /// the values are not a bijection on {1..n}.
  explicit Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
    const int n = degree();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
      if (v < 1 || v > n) {
        throw ValidationError("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw ValidationError("value " + std::to_string(v) + " repeated");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v), Unchecked{});
  }

  /// The transposition t_{ij} exchanging i and j.
  static Permutation transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n) {
      throw ValidationError("transposition index out of range");
    }
    Permutation t = identity(n);
    std::swap(t.images_[static_cast<std::size_t>(i - 1)], t.images_[static_cast<std::size_t>(j - 1)]);
    return t;
  }

  /// s_i = t_{i,i+1}.
  static Permutation simple_reflection(int n, int i) { return transposition(n, i, i + 1); }

  /// The reversal n n-1 ... 1.
  static Permutation longest(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v), Unchecked{});
  }

  int degree() const { return static_cast<int>(images_.size()); }

  /// w(i) for 1 <= i <= degree().
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& one_line() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i) {
      if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
    }
    return true;
  }

  /// Digit string for degree <= 9, comma-separated otherwise.
  std::string to_string() const {
    std::string out;
    const bool digits = degree() <= 9;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (!digits && i > 0) out += ',';
      out += std::to_string(images_[i]);
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> v, Unchecked) : images_(std::move(v)) {}

  friend Permutation compose(const Permutation& u, const Permutation& v);
  friend Permutation inverse(const Permutation& w);

  std::vector<int> images_;
};

/// (u*v)(i) = u(v(i)).
inline Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(u.degree()) +
                         " and " + std::to_string(v.degree()));
  }
  std::vector<int> out(v.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = u.images_[static_cast<std::size_t>(v.images_[i] - 1)];
  }
  return Permutation(std::move(out), Permutation::Unchecked{});
}

inline Permutation inverse(const Permutation& w) {
  std::vector<int> out(w.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[static_cast<std::size_t>(w.images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(out), Permutation::Unchecked{});
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

/// Splits on commas and/or whitespace, dropping empty pieces between
/// consecutive blanks. An empty piece between two commas is kept so that
/// it can be reported.
inline std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  auto flush = [&](std::size_t end, bool comma) {
    std::string_view tok = trim(text.substr(start, end - start));
    if (!tok.empty() || comma) out.push_back(tok);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ',') {
      flush(i, true);
      start = i + 1;
    } else if (c == ' ' || c == '\t') {
      flush(i, false);
      start = i + 1;
    }
  }
  flush(text.size(), false);
  return out;
}

inline int parse_int_token(std::string_view tok, std::string_view what) {
  int value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (tok.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError(std::string(what) + ": invalid token '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses "34521" (digit form, degree <= 9) or "10,9,8,...,1" (comma or
/// whitespace separated). Errors name the offending token.
inline Permutation parse_permutation(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw ParseError("empty permutation text");

  std::vector<std::string_view> tokens;
  const bool separated = text.find_first_of(", \t") != std::string_view::npos;
  if (separated) {
    tokens = detail::split_tokens(text);
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) tokens.push_back(text.substr(i, 1));
  }

  const int n = static_cast<int>(tokens.size());
  std::vector<int> values;
  values.reserve(tokens.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::string_view tok : tokens) {
    const int v = detail::parse_int_token(tok, "permutation");
    if (v < 1 || v > n) {
      throw ParseError("permutation: token '" + std::string(tok) + "' outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw ParseError("permutation: token '" + std::string(tok) + "' repeated");
    }
    seen[static_cast<std::size_t>(v)] = true;
    values.push_back(v);
  }
  return Permutation(std::move(values));
}

/// Number of inversions i < j with w(i) > w(j).
inline int length(const Permutation& w) {
  const auto& v = w.one_line();
  int count = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++count;
    }
  }
  return count;
}

/// Right descents {i : w(i) > w(i+1)}; left descents are the right descents
/// of the inverse.
inline NodeSet descents(const Permutation& w, Side side = Side::right) {
  if (side == Side::left) return descents(inverse(w), Side::right);
  NodeSet out;
  for (int i = 1; i < w.degree(); ++i) {
    if (w(i) > w(i + 1)) out.insert(i);
  }
  return out;
}

/// Standardizes a sequence of distinct integers to a permutation of
/// {1..size} with the same relative order.
inline Permutation flatten(const std::vector<int>& values) {
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  out.reserve(values.size());
  for (int v : values) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  }
  return Permutation(std::move(out));
}

/// u (+) v: v acts on the positions after those of u.
inline Permutation direct_sum(const Permutation& u, const Permutation& v) {
  std::vector<int> out = u.one_line();
  for (int x : v.one_line()) out.push_back(x + u.degree());
  return Permutation(std::move(out));
}

// --- patterns -------------------------------------------------------------

struct PatternOccurrence {
  Permutation pattern;
  std::vector<int> indices;  // strictly increasing, 1-based

  friend bool operator==(const PatternOccurrence&, const PatternOccurrence&) = default;
};

namespace detail {

/// Depth-first scan of occurrences of `p` in `w` in lexicographic order of
/// index tuples, restricted to positions in [lo_pos, hi_pos] and values in
/// [lo_val, hi_val]. `visit` returns true to stop the scan.
template <class Visit>
bool scan_occurrences(const Permutation& w, const Permutation& p, int lo_pos, int hi_pos, int lo_val,
                      int hi_val, Visit&& visit) {
  const int k = p.degree();
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));

  std::function<bool(int)> extend = [&](int next_pos) -> bool {
    const int depth = static_cast<int>(chosen.size());
    if (depth == k) return visit(chosen);
    // Value window implied by the entries already placed.
    int lo = lo_val;
    int hi = hi_val;
    const int want = p(depth + 1);
    for (int j = 0; j < depth; ++j) {
      const int have = w(chosen[static_cast<std::size_t>(j)]);
      if (p(j + 1) < want) {
        lo = std::max(lo, have + 1);
      } else {
        hi = std::min(hi, have - 1);
      }
    }
    if (lo > hi) return false;
    for (int a = next_pos; a <= hi_pos - (k - depth - 1); ++a) {
      const int v = w(a);
      if (v < lo || v > hi) continue;
      chosen.push_back(a);
      if (extend(a + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return extend(lo_pos);
}

inline bool occurrence_matches(const Permutation& w, const PatternOccurrence& occ) {
  const int k = occ.pattern.degree();
  if (static_cast<int>(occ.indices.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    const int a = occ.indices[static_cast<std::size_t>(i)];
    if (a < 1 || a > w.degree()) return false;
    if (i > 0 && a <= occ.indices[static_cast<std::size_t>(i - 1)]) return false;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const bool in_w = w(occ.indices[static_cast<std::size_t>(i)]) < w(occ.indices[static_cast<std::size_t>(j)]);
      if (in_w != (occ.pattern(i + 1) < occ.pattern(j + 1))) return false;
    }
  }
  return true;
}

struct OccurrenceBox {
  int first_pos, last_pos, min_val, max_val;
};

inline OccurrenceBox box_of(const Permutation& w, const std::vector<int>& idx) {
  OccurrenceBox b{idx.front(), idx.back(), w(idx.front()), w(idx.front())};
  for (int a : idx) {
    b.min_val = std::min(b.min_val, w(a));
    b.max_val = std::max(b.max_val, w(a));
  }
  return b;
}

}  // namespace detail

/// The lexicographically least occurrence of `p` in `w`, if any.
inline std::optional<PatternOccurrence> contains_pattern(const Permutation& w, const Permutation& p) {
  if (p.degree() > w.degree()) return std::nullopt;
  if (p.degree() == 0) return PatternOccurrence{p, {}};
  std::optional<PatternOccurrence> found;
  detail::scan_occurrences(w, p, 1, w.degree(), 1, w.degree(), [&](const std::vector<int>& idx) {
    found = PatternOccurrence{p, idx};
    return true;
  });
  return found;
}

inline bool avoids(const Permutation& w, const Permutation& p) { return !contains_pattern(w, p).has_value(); }

namespace detail {

/// A competing occurrence whose bounding box sits weakly inside that of
/// `occ` and strictly inside in at least one of the four directions.
inline std::optional<PatternOccurrence> tighter_occurrence(const Permutation& w, const PatternOccurrence& occ) {
  if (occ.indices.empty()) return std::nullopt;
  const OccurrenceBox box = box_of(w, occ.indices);
  std::optional<PatternOccurrence> found;
  scan_occurrences(w, occ.pattern, box.first_pos, box.last_pos, box.min_val, box.max_val,
                   [&](const std::vector<int>& idx) {
                     if (idx == occ.indices) return false;
                     const OccurrenceBox b = box_of(w, idx);
                     if (b.first_pos > box.first_pos || b.last_pos < box.last_pos ||
                         b.min_val > box.min_val || b.max_val < box.max_val) {
                       found = PatternOccurrence{occ.pattern, idx};
                       return true;
                     }
                     return false;
                   });
  return found;
}

}  // namespace detail

/// True iff no other occurrence of the same pattern is squeezed into the
/// bounding box of `occ` with at least one side strictly tightened.
inline bool is_minimal_occurrence(const Permutation& w, const PatternOccurrence& occ) {
  if (!detail::occurrence_matches(w, occ)) {
    throw ValidationError("not an occurrence of " + occ.pattern.to_string() + " in " + w.to_string());
  }
  return !detail::tighter_occurrence(w, occ).has_value();
}

/// Shrinks `occ` until it is minimal. Terminates because every step strictly
/// decreases the sum of the position span and the value span.
inline PatternOccurrence minimal_occurrence(const Permutation& w, PatternOccurrence occ) {
  if (!detail::occurrence_matches(w, occ)) {
    throw ValidationError("not an occurrence of " + occ.pattern.to_string() + " in " + w.to_string());
  }
  while (auto next = detail::tighter_occurrence(w, occ)) occ = std::move(*next);
  return occ;
}

// --- inversions and blocks -----------------------------------------------

/// Inversions (i, j) with no k in between such that w(i) > w(k) > w(j).
/// These are exactly the (i, j) with w * t_{ij} covered by w.
inline std::vector<std::pair<int, int>> minimal_inversions(const Permutation& w) {
  std::vector<std::pair<int, int>> out;
  const int n = w.degree();
  for (int i = 1; i <= n; ++i) {
    // Scanning right from i, (i, j) is minimal iff w(j) < w(i) and w(j)
    // exceeds every value below w(i) seen so far.
    int floor = 0;
    for (int j = i + 1; j <= n; ++j) {
      const int v = w(j);
      if (v < w(i) && v > floor) {
        out.emplace_back(i, j);
        floor = v;
      }
    }
  }
  return out;
}

struct BlockDecomposition {
  /// Consecutive position intervals [first, last], 1-based, in order.
  std::vector<std::pair<int, int>> blocks;
  /// w restricted to each block, renormalized to S_{last-first+1}.
  std::vector<Permutation> factors;
};

/// Finest splitting of w as a direct sum over consecutive intervals.
inline BlockDecomposition block_decompose(const Permutation& w) {
  BlockDecomposition out;
  int start = 1;
  int running_max = 0;
  for (int i = 1; i <= w.degree(); ++i) {
    running_max = std::max(running_max, w(i));
    if (running_max == i) {
      std::vector<int> vals;
      for (int a = start; a <= i; ++a) vals.push_back(w(a) - start + 1);
      out.blocks.emplace_back(start, i);
      out.factors.emplace_back(std::move(vals));
      start = i + 1;
    }
  }
  return out;
}

inline int block_count(const Permutation& w) { return static_cast<int>(block_decompose(w).blocks.size()); }

}  // namespace bruhat

template <>
struct std::hash<bruhat::Permutation> {
  std::size_t operator()(const bruhat::Permutation& w) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (int v : w.one_line()) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};
