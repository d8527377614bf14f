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

#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bruhat/errors.hpp"
#include "bruhat/permutation.hpp"

namespace bruhat {

/// Element of the hyperoctahedral group B_n: a bijection w of {±1..±n}
/// with w(-i) = -w(i), stored as the window w(1), ..., w(n).
class SignedPermutation {
 public:
  SignedPermutation() = default;

  explicit SignedPermutation(std::vector<int> window) : images_(std::move(window)) {
    const int n = degree();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
      const int a = std::abs(v);
      if (a < 1 || a > n) {
        throw ValidationError("signed value " + std::to_string(v) + " outside ±1..±" + std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(a)]) {
        throw ValidationError("absolute value " + std::to_string(a) + " repeated");
      }
      seen[static_cast<std::size_t>(a)] = true;
    }
  }

  explicit SignedPermutation(const Permutation& w) : images_(w.one_line()) {}

  static SignedPermutation identity(int n) { return SignedPermutation(Permutation::identity(n)); }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& window() const { return images_; }

  bool is_positive() const {
    for (int v : images_) {
      if (v < 0) return false;
    }
    return true;
  }

  /// The underlying permutation; throws if any sign is negative.
  Permutation to_permutation() const {
    if (!is_positive()) throw ValidationError("signed permutation " + to_string() + " has negative entries");
    return Permutation(images_);
  }

  /// "-2,-1,-3"
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(images_[i]);
    }
    return out;
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> images_;
};

/// (u*v)(i) = u(v(i)) extended oddly to negative arguments.
inline SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.degree() != v.degree()) {
    throw DegreeMismatch("cannot compose signed permutations of degree " + std::to_string(u.degree()) +
                         " and " + std::to_string(v.degree()));
  }
  std::vector<int> out(static_cast<std::size_t>(v.degree()));
  for (int i = 1; i <= v.degree(); ++i) {
    const int x = v(i);
    out[static_cast<std::size_t>(i - 1)] = x > 0 ? u(x) : -u(-x);
  }
  return SignedPermutation(std::move(out));
}

inline SignedPermutation inverse(const SignedPermutation& w) {
  std::vector<int> out(static_cast<std::size_t>(w.degree()));
  for (int i = 1; i <= w.degree(); ++i) {
    const int x = w(i);
    out[static_cast<std::size_t>(std::abs(x) - 1)] = x > 0 ? i : -i;
  }
  return SignedPermutation(std::move(out));
}

/// Comma- or whitespace-separated signed integers, e.g. "-2,-1,-3".
inline SignedPermutation parse_signed_permutation(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw ParseError("empty signed permutation text");
  std::vector<int> values;
  for (std::string_view tok : detail::split_tokens(text)) {
    values.push_back(detail::parse_int_token(tok, "signed permutation"));
  }
  try {
    return SignedPermutation(std::move(values));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("signed permutation: ") + e.what());
  }
}

}  // namespace bruhat

template <>
struct std::hash<bruhat::SignedPermutation> {
  std::size_t operator()(const bruhat::SignedPermutation& w) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (int v : w.window()) {
      h ^= static_cast<std::uint64_t>(static_cast<std::int64_t>(v) + 64);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};
