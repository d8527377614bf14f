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
/// JSON and DOT forms of intervals, level graphs and polished
/// decompositions. Vertices are written as their one-line text; edge
/// endpoints are positions in the vertex list.

#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bruhat/bruhat_poset.hpp"
#include "bruhat/duality.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/polished.hpp"

namespace bruhat {

using json = nlohmann::json;

namespace detail {

inline std::vector<int> nodes_json(NodeSet s) { return s.to_vector(); }

inline NodeSet nodes_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("node set must be a JSON array");
  NodeSet s;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("node index must be an integer");
    s.insert(x.get<int>());
  }
  return s;
}

inline const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

inline std::pair<int, int> edge_from_json(const json& e, std::size_t n) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
    throw ParseError("edge must be a pair of integers");
  }
  const int a = e[0].get<int>();
  const int b = e[1].get<int>();
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
    throw ParseError("edge endpoint out of range");
  }
  return {a, b};
}

inline std::string dot_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace detail

// --- intervals ------------------------------------------------------------

/// {"vertices": [...], "edges": [[lower, upper], ...]} in id order.
template <CoxeterGroup G>
json to_json(const G& g, const BruhatInterval<G>& I) {
  json v = json::array();
  for (const auto& x : I.elements()) v.push_back(g.format(x));
  json e = json::array();
  for (auto [lo, hi] : I.covers()) e.push_back({lo, hi});
  return {{"vertices", std::move(v)}, {"edges", std::move(e)}};
}

template <CoxeterGroup G>
BruhatInterval<G> interval_from_json(const G& g, const json& j) {
  std::vector<typename G::element_type> elements;
  std::vector<int> ranks;
  for (const auto& v : detail::field(j, "vertices")) {
    if (!v.is_string()) throw ParseError("vertex must be a string");
    elements.push_back(g.parse(v.get<std::string>()));
    ranks.push_back(g.length(elements.back()));
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& e : detail::field(j, "edges")) covers.push_back(detail::edge_from_json(e, elements.size()));
  try {
    return BruhatInterval<G>::from_parts(std::move(elements), std::move(ranks), covers);
  } catch (const ValidationError& err) {
    throw ParseError(std::string("inconsistent interval: ") + err.what());
  }
}

/// Hasse diagram, edges pointing up.
template <CoxeterGroup G>
std::string to_dot(const G& g, const BruhatInterval<G>& I) {
  std::string out = "digraph interval {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < I.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=" + detail::dot_quote(g.format(I.element(static_cast<int>(i)))) + "];\n";
  }
  for (auto [lo, hi] : I.covers()) out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  return out + "}\n";
}

// --- level graphs ---------------------------------------------------------

/// Small side first, then big side; edges join positions in that list.
template <CoxeterGroup G>
json to_json(const G& g, const LevelGraph<typename G::element_type>& L) {
  json v = json::array();
  for (const auto& x : L.small) v.push_back(g.format(x));
  for (const auto& x : L.big) v.push_back(g.format(x));
  json e = json::array();
  const int k = static_cast<int>(L.small.size());
  for (auto [a, b] : L.edges) e.push_back({a, k + b});
  return {{"vertices", std::move(v)}, {"small_count", k}, {"edges", std::move(e)}};
}

template <CoxeterGroup G>
LevelGraph<typename G::element_type> level_graph_from_json(const G& g, const json& j) {
  LevelGraph<typename G::element_type> L;
  const auto& kj = detail::field(j, "small_count");
  if (!kj.is_number_integer()) throw ParseError("small_count must be an integer");
  const int k = kj.get<int>();
  const auto& vs = detail::field(j, "vertices");
  if (!vs.is_array() || k < 0 || static_cast<std::size_t>(k) > vs.size()) throw ParseError("bad vertex list");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) throw ParseError("vertex must be a string");
    auto x = g.parse(vs[i].get<std::string>());
    (static_cast<int>(i) < k ? L.small : L.big).push_back(std::move(x));
  }
  for (const auto& e : detail::field(j, "edges")) {
    auto [a, b] = detail::edge_from_json(e, vs.size());
    if (a >= k || b < k) throw ParseError("edge must join the small side to the big side");
    L.edges.emplace_back(a, b - k);
  }
  std::sort(L.edges.begin(), L.edges.end());
  return L;
}

template <CoxeterGroup G>
std::string to_dot(const G& g, const LevelGraph<typename G::element_type>& L, const std::string& name) {
  std::string out = "graph " + name + " {\n";
  for (std::size_t i = 0; i < L.small.size(); ++i) {
    out += "  s" + std::to_string(i) + " [label=" + detail::dot_quote(g.format(L.small[i])) + "];\n";
  }
  for (std::size_t j = 0; j < L.big.size(); ++j) {
    out += "  b" + std::to_string(j) + " [label=" + detail::dot_quote(g.format(L.big[j])) + "];\n";
  }
  for (auto [a, b] : L.edges) out += "  s" + std::to_string(a) + " -- b" + std::to_string(b) + ";\n";
  return out + "}\n";
}

// --- decompositions -------------------------------------------------------

inline json to_json(const PolishedDecomposition& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) {
    blocks.push_back({{"S", detail::nodes_json(b.S)}, {"J", detail::nodes_json(b.J)}, {"Jp", detail::nodes_json(b.Jp)}});
  }
  return {{"blocks", std::move(blocks)}};
}

inline PolishedDecomposition decomposition_from_json(const json& j) {
  PolishedDecomposition d;
  const auto& blocks = detail::field(j, "blocks");
  if (!blocks.is_array()) throw ParseError("blocks must be an array");
  for (const auto& b : blocks) {
    d.blocks.push_back({detail::nodes_from_json(detail::field(b, "S")), detail::nodes_from_json(detail::field(b, "J")),
                        detail::nodes_from_json(detail::field(b, "Jp"))});
  }
  return d;
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace bruhat
