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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "bruhat/bruhat.hpp"
#include "oracles.hpp"

namespace {

using namespace bruhat;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int jobs() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

std::vector<std::size_t> sorted_degrees(const LevelGraph<Permutation>& L) {
  auto d = L.small_degrees();
  std::sort(d.begin(), d.end());
  return d;
}

Outcome level_graphs_34521() {
  const auto t0 = Clock::now();
  const auto lo = level_graph_from_json(SymmetricGroup(5), parse_json(cmd_export("34521", ExportWhat::gamma_lower, ExportFormat::json)));
  const auto hi = level_graph_from_json(SymmetricGroup(5), parse_json(cmd_export("34521", ExportWhat::gamma_upper, ExportFormat::json)));
  const bool iso = bipartite_isomorphic(lo, hi).has_value();
  const double t = since(t0);
  const bool pass = sorted_degrees(lo) == std::vector<std::size_t>{4, 4, 5, 5} &&
                    sorted_degrees(hi) == std::vector<std::size_t>{4, 4, 4, 6} && lo.edges.size() == 18 &&
                    hi.edges.size() == 18 && !iso && t < 1.0;
  std::ostringstream os;
  os << "lower degrees 4,4,5,5 / upper 4,4,4,6, " << lo.edges.size() << "+" << hi.edges.size()
     << " edges, isomorphic=" << (iso ? "yes" : "no") << ", " << t << " s";
  return {pass, os.str()};
}

Outcome main_theorem() {
  auto t0 = Clock::now();
  VerifyMainOptions full;
  full.n_max = 6;
  full.jobs = jobs();
  const auto a = cmd_verify_main(full);
  const double ta = since(t0);

  t0 = Clock::now();
  VerifyMainOptions seven = full;
  seven.n_max = 7;
  seven.self_dual_mode = SelfDualMode::constructive_only;
  const auto b = cmd_verify_main(seven);
  const double tb = since(t0);

  const bool pass = a.ok() && a.checked == 873 && ta < 300 && b.ok() && b.tallies.at(7).at("elements") == 5040 && tb < 1200;
  std::ostringstream os;
  os << "full n<=6: " << a.checked << " checked, " << a.violations.size() << " violations, " << ta
     << " s; constructive-only n<=7: " << b.checked << " checked, " << b.violations.size() << " violations, " << tb << " s";
  return {pass, os.str()};
}

Outcome cover_degrees() {
  const auto t0 = Clock::now();
  const auto r = cmd_verify_topheavy(6, jobs());
  const double t = since(t0);
  const auto d = degree_extremes(build_interval(parse_permutation("34521")));
  const bool spot = d == DegreeExtremes{5, 6};
  std::uint64_t checked = 0;
  for (const auto& v : r.violations) checked += v.theorem == "thm-1.3" ? 1 : 0;
  const bool pass = checked == 0 && r.ok() && spot && t < 300;
  std::ostringstream os;
  os << r.violations.size() << " violations over S_2..S_6, 34521 extremes (" << d.max_atom_up_degree << ","
     << d.max_coatom_down_degree << "), " << t << " s";
  return {pass, os.str()};
}

Outcome rank_top_heavy() {
  std::uint64_t checked = 0;
  std::uint64_t bad = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      const auto p = rank_profile(build_interval(w));
      const std::size_t len = p.size() - 1;
      for (std::size_t k = 0; 2 * k <= len; ++k) bad += p[k] > p[len - k] ? 1 : 0;
      ++checked;
    }
  }
  return {bad == 0, std::to_string(checked) + " intervals, " + std::to_string(bad) + " violations"};
}

Outcome counterexamples() {
  const auto t0 = Clock::now();
  const auto r = cmd_counterexamples();
  const double t = since(t0);
  std::ostringstream os;
  os << r.checked << " checks, " << r.violations.size() << " failed, " << t << " s";
  return {r.ok() && r.checked == 3 && t < 10, os.str()};
}

Outcome polished_round_trip() {
  const SymmetricGroup g(7);
  std::uint64_t count = 0;
  std::uint64_t failures = 0;
  for (const auto& w : oracle::all_permutations(7)) {
    if (!avoids_selfdual_patterns(w)) continue;
    ++count;
    const auto d = polished_decompose(w);
    if (reconstruct(g, d) != w) {
      ++failures;
      continue;
    }
    const auto I = build_interval(w);
    const DualityMap<SymmetricGroup> f(g, w, d);
    std::vector<int> ids;
    for (const auto& u : I.elements()) {
      const auto id = I.id_of(f.apply_unchecked(u));
      ids.push_back(id ? *id : -1);
    }
    failures += is_antiautomorphism(I, ids) ? 0 : 1;
  }
  const auto fig = polished_decompose(parse_permutation("154973268"));
  const bool example = fig.blocks.size() == 2 && (fig.blocks[1].J & fig.blocks[1].Jp) == NodeSet{4, 6};
  std::ostringstream os;
  os << count << " six-avoiding elements of S_7, " << failures << " failures, 154973268 overlap "
     << (fig.blocks.size() == 2 ? (fig.blocks[1].J & fig.blocks[1].Jp).to_string() : std::string("?"));
  return {failures == 0 && count > 0 && example, os.str()};
}

template <class G>
std::uint64_t leq_disagreements(const G& g, const std::vector<typename G::element_type>& all, std::uint64_t& pairs) {
  std::uint64_t bad = 0;
  for (const auto& w : all) {
    const auto down = oracle::subword_down_set(g, w);
    for (const auto& u : all) {
      ++pairs;
      bad += g.leq(u, w) != down.contains(u) ? 1 : 0;
    }
  }
  return bad;
}

Outcome oracle_equivalence() {
  std::uint64_t pa = 0;
  std::uint64_t pb = 0;
  const auto bad_a = leq_disagreements(SymmetricGroup(5), oracle::all_permutations(5), pa);
  const HyperoctahedralGroup b3(3);
  const auto bad_b = leq_disagreements(b3, b3.elements(), pb);
  std::ostringstream os;
  os << "S_5 " << pa << " pairs / " << bad_a << " disagreements, B_3 " << pb << " pairs / " << bad_b << " disagreements";
  return {bad_a == 0 && bad_b == 0 && pa == 14400 && pb == 2304, os.str()};
}

Outcome census() {
  // Frozen from an independent brute-force enumeration.
  const std::map<int, std::pair<std::uint64_t, std::uint64_t>> frozen{
      {4, {22, 22}}, {5, {88, 84}}, {6, {366, 322}}, {7, {1552, 1234}}};
  bool pass = true;
  std::ostringstream os;
  for (const auto& [n, expected] : frozen) {
    std::uint64_t smooth = 0;
    std::uint64_t polished = 0;
    for (const auto& w : oracle::all_permutations(n)) {
      smooth += !oracle::contains(w, parse_permutation("3412")) && !oracle::contains(w, parse_permutation("4231")) ? 1 : 0;
      polished += is_polished_bruteforce(w) ? 1 : 0;
    }
    pass = pass && smooth == expected.first && polished == expected.second;
    if (n == 4) pass = pass && polished == smooth;
    if (n == 5) pass = pass && polished + 4 == smooth;
    os << "n=" << n << " smooth " << smooth << " polished " << polished << (n < 7 ? "; " : "");
  }
  return {pass, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"level graphs of 34521", level_graphs_34521},
      {"self-duality equivalence", main_theorem},
      {"cover-degree top-heaviness", cover_degrees},
      {"rank top-heaviness", rank_top_heavy},
      {"type B counterexamples", counterexamples},
      {"polished round trip in S_7", polished_round_trip},
      {"Bruhat order oracle", oracle_equivalence},
      {"smooth and polished census", census},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << "criterion " << (i + 1) << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " -- "
              << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
