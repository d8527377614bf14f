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
/// Exhaustive verification sweeps over S_n, the type-B counterexample
/// checks, single-element analysis and export. Every command produces a
/// JSON document; sweeps are deterministic for any number of jobs.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bruhat/bruhat_poset.hpp"
#include "bruhat/coxeter.hpp"
#include "bruhat/duality.hpp"
#include "bruhat/io.hpp"
#include "bruhat/polished.hpp"

namespace bruhat {

struct Violation {
  std::string theorem;
  int n = 0;
  std::string element;
  std::string message;

  json to_json() const { return {{"theorem", theorem}, {"n", n}, {"element", element}, {"message", message}}; }
};

using Tally = std::map<std::string, std::uint64_t>;

struct VerificationReport {
  std::string theorem;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  std::map<int, Tally> tallies;  // per degree
  json details = json::object();
  double wall_time = 0.0;

  bool ok() const { return violations.empty(); }

  json to_json() const {
    json t = json::object();
    for (const auto& [n, tally] : tallies) t[std::to_string(n)] = tally;
    json v = json::array();
    for (const auto& x : violations) v.push_back(x.to_json());
    return {{"theorem", theorem}, {"n_range", {n_min, n_max}}, {"checked", checked}, {"violations", std::move(v)},
            {"tallies", std::move(t)}, {"details", details}, {"wall_time", wall_time}};
  }

  std::string summary() const {
    std::ostringstream os;
    os << theorem << ": checked " << checked << " (n = " << n_min << ".." << n_max << "), " << violations.size()
       << " violation(s), " << wall_time << " s\n";
    for (const auto& [n, tally] : tallies) {
      os << "  n=" << n << ":";
      for (const auto& [k, v] : tally) os << ' ' << k << '=' << v;
      os << '\n';
    }
    for (std::size_t i = 0; i < violations.size() && i < 20; ++i) {
      os << "  VIOLATION [" << violations[i].theorem << "] " << violations[i].element << ": " << violations[i].message
         << '\n';
    }
    return os.str();
  }
};

/// Number of worker threads: the explicit value if positive, else
/// BRUHAT_JOBS, else 1.
inline int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BRUHAT_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

/// Per-chunk accumulator for a sweep.
struct SweepPart {
  std::uint64_t checked = 0;
  Tally tally;
  std::vector<Violation> violations;
  json notes = json::array();
};

/// Calls `visit(w, part)` for every w in S_n. Work is split by the value
/// w(1); chunks are merged in that order, so the result does not depend on
/// the number of threads.
inline SweepPart sweep(int n, int jobs, const std::function<void(const Permutation&, SweepPart&)>& visit) {
  const int chunks = std::max(n, 1);
  std::vector<SweepPart> parts(static_cast<std::size_t>(chunks));
  auto run_chunk = [&](int c) {
    auto& part = parts[static_cast<std::size_t>(c)];
    if (n == 0) {
      visit(Permutation(), part);
      return;
    }
    std::vector<int> rest;
    for (int x = 1; x <= n; ++x) {
      if (x != c + 1) rest.push_back(x);
    }
    do {
      std::vector<int> v{c + 1};
      v.insert(v.end(), rest.begin(), rest.end());
      visit(Permutation(std::move(v)), part);
    } while (std::next_permutation(rest.begin(), rest.end()));
  };
  const int workers = std::min(resolve_jobs(jobs), chunks);
  if (workers <= 1) {
    for (int c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (int c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }
  SweepPart out;
  for (auto& p : parts) {
    out.checked += p.checked;
    for (const auto& [k, v] : p.tally) out.tally[k] += v;
    for (auto& v : p.violations) out.violations.push_back(std::move(v));
    for (auto& x : p.notes) out.notes.push_back(std::move(x));
  }
  return out;
}

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace detail

// --- self-duality equivalence -------------------------------------------

enum class SelfDualMode { full, constructive_only };

inline SelfDualMode parse_self_dual_mode(std::string_view s) {
  if (s == "full") return SelfDualMode::full;
  if (s == "constructive-only") return SelfDualMode::constructive_only;
  throw ParseError("unknown --sd4-mode value '" + std::string(s) + "'");
}

struct VerifyMainOptions {
  int n_max = 6;
  SelfDualMode self_dual_mode = SelfDualMode::full;
  bool force_full = false;
  int jobs = 0;
  /// Brute-force polished test as the polished predicate up to this degree;
  /// above it the constructive decomposition alone decides.
  int bruteforce_max = 7;
};

/// The four conditions for one permutation, as computed by independent
/// routines. `self_dual` is absent when the mode skips it.
struct MainPredicates {
  bool gamma_iso = false;
  bool six_avoiding = false;
  bool polished = false;
  std::optional<bool> self_dual;
};

/// Level-graph isomorphism, pattern avoidance, polishedness (brute force
/// and constructive, which must agree) and self-duality. `full` runs the
/// hint-free search; otherwise only the duality map of a polished w is
/// checked.
inline MainPredicates main_predicates(const Permutation& w, bool full, bool bruteforce, SweepPart& part) {
  const std::string ws = w.to_string();
  auto flag = [&](const std::string& msg) { part.violations.push_back({"thm-main", w.degree(), ws, msg}); };
  const auto I = build_interval(w);
  MainPredicates p;
  p.gamma_iso = I.length() < 2 || bipartite_isomorphic(gamma_lower(I), gamma_upper(I)).has_value();
  p.six_avoiding = avoids_selfdual_patterns(w);

  std::optional<PolishedDecomposition> decomp;
  if (p.six_avoiding) {
    try {
      decomp = polished_decompose(w);
    } catch (const std::exception& e) {
      flag(std::string("constructive decomposition failed: ") + e.what());
    }
  }
  p.polished = decomp.has_value();
  if (bruteforce) {
    const bool bf = is_polished_bruteforce(w);
    if (bf != p.polished) flag("brute-force polished test gives " + detail::yes_no(bf) + ", decomposition gives " + detail::yes_no(p.polished));
    p.polished = bf;
  }

  if (full) {
    const auto cert = certify_self_dual(I);
    p.self_dual = cert.self_dual();
  }
  if (decomp) {
    const auto cert = certify_self_dual(I, decomp);
    if (cert.kind != CertificateKind::constructive_map) flag("duality map of the decomposition is not an antiautomorphism");
    if (!full) p.self_dual = cert.kind == CertificateKind::constructive_map;
  }
  return p;
}

inline VerificationReport cmd_verify_main(const VerifyMainOptions& opt) {
  if (opt.n_max < 2 || opt.n_max > 8) throw CapacityError("verify-main supports 2 <= n_max <= 8");
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.theorem = "thm-main";
  r.n_min = 1;
  r.n_max = opt.n_max;
  json modes = json::object();
  for (int n = 1; n <= opt.n_max; ++n) {
    const bool full = opt.self_dual_mode == SelfDualMode::full && (n <= 6 || opt.force_full);
    const bool bruteforce = n <= opt.bruteforce_max;
    modes[std::to_string(n)] = full ? "full" : "constructive-only";
    auto part = sweep(n, opt.jobs, [&](const Permutation& w, SweepPart& acc) {
      const auto p = main_predicates(w, full, bruteforce, acc);
      ++acc.checked;
      ++acc.tally["elements"];
      acc.tally["smooth"] += avoids_smooth_patterns(w) ? 1 : 0;
      acc.tally["gamma_iso"] += p.gamma_iso ? 1 : 0;
      acc.tally["six_avoiding"] += p.six_avoiding ? 1 : 0;
      acc.tally["polished"] += p.polished ? 1 : 0;
      if (p.self_dual) {
        acc.tally["self_dual"] += *p.self_dual ? 1 : 0;
      } else {
        ++acc.tally["self_dual_skipped"];
      }
      const bool agree = p.gamma_iso == p.six_avoiding && p.six_avoiding == p.polished && (!p.self_dual || *p.self_dual == p.polished);
      if (!agree) {
        acc.violations.push_back({"thm-main", n, w.to_string(),
                                  "gamma_iso=" + detail::yes_no(p.gamma_iso) + " six_avoiding=" + detail::yes_no(p.six_avoiding) +
                                      " polished=" + detail::yes_no(p.polished) +
                                      " self_dual=" + (p.self_dual ? detail::yes_no(*p.self_dual) : std::string("skipped"))});
      }
    });
    r.checked += part.checked;
    r.tallies[n] = std::move(part.tally);
    for (auto& v : part.violations) r.violations.push_back(std::move(v));
  }
  r.details["self_dual_mode"] = std::move(modes);
  r.details["polished_bruteforce_max"] = opt.bruteforce_max;
  r.wall_time = detail::seconds_since(t0);
  return r;
}

// --- top-heaviness -------------------------------------------------------

/// Cover degrees on smooth w (atom up-degree against coatom down-degree,
/// equality exactly on six-pattern-avoiding w); alongside, rank
/// top-heaviness for every w (n <= 6) and rank symmetry against the smooth
/// patterns.
inline VerificationReport cmd_verify_topheavy(int n_max, int jobs = 0) {
  if (n_max < 2 || n_max > 7) throw CapacityError("verify-topheavy supports 2 <= n_max <= 7");
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.theorem = "thm-1.3";
  r.n_min = 2;
  r.n_max = n_max;
  json strict = json::array();
  for (int n = 2; n <= n_max; ++n) {
    const bool ranks = n <= 6;
    auto part = sweep(n, jobs, [&](const Permutation& w, SweepPart& acc) {
      const std::string ws = w.to_string();
      const bool smooth = avoids_smooth_patterns(w);
      const auto I = build_interval(w);
      const auto profile = rank_profile(I);
      const int len = I.length();
      ++acc.checked;

      bool symmetric = true;
      for (int k = 0; k <= len; ++k) {
        const auto lo = profile[static_cast<std::size_t>(k)];
        const auto hi = profile[static_cast<std::size_t>(len - k)];
        symmetric = symmetric && lo == hi;
        if (ranks && 2 * k <= len && lo > hi) {
          acc.violations.push_back({"thm-1.1", n, ws, "|P_" + std::to_string(k) + "| > |P_" + std::to_string(len - k) + "|"});
        }
      }
      if (ranks) ++acc.tally["thm-1.1_checked"];
      acc.tally["rank_symmetric"] += symmetric ? 1 : 0;
      if (symmetric != smooth) {
        acc.violations.push_back({"thm-1.2", n, ws, "rank symmetry " + detail::yes_no(symmetric) + " but smooth " + detail::yes_no(smooth)});
      }

      if (!smooth || len < 2) return;
      const auto d = degree_extremes(I);
      const bool six = avoids_selfdual_patterns(w);
      ++acc.tally["smooth_checked"];
      if (d.max_atom_up_degree > d.max_coatom_down_degree) {
        acc.violations.push_back({"thm-1.3", n, ws, "atom degree exceeds coatom degree"});
      } else if (d.max_atom_up_degree == d.max_coatom_down_degree) {
        ++acc.tally["equal"];
        if (!six) acc.violations.push_back({"thm-1.3", n, ws, "equality but contains a forbidden pattern"});
      } else {
        ++acc.tally["strict"];
        acc.notes.push_back({{"element", ws}, {"atom", d.max_atom_up_degree}, {"coatom", d.max_coatom_down_degree}});
        if (six) acc.violations.push_back({"thm-1.3", n, ws, "strict inequality on a six-pattern-avoiding element"});
      }
    });
    r.checked += part.checked;
    r.tallies[n] = std::move(part.tally);
    for (auto& v : part.violations) r.violations.push_back(std::move(v));
    for (auto& x : part.notes) strict.push_back(std::move(x));
  }
  r.details["strict_cases"] = std::move(strict);
  r.wall_time = detail::seconds_since(t0);
  return r;
}

// --- type-B counterexamples -----------------------------------------------

inline VerificationReport cmd_counterexamples() {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.theorem = "counterexamples-B";
  r.n_min = 2;
  r.n_max = 3;
  json checks = json::array();
  auto record = [&](int n, const std::string& element, const std::string& name, bool pass, json info) {
    ++r.checked;
    ++r.tallies[n][pass ? "passed" : "failed"];
    info["check"] = name;
    info["element"] = element;
    info["pass"] = pass;
    checks.push_back(std::move(info));
    if (!pass) r.violations.push_back({"counterexamples-B", n, element, name + " failed"});
  };

  {
    const auto p = CoxeterPresentation::type_b(3);
    const auto word = parse_word("3 2 3 1 2 3 1 2");
    const auto value = evaluate_word(word, p);
    const HyperoctahedralGroup g(3);
    const auto I = build_interval(g, value.element);
    const bool iso = bipartite_isomorphic(gamma_lower(I), gamma_upper(I)).has_value();
    const auto cert = certify_self_dual(g, I);
    record(3, value.element.to_string(), "B3 level graphs isomorphic but interval not self-dual",
           value.length == 8 && value.reduced && iso && !cert.self_dual(),
           {{"word", word}, {"length", value.length}, {"reduced", value.reduced}, {"interval_size", I.size()},
            {"gamma_isomorphic", iso}, {"certificate", to_string(cert.kind)},
            {"refinement_trace", cert.refinement_trace.value_or("")}});
  }
  for (const char* text : {"1 2 1", "2 1 2"}) {
    const auto p = CoxeterPresentation::type_b(2);
    const auto word = parse_word(text);
    const auto value = evaluate_word(word, p);
    const HyperoctahedralGroup g(2);
    const auto I = build_interval(g, value.element);
    const auto cert = certify_self_dual(g, I);
    const bool polished = is_polished_bruteforce(g, value.element);
    record(2, value.element.to_string(), std::string("B2 word ") + text + " self-dual but not polished",
           value.length == 3 && cert.self_dual() && !polished,
           {{"word", word}, {"length", value.length}, {"certificate", to_string(cert.kind)}, {"polished", polished}});
  }
  r.details["checks"] = std::move(checks);
  r.wall_time = detail::seconds_since(t0);
  return r;
}

// --- single elements ------------------------------------------------------

/// Every predicate for one permutation. The report's violations list any
/// disagreement among the four self-duality predicates.
inline VerificationReport cmd_analyze(const std::string& perm_text) {
  const auto t0 = std::chrono::steady_clock::now();
  const Permutation w = parse_permutation(perm_text);
  const auto I = build_interval(w);
  VerificationReport r;
  r.theorem = "analyze";
  r.n_min = r.n_max = w.degree();
  r.checked = 1;

  json a;
  a["permutation"] = w.to_string();
  a["degree"] = w.degree();
  a["length"] = I.length();
  a["rank_profile"] = rank_profile(I);
  a["interval_size"] = I.size();
  a["smooth"] = avoids_smooth_patterns(w);
  const bool six = avoids_selfdual_patterns(w);
  a["six_avoiding"] = six;
  std::optional<PolishedDecomposition> decomp;
  if (six) {
    decomp = polished_decompose(w);
    a["polished"] = true;
    a["decomposition"] = to_json(*decomp);
  } else {
    const auto occ = minimal_occurrence(w, *selfdual_witness(w));
    a["polished"] = false;
    a["witness"] = {{"pattern", occ.pattern.to_string()}, {"indices", occ.indices}};
  }
  const bool iso = I.length() < 2 || bipartite_isomorphic(gamma_lower(I), gamma_upper(I)).has_value();
  a["gamma_isomorphic"] = iso;
  const auto cert = certify_self_dual(I, decomp);
  a["self_dual"] = cert.self_dual();
  a["certificate"] = to_string(cert.kind);
  if (cert.refinement_trace) a["refinement_trace"] = *cert.refinement_trace;
  if (I.length() >= 2) {
    const auto d = degree_extremes(I);
    a["degree_extremes"] = {d.max_atom_up_degree, d.max_coatom_down_degree};
  } else {
    a["degree_extremes"] = nullptr;
  }
  r.details = std::move(a);
  r.tallies[w.degree()] = {{"polished", six ? 1U : 0U}, {"self_dual", cert.self_dual() ? 1U : 0U}};
  if (!(iso == six && six == cert.self_dual())) {
    r.violations.push_back({"thm-main", w.degree(), w.to_string(), "SD predicates disagree"});
  }
  r.wall_time = detail::seconds_since(t0);
  return r;
}

enum class ExportWhat { gamma_lower, gamma_upper, interval, decomposition };
enum class ExportFormat { dot, json };

inline ExportWhat parse_export_what(std::string_view s) {
  if (s == "gamma-lower") return ExportWhat::gamma_lower;
  if (s == "gamma-upper") return ExportWhat::gamma_upper;
  if (s == "interval") return ExportWhat::interval;
  if (s == "decomposition") return ExportWhat::decomposition;
  throw ParseError("unknown export target '" + std::string(s) + "'");
}

inline ExportFormat parse_export_format(std::string_view s) {
  if (s == "dot") return ExportFormat::dot;
  if (s == "json") return ExportFormat::json;
  throw ParseError("unknown format '" + std::string(s) + "'");
}

/// File content for the requested object. Decompositions have no DOT form.
inline std::string cmd_export(const std::string& perm_text, ExportWhat what, ExportFormat format) {
  const Permutation w = parse_permutation(perm_text);
  const SymmetricGroup g(w.degree());
  switch (what) {
    case ExportWhat::decomposition: {
      if (format == ExportFormat::dot) throw ValidationError("decompositions export as JSON only");
      return to_json(polished_decompose(w)).dump(2) + "\n";
    }
    case ExportWhat::interval: {
      const auto I = build_interval(w);
      return format == ExportFormat::dot ? to_dot(g, I) : to_json(g, I).dump(2) + "\n";
    }
    case ExportWhat::gamma_lower:
    case ExportWhat::gamma_upper: {
      const auto I = build_interval(w);
      const bool lower = what == ExportWhat::gamma_lower;
      const auto L = lower ? gamma_lower(I) : gamma_upper(I);
      return format == ExportFormat::dot ? to_dot(g, L, lower ? "gamma_lower" : "gamma_upper")
                                         : to_json(g, L).dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace bruhat
