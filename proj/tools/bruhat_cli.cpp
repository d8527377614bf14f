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

// Command-line front end. Reports go to stdout as JSON (or to --output),
// a short summary to stderr. Exit status: 0 no violations, 1 violations or
// a failed request, 2 usage and parse errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "bruhat/bruhat.hpp"

namespace {

int emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(output);
  if (!f) {
    std::cerr << "error: cannot write " << output << "\n";
    return 1;
  }
  f << text;
  return 0;
}

int emit_report(const bruhat::VerificationReport& r, const std::string& format, const std::string& output,
                bool details_in_text = false) {
  std::cerr << r.summary();
  std::string body = r.to_json().dump(2) + "\n";
  if (format == "text") {
    body = r.summary();
    if (details_in_text) {
      for (const auto& [key, value] : r.details.items()) body += "  " + key + ": " + value.dump() + "\n";
    }
  }
  if (emit(body, output) != 0) return 1;
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat intervals, polished elements and self-duality checks"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  int jobs = 0;
  app.add_option("--format", format, "json or text for reports; json or dot for export")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--output", output, "write to this file instead of stdout");
  app.add_option("--jobs", jobs, "worker threads (default: BRUHAT_JOBS or 1)")->check(CLI::NonNegativeNumber);

  std::string perm;
  auto* analyze = app.add_subcommand("analyze", "all predicates for one permutation");
  analyze->add_option("permutation", perm, "one-line notation, e.g. 34521 or 10,9,...,1")->required();

  int n_max = 6;
  std::string self_dual_mode = "full";
  bool force_full = false;
  auto* main_cmd = app.add_subcommand("verify-main", "agreement of the four self-duality predicates over S_1..S_n");
  main_cmd->add_option("--n-max", n_max, "largest degree (2..8)");
  main_cmd->add_option("--sd4-mode", self_dual_mode, "full or constructive-only")
      ->check(CLI::IsMember({"full", "constructive-only"}));
  main_cmd->add_flag("--force-full", force_full, "run the full self-duality search above n = 6");

  int top_n_max = 6;
  auto* top_cmd = app.add_subcommand("verify-topheavy", "cover-degree and rank top-heaviness over S_2..S_n");
  top_cmd->add_option("--n-max", top_n_max, "largest degree (2..7)");

  auto* counter_cmd = app.add_subcommand("counterexamples", "the type B checks");

  std::string what;
  auto* export_cmd = app.add_subcommand("export", "graphs, intervals and decompositions as JSON or DOT");
  export_cmd->add_option("permutation", perm, "one-line notation")->required();
  export_cmd->add_option("what", what, "gamma-lower, gamma-upper, interval or decomposition")
      ->required()
      ->check(CLI::IsMember({"gamma-lower", "gamma-upper", "interval", "decomposition"}));

  for (auto* sub : {analyze, main_cmd, top_cmd, counter_cmd, export_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      return emit_report(bruhat::cmd_analyze(perm), format, output, true);
    }
    if (*main_cmd) {
      bruhat::VerifyMainOptions opt;
      opt.n_max = n_max;
      opt.self_dual_mode = bruhat::parse_self_dual_mode(self_dual_mode);
      opt.force_full = force_full;
      opt.jobs = jobs;
      return emit_report(bruhat::cmd_verify_main(opt), format, output);
    }
    if (*top_cmd) {
      return emit_report(bruhat::cmd_verify_topheavy(top_n_max, jobs), format, output);
    }
    if (*counter_cmd) {
      return emit_report(bruhat::cmd_counterexamples(), format, output);
    }
    if (*export_cmd) {
      const auto fmt = bruhat::parse_export_format(format == "text" ? "json" : format);
      return emit(bruhat::cmd_export(perm, bruhat::parse_export_what(what), fmt), output);
    }
  } catch (const bruhat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const bruhat::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
