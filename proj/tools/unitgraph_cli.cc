// Copyright 2026 The unitgraph Authors
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

// Command-line front end. Exit status: 0 success, 1 a checked claim failed
// (sweep mismatch, CRT check failure), 2 usage error, 3 runtime error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "unitgraph/gf_linalg.h"
#include "unitgraph/incidence_codes.h"
#include "unitgraph/unit_graph.h"
#include "unitgraph/verify.h"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

void close_output(std::ofstream& out, const std::string& path) {
  out.close();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unit graphs of Z_n, their incidence codes, and claim verification"};
  app.require_subcommand(1);
  app.fallthrough();

  unitgraph::HarnessOptions options;
  app.add_option("--threads", options.threads, "Worker threads (0 = all cores)");
  app.add_option("--vertex-budget", options.vertex_budget, "Largest graph to build")
      ->check(CLI::PositiveNumber);

  std::uint64_t n = 0;
  unsigned q = 3;
  std::string format = "json";
  auto* report = app.add_subcommand("report", "Verify every claim for one n");
  report->add_option("--n", n, "Ring size")->required()->check(CLI::PositiveNumber);
  report->add_option("--q", q, "Odd prime field for even n");
  report->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::uint64_t from = 0, to = 0;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "Write one CSV row per n in a range");
  sweep->add_option("--from", from, "First n")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--to", to, "Last n")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--q", q, "Odd prime field for even n");
  sweep->add_option("--out", out_path, "CSV output file")->required();

  auto* crt = app.add_subcommand("check-crt", "Check Z_n against its prime-power direct sum");
  crt->add_option("--n", n, "Ring size")->required()->check(CLI::Range(2ull, ~0ull));

  auto* matrix = app.add_subcommand("export-matrix", "Write the incidence matrix over F_q");
  matrix->add_option("--n", n, "Ring size")->required()->check(CLI::PositiveNumber);
  matrix->add_option("--q", q, "Prime field")->required();
  matrix->add_option("--out", out_path, "Output file")->required();

  auto* graph = app.add_subcommand("export-graph", "Write the unit graph edge list");
  graph->add_option("--n", n, "Ring size")->required()->check(CLI::PositiveNumber);
  graph->add_option("--out", out_path, "Output file")->required();

  unsigned errors = 1;
  std::uint64_t trials = 1000, seed = 1;
  auto* demo = app.add_subcommand(
      "decode-demo", "Single-error syndrome decoding on the dual incidence code");
  demo->add_option("--n", n, "Ring size")->required()->check(CLI::Range(2ull, ~0ull));
  demo->add_option("--q", q, "Prime field")->required();
  demo->add_option("--errors", errors, "Errors added per word");
  demo->add_option("--trials", trials, "Number of words sent");
  demo->add_option("--seed", seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    options.distance_budget = unitgraph::distance_budget_from_env();

    if (*report) {
      const unitgraph::VerificationReport r = unitgraph::build_report(n, q, options);
      if (format == "json") {
        std::cout << unitgraph::to_json(r).dump(2) << '\n';
      } else {
        std::cout << unitgraph::format_text(r);
      }
      return 0;
    }
    if (*sweep) {
      if (from > to) {
        std::cerr << "--from must not exceed --to\n";
        return kExitUsage;
      }
      std::ofstream out = open_output(out_path);
      const unitgraph::SweepSummary s = unitgraph::sweep(from, to, q, out, options);
      close_output(out, out_path);
      std::cout << "rows " << s.rows << ", rows with mismatches " << s.mismatches << '\n';
      for (const auto& [key, count] : s.mismatch_counts) {
        std::cout << "  " << key << ": " << count << '\n';
      }
      return s.mismatches == 0 ? 0 : kExitMismatch;
    }
    if (*crt) {
      const bool ok = unitgraph::crt_isomorphism_check(n, options.vertex_budget);
      std::cout << "crt isomorphism for n = " << n << ": " << (ok ? "ok" : "FAILED") << '\n';
      return ok ? 0 : kExitMismatch;
    }
    if (*matrix) {
      const unitgraph::UnitGraph g =
          unitgraph::build_unit_graph(unitgraph::RingSpec({n}), options.vertex_budget);
      std::ofstream out = open_output(out_path);
      unitgraph::write_matrix(out, unitgraph::incidence_matrix(g, q));
      close_output(out, out_path);
      return 0;
    }
    if (*graph) {
      const unitgraph::UnitGraph g =
          unitgraph::build_unit_graph(unitgraph::RingSpec({n}), options.vertex_budget);
      std::ofstream out = open_output(out_path);
      unitgraph::write_edge_list(out, g);
      close_output(out, out_path);
      return 0;
    }
    if (*demo) {
      const unitgraph::DecodeDemoResult r =
          unitgraph::run_decode_demo(n, q, errors, trials, seed, options);
      std::cout << "code [" << r.code.length << ", " << r.code.dimension << ", "
                << r.code.distance.to_string() << "]_" << q << " (dual incidence code of G(Z_"
                << n << "))\n"
                << "trials " << r.trials << ", errors per word " << errors << ", seed " << seed
                << '\n'
                << "recovered " << r.recovered << '\n'
                << "clean " << r.clean << '\n'
                << "corrected " << r.corrected << '\n'
                << "uncorrectable " << r.uncorrectable << '\n'
                << "false_clean " << r.false_clean << '\n';
      return 0;
    }
  } catch (const unitgraph::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
