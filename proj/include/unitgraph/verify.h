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

// Per-n verification reports: closed-form predictions for G(Z_n) and its
// incidence codes, the measured values, and a verdict for every claim.
//
// Claims checked (verdict keys):
//   conj1               connected; diameter <= 2 for odd n, <= 3 for even n
//   conj2               code [(n-1)phi/2, n-1, phi-1]_2 for odd n,
//                       [n phi/2, n-1, phi]_q for even n
//   thm_edges           closed-form edge count of the direct-sum graph
//   thm_bipartite       bipartite when exactly one CRT modulus is even
//   thm_min_degree      phi(n) - 1 for odd n, 2^(m-1) phi(P) for n = 2^m P
//   thm_lambda          edge connectivity equals the same value
//   thm_code            code parameters from the prime-power form of n
//   thm_dual_dim        dual dimension from the same
//   thm_dual_d          dual distance 3 for odd n, 4 for even n
//   dual_d_equals_girth consistency of dual distance with girth

#ifndef UNITGRAPH_VERIFY_H_
#define UNITGRAPH_VERIFY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "unitgraph/incidence_codes.h"
#include "unitgraph/ring_core.h"
#include "unitgraph/unit_graph.h"

namespace unitgraph {

enum class Verdict { kMatch, kMismatch, kUnverified, kNotApplicable };

std::string to_string(Verdict v);
// Throws DomainError on an unknown token.
Verdict verdict_from_string(const std::string& s);

struct HarnessOptions {
  std::uint64_t vertex_budget = kDefaultVertexBudget;
  std::uint64_t distance_budget = kDefaultDistanceBudget;
  unsigned threads = 0;
};

// kDefaultDistanceBudget unless UNITGRAPH_BUDGET holds a positive integer.
// Throws DomainError on a malformed value.
std::uint64_t distance_budget_from_env();

struct CodeClaim {
  std::uint64_t length = 0;
  std::uint64_t dimension = 0;
  std::uint64_t distance = 0;

  friend bool operator==(const CodeClaim&, const CodeClaim&) = default;
};

struct CodeMeasurement {
  std::uint64_t length = 0;
  std::uint64_t dimension = 0;
  MinDistance distance;

  friend bool operator==(const CodeMeasurement&, const CodeMeasurement&) = default;
};

struct Predictions {
  std::optional<std::uint64_t> edge_count;
  std::optional<std::uint64_t> diameter_bound;
  std::optional<bool> bipartite;
  std::optional<std::uint64_t> min_degree;
  std::optional<std::uint64_t> edge_connectivity;
  std::optional<CodeClaim> conjecture_code;
  std::optional<CodeClaim> theorem_code;
  std::optional<CodeClaim> theorem_dual;

  friend bool operator==(const Predictions&, const Predictions&) = default;
};

struct VerificationReport {
  std::uint64_t n = 0;
  std::vector<PrimePower> factorization;
  unsigned q = 3;           // odd prime requested for even n
  unsigned code_field = 0;  // field of the measured codes; 0 when none
  std::uint64_t vertices = 0;
  GraphInvariants graph;
  Predictions predicted;
  std::optional<CodeMeasurement> code;
  std::optional<CodeMeasurement> dual;
  std::map<std::string, Verdict> verdicts;
  std::vector<std::string> notes;

  bool has_mismatch() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Closed-form predictions for G(Z_n). Throws DomainError for n = 0 or an
// even q.
Predictions predict(std::uint64_t n, unsigned q);

VerificationReport build_report(std::uint64_t n, unsigned q,
                                const HarnessOptions& options = {});

struct Conjecture1Check {
  bool connected = false;
  std::uint64_t bound = 0;
  Length diameter;
  Verdict verdict = Verdict::kMismatch;
};

// Throws ResourceError when n exceeds the vertex budget.
Conjecture1Check verify_conjecture1(std::uint64_t n, const HarnessOptions& options = {});

struct CodeCheck {
  unsigned field = 0;
  std::optional<CodeClaim> predicted;
  std::optional<CodeMeasurement> measured;
  Verdict verdict = Verdict::kNotApplicable;
};

CodeCheck verify_conjecture2(std::uint64_t n, unsigned q, const HarnessOptions& options = {});

struct CodeTheoremCheck {
  unsigned field = 0;
  std::optional<CodeClaim> predicted_code;
  std::optional<CodeClaim> predicted_dual;
  std::optional<CodeMeasurement> measured_code;
  std::optional<CodeMeasurement> measured_dual;
  Verdict code_verdict = Verdict::kNotApplicable;
  Verdict dual_dim_verdict = Verdict::kNotApplicable;
  Verdict dual_d_verdict = Verdict::kNotApplicable;
};

CodeTheoremCheck verify_code_theorems(std::uint64_t n, unsigned q,
                                      const HarnessOptions& options = {});

// True iff the residue map Z_n -> (+) Z_{p^k} is a bijection that carries
// the edges of G(Z_n) exactly onto the edges of the direct-sum graph.
bool crt_isomorphism_check(std::uint64_t n,
                           std::uint64_t vertex_budget = kDefaultVertexBudget);

nlohmann::json to_json(const VerificationReport& report);
// Throws DomainError on a document that does not follow the report schema.
VerificationReport report_from_json(const nlohmann::json& doc);
std::string format_text(const VerificationReport& report);

std::string csv_header();
std::string csv_row(const VerificationReport& report);

struct SweepSummary {
  std::uint64_t rows = 0;
  std::uint64_t mismatches = 0;  // reports with at least one mismatch
  std::map<std::string, std::uint64_t> mismatch_counts;  // per verdict key
};

// Writes the CSV header and one row per n in [from, to], ascending.
SweepSummary sweep(std::uint64_t from, std::uint64_t to, unsigned q, std::ostream& out,
                   const HarnessOptions& options = {});

struct DecodeDemoResult {
  CodeMeasurement code;  // the dual code that is decoded
  std::uint64_t trials = 0;
  std::uint64_t recovered = 0;  // decoder output equals the transmitted word
  std::uint64_t clean = 0;
  std::uint64_t corrected = 0;
  std::uint64_t uncorrectable = 0;
  std::uint64_t false_clean = 0;  // "clean" reported for a corrupted word
};

// Sends random codewords of the dual of the F_q incidence code of G(Z_n)
// through a channel adding exactly `errors` nonzero errors at distinct
// positions, and decodes with the single-error syndrome decoder. The trials
// depend only on seed.
DecodeDemoResult run_decode_demo(std::uint64_t n, unsigned q, unsigned errors,
                                 std::uint64_t trials, std::uint64_t seed,
                                 const HarnessOptions& options = {});

}  // namespace unitgraph

#endif  // UNITGRAPH_VERIFY_H_
