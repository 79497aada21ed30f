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

#include "unitgraph/verify.h"

#include <cstdlib>
#include <sstream>

#include "gtest/gtest.h"

namespace unitgraph {
namespace {

CodeMeasurement measured(std::uint64_t n, std::uint64_t k, MinDistance d) { return {n, k, d}; }

TEST(VerdictTest, StringRoundTrip) {
  for (Verdict v : {Verdict::kMatch, Verdict::kMismatch, Verdict::kUnverified,
                    Verdict::kNotApplicable}) {
    EXPECT_EQ(verdict_from_string(to_string(v)), v);
  }
  EXPECT_EQ(to_string(Verdict::kNotApplicable), "not-applicable");
  EXPECT_THROW(verdict_from_string("maybe"), DomainError);
}

TEST(PredictTest, ClosedForms) {
  const Predictions p15 = predict(15, 3);
  EXPECT_EQ(p15.edge_count, 56u);
  EXPECT_EQ(p15.diameter_bound, 2u);
  EXPECT_EQ(p15.min_degree, 7u);
  EXPECT_EQ(p15.edge_connectivity, 7u);
  EXPECT_EQ(p15.theorem_code, (CodeClaim{56, 14, 7}));
  EXPECT_EQ(p15.theorem_dual, (CodeClaim{56, 42, 3}));
  EXPECT_EQ(p15.conjecture_code, (CodeClaim{56, 14, 7}));
  EXPECT_FALSE(p15.bipartite.has_value());

  const Predictions p12 = predict(12, 3);
  EXPECT_EQ(p12.diameter_bound, 3u);
  EXPECT_EQ(p12.bipartite, true);
  EXPECT_EQ(p12.edge_connectivity, 4u);
  EXPECT_EQ(p12.theorem_code, (CodeClaim{24, 11, 4}));
  EXPECT_EQ(p12.theorem_dual, (CodeClaim{24, 13, 4}));

  // m = 1: the dual dimension formula must stay integral.
  const Predictions p6 = predict(6, 3);
  EXPECT_EQ(p6.theorem_code, (CodeClaim{6, 5, 2}));
  EXPECT_EQ(p6.theorem_dual, (CodeClaim{6, 1, 4}));

  const Predictions p1 = predict(1, 3);
  EXPECT_EQ(p1.edge_count, 0u);
  EXPECT_FALSE(p1.theorem_code.has_value());
  EXPECT_THROW(predict(10, 2), DomainError);
  EXPECT_THROW(predict(10, 9), DomainError);
}

TEST(DiameterClaimTest, Examples) {
  const Conjecture1Check c15 = verify_conjecture1(15);
  EXPECT_TRUE(c15.connected);
  EXPECT_EQ(c15.bound, 2u);
  EXPECT_EQ(c15.diameter, Length(2));
  EXPECT_EQ(c15.verdict, Verdict::kMatch);
  const Conjecture1Check c12 = verify_conjecture1(12);
  EXPECT_EQ(c12.bound, 3u);
  EXPECT_EQ(c12.diameter, Length(3));
  EXPECT_EQ(c12.verdict, Verdict::kMatch);
  const Conjecture1Check c2 = verify_conjecture1(2);
  EXPECT_EQ(c2.bound, 3u);
  EXPECT_EQ(c2.diameter, Length(1));
  EXPECT_EQ(c2.verdict, Verdict::kMatch);
  HarnessOptions tiny;
  tiny.vertex_budget = 10;
  EXPECT_THROW(verify_conjecture1(11, tiny), ResourceError);
}

TEST(CodeClaimTest, Examples) {
  const CodeCheck c9 = verify_conjecture2(9, 3);
  EXPECT_EQ(c9.field, 2u);
  EXPECT_EQ(c9.predicted, (CodeClaim{24, 8, 5}));
  EXPECT_EQ(c9.measured, measured(24, 8, MinDistance::exact(5)));
  EXPECT_EQ(c9.verdict, Verdict::kMatch);

  const CodeCheck c10 = verify_conjecture2(10, 3);
  EXPECT_EQ(c10.field, 3u);
  EXPECT_EQ(c10.predicted, (CodeClaim{20, 9, 4}));
  EXPECT_EQ(c10.measured, measured(20, 9, MinDistance::exact(4)));
  EXPECT_EQ(c10.verdict, Verdict::kMatch);

  const CodeCheck c6 = verify_conjecture2(6, 3);
  EXPECT_EQ(c6.predicted, (CodeClaim{6, 5, 2}));
  EXPECT_EQ(c6.measured, measured(6, 5, MinDistance::exact(2)));
  EXPECT_EQ(c6.verdict, Verdict::kMatch);

  EXPECT_EQ(verify_conjecture2(1, 3).verdict, Verdict::kNotApplicable);
}

TEST(CodeTheoremsTest, Examples) {
  const CodeTheoremCheck c15 = verify_code_theorems(15, 3);
  EXPECT_EQ(c15.measured_dual, measured(56, 42, MinDistance::exact(3)));
  EXPECT_EQ(c15.code_verdict, Verdict::kMatch);
  EXPECT_EQ(c15.dual_dim_verdict, Verdict::kMatch);
  EXPECT_EQ(c15.dual_d_verdict, Verdict::kMatch);

  const CodeTheoremCheck c12 = verify_code_theorems(12, 3);
  EXPECT_EQ(c12.predicted_dual, (CodeClaim{24, 13, 4}));
  ASSERT_TRUE(c12.measured_dual.has_value());
  EXPECT_EQ(c12.measured_dual->dimension, 13u);
  EXPECT_TRUE(c12.measured_dual->distance.is_exact());
  EXPECT_NE(c12.dual_d_verdict, Verdict::kUnverified);
  EXPECT_NE(c12.dual_d_verdict, Verdict::kNotApplicable);

  const CodeTheoremCheck c7 = verify_code_theorems(7, 3);
  EXPECT_EQ(c7.predicted_code, (CodeClaim{18, 6, 5}));
  EXPECT_EQ(c7.measured_code, measured(18, 6, MinDistance::exact(5)));
  EXPECT_EQ(c7.code_verdict, Verdict::kMatch);
}

TEST(CodeTheoremsTest, HexagonDualDistanceIsReportedAsMismatch) {
  const CodeTheoremCheck c6 = verify_code_theorems(6, 3);
  EXPECT_EQ(c6.measured_dual, measured(6, 1, MinDistance::exact(6)));
  EXPECT_EQ(c6.dual_d_verdict, Verdict::kMismatch);
}

TEST(CodeTheoremsTest, ZeroDimensionalDualIsNotAgreement) {
  const CodeTheoremCheck c3 = verify_code_theorems(3, 3);
  EXPECT_EQ(c3.measured_dual, measured(2, 0, MinDistance::undefined()));
  EXPECT_EQ(c3.dual_dim_verdict, Verdict::kMatch);
  EXPECT_EQ(c3.dual_d_verdict, Verdict::kMismatch);
}

TEST(CodeTheoremsTest, OverBudgetDistanceIsUnverified) {
  HarnessOptions small;
  small.distance_budget = 100;
  const CodeTheoremCheck c = verify_code_theorems(15, 3, small);
  EXPECT_EQ(c.measured_code->distance, MinDistance::unknown());
  EXPECT_EQ(c.code_verdict, Verdict::kUnverified);
}

TEST(CrtCheckTest, Examples) {
  EXPECT_TRUE(crt_isomorphism_check(12));
  EXPECT_TRUE(crt_isomorphism_check(7));
  EXPECT_TRUE(crt_isomorphism_check(90));
  EXPECT_THROW(crt_isomorphism_check(1), DomainError);
}

TEST(ReportTest, FifteenHasEverything) {
  const VerificationReport r = build_report(15, 3);
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(j["graph"]["diameter"], 2);
  EXPECT_EQ(j["graph"]["girth"], 3);
  EXPECT_EQ(j["measured"]["code"]["length"], 56);
  EXPECT_EQ(j["measured"]["code"]["dimension"], 14);
  EXPECT_EQ(j["measured"]["code"]["distance"], 7);
  EXPECT_EQ(j["measured"]["dual"]["dimension"], 42);
  EXPECT_EQ(j["measured"]["dual"]["distance"], 3);
  EXPECT_EQ(r.code_field, 2u);
  EXPECT_FALSE(r.has_mismatch());
  for (const auto& [key, v] : r.verdicts) {
    if (key != "thm_bipartite") EXPECT_EQ(v, Verdict::kMatch) << key;
  }
}

TEST(ReportTest, OneIsDegenerate) {
  const VerificationReport r = build_report(1, 3);
  EXPECT_EQ(r.vertices, 1u);
  EXPECT_FALSE(r.code.has_value());
  EXPECT_EQ(r.verdicts.at("conj1"), Verdict::kMatch);
  EXPECT_EQ(r.verdicts.at("thm_edges"), Verdict::kMatch);
  for (const char* key : {"conj2", "thm_code", "thm_dual_dim", "thm_dual_d", "thm_lambda"}) {
    EXPECT_EQ(r.verdicts.at(key), Verdict::kNotApplicable) << key;
  }
  EXPECT_TRUE(to_json(r)["measured"]["code"].is_null());
}

TEST(ReportTest, HexagonTextShowsDualVerdict) {
  const std::string text = format_text(build_report(6, 3));
  EXPECT_NE(text.find("thm_dual_d"), std::string::npos);
  EXPECT_NE(text.find("mismatch"), std::string::npos);
  EXPECT_NE(text.find("[6, 1, 6]_3"), std::string::npos);
}

TEST(ReportTest, EveryPredictionHasAVerdict) {
  HarnessOptions small;
  small.distance_budget = 1 << 16;
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const VerificationReport r = build_report(n, 3, small);
    EXPECT_EQ(r.verdicts.size(), 10u);
    const Predictions& p = r.predicted;
    EXPECT_NE(r.verdicts.at("thm_edges"), Verdict::kNotApplicable);
    EXPECT_NE(r.verdicts.at("conj1"), Verdict::kNotApplicable);
    EXPECT_EQ(p.bipartite.has_value(), r.verdicts.at("thm_bipartite") != Verdict::kNotApplicable);
    EXPECT_EQ(p.theorem_code.has_value(), r.verdicts.at("thm_code") != Verdict::kNotApplicable);
    EXPECT_EQ(p.conjecture_code.has_value(), r.verdicts.at("conj2") != Verdict::kNotApplicable);
    EXPECT_EQ(p.edge_connectivity.has_value(),
              r.verdicts.at("thm_lambda") != Verdict::kNotApplicable);
  }
}

TEST(ReportTest, JsonRoundTrip) {
  HarnessOptions small;
  small.distance_budget = 1 << 12;  // forces some "unknown" distances
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const VerificationReport r = build_report(n, n % 4 == 0 ? 5 : 3, small);
    const std::string text = to_json(r).dump();
    EXPECT_EQ(report_from_json(nlohmann::json::parse(text)), r) << n;
    EXPECT_EQ(to_json(report_from_json(nlohmann::json::parse(text))).dump(), text);
  }
  EXPECT_THROW(report_from_json(nlohmann::json::parse("{\"n\": 3}")), DomainError);
}

TEST(ReportTest, JsonKeysSorted) {
  const std::string text = to_json(build_report(10, 3)).dump();
  EXPECT_LT(text.find("\"code_field\""), text.find("\"factorization\""));
  EXPECT_LT(text.find("\"factorization\""), text.find("\"graph\""));
  EXPECT_LT(text.find("\"notes\""), text.find("\"predicted\""));
}

TEST(CsvTest, HeaderAndRow) {
  EXPECT_EQ(csv_header(),
            "n,factorization,q,vertices,edges,connected,diameter,girth,bipartite,min_degree,"
            "edge_connectivity,code_len,code_dim,code_d,dual_dim,dual_d,verdict_conj1,"
            "verdict_conj2,verdict_thm_edges,verdict_thm_lambda,verdict_dual_d");
  EXPECT_EQ(csv_row(build_report(12, 3)).substr(0, 54),
            "12,2^2*3,3,12,24,true,3,4,true,4,4,24,11,4,13,4,match,");
  const std::string one = csv_row(build_report(1, 3));
  EXPECT_EQ(one.substr(0, 10), "1,1,n/a,1,");
  EXPECT_NE(one.find("inf"), std::string::npos);
}

TEST(SweepTest, SmallRangeAllConjecture1Match) {
  std::ostringstream out;
  const SweepSummary s = sweep(2, 30, 3, out);
  EXPECT_EQ(s.rows, 29u);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, csv_header());
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    // verdict_conj1 is the fifth column from the end.
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 21u);
    EXPECT_EQ(cells[16], "match") << line;
  }
  EXPECT_EQ(rows, 29);
  // n = 2, 3 (zero-dimensional duals) and 6 (hexagon) disagree with the dual distance claims.
  EXPECT_EQ(s.mismatch_counts.at("thm_dual_d"), 3u);
}

TEST(SweepTest, SingleRowMatchesReport) {
  std::ostringstream out;
  sweep(15, 15, 3, out);
  EXPECT_EQ(out.str(), csv_header() + "\n" + csv_row(build_report(15, 3)) + "\n");
}

TEST(SweepTest, IdenticalAcrossThreadCounts) {
  HarnessOptions one, four;
  one.threads = 1;
  four.threads = 4;
  one.distance_budget = four.distance_budget = 1 << 16;
  std::ostringstream a, b, c;
  sweep(2, 36, 3, a, one);
  sweep(2, 36, 3, b, four);
  sweep(2, 36, 3, c, one);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str(), c.str());
}

TEST(SweepTest, RejectsBadRange) {
  std::ostringstream out;
  EXPECT_THROW(sweep(5, 4, 3, out), DomainError);
  EXPECT_THROW(sweep(0, 4, 3, out), DomainError);
  EXPECT_THROW(sweep(2, 4, 4, out), DomainError);
}

TEST(DecodeDemoTest, SingleErrorsAllRecovered) {
  const DecodeDemoResult r = run_decode_demo(15, 2, 1, 300, 9);
  EXPECT_EQ(r.code, measured(56, 42, MinDistance::exact(3)));
  EXPECT_EQ(r.recovered, 300u);
  EXPECT_EQ(r.corrected, 300u);
  EXPECT_EQ(r.false_clean, 0u);
}

TEST(DecodeDemoTest, DeterministicPerSeed) {
  const DecodeDemoResult a = run_decode_demo(15, 2, 2, 200, 5);
  const DecodeDemoResult b = run_decode_demo(15, 2, 2, 200, 5);
  EXPECT_EQ(a.recovered, b.recovered);
  EXPECT_EQ(a.corrected, b.corrected);
  EXPECT_EQ(a.uncorrectable, b.uncorrectable);
  EXPECT_EQ(a.clean, 0u);
  EXPECT_EQ(a.corrected + a.uncorrectable, 200u);
}

TEST(DecodeDemoTest, ZeroErrorsAreClean) {
  const DecodeDemoResult r = run_decode_demo(12, 3, 0, 50, 1);
  EXPECT_EQ(r.clean, 50u);
  EXPECT_EQ(r.recovered, 50u);
  EXPECT_THROW(run_decode_demo(3, 2, 1, 10, 1), DomainError);
}

TEST(BudgetEnvTest, ReadsOverride) {
  ::unsetenv("UNITGRAPH_BUDGET");
  EXPECT_EQ(distance_budget_from_env(), kDefaultDistanceBudget);
  ::setenv("UNITGRAPH_BUDGET", "1234", 1);
  EXPECT_EQ(distance_budget_from_env(), 1234u);
  ::setenv("UNITGRAPH_BUDGET", "lots", 1);
  EXPECT_THROW(distance_budget_from_env(), DomainError);
  ::unsetenv("UNITGRAPH_BUDGET");
}

}  // namespace
}  // namespace unitgraph
