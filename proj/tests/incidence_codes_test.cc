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

#include "unitgraph/incidence_codes.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "unitgraph/ring_core.h"

namespace unitgraph {
namespace {

UnitGraph zn(std::uint64_t n) { return build_unit_graph(RingSpec({n})); }

// Oracle: least positive weight among all combinations of the raw incidence
// rows (no reduction), enumerated as base-q counters.
std::uint64_t oracle_code_distance(const GfMatrix& h) {
  const unsigned q = h.q();
  std::vector<unsigned> coeff(h.rows(), 0);
  std::uint64_t best = 0;
  while (true) {
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == q) coeff[i++] = 0;
    if (i == coeff.size()) break;
    std::uint64_t weight = 0;
    for (std::size_t c = 0; c < h.cols(); ++c) {
      unsigned s = 0;
      for (std::size_t r = 0; r < h.rows(); ++r) s += coeff[r] * h.at(r, c);
      weight += s % q != 0;
    }
    if (weight > 0 && (best == 0 || weight < best)) best = weight;
  }
  return best;
}

// Oracle: least positive weight of x in F_q^E with h * x = 0, by scanning
// every vector. Returns 0 when only the zero vector qualifies.
std::uint64_t oracle_dual_distance(const GfMatrix& h) {
  const unsigned q = h.q();
  std::vector<unsigned> x(h.cols(), 0);
  std::uint64_t best = 0;
  while (true) {
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == q) x[i++] = 0;
    if (i == x.size()) break;
    bool zero = true;
    for (std::size_t r = 0; r < h.rows() && zero; ++r) {
      unsigned s = 0;
      for (std::size_t c = 0; c < h.cols(); ++c) s += x[c] * h.at(r, c);
      zero = s % q == 0;
    }
    if (!zero) continue;
    const auto weight = static_cast<std::uint64_t>(
        std::count_if(x.begin(), x.end(), [](unsigned v) { return v != 0; }));
    if (best == 0 || weight < best) best = weight;
  }
  return best;
}

void expect_params(const LinearCode& c, std::size_t n, std::size_t k, MinDistance d) {
  EXPECT_EQ(c.length, n);
  EXPECT_EQ(c.dimension, k);
  EXPECT_EQ(c.distance, d) << c.distance.to_string();
}

TEST(IncidenceMatrixTest, Examples) {
  EXPECT_EQ(incidence_matrix(zn(2), 3), GfMatrix::from_rows(3, {{1}, {1}}));

  const GfMatrix h6 = incidence_matrix(zn(6), 3);
  ASSERT_EQ(h6.rows(), 6u);
  ASSERT_EQ(h6.cols(), 6u);
  for (std::size_t r = 0; r < 6; ++r) EXPECT_EQ(hamming_weight(h6.row(r)), 2u);

  const UnitGraph g5 = zn(5);
  const GfMatrix h5 = incidence_matrix(g5, 2);
  ASSERT_EQ(h5.rows(), 5u);
  ASSERT_EQ(h5.cols(), 8u);
  for (VertexId v = 0; v < 5; ++v) EXPECT_EQ(hamming_weight(h5.row(v)), g5.degree(v));
}

TEST(IncidenceMatrixTest, ColumnsAreEdgesRowsAreDegrees) {
  for (std::uint64_t n : {9u, 12u, 20u, 21u}) {
    const UnitGraph g = zn(n);
    const GfMatrix h = incidence_matrix(g, 3);
    const GfMatrix ht = h.transpose();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      ASSERT_EQ(hamming_weight(ht.row(e)), 2u);
      ASSERT_EQ(h.at(g.edges()[e].u, e), 1);
      ASSERT_EQ(h.at(g.edges()[e].v, e), 1);
    }
    const LinearCode c = code_from_incidence(g, 3, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      ASSERT_EQ(hamming_weight(h.row(v)), g.degree(v));
      ASSERT_TRUE(row_space_contains(c.generator, h.row(v)));
    }
  }
}

TEST(CodeFromIncidenceTest, Examples) {
  expect_params(code_from_incidence(zn(15), 2), 56, 14, MinDistance::exact(7));
  expect_params(code_from_incidence(zn(12), 3), 24, 11, MinDistance::exact(4));
  expect_params(code_from_incidence(zn(2), 3), 1, 1, MinDistance::exact(1));
}

TEST(CodeFromIncidenceTest, GeneratorIsReducedAndCanonical) {
  const LinearCode c = code_from_incidence(zn(12), 3);
  EXPECT_EQ(rref(c.generator).matrix, c.generator);
  EXPECT_EQ(rank(c.generator), c.dimension);
}

TEST(CodeFromIncidenceTest, BudgetOverrunIsUnknown) {
  const LinearCode c = code_from_incidence(zn(15), 2, 1000);
  EXPECT_EQ(c.dimension, 14u);
  EXPECT_EQ(c.distance, MinDistance::unknown());
}

TEST(DualCodeTest, Examples) {
  expect_params(dual_code(code_from_incidence(zn(15), 2)), 56, 42, MinDistance::exact(3));
  expect_params(dual_code(code_from_incidence(zn(3), 2)), 2, 0, MinDistance::undefined());
  expect_params(dual_code(code_from_incidence(zn(6), 3)), 6, 1, MinDistance::exact(6));
}

TEST(DualCodeTest, DimensionsAddUpAndGeneratorsOrthogonal) {
  for (std::uint64_t n = 2; n <= 30; ++n) {
    for (unsigned q : {2u, 3u, 5u}) {
      const LinearCode c = code_from_incidence(zn(n), q, 0);
      const LinearCode d = dual_code(c, 0);
      ASSERT_EQ(c.dimension + d.dimension, c.length);
      ASSERT_EQ(rank(d.generator), d.dimension);
      for (std::size_t i = 0; i < c.dimension; ++i) {
        for (std::size_t j = 0; j < d.dimension; ++j) {
          unsigned dot = 0;
          for (std::size_t e = 0; e < c.length; ++e) {
            dot += c.generator.at(i, e) * d.generator.at(j, e);
          }
          ASSERT_EQ(dot % q, 0u) << n << ' ' << q;
        }
      }
      ASSERT_EQ(d.parity_check, c.generator);
    }
  }
}

TEST(CodeRankTest, ConnectedGraphsHaveRankVMinusOne) {
  for (std::uint64_t n = 3; n <= 99; n += 2) {
    ASSERT_EQ(code_from_incidence(zn(n), 2, 0).dimension, n - 1) << n;
  }
  for (std::uint64_t n = 2; n <= 100; n += 2) {
    ASSERT_EQ(code_from_incidence(zn(n), 3, 0).dimension, n - 1) << n;
  }
}

TEST(CodeDistanceOracleTest, PrimalAgreesWithRawRowEnumeration) {
  const std::vector<std::pair<std::uint64_t, unsigned>> cases = {
      {5, 2}, {7, 2}, {9, 2}, {15, 2}, {4, 3}, {6, 3}, {8, 3}, {10, 3}, {12, 3}, {6, 5}};
  for (const auto& [n, q] : cases) {
    const UnitGraph g = zn(n);
    const LinearCode c = code_from_incidence(g, q);
    ASSERT_TRUE(c.distance.is_exact());
    EXPECT_EQ(c.distance.value, oracle_code_distance(incidence_matrix(g, q))) << n << ' ' << q;
  }
}

TEST(CodeDistanceOracleTest, DualAgreesWithFullVectorScan) {
  const std::vector<std::pair<std::uint64_t, unsigned>> cases = {
      {3, 2}, {5, 2}, {7, 2}, {4, 3}, {6, 3}, {4, 5}, {6, 5}, {8, 3}};
  for (const auto& [n, q] : cases) {
    const UnitGraph g = zn(n);
    const LinearCode d = dual_code(code_from_incidence(g, q));
    const std::uint64_t expected = oracle_dual_distance(incidence_matrix(g, q));
    if (expected == 0) {
      EXPECT_EQ(d.distance, MinDistance::undefined()) << n;
    } else {
      EXPECT_EQ(d.distance, MinDistance::exact(expected)) << n << ' ' << q;
    }
  }
}

TEST(CodeDistanceOracleTest, DualDistanceEqualsGirthWhereDefined) {
  // Binary codes for odd n, ternary for even n (bipartite): cycle space.
  for (std::uint64_t n = 4; n <= 40; ++n) {
    const unsigned q = n % 2 == 0 ? 3 : 2;
    const UnitGraph g = zn(n);
    const LinearCode d = dual_code(code_from_incidence(g, q));
    if (!d.distance.is_exact()) continue;
    const Length gi = girth(g);
    ASSERT_TRUE(gi.has_value());
    EXPECT_EQ(d.distance.value, *gi) << n;
  }
}

TEST(MinWeightExhaustiveTest, Examples) {
  EXPECT_EQ(min_weight_exhaustive(GfMatrix::from_rows(2, {{1, 0, 1}, {0, 1, 1}}), 100), 2u);
  EXPECT_EQ(min_weight_exhaustive(code_from_incidence(zn(9), 2, 0).generator, 1 << 20), 5u);
  EXPECT_EQ(min_weight_exhaustive(code_from_incidence(zn(10), 3, 0).generator, 1 << 20), 4u);
  EXPECT_EQ(min_weight_exhaustive(code_from_incidence(zn(10), 3, 0).generator, 100),
            std::nullopt);
  EXPECT_EQ(min_weight_exhaustive(GfMatrix(3, 0, 4), 100), std::nullopt);
}

TEST(MinWeightRoutesTest, ExhaustiveAndDependentColumnsAgree) {
  std::mt19937_64 rng(11);
  for (unsigned q : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t len = 3 + rng() % (q == 2 ? 12 : 7);
      const std::size_t k = 1 + rng() % std::min<std::size_t>(len - 1, q == 2 ? 10 : 6);
      GfMatrix m(q, k, len);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < len; ++c) m.set(r, c, rng() % q);
      }
      const LinearCode code = code_from_generator(m, 0);
      if (code.dimension == 0 || code.dimension == len) continue;
      const auto a = min_weight_exhaustive(code.generator, 1u << 22, 1);
      const auto b = min_weight_dependent_columns(code.parity_check, 1u << 22);
      ASSERT_TRUE(a.has_value());
      ASSERT_EQ(a, b) << "q=" << q << " trial " << trial;
    }
  }
}

TEST(MinWeightRoutesTest, PermutationInvariance) {
  std::mt19937_64 rng(5);
  const std::vector<std::pair<std::uint64_t, unsigned>> cases = {{9, 2}, {12, 3}, {15, 2}, {10, 3}};
  for (const auto& [n, q] : cases) {
    const LinearCode c = code_from_incidence(zn(n), q);
    std::vector<std::size_t> perm(c.length);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const LinearCode shuffled = code_from_generator(c.generator.select_columns(perm));
    EXPECT_EQ(shuffled.dimension, c.dimension);
    EXPECT_EQ(shuffled.distance, c.distance) << n;
    // The dual of the shuffled code goes through the other route.
    const LinearCode d = dual_code(c);
    const LinearCode ds = dual_code(shuffled);
    EXPECT_EQ(ds.distance, d.distance) << n;
  }
}

TEST(MinWeightRoutesTest, DependentColumnsBudget) {
  const LinearCode d = dual_code(code_from_incidence(zn(15), 2));
  EXPECT_EQ(min_weight_dependent_columns(d.parity_check, 10), std::nullopt);
  EXPECT_EQ(min_weight_dependent_columns(d.parity_check, 1u << 20), 3u);
}

TEST(ErrorCapabilitiesTest, Examples) {
  auto caps = [](std::uint64_t d) {
    CodeParams p;
    p.min_distance = MinDistance::exact(d);
    return error_capabilities(p);
  };
  EXPECT_EQ(caps(3).detect, 2u);
  EXPECT_EQ(caps(3).correct, 1u);
  EXPECT_EQ(caps(4).detect, 3u);
  EXPECT_EQ(caps(4).correct, 1u);
  EXPECT_EQ(caps(1).detect, 0u);
  EXPECT_EQ(caps(1).correct, 0u);
  CodeParams unknown;
  unknown.min_distance = MinDistance::unknown();
  EXPECT_THROW(error_capabilities(unknown), DomainError);
  CodeParams undefined;
  undefined.min_distance = MinDistance::undefined();
  EXPECT_THROW(error_capabilities(undefined), DomainError);
}

TEST(CodeParamsTest, CapabilitiesPresentExactlyWhenDistanceKnown) {
  const CodeParams p = code_params(dual_code(code_from_incidence(zn(15), 2)));
  EXPECT_EQ(p.detect_capability, 2u);
  EXPECT_EQ(p.correct_capability, 1u);
  const CodeParams z = code_params(dual_code(code_from_incidence(zn(3), 2)));
  EXPECT_FALSE(z.detect_capability.has_value());
  EXPECT_FALSE(z.correct_capability.has_value());
}

GfVector encode(const LinearCode& c, std::mt19937_64& rng) {
  GfVector word(c.length, 0);
  const PrimeField f(c.q);
  for (std::size_t r = 0; r < c.dimension; ++r) {
    f.axpy(word, static_cast<std::uint8_t>(rng() % c.q), c.generator.row(r));
  }
  return word;
}

TEST(SyndromeDecoderTest, CleanAndSingleErrors) {
  const LinearCode d = dual_code(code_from_incidence(zn(15), 2));
  const SyndromeDecoder decoder(d);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const GfVector word = encode(d, rng);
    const DecodeResult clean = decoder.decode(word);
    ASSERT_EQ(clean.status, DecodeStatus::kClean);
    ASSERT_EQ(clean.word, word);
    GfVector received = word;
    const std::size_t pos = rng() % d.length;
    received[pos] ^= 1;
    const DecodeResult fixed = decoder.decode(received);
    ASSERT_EQ(fixed.status, DecodeStatus::kCorrected);
    ASSERT_EQ(fixed.word, word);
    ASSERT_EQ(fixed.error_position, pos);
  }
}

TEST(SyndromeDecoderTest, TwoErrorsNeverClean) {
  const LinearCode d = dual_code(code_from_incidence(zn(15), 2));
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    GfVector received = encode(d, rng);
    const std::size_t a = rng() % d.length;
    std::size_t b = rng() % d.length;
    while (b == a) b = rng() % d.length;
    received[a] ^= 1;
    received[b] ^= 1;
    ASSERT_NE(syndrome_decode_single(d, received).status, DecodeStatus::kClean);
  }
}

TEST(SyndromeDecoderTest, OddFieldSingleErrors) {
  const LinearCode d = dual_code(code_from_incidence(zn(12), 3));
  const SyndromeDecoder decoder(d);
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const GfVector word = encode(d, rng);
    GfVector received = word;
    const std::size_t pos = rng() % d.length;
    received[pos] = static_cast<std::uint8_t>((received[pos] + 1 + rng() % 2) % 3);
    const DecodeResult r = decoder.decode(received);
    ASSERT_EQ(r.status, DecodeStatus::kCorrected);
    ASSERT_EQ(r.word, word);
  }
}

TEST(SyndromeDecoderTest, RejectsCodesWithoutSingleCorrection) {
  // The third coordinate is never used, so an error there has syndrome 0.
  const LinearCode weak = code_from_generator(GfMatrix::from_rows(2, {{1, 0, 0}, {0, 1, 0}}));
  EXPECT_THROW(SyndromeDecoder{weak}, DomainError);
  const LinearCode d = dual_code(code_from_incidence(zn(15), 2));
  EXPECT_THROW(syndrome_decode_single(d, GfVector(3, 0)), DomainError);
}

}  // namespace
}  // namespace unitgraph
