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

// Linear codes spanned by the rows of a graph's vertex-edge incidence matrix,
// their duals, exact minimum distances and single-error syndrome decoding.

#ifndef UNITGRAPH_INCIDENCE_CODES_H_
#define UNITGRAPH_INCIDENCE_CODES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unitgraph/gf_linalg.h"
#include "unitgraph/unit_graph.h"

namespace unitgraph {

// Work allowed for one minimum-distance computation, counted in codeword or
// candidate-support evaluations.
inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 24;

enum class DistanceStatus {
  kExact,
  kUnknown,    // every exact method would exceed the budget
  kUndefined,  // the code is {0}
};

struct MinDistance {
  DistanceStatus status = DistanceStatus::kUnknown;
  std::uint64_t value = 0;  // meaningful only when exact

  static MinDistance exact(std::uint64_t d) { return {DistanceStatus::kExact, d}; }
  static MinDistance unknown() { return {DistanceStatus::kUnknown, 0}; }
  static MinDistance undefined() { return {DistanceStatus::kUndefined, 0}; }

  bool is_exact() const { return status == DistanceStatus::kExact; }
  // "7", "unknown" or "undefined".
  std::string to_string() const;

  friend bool operator==(const MinDistance&, const MinDistance&) = default;
};

struct LinearCode {
  unsigned q = 2;
  std::size_t length = 0;
  // k x length, rows independent. For codes built from a spanning set this
  // is the nonzero part of the RREF; duals carry the canonical null-space
  // basis of the primal generator.
  GfMatrix generator{2, 0, 0};
  // (length - k) x length, rows independent, generator * parity^T = 0.
  GfMatrix parity_check{2, 0, 0};
  std::size_t dimension = 0;
  MinDistance distance;
};

struct CodeParams {
  std::size_t length = 0;
  std::size_t dimension = 0;
  MinDistance min_distance;
  // Present exactly when min_distance is exact.
  std::optional<std::uint64_t> detect_capability;
  std::optional<std::uint64_t> correct_capability;
};

struct ErrorCapabilities {
  std::uint64_t detect = 0;   // d - 1
  std::uint64_t correct = 0;  // floor((d - 1) / 2)
};

// |V| x |E| matrix with 1 at both endpoints of each edge column.
GfMatrix incidence_matrix(const UnitGraph& g, unsigned q);

// Code spanned by the rows of generator_rows (need not be independent).
LinearCode code_from_generator(const GfMatrix& generator_rows,
                               std::uint64_t distance_budget = kDefaultDistanceBudget,
                               unsigned threads = 0);

LinearCode code_from_incidence(const UnitGraph& g, unsigned q,
                               std::uint64_t distance_budget = kDefaultDistanceBudget,
                               unsigned threads = 0);

LinearCode dual_code(const LinearCode& c,
                     std::uint64_t distance_budget = kDefaultDistanceBudget,
                     unsigned threads = 0);

CodeParams code_params(const LinearCode& c);

// Throws DomainError unless the minimum distance is exact.
ErrorCapabilities error_capabilities(const CodeParams& params);

// Minimum weight of a nonzero codeword by walking all q^k - 1 messages in
// modular Gray-code order. nullopt when q^k - 1 exceeds budget or k = 0.
std::optional<std::uint64_t> min_weight_exhaustive(const GfMatrix& generator,
                                                   std::uint64_t budget,
                                                   unsigned threads = 0);

// Minimum distance of the code {x : parity_check x = 0}, found as the size of
// the smallest linearly dependent set of parity-check columns, trying sizes
// 1, 2, ... in turn. nullopt when more than budget candidate combinations
// would be needed or the code is {0}.
std::optional<std::uint64_t> min_weight_dependent_columns(const GfMatrix& parity_check,
                                                          std::uint64_t budget);

// Picks whichever exact method fits the budget: message enumeration first,
// then dependent columns.
MinDistance minimum_distance(const GfMatrix& generator, const GfMatrix& parity_check,
                             std::uint64_t budget, unsigned threads = 0);

enum class DecodeStatus { kClean, kCorrected, kUncorrectable };

struct DecodeResult {
  GfVector word;
  DecodeStatus status = DecodeStatus::kUncorrectable;
  std::optional<std::size_t> error_position;
};

// Single-error syndrome table decoder built from a code's parity-check matrix.
class SyndromeDecoder {
 public:
  // Throws DomainError when some single-error pattern has a zero syndrome or
  // two patterns share one, i.e. the code cannot correct a single error.
  explicit SyndromeDecoder(const LinearCode& code);

  // Throws DomainError on a length mismatch.
  DecodeResult decode(std::span<const std::uint8_t> received) const;
  GfVector syndrome(std::span<const std::uint8_t> word) const;

 private:
  struct Pattern {
    std::size_t position;
    std::uint8_t value;
  };
  PrimeField field_;
  GfMatrix parity_check_;
  std::map<GfVector, Pattern> table_;
};

DecodeResult syndrome_decode_single(const LinearCode& code,
                                    std::span<const std::uint8_t> received);

std::string to_string(DecodeStatus status);

}  // namespace unitgraph

#endif  // UNITGRAPH_INCIDENCE_CODES_H_
