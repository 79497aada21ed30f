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

// Arithmetic in Z_n and in direct sums Z_{n_1} + ... + Z_{n_r}.
//
// Elements of a direct sum are residue tuples. The ring Z_1 is the zero ring:
// its single element 0 equals 1 and therefore counts as a unit.

#ifndef UNITGRAPH_RING_CORE_H_
#define UNITGRAPH_RING_CORE_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitgraph {

// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a configured size budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  std::uint64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A direct sum of residue rings, given by its ordered moduli.
class RingSpec {
 public:
  // Throws DomainError on an empty list or a zero modulus, and ResourceError
  // when the product of the moduli overflows 64 bits.
  explicit RingSpec(std::vector<std::uint64_t> moduli);

  const std::vector<std::uint64_t>& moduli() const { return moduli_; }
  std::size_t arity() const { return moduli_.size(); }
  std::uint64_t cardinality() const { return cardinality_; }

  // "Z_4+Z_3" style label.
  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  std::vector<std::uint64_t> moduli_;
  std::uint64_t cardinality_ = 1;
};

struct RingElement {
  std::vector<std::uint64_t> residues;

  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Number of k in [1, n] coprime to n. Throws DomainError for n = 0.
std::uint64_t euler_phi(std::uint64_t n);

// Prime-power factorization by trial division, ascending primes. n = 1 gives
// an empty list. Throws DomainError for n = 0.
std::vector<PrimePower> factorize(std::uint64_t n);

// Throws DomainError unless x has one residue per modulus, each reduced.
void check_element(const RingElement& x, const RingSpec& spec);

bool is_unit(const RingElement& x, const RingSpec& spec);

// Componentwise sum.
RingElement add(const RingElement& a, const RingElement& b,
                const RingSpec& spec);

// All units in lexicographic residue order. Size is the product of phi(n_i).
std::vector<RingElement> units(const RingSpec& spec);

// Lexicographic rank of an element (first coordinate most significant) and
// its inverse. These fix the canonical vertex numbering of unit graphs.
std::uint64_t element_index(const RingElement& x, const RingSpec& spec);
RingElement element_at(std::uint64_t index, const RingSpec& spec);

// Prime-power moduli of n in ascending prime order. Throws DomainError for
// n < 2.
RingSpec crt_decompose(std::uint64_t n);

// Image of x under Z_n -> (+) Z_{p_i^{k_i}}, ordered as crt_decompose(n).
// Throws DomainError if n < 2 or x >= n.
RingElement crt_map(std::uint64_t x, std::uint64_t n);

// True iff u + v is a unit for every unit u and non-unit v of Z_{p^k}.
// Throws DomainError unless modulus is a prime power.
bool unit_plus_nonunit_is_unit(std::uint64_t prime_power);

bool is_prime(std::uint64_t n);

}  // namespace unitgraph

#endif  // UNITGRAPH_RING_CORE_H_
