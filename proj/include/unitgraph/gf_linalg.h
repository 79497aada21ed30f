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

// Dense linear algebra over prime fields F_q with q < 256.

#ifndef UNITGRAPH_GF_LINALG_H_
#define UNITGRAPH_GF_LINALG_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

namespace unitgraph {

using GfVector = std::vector<std::uint8_t>;

// Arithmetic tables for one prime field, built per use.
class PrimeField {
 public:
  // Throws DomainError unless q is a prime below 256.
  explicit PrimeField(unsigned q);

  unsigned q() const { return q_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
    const unsigned s = unsigned{a} + b;
    return static_cast<std::uint8_t>(s >= q_ ? s - q_ : s);
  }
  std::uint8_t neg(std::uint8_t a) const {
    return static_cast<std::uint8_t>(a == 0 ? 0 : q_ - a);
  }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>(unsigned{a} * b % q_);
  }
  // Throws DomainError for a = 0.
  std::uint8_t inv(std::uint8_t a) const;

  // dst += factor * src, elementwise.
  void axpy(std::span<std::uint8_t> dst, std::uint8_t factor,
            std::span<const std::uint8_t> src) const;
  void scale(std::span<std::uint8_t> v, std::uint8_t factor) const;

 private:
  unsigned q_;
  std::vector<std::uint8_t> inverse_;
};

// Row-major matrix over F_q. Zero rows or columns are allowed.
class GfMatrix {
 public:
  // Zero matrix. Throws DomainError unless q is a prime below 256.
  GfMatrix(unsigned q, std::size_t rows, std::size_t cols);

  // Entries are reduced modulo q.
  static GfMatrix from_rows(unsigned q,
                            const std::vector<std::vector<std::int64_t>>& rows,
                            std::size_t cols);
  static GfMatrix from_rows(unsigned q,
                            const std::vector<std::vector<std::int64_t>>& rows);
  static GfMatrix from_vectors(unsigned q, const std::vector<GfVector>& rows,
                               std::size_t cols);

  unsigned q() const { return q_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint8_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  // Stores value mod q.
  void set(std::size_t r, std::size_t c, std::uint64_t value);

  std::span<const std::uint8_t> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<std::uint8_t> mutable_row(std::size_t r) {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<std::uint8_t>& entries() const { return entries_; }

  GfMatrix transpose() const;

  // Only rows whose index is listed, in that order.
  GfMatrix select_rows(std::span<const std::size_t> indices) const;
  GfMatrix select_columns(std::span<const std::size_t> indices) const;

  friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

 private:
  unsigned q_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> entries_;
};

struct Rref {
  GfMatrix matrix;                  // same shape as the input
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

// Reduced row echelon form by first-nonzero pivoting in column order.
Rref rref(const GfMatrix& m);

std::size_t rank(const GfMatrix& m);

// Basis of {x : m x = 0}, one vector per non-pivot column in ascending order.
// Each vector is 1 at its free column, 0 at the other free columns, and is
// then scaled so its first nonzero entry is 1.
std::vector<GfVector> null_space_basis(const GfMatrix& m);

// The nonzero rows of rref(m), i.e. a canonical basis of the row space.
GfMatrix row_space_basis(const GfMatrix& m);

// Throws DomainError when v.size() != m.cols().
bool row_space_contains(const GfMatrix& m, std::span<const std::uint8_t> v);

// m x. Throws DomainError on a length mismatch.
GfVector multiply(const GfMatrix& m, std::span<const std::uint8_t> x);

std::size_t hamming_weight(std::span<const std::uint8_t> v);

// Text format: a "rows cols q" header line followed by one line per row of
// space-separated entries.
void write_matrix(std::ostream& out, const GfMatrix& m);
// Throws DomainError on malformed input.
GfMatrix read_matrix(std::istream& in);

}  // namespace unitgraph

#endif  // UNITGRAPH_GF_LINALG_H_
