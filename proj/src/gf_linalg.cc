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

#include "unitgraph/gf_linalg.h"

#include <algorithm>
#include <sstream>
#include <string>

#include "unitgraph/ring_core.h"

namespace unitgraph {

PrimeField::PrimeField(unsigned q) : q_(q) {
  if (q >= 256 || !is_prime(q)) {
    throw DomainError("field order " + std::to_string(q) +
                      " is not a prime below 256");
  }
  inverse_.assign(q, 0);
  for (unsigned a = 1; a < q; ++a) {
    for (unsigned b = 1; b < q; ++b) {
      if (a * b % q == 1) {
        inverse_[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
}

std::uint8_t PrimeField::inv(std::uint8_t a) const {
  if (a == 0 || a >= q_) throw DomainError("zero has no inverse");
  return inverse_[a];
}

void PrimeField::axpy(std::span<std::uint8_t> dst, std::uint8_t factor,
                      std::span<const std::uint8_t> src) const {
  if (factor == 0) return;
  const std::size_t n = dst.size();
  if (q_ == 2) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint8_t>((dst[i] + unsigned{factor} * src[i]) % q_);
  }
}

void PrimeField::scale(std::span<std::uint8_t> v, std::uint8_t factor) const {
  for (std::uint8_t& x : v) x = mul(x, factor);
}

GfMatrix::GfMatrix(unsigned q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  if (q >= 256 || !is_prime(q)) {
    throw DomainError("field order " + std::to_string(q) +
                      " is not a prime below 256");
  }
}

GfMatrix GfMatrix::from_rows(unsigned q,
                             const std::vector<std::vector<std::int64_t>>& rows,
                             std::size_t cols) {
  GfMatrix m(q, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const std::int64_t sq = static_cast<std::int64_t>(q);
      m.entries_[r * cols + c] = static_cast<std::uint8_t>(((rows[r][c] % sq) + sq) % sq);
    }
  }
  return m;
}

GfMatrix GfMatrix::from_rows(unsigned q,
                             const std::vector<std::vector<std::int64_t>>& rows) {
  return from_rows(q, rows, rows.empty() ? 0 : rows.front().size());
}

GfMatrix GfMatrix::from_vectors(unsigned q, const std::vector<GfVector>& rows,
                                std::size_t cols) {
  GfMatrix m(q, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      m.entries_[r * cols + c] = static_cast<std::uint8_t>(rows[r][c] % q);
    }
  }
  return m;
}

void GfMatrix::set(std::size_t r, std::size_t c, std::uint64_t value) {
  entries_[r * cols_ + c] = static_cast<std::uint8_t>(value % q_);
}

GfMatrix GfMatrix::transpose() const {
  GfMatrix t(q_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = at(r, c);
  }
  return t;
}

GfMatrix GfMatrix::select_rows(std::span<const std::size_t> indices) const {
  GfMatrix out(q_, indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const auto src = row(indices[i]);
    std::copy(src.begin(), src.end(), out.mutable_row(i).begin());
  }
  return out;
}

GfMatrix GfMatrix::select_columns(std::span<const std::size_t> indices) const {
  GfMatrix out(q_, rows_, indices.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t i = 0; i < indices.size(); ++i) {
      out.entries_[r * indices.size() + i] = at(r, indices[i]);
    }
  }
  return out;
}

Rref rref(const GfMatrix& m) {
  const PrimeField field(m.q());
  Rref out{m, {}};
  GfMatrix& a = out.matrix;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < a.cols() && next_row < a.rows(); ++c) {
    std::size_t pivot = next_row;
    while (pivot < a.rows() && a.at(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != next_row) {
      std::swap_ranges(a.mutable_row(pivot).begin(), a.mutable_row(pivot).end(),
                       a.mutable_row(next_row).begin());
    }
    // Columns left of c are already zero in the pivot row.
    auto prow = a.mutable_row(next_row).subspan(c);
    field.scale(prow, field.inv(prow[0]));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == next_row) continue;
      auto target = a.mutable_row(r).subspan(c);
      if (target[0] != 0) field.axpy(target, field.neg(target[0]), prow);
    }
    out.pivots.push_back(c);
    ++next_row;
  }
  return out;
}

std::size_t rank(const GfMatrix& m) { return rref(m).pivots.size(); }

std::vector<GfVector> null_space_basis(const GfMatrix& m) {
  const PrimeField field(m.q());
  const Rref red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<GfVector> basis;
  basis.reserve(m.cols() - red.pivots.size());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    GfVector x(m.cols(), 0);
    x[f] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      x[red.pivots[i]] = field.neg(red.matrix.at(i, f));
    }
    const auto lead = std::find_if(x.begin(), x.end(), [](std::uint8_t v) { return v != 0; });
    field.scale(x, field.inv(*lead));
    basis.push_back(std::move(x));
  }
  return basis;
}

GfMatrix row_space_basis(const GfMatrix& m) {
  const Rref red = rref(m);
  std::vector<std::size_t> keep(red.pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return red.matrix.select_rows(keep);
}

bool row_space_contains(const GfMatrix& m, std::span<const std::uint8_t> v) {
  if (v.size() != m.cols()) throw DomainError("vector length does not match matrix");
  const PrimeField field(m.q());
  const Rref red = rref(m);
  GfVector rest(v.begin(), v.end());
  for (std::uint8_t& x : rest) x %= m.q();
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    const std::uint8_t coeff = rest[red.pivots[i]];
    if (coeff != 0) field.axpy(rest, field.neg(coeff), red.matrix.row(i));
  }
  return hamming_weight(rest) == 0;
}

GfVector multiply(const GfMatrix& m, std::span<const std::uint8_t> x) {
  if (x.size() != m.cols()) throw DomainError("vector length does not match matrix");
  GfVector out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint64_t acc = 0;
    const auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) acc += unsigned{row[c]} * x[c];
    out[r] = static_cast<std::uint8_t>(acc % m.q());
  }
  return out;
}

std::size_t hamming_weight(std::span<const std::uint8_t> v) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; }));
}

void write_matrix(std::ostream& out, const GfMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.q() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << unsigned{m.at(r, c)};
    }
    out << '\n';
  }
}

GfMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("missing matrix header");
  std::istringstream header(line);
  std::size_t rows = 0, cols = 0;
  unsigned q = 0;
  std::string extra;
  if (!(header >> rows >> cols >> q) || (header >> extra)) {
    throw DomainError("malformed matrix header: " + line);
  }
  GfMatrix m(q, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!std::getline(in, line)) throw DomainError("missing matrix row");
    std::istringstream row(line);
    for (std::size_t c = 0; c < cols; ++c) {
      unsigned v = 0;
      if (!(row >> v) || v >= q) throw DomainError("bad matrix entry in row " + std::to_string(r));
      m.set(r, c, v);
    }
    if (row >> extra) throw DomainError("too many entries in row " + std::to_string(r));
  }
  return m;
}

}  // namespace unitgraph
