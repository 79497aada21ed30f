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
#include <atomic>
#include <limits>
#include <unordered_map>
#include <utility>

#include "unitgraph/parallel.h"
#include "unitgraph/ring_core.h"

namespace unitgraph {

std::string MinDistance::to_string() const {
  switch (status) {
    case DistanceStatus::kExact:
      return std::to_string(value);
    case DistanceStatus::kUnknown:
      return "unknown";
    case DistanceStatus::kUndefined:
      return "undefined";
  }
  return "unknown";
}

GfMatrix incidence_matrix(const UnitGraph& g, unsigned q) {
  GfMatrix h(q, g.vertex_count(), g.edge_count());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    h.set(g.edges()[e].u, e, 1);
    h.set(g.edges()[e].v, e, 1);
  }
  return h;
}

namespace {

// q^k - 1 if it is at most limit, else nullopt.
std::optional<std::uint64_t> nonzero_message_count(unsigned q, std::size_t k,
                                                   std::uint64_t limit) {
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= q;
    if (total - 1 > limit) return std::nullopt;
  }
  return static_cast<std::uint64_t>(total - 1);
}

struct SparseRow {
  std::vector<std::uint32_t> positions;
  std::vector<std::uint8_t> values;
};

}  // namespace

std::optional<std::uint64_t> min_weight_exhaustive(const GfMatrix& generator,
                                                   std::uint64_t budget,
                                                   unsigned threads) {
  const std::size_t k = generator.rows();
  const std::size_t n = generator.cols();
  const unsigned q = generator.q();
  if (k == 0) return std::nullopt;
  const std::optional<std::uint64_t> total = nonzero_message_count(q, k, budget);
  if (!total) return std::nullopt;

  std::vector<SparseRow> rows(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      if (generator.at(i, c) == 0) continue;
      rows[i].positions.push_back(static_cast<std::uint32_t>(c));
      rows[i].values.push_back(generator.at(i, c));
    }
  }

  // Step s moves from Gray word g(s - 1) to g(s), where g_i(s) = b_i - b_{i+1}
  // (mod q) over the base-q digits b of s. Exactly one digit changes, by +1,
  // at the position of the carry out of the increment, so each step adds one
  // generator row. Chunks start from a directly computed Gray word.
  const std::uint64_t chunk_size = 1 << 16;
  const std::uint64_t chunks = (*total + chunk_size - 1) / chunk_size;
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  parallel_for(chunks, threads, [&](unsigned, std::size_t chunk) {
    if (best.load(std::memory_order_relaxed) == 1) return;
    const std::uint64_t first = chunk * chunk_size + 1;
    const std::uint64_t last = std::min(*total, first + chunk_size - 1);
    std::vector<std::uint32_t> digits(k + 1, 0);
    std::uint64_t s = first;
    for (std::size_t i = 0; i < k; ++i, s /= q) digits[i] = static_cast<std::uint32_t>(s % q);
    std::vector<std::uint32_t> word(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t gi = (digits[i] + q - digits[i + 1]) % q;
      if (gi == 0) continue;
      for (std::size_t t = 0; t < rows[i].positions.size(); ++t) {
        auto& w = word[rows[i].positions[t]];
        w = (w + gi * rows[i].values[t]) % q;
      }
    }
    std::uint64_t weight = static_cast<std::uint64_t>(
        std::count_if(word.begin(), word.end(), [](std::uint32_t v) { return v != 0; }));
    std::uint64_t local = weight;
    for (std::uint64_t step = first + 1; step <= last; ++step) {
      std::size_t j = 0;
      while (++digits[j] == q) digits[j++] = 0;
      const SparseRow& row = rows[j];
      for (std::size_t t = 0; t < row.positions.size(); ++t) {
        auto& w = word[row.positions[t]];
        const std::uint32_t next = (w + row.values[t]) % q;
        weight += (next != 0);
        weight -= (w != 0);
        w = next;
      }
      if (weight < local) {
        local = weight;
        if (local == 1) break;
      }
    }
    std::uint64_t seen = best.load();
    while (local < seen && !best.compare_exchange_weak(seen, local)) {
    }
  });
  return best.load();
}

namespace {

// Columns packed into 64-bit words. F_2 uses one bit plane; F_3 uses two
// planes (entry is 1, entry is 2) so that negation swaps them; larger fields
// keep one entry per word.
class PackedField {
 public:
  PackedField(unsigned q, std::size_t rows)
      : q_(q), words_((rows + 63) / 64),
        length_(q == 2 ? words_ : q == 3 ? 2 * words_ : rows) {}

  std::size_t length() const { return length_; }

  std::vector<std::uint64_t> pack(const GfMatrix& m, std::size_t col) const {
    std::vector<std::uint64_t> v(length_, 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const std::uint8_t x = m.at(r, col);
      if (x == 0) continue;
      if (q_ > 3) {
        v[r] = x;
      } else {
        const std::size_t plane = q_ == 3 && x == 2 ? words_ : 0;
        v[plane + r / 64] |= std::uint64_t{1} << (r % 64);
      }
    }
    return v;
  }

  // dst = a + f * b for f in F_q^*.
  void add_scaled(std::uint64_t* dst, const std::uint64_t* a, unsigned f,
                  const std::uint64_t* b) const {
    if (q_ == 2) {
      for (std::size_t i = 0; i < words_; ++i) dst[i] = a[i] ^ b[i];
    } else if (q_ == 3) {
      const std::uint64_t* bp = f == 1 ? b : b + words_;
      const std::uint64_t* bm = f == 1 ? b + words_ : b;
      for (std::size_t i = 0; i < words_; ++i) {
        const std::uint64_t xp = a[i], xm = a[words_ + i], yp = bp[i], ym = bm[i];
        const std::uint64_t zx = ~(xp | xm), zy = ~(yp | ym);
        dst[i] = (zx & yp) | (xp & zy) | (xm & ym);
        dst[words_ + i] = (zx & ym) | (xm & zy) | (xp & yp);
      }
    } else {
      for (std::size_t i = 0; i < length_; ++i) dst[i] = (a[i] + f * b[i]) % q_;
    }
  }

  static std::uint64_t hash(const std::uint64_t* v, std::size_t n) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < n; ++i) {
      h ^= v[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return h ^ (h >> 33);
  }

 private:
  unsigned q_;
  std::size_t words_;
  std::size_t length_;
};

// Smallest set of linearly dependent parity-check columns, searched by size.
// Size s enumerates the leading s - 1 columns with combinations and looks the
// negated sum up among all nonzero multiples of later columns.
class DependentColumnSearch {
 public:
  DependentColumnSearch(const GfMatrix& parity_check, std::uint64_t budget)
      : q_(parity_check.q()),
        cols_(parity_check.cols()),
        rows_(parity_check.rows()),
        packed_(q_, rows_),
        len_(packed_.length()),
        budget_(budget),
        unit_cost_(std::max<std::uint64_t>(1, (rows_ + 63) / 64)) {
    columns_.resize(cols_ * len_);
    multiples_.resize(cols_ * (q_ - 1) * len_);
    const std::vector<std::uint64_t> zero(len_, 0);
    for (std::size_t c = 0; c < cols_; ++c) {
      const std::vector<std::uint64_t> v = packed_.pack(parity_check, c);
      std::copy(v.begin(), v.end(), columns_.begin() + c * len_);
      if (v == zero) has_zero_column_ = true;
      for (unsigned f = 1; f < q_; ++f) {
        const std::size_t m = c * (q_ - 1) + (f - 1);
        std::uint64_t* dst = multiples_.data() + m * len_;
        packed_.add_scaled(dst, zero.data(), f, v.data());
        table_[PackedField::hash(dst, len_)].push_back(m);
      }
    }
  }

  std::optional<std::uint64_t> run() {
    if (cols_ == 0) return std::nullopt;
    spent_ = cols_;
    if (spent_ > budget_) return std::nullopt;
    if (has_zero_column_) return 1;
    // Any rows_ + 1 columns are dependent.
    const std::size_t max_size = std::min(cols_, rows_ + 1);
    partials_.assign((max_size + 1) * len_, 0);
    for (std::size_t size = 2; size <= max_size; ++size) {
      // All smaller column sets are independent at this point, so every
      // combination below is nonzero and a match is a minimal dependency.
      target_size_ = size;
      const Outcome out = extend(0, 0);
      if (out == Outcome::kFound) return size;
      if (out == Outcome::kOverBudget) return std::nullopt;
    }
    return std::nullopt;
  }

 private:
  enum class Outcome { kExhausted, kFound, kOverBudget };

  const std::uint64_t* column(std::size_t c) const { return columns_.data() + c * len_; }
  std::uint64_t* partial(std::size_t depth) { return partials_.data() + depth * len_; }

  // partial(depth) holds the combination of the columns chosen so far.
  Outcome extend(std::size_t depth, std::size_t start) {
    const std::size_t chosen = target_size_ - 1;
    const unsigned max_coeff = depth == 0 ? 1 : q_ - 1;
    for (std::size_t c = start; c + (chosen - depth) < cols_; ++c) {
      for (unsigned f = 1; f <= max_coeff; ++f) {
        std::uint64_t* next = partial(depth + 1);
        packed_.add_scaled(next, partial(depth), f, column(c));
        if (depth + 1 < chosen) {
          const Outcome out = extend(depth + 1, c + 1);
          if (out != Outcome::kExhausted) return out;
          continue;
        }
        spent_ += unit_cost_;
        if (spent_ > budget_) return Outcome::kOverBudget;
        if (completes(next, c)) return Outcome::kFound;
      }
    }
    return Outcome::kExhausted;
  }

  // True iff some multiple of a column after `last` equals combo. The
  // multiples are closed under negation, so that column cancels it.
  bool completes(const std::uint64_t* combo, std::size_t last) const {
    const auto it = table_.find(PackedField::hash(combo, len_));
    if (it == table_.end()) return false;
    for (auto m = it->second.rbegin(); m != it->second.rend(); ++m) {
      if (*m / (q_ - 1) <= last) break;
      const std::uint64_t* v = multiples_.data() + *m * len_;
      if (std::equal(v, v + len_, combo)) return true;
    }
    return false;
  }

  unsigned q_;
  std::size_t cols_;
  std::size_t rows_;
  PackedField packed_;
  std::size_t len_;
  std::uint64_t budget_;
  // One candidate costs one unit per 64 parity-check rows it touches.
  std::uint64_t unit_cost_;
  std::uint64_t spent_ = 0;
  std::size_t target_size_ = 0;
  bool has_zero_column_ = false;
  std::vector<std::uint64_t> columns_;
  std::vector<std::uint64_t> multiples_;  // f * column c at c * (q - 1) + f - 1
  std::vector<std::uint64_t> partials_;   // one combination per depth
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> table_;
};

}  // namespace

std::optional<std::uint64_t> min_weight_dependent_columns(const GfMatrix& parity_check,
                                                          std::uint64_t budget) {
  if (rank(parity_check) == parity_check.cols()) return std::nullopt;  // code is {0}
  return DependentColumnSearch(parity_check, budget).run();
}

MinDistance minimum_distance(const GfMatrix& generator, const GfMatrix& parity_check,
                             std::uint64_t budget, unsigned threads) {
  if (generator.rows() == 0) return MinDistance::undefined();
  if (nonzero_message_count(generator.q(), generator.rows(), budget)) {
    return MinDistance::exact(*min_weight_exhaustive(generator, budget, threads));
  }
  if (const auto d = DependentColumnSearch(parity_check, budget).run()) {
    return MinDistance::exact(*d);
  }
  return MinDistance::unknown();
}

LinearCode code_from_generator(const GfMatrix& generator_rows, std::uint64_t distance_budget,
                               unsigned threads) {
  LinearCode code;
  code.q = generator_rows.q();
  code.length = generator_rows.cols();
  code.generator = row_space_basis(generator_rows);
  code.dimension = code.generator.rows();
  code.parity_check =
      GfMatrix::from_vectors(code.q, null_space_basis(code.generator), code.length);
  code.distance =
      minimum_distance(code.generator, code.parity_check, distance_budget, threads);
  return code;
}

LinearCode code_from_incidence(const UnitGraph& g, unsigned q, std::uint64_t distance_budget,
                               unsigned threads) {
  return code_from_generator(incidence_matrix(g, q), distance_budget, threads);
}

LinearCode dual_code(const LinearCode& c, std::uint64_t distance_budget, unsigned threads) {
  LinearCode dual;
  dual.q = c.q;
  dual.length = c.length;
  dual.generator = c.parity_check;
  dual.parity_check = c.generator;
  dual.dimension = c.length - c.dimension;
  dual.distance =
      minimum_distance(dual.generator, dual.parity_check, distance_budget, threads);
  return dual;
}

CodeParams code_params(const LinearCode& c) {
  CodeParams p;
  p.length = c.length;
  p.dimension = c.dimension;
  p.min_distance = c.distance;
  if (c.distance.is_exact()) {
    const ErrorCapabilities caps = error_capabilities(p);
    p.detect_capability = caps.detect;
    p.correct_capability = caps.correct;
  }
  return p;
}

ErrorCapabilities error_capabilities(const CodeParams& params) {
  if (!params.min_distance.is_exact() || params.min_distance.value == 0) {
    throw DomainError("error capabilities need an exact minimum distance, got " +
                      params.min_distance.to_string());
  }
  const std::uint64_t d = params.min_distance.value;
  return {d - 1, (d - 1) / 2};
}

SyndromeDecoder::SyndromeDecoder(const LinearCode& code)
    : field_(code.q), parity_check_(code.parity_check) {
  for (std::size_t pos = 0; pos < code.length; ++pos) {
    for (unsigned a = 1; a < code.q; ++a) {
      GfVector s(parity_check_.rows());
      for (std::size_t r = 0; r < s.size(); ++r) {
        s[r] = field_.mul(parity_check_.at(r, pos), static_cast<std::uint8_t>(a));
      }
      if (hamming_weight(s) == 0) {
        throw DomainError("an error at position " + std::to_string(pos) +
                          " is undetectable; the code cannot correct single errors");
      }
      const bool inserted =
          table_.emplace(std::move(s), Pattern{pos, static_cast<std::uint8_t>(a)}).second;
      if (!inserted) {
        throw DomainError("two single-error patterns share a syndrome; the code "
                          "cannot correct single errors");
      }
    }
  }
}

GfVector SyndromeDecoder::syndrome(std::span<const std::uint8_t> word) const {
  return multiply(parity_check_, word);
}

DecodeResult SyndromeDecoder::decode(std::span<const std::uint8_t> received) const {
  if (received.size() != parity_check_.cols()) {
    throw DomainError("received word has the wrong length");
  }
  DecodeResult result;
  result.word.assign(received.begin(), received.end());
  const GfVector s = syndrome(received);
  if (hamming_weight(s) == 0) {
    result.status = DecodeStatus::kClean;
    return result;
  }
  const auto it = table_.find(s);
  if (it == table_.end()) {
    result.status = DecodeStatus::kUncorrectable;
    return result;
  }
  auto& x = result.word[it->second.position];
  x = field_.add(x, field_.neg(it->second.value));
  result.status = DecodeStatus::kCorrected;
  result.error_position = it->second.position;
  return result;
}

DecodeResult syndrome_decode_single(const LinearCode& code,
                                    std::span<const std::uint8_t> received) {
  return SyndromeDecoder(code).decode(received);
}

std::string to_string(DecodeStatus status) {
  switch (status) {
    case DecodeStatus::kClean:
      return "clean";
    case DecodeStatus::kCorrected:
      return "corrected";
    case DecodeStatus::kUncorrectable:
      return "uncorrectable";
  }
  return "uncorrectable";
}

}  // namespace unitgraph
