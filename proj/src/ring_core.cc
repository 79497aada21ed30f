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

#include "unitgraph/ring_core.h"

#include <limits>
#include <utility>

namespace unitgraph {

std::uint64_t PrimePower::value() const {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < exponent; ++i) v *= prime;
  return v;
}

RingSpec::RingSpec(std::vector<std::uint64_t> moduli)
    : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw DomainError("ring spec needs at least one modulus");
  for (std::uint64_t m : moduli_) {
    if (m == 0) throw DomainError("modulus must be at least 1");
    if (cardinality_ > std::numeric_limits<std::uint64_t>::max() / m) {
      throw ResourceError("ring cardinality overflows 64 bits");
    }
    cardinality_ *= m;
  }
}

std::string RingSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i > 0) out += '+';
    out += "Z_" + std::to_string(moduli_[i]);
  }
  return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factor 0");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi(0) is undefined");
  std::uint64_t phi = n;
  for (const PrimePower& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

void check_element(const RingElement& x, const RingSpec& spec) {
  if (x.residues.size() != spec.arity()) {
    throw DomainError("element arity does not match ring spec");
  }
  for (std::size_t i = 0; i < spec.arity(); ++i) {
    if (x.residues[i] >= spec.moduli()[i]) {
      throw DomainError("residue not reduced modulo its modulus");
    }
  }
}

bool is_unit(const RingElement& x, const RingSpec& spec) {
  check_element(x, spec);
  for (std::size_t i = 0; i < spec.arity(); ++i) {
    if (gcd(x.residues[i], spec.moduli()[i]) != 1) return false;
  }
  return true;
}

RingElement add(const RingElement& a, const RingElement& b,
                const RingSpec& spec) {
  check_element(a, spec);
  check_element(b, spec);
  RingElement sum;
  sum.residues.resize(spec.arity());
  for (std::size_t i = 0; i < spec.arity(); ++i) {
    const std::uint64_t m = spec.moduli()[i];
    std::uint64_t s = a.residues[i] + b.residues[i];
    if (s >= m) s -= m;
    sum.residues[i] = s;
  }
  return sum;
}

std::vector<RingElement> units(const RingSpec& spec) {
  // Per-component unit residues, then their cartesian product in
  // lexicographic order.
  std::vector<std::vector<std::uint64_t>> per_component(spec.arity());
  for (std::size_t i = 0; i < spec.arity(); ++i) {
    const std::uint64_t m = spec.moduli()[i];
    for (std::uint64_t r = 0; r < m; ++r) {
      if (gcd(r, m) == 1) per_component[i].push_back(r);
    }
  }
  std::vector<RingElement> out;
  std::vector<std::size_t> cursor(spec.arity(), 0);
  while (true) {
    RingElement u;
    u.residues.reserve(spec.arity());
    for (std::size_t i = 0; i < spec.arity(); ++i) {
      u.residues.push_back(per_component[i][cursor[i]]);
    }
    out.push_back(std::move(u));
    std::size_t i = spec.arity();
    while (i > 0) {
      --i;
      if (++cursor[i] < per_component[i].size()) break;
      cursor[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::uint64_t element_index(const RingElement& x, const RingSpec& spec) {
  check_element(x, spec);
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < spec.arity(); ++i) {
    index = index * spec.moduli()[i] + x.residues[i];
  }
  return index;
}

RingElement element_at(std::uint64_t index, const RingSpec& spec) {
  if (index >= spec.cardinality()) throw DomainError("element index out of range");
  RingElement x;
  x.residues.resize(spec.arity());
  for (std::size_t i = spec.arity(); i-- > 0;) {
    x.residues[i] = index % spec.moduli()[i];
    index /= spec.moduli()[i];
  }
  return x;
}

RingSpec crt_decompose(std::uint64_t n) {
  if (n < 2) throw DomainError("crt_decompose requires n >= 2");
  std::vector<std::uint64_t> moduli;
  for (const PrimePower& pp : factorize(n)) moduli.push_back(pp.value());
  return RingSpec(std::move(moduli));
}

RingElement crt_map(std::uint64_t x, std::uint64_t n) {
  if (n < 2) throw DomainError("crt_map requires n >= 2");
  if (x >= n) throw DomainError("crt_map argument out of range");
  const RingSpec spec = crt_decompose(n);
  RingElement out;
  for (std::uint64_t m : spec.moduli()) out.residues.push_back(x % m);
  return out;
}

bool unit_plus_nonunit_is_unit(std::uint64_t prime_power) {
  const std::vector<PrimePower> f = prime_power >= 2
                                        ? factorize(prime_power)
                                        : std::vector<PrimePower>{};
  if (f.size() != 1) throw DomainError("modulus is not a prime power");
  const std::uint64_t m = prime_power;
  for (std::uint64_t u = 0; u < m; ++u) {
    if (gcd(u, m) != 1) continue;
    for (std::uint64_t v = 0; v < m; ++v) {
      if (gcd(v, m) == 1) continue;
      if (gcd((u + v) % m, m) != 1) return false;
    }
  }
  return true;
}

}  // namespace unitgraph
