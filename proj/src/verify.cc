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

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

#include "unitgraph/parallel.h"

namespace unitgraph {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kMatch:
      return "match";
    case Verdict::kMismatch:
      return "mismatch";
    case Verdict::kUnverified:
      return "unverified";
    case Verdict::kNotApplicable:
      return "not-applicable";
  }
  return "not-applicable";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "match") return Verdict::kMatch;
  if (s == "mismatch") return Verdict::kMismatch;
  if (s == "unverified") return Verdict::kUnverified;
  if (s == "not-applicable") return Verdict::kNotApplicable;
  throw DomainError("unknown verdict '" + s + "'");
}

std::uint64_t distance_budget_from_env() {
  const char* raw = std::getenv("UNITGRAPH_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultDistanceBudget;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0 || raw[0] == '-') {
    throw DomainError(std::string("UNITGRAPH_BUDGET must be a positive integer, got '") +
                      raw + "'");
  }
  return value;
}

bool VerificationReport::has_mismatch() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const auto& kv) { return kv.second == Verdict::kMismatch; });
}

namespace {

const char* const kVerdictKeys[] = {
    "conj1",          "conj2",      "thm_edges",    "thm_bipartite",
    "thm_min_degree", "thm_lambda", "thm_code",     "thm_dual_dim",
    "thm_dual_d",     "dual_d_equals_girth"};

void check_q(unsigned q) {
  if (q < 3 || q >= 256 || !is_prime(q)) {
    throw DomainError("q must be an odd prime below 256, got " + std::to_string(q));
  }
}

std::uint64_t narrow(__int128 v) {
  if (v < 0 || v > static_cast<__int128>(std::numeric_limits<std::uint64_t>::max())) {
    throw ResourceError("closed-form value out of range");
  }
  return static_cast<std::uint64_t>(v);
}

Verdict compare(std::uint64_t predicted, std::uint64_t measured) {
  return predicted == measured ? Verdict::kMatch : Verdict::kMismatch;
}

Verdict compare_distance(std::uint64_t predicted, const MinDistance& measured) {
  switch (measured.status) {
    case DistanceStatus::kExact:
      return compare(predicted, measured.value);
    case DistanceStatus::kUnknown:
      return Verdict::kUnverified;
    case DistanceStatus::kUndefined:
      // The code is {0}; no distance can equal the claim.
      return Verdict::kMismatch;
  }
  return Verdict::kUnverified;
}

Verdict compare_code(const CodeClaim& predicted, const CodeMeasurement& measured) {
  if (predicted.length != measured.length || predicted.dimension != measured.dimension) {
    return Verdict::kMismatch;
  }
  return compare_distance(predicted.distance, measured.distance);
}

CodeMeasurement measure(const LinearCode& c) { return {c.length, c.dimension, c.distance}; }

UnitGraph graph_of(std::uint64_t n, const HarnessOptions& options) {
  if (n == 0) throw DomainError("n must be at least 1");
  return build_unit_graph(RingSpec({n}), options.vertex_budget);
}

unsigned code_field_for(std::uint64_t n, unsigned q) { return n % 2 == 1 ? 2 : q; }

struct MeasuredCodes {
  CodeMeasurement code;
  CodeMeasurement dual;
};

MeasuredCodes measure_codes(const UnitGraph& g, unsigned field, const HarnessOptions& options) {
  const LinearCode code =
      code_from_incidence(g, field, options.distance_budget, options.threads);
  const LinearCode dual = dual_code(code, options.distance_budget, options.threads);
  return {measure(code), measure(dual)};
}

std::string length_string(const Length& l) { return l ? std::to_string(*l) : "inf"; }

}  // namespace

Predictions predict(std::uint64_t n, unsigned q) {
  if (n == 0) throw DomainError("n must be at least 1");
  check_q(q);
  Predictions p;
  const RingSpec spec = n == 1 ? RingSpec({1}) : crt_decompose(n);
  p.edge_count = expected_edge_count(spec);
  // 2 is a unit exactly when n is odd; in the zero ring Z_1 it equals 1.
  p.diameter_bound = n % 2 == 1 ? 2 : 3;
  if (n == 1) return p;

  const __int128 phi = euler_phi(n);
  const __int128 nn = n;
  // Odd part P of n and the product of the totients of its prime powers.
  unsigned m = 0;
  __int128 odd_part = 1;
  __int128 odd_phi = 1;
  for (const PrimePower& pp : factorize(n)) {
    if (pp.prime == 2) {
      m = pp.exponent;
    } else {
      odd_part *= pp.value();
      odd_phi *= euler_phi(pp.value());
    }
  }

  if (m == 0) {
    p.min_degree = narrow(odd_phi - 1);
    p.edge_connectivity = narrow(odd_phi - 1);
    p.conjecture_code = CodeClaim{narrow((nn - 1) * phi / 2), narrow(nn - 1), narrow(phi - 1)};
    const __int128 length = (odd_part - 1) * odd_phi / 2;
    p.theorem_code = CodeClaim{narrow(length), narrow(odd_part - 1), narrow(odd_phi - 1)};
    p.theorem_dual = CodeClaim{narrow(length), narrow((odd_part - 1) * (odd_phi - 2) / 2), 3};
  } else {
    const __int128 two_m = __int128{1} << m;
    const __int128 half_two_m = two_m / 2;  // 2^(m-1)
    p.bipartite = true;
    p.min_degree = narrow(half_two_m * odd_phi);
    p.edge_connectivity = narrow(half_two_m * odd_phi);
    p.conjecture_code = CodeClaim{narrow(nn * phi / 2), narrow(nn - 1), narrow(phi)};
    const __int128 length = odd_part * odd_phi * half_two_m * half_two_m;
    // 2^m P (2^(m-2) Phi - 1) + 1, expanded so that m = 1 stays integral.
    const __int128 dual_dim = half_two_m * half_two_m * odd_part * odd_phi - two_m * odd_part + 1;
    p.theorem_code = CodeClaim{narrow(length), narrow(two_m * odd_part - 1),
                               narrow(half_two_m * odd_phi)};
    p.theorem_dual = CodeClaim{narrow(length), narrow(dual_dim), 4};
  }
  return p;
}

VerificationReport build_report(std::uint64_t n, unsigned q, const HarnessOptions& options) {
  check_q(q);
  VerificationReport r;
  r.n = n;
  r.q = q;
  const UnitGraph g = graph_of(n, options);
  r.factorization = factorize(n);
  r.vertices = g.vertex_count();
  r.graph = analyze_graph(g, options.threads);
  r.predicted = predict(n, q);
  const Predictions& p = r.predicted;
  for (const char* key : kVerdictKeys) r.verdicts[key] = Verdict::kNotApplicable;

  r.verdicts["thm_edges"] = compare(*p.edge_count, r.graph.edge_count);
  r.verdicts["conj1"] = r.graph.connected && r.graph.diameter &&
                                *r.graph.diameter <= *p.diameter_bound
                            ? Verdict::kMatch
                            : Verdict::kMismatch;
  if (n == 1) {
    r.notes.push_back(
        "Z_1 is the zero ring: its only element 0 = 1 is a unit, so 2 counts as a unit");
    return r;
  }

  if (p.bipartite) r.verdicts["thm_bipartite"] = r.graph.bipartite ? Verdict::kMatch : Verdict::kMismatch;
  r.verdicts["thm_min_degree"] = compare(*p.min_degree, r.graph.min_degree);
  r.verdicts["thm_lambda"] = compare(*p.edge_connectivity, r.graph.edge_connectivity);

  r.code_field = code_field_for(n, q);
  const MeasuredCodes codes = measure_codes(g, r.code_field, options);
  r.code = codes.code;
  r.dual = codes.dual;
  r.verdicts["conj2"] = compare_code(*p.conjecture_code, codes.code);
  r.verdicts["thm_code"] = compare_code(*p.theorem_code, codes.code);
  r.verdicts["thm_dual_dim"] = compare(p.theorem_dual->dimension, codes.dual.dimension);
  r.verdicts["thm_dual_d"] = compare_distance(p.theorem_dual->distance, codes.dual.distance);

  const MinDistance& dual_d = codes.dual.distance;
  if (dual_d.status == DistanceStatus::kUnknown) {
    r.verdicts["dual_d_equals_girth"] = Verdict::kUnverified;
  } else if (dual_d.is_exact()) {
    r.verdicts["dual_d_equals_girth"] =
        r.graph.girth && *r.graph.girth == dual_d.value ? Verdict::kMatch : Verdict::kMismatch;
  }

  if (dual_d.status == DistanceStatus::kUndefined) {
    r.notes.push_back("the dual code is {0} (dimension 0), so its minimum distance is undefined");
  }
  if (r.verdicts["thm_dual_d"] == Verdict::kMismatch && dual_d.is_exact() && r.graph.girth &&
      *r.graph.girth == dual_d.value) {
    r.notes.push_back("measured dual distance " + dual_d.to_string() + " equals the girth, not the predicted " +
                      std::to_string(p.theorem_dual->distance));
  }
  if (codes.code.distance.status == DistanceStatus::kUnknown ||
      dual_d.status == DistanceStatus::kUnknown) {
    r.notes.push_back("some minimum distances exceed the budget of " +
                      std::to_string(options.distance_budget) +
                      " evaluations; those claims are unverified");
  }
  return r;
}

Conjecture1Check verify_conjecture1(std::uint64_t n, const HarnessOptions& options) {
  const UnitGraph g = graph_of(n, options);
  Conjecture1Check c;
  c.connected = is_connected(g);
  c.bound = n % 2 == 1 ? 2 : 3;
  c.diameter = diameter(g, options.threads);
  c.verdict = c.connected && c.diameter && *c.diameter <= c.bound ? Verdict::kMatch
                                                                  : Verdict::kMismatch;
  return c;
}

CodeCheck verify_conjecture2(std::uint64_t n, unsigned q, const HarnessOptions& options) {
  check_q(q);
  CodeCheck c;
  if (n < 2) return c;
  const UnitGraph g = graph_of(n, options);
  c.field = code_field_for(n, q);
  c.predicted = predict(n, q).conjecture_code;
  const LinearCode code = code_from_incidence(g, c.field, options.distance_budget, options.threads);
  c.measured = measure(code);
  c.verdict = compare_code(*c.predicted, *c.measured);
  return c;
}

CodeTheoremCheck verify_code_theorems(std::uint64_t n, unsigned q, const HarnessOptions& options) {
  check_q(q);
  CodeTheoremCheck c;
  if (n < 2) return c;
  const UnitGraph g = graph_of(n, options);
  const Predictions p = predict(n, q);
  c.field = code_field_for(n, q);
  c.predicted_code = p.theorem_code;
  c.predicted_dual = p.theorem_dual;
  const MeasuredCodes codes = measure_codes(g, c.field, options);
  c.measured_code = codes.code;
  c.measured_dual = codes.dual;
  c.code_verdict = compare_code(*p.theorem_code, codes.code);
  c.dual_dim_verdict = compare(p.theorem_dual->dimension, codes.dual.dimension);
  c.dual_d_verdict = compare_distance(p.theorem_dual->distance, codes.dual.distance);
  return c;
}

bool crt_isomorphism_check(std::uint64_t n, std::uint64_t vertex_budget) {
  if (n < 2) throw DomainError("crt_isomorphism_check requires n >= 2");
  const RingSpec parts = crt_decompose(n);
  const UnitGraph whole = build_unit_graph(RingSpec({n}), vertex_budget);
  const UnitGraph split = build_unit_graph(parts, vertex_budget);
  std::vector<VertexId> image(n);
  std::vector<bool> hit(n, false);
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t idx = element_index(crt_map(x, n), parts);
    if (hit[idx]) return false;
    hit[idx] = true;
    image[x] = static_cast<VertexId>(idx);
  }
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      if (whole.adjacent(x, y) != split.adjacent(image[x], image[y])) return false;
    }
  }
  return true;
}

namespace {

using nlohmann::json;

json length_json(const Length& l) { return l ? json(*l) : json("infinity"); }

Length length_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "infinity") throw DomainError("bad length value");
    return std::nullopt;
  }
  return j.get<std::uint64_t>();
}

json distance_json(const MinDistance& d) {
  return d.is_exact() ? json(d.value) : json(d.to_string());
}

MinDistance distance_from_json(const json& j) {
  if (j.is_number_unsigned()) return MinDistance::exact(j.get<std::uint64_t>());
  const std::string s = j.get<std::string>();
  if (s == "unknown") return MinDistance::unknown();
  if (s == "undefined") return MinDistance::undefined();
  throw DomainError("bad distance value '" + s + "'");
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json claim_json(const std::optional<CodeClaim>& c) {
  if (!c) return nullptr;
  return {{"length", c->length}, {"dimension", c->dimension}, {"distance", c->distance}};
}

std::optional<CodeClaim> claim_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return CodeClaim{j.at("length").get<std::uint64_t>(), j.at("dimension").get<std::uint64_t>(),
                   j.at("distance").get<std::uint64_t>()};
}

json measurement_json(const std::optional<CodeMeasurement>& c) {
  if (!c) return nullptr;
  return {{"length", c->length}, {"dimension", c->dimension}, {"distance", distance_json(c->distance)}};
}

std::optional<CodeMeasurement> measurement_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return CodeMeasurement{j.at("length").get<std::uint64_t>(), j.at("dimension").get<std::uint64_t>(),
                         distance_from_json(j.at("distance"))};
}

}  // namespace

nlohmann::json to_json(const VerificationReport& r) {
  json factors = json::array();
  for (const PrimePower& pp : r.factorization) {
    factors.push_back({{"prime", pp.prime}, {"exponent", pp.exponent}});
  }
  json verdicts = json::object();
  for (const auto& [key, v] : r.verdicts) verdicts[key] = to_string(v);
  return {
      {"n", r.n},
      {"factorization", factors},
      {"q", r.q},
      {"code_field", r.code_field == 0 ? json(nullptr) : json(r.code_field)},
      {"vertices", r.vertices},
      {"graph",
       {{"connected", r.graph.connected},
        {"diameter", length_json(r.graph.diameter)},
        {"girth", length_json(r.graph.girth)},
        {"bipartite", r.graph.bipartite},
        {"min_degree", r.graph.min_degree},
        {"max_degree", r.graph.max_degree},
        {"edge_count", r.graph.edge_count},
        {"edge_connectivity", r.graph.edge_connectivity}}},
      {"predicted",
       {{"edge_count", optional_json(r.predicted.edge_count)},
        {"diameter_bound", optional_json(r.predicted.diameter_bound)},
        {"bipartite", optional_json(r.predicted.bipartite)},
        {"min_degree", optional_json(r.predicted.min_degree)},
        {"edge_connectivity", optional_json(r.predicted.edge_connectivity)},
        {"conjecture_code", claim_json(r.predicted.conjecture_code)},
        {"theorem_code", claim_json(r.predicted.theorem_code)},
        {"theorem_dual", claim_json(r.predicted.theorem_dual)}}},
      {"measured", {{"code", measurement_json(r.code)}, {"dual", measurement_json(r.dual)}}},
      {"verdicts", verdicts},
      {"notes", r.notes},
  };
}

VerificationReport report_from_json(const nlohmann::json& doc) {
  try {
    VerificationReport r;
    r.n = doc.at("n").get<std::uint64_t>();
    for (const json& f : doc.at("factorization")) {
      r.factorization.push_back({f.at("prime").get<std::uint64_t>(), f.at("exponent").get<unsigned>()});
    }
    r.q = doc.at("q").get<unsigned>();
    r.code_field = doc.at("code_field").is_null() ? 0 : doc.at("code_field").get<unsigned>();
    r.vertices = doc.at("vertices").get<std::uint64_t>();
    const json& g = doc.at("graph");
    r.graph.connected = g.at("connected").get<bool>();
    r.graph.diameter = length_from_json(g.at("diameter"));
    r.graph.girth = length_from_json(g.at("girth"));
    r.graph.bipartite = g.at("bipartite").get<bool>();
    r.graph.min_degree = g.at("min_degree").get<std::uint64_t>();
    r.graph.max_degree = g.at("max_degree").get<std::uint64_t>();
    r.graph.edge_count = g.at("edge_count").get<std::uint64_t>();
    r.graph.edge_connectivity = g.at("edge_connectivity").get<std::uint64_t>();
    const json& p = doc.at("predicted");
    r.predicted.edge_count = optional_from_json<std::uint64_t>(p.at("edge_count"));
    r.predicted.diameter_bound = optional_from_json<std::uint64_t>(p.at("diameter_bound"));
    r.predicted.bipartite = optional_from_json<bool>(p.at("bipartite"));
    r.predicted.min_degree = optional_from_json<std::uint64_t>(p.at("min_degree"));
    r.predicted.edge_connectivity = optional_from_json<std::uint64_t>(p.at("edge_connectivity"));
    r.predicted.conjecture_code = claim_from_json(p.at("conjecture_code"));
    r.predicted.theorem_code = claim_from_json(p.at("theorem_code"));
    r.predicted.theorem_dual = claim_from_json(p.at("theorem_dual"));
    r.code = measurement_from_json(doc.at("measured").at("code"));
    r.dual = measurement_from_json(doc.at("measured").at("dual"));
    for (const auto& [key, v] : doc.at("verdicts").items()) {
      r.verdicts[key] = verdict_from_string(v.get<std::string>());
    }
    r.notes = doc.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string factorization_string(std::uint64_t n, const std::vector<PrimePower>& f) {
  if (f.empty()) return std::to_string(n);
  std::string out;
  for (const PrimePower& pp : f) {
    if (!out.empty()) out += '*';
    out += std::to_string(pp.prime);
    if (pp.exponent > 1) out += '^' + std::to_string(pp.exponent);
  }
  return out;
}

std::string claim_string(const std::optional<CodeClaim>& c, unsigned field) {
  if (!c) return "-";
  return "[" + std::to_string(c->length) + ", " + std::to_string(c->dimension) + ", " +
         std::to_string(c->distance) + "]_" + std::to_string(field);
}

std::string measurement_string(const std::optional<CodeMeasurement>& c, unsigned field) {
  if (!c) return "-";
  return "[" + std::to_string(c->length) + ", " + std::to_string(c->dimension) + ", " +
         c->distance.to_string() + "]_" + std::to_string(field);
}

template <class T>
std::string opt_string(const std::optional<T>& v) {
  if (!v) return "-";
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "true" : "false";
  } else {
    return std::to_string(*v);
  }
}

std::string verdict_of(const VerificationReport& r, const std::string& key) {
  const auto it = r.verdicts.find(key);
  return to_string(it == r.verdicts.end() ? Verdict::kNotApplicable : it->second);
}

}  // namespace

std::string format_text(const VerificationReport& r) {
  std::ostringstream out;
  const unsigned f = r.code_field;
  out << "G(Z_" << r.n << ")  n = " << factorization_string(r.n, r.factorization);
  if (f != 0) out << "  codes over F_" << f;
  out << "\n";
  out << "vertices " << r.vertices << ", edges " << r.graph.edge_count << ", connected "
      << (r.graph.connected ? "yes" : "no") << ", diameter " << length_string(r.graph.diameter)
      << ", girth " << length_string(r.graph.girth) << ", bipartite "
      << (r.graph.bipartite ? "yes" : "no") << "\n";
  out << "degree " << r.graph.min_degree << ".." << r.graph.max_degree
      << ", edge connectivity " << r.graph.edge_connectivity << "\n";
  if (r.code) {
    out << "code " << measurement_string(r.code, f) << "  dual " << measurement_string(r.dual, f)
        << "\n";
  }
  out << "\n";

  struct Row {
    std::string claim, predicted, measured, verdict;
  };
  const Predictions& p = r.predicted;
  std::vector<Row> rows = {
      {"conj1", "connected, diam <= " + opt_string(p.diameter_bound),
       std::string(r.graph.connected ? "connected" : "disconnected") + ", diam " +
           length_string(r.graph.diameter),
       verdict_of(r, "conj1")},
      {"conj2", claim_string(p.conjecture_code, f), measurement_string(r.code, f),
       verdict_of(r, "conj2")},
      {"thm_edges", opt_string(p.edge_count), std::to_string(r.graph.edge_count),
       verdict_of(r, "thm_edges")},
      {"thm_bipartite", opt_string(p.bipartite), r.graph.bipartite ? "true" : "false",
       verdict_of(r, "thm_bipartite")},
      {"thm_min_degree", opt_string(p.min_degree), std::to_string(r.graph.min_degree),
       verdict_of(r, "thm_min_degree")},
      {"thm_lambda", opt_string(p.edge_connectivity), std::to_string(r.graph.edge_connectivity),
       verdict_of(r, "thm_lambda")},
      {"thm_code", claim_string(p.theorem_code, f), measurement_string(r.code, f),
       verdict_of(r, "thm_code")},
      {"thm_dual_dim", p.theorem_dual ? std::to_string(p.theorem_dual->dimension) : "-",
       r.dual ? std::to_string(r.dual->dimension) : "-", verdict_of(r, "thm_dual_dim")},
      {"thm_dual_d", p.theorem_dual ? std::to_string(p.theorem_dual->distance) : "-",
       r.dual ? r.dual->distance.to_string() : "-", verdict_of(r, "thm_dual_d")},
      {"dual_d_equals_girth", length_string(r.graph.girth),
       r.dual ? r.dual->distance.to_string() : "-", verdict_of(r, "dual_d_equals_girth")},
  };
  std::size_t w0 = 5, w1 = 9, w2 = 8;
  for (const Row& row : rows) {
    w0 = std::max(w0, row.claim.size());
    w1 = std::max(w1, row.predicted.size());
    w2 = std::max(w2, row.measured.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  out << pad("claim", w0) << pad("predicted", w1) << pad("measured", w2) << "verdict\n";
  for (const Row& row : rows) {
    out << pad(row.claim, w0) << pad(row.predicted, w1) << pad(row.measured, w2) << row.verdict
        << "\n";
  }
  for (const std::string& note : r.notes) out << "note: " << note << "\n";
  return out.str();
}

std::string csv_header() {
  return "n,factorization,q,vertices,edges,connected,diameter,girth,bipartite,min_degree,"
         "edge_connectivity,code_len,code_dim,code_d,dual_dim,dual_d,verdict_conj1,"
         "verdict_conj2,verdict_thm_edges,verdict_thm_lambda,verdict_dual_d";
}

std::string csv_row(const VerificationReport& r) {
  const std::string na = "n/a";
  std::ostringstream out;
  out << r.n << ',' << factorization_string(r.n, r.factorization) << ','
      << (r.code_field == 0 ? na : std::to_string(r.code_field)) << ',' << r.vertices << ','
      << r.graph.edge_count << ',' << (r.graph.connected ? "true" : "false") << ','
      << length_string(r.graph.diameter) << ',' << length_string(r.graph.girth) << ','
      << (r.graph.bipartite ? "true" : "false") << ',' << r.graph.min_degree << ','
      << r.graph.edge_connectivity << ',';
  if (r.code) {
    out << r.code->length << ',' << r.code->dimension << ',' << r.code->distance.to_string() << ',';
  } else {
    out << na << ',' << na << ',' << na << ',';
  }
  if (r.dual) {
    out << r.dual->dimension << ',' << r.dual->distance.to_string() << ',';
  } else {
    out << na << ',' << na << ',';
  }
  out << verdict_of(r, "conj1") << ',' << verdict_of(r, "conj2") << ','
      << verdict_of(r, "thm_edges") << ',' << verdict_of(r, "thm_lambda") << ','
      << verdict_of(r, "thm_dual_d");
  return out.str();
}

SweepSummary sweep(std::uint64_t from, std::uint64_t to, unsigned q, std::ostream& out,
                   const HarnessOptions& options) {
  if (from == 0 || from > to) throw DomainError("sweep needs 1 <= from <= to");
  check_q(q);
  if (to > options.vertex_budget) {
    throw ResourceError("sweep upper end " + std::to_string(to) + " exceeds the vertex budget");
  }
  const std::size_t count = to - from + 1;
  const unsigned workers = resolve_threads(options.threads);
  HarnessOptions inner = options;
  if (workers > 1) inner.threads = 1;
  std::vector<VerificationReport> reports(count);
  parallel_for(count, workers, [&](unsigned, std::size_t i) {
    reports[i] = build_report(from + i, q, inner);
  });
  SweepSummary summary;
  out << csv_header() << '\n';
  for (const VerificationReport& r : reports) {
    out << csv_row(r) << '\n';
    ++summary.rows;
    if (r.has_mismatch()) ++summary.mismatches;
    for (const auto& [key, v] : r.verdicts) {
      if (v == Verdict::kMismatch) ++summary.mismatch_counts[key];
    }
  }
  return summary;
}

namespace {

// Uniform integer in [0, bound) from a 64-bit engine, by rejection, so the
// stream depends only on the engine and not on the standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

}  // namespace

DecodeDemoResult run_decode_demo(std::uint64_t n, unsigned q, unsigned errors,
                                 std::uint64_t trials, std::uint64_t seed,
                                 const HarnessOptions& options) {
  if (n < 2) throw DomainError("decode demo needs n >= 2");
  const UnitGraph g = graph_of(n, options);
  const LinearCode code = code_from_incidence(g, q, options.distance_budget, options.threads);
  const LinearCode dual = dual_code(code, options.distance_budget, options.threads);
  if (errors > dual.length) throw DomainError("more errors than code positions");
  if (dual.dimension == 0) throw DomainError("dual code is {0}; nothing to transmit");
  const SyndromeDecoder decoder(dual);
  const PrimeField field(q);

  DecodeDemoResult result;
  result.code = measure(dual);
  result.trials = trials;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> positions(dual.length);
  for (std::uint64_t t = 0; t < trials; ++t) {
    GfVector sent(dual.length, 0);
    for (std::size_t i = 0; i < dual.dimension; ++i) {
      const auto coeff = static_cast<std::uint8_t>(uniform_below(rng, q));
      field.axpy(sent, coeff, dual.generator.row(i));
    }
    GfVector received = sent;
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    for (unsigned e = 0; e < errors; ++e) {
      const std::size_t pick = e + uniform_below(rng, dual.length - e);
      std::swap(positions[e], positions[pick]);
      const auto value = static_cast<std::uint8_t>(1 + uniform_below(rng, q - 1));
      received[positions[e]] = field.add(received[positions[e]], value);
    }
    const DecodeResult out = decoder.decode(received);
    if (out.word == sent) ++result.recovered;
    switch (out.status) {
      case DecodeStatus::kClean:
        ++result.clean;
        if (errors > 0) ++result.false_clean;
        break;
      case DecodeStatus::kCorrected:
        ++result.corrected;
        break;
      case DecodeStatus::kUncorrectable:
        ++result.uncorrectable;
        break;
    }
  }
  return result;
}

}  // namespace unitgraph
