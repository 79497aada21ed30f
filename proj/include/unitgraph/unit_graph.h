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

// The unit graph G(R) of a direct sum of residue rings: vertices are the ring
// elements, and distinct a, b are adjacent iff a + b is a unit.

#ifndef UNITGRAPH_UNIT_GRAPH_H_
#define UNITGRAPH_UNIT_GRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "unitgraph/ring_core.h"

namespace unitgraph {

using VertexId = std::uint32_t;

// A path or cycle length that may be infinite; nullopt stands for infinity.
using Length = std::optional<std::uint64_t>;

inline constexpr std::uint64_t kDefaultVertexBudget = 10'000;

struct Edge {
  VertexId u = 0;  // u < v
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable after construction. Vertex i is element_at(i, spec): residue
// tuples in lexicographic order. Edges are sorted (u, v) pairs with u < v and
// neighbor lists are sorted.
class UnitGraph {
 public:
  const RingSpec& spec() const { return spec_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<RingElement>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId a, VertexId b) const;

 private:
  friend UnitGraph build_unit_graph(const RingSpec&, std::uint64_t);
  explicit UnitGraph(RingSpec spec) : spec_(std::move(spec)) {}

  RingSpec spec_;
  std::vector<RingElement> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;  // CSR row starts, size |V| + 1
  std::vector<VertexId> adjacency_;
};

// Throws ResourceError when the ring has more than max_vertices elements.
UnitGraph build_unit_graph(const RingSpec& spec,
                           std::uint64_t max_vertices = kDefaultVertexBudget);

std::uint64_t edge_count(const UnitGraph& g);

// Closed-form edge count: (N - 1) * Phi / 2 when every modulus is odd and
// N * Phi / 2 otherwise, with N the product of the moduli and Phi the product
// of their totients.
std::uint64_t expected_edge_count(const RingSpec& spec);

bool is_connected(const UnitGraph& g);

// Unweighted distances from source; unreachable vertices get nullopt.
std::vector<Length> bfs_distances(const UnitGraph& g, VertexId source);

// Largest shortest-path distance; infinite when disconnected, 0 for a single
// vertex.
Length diameter(const UnitGraph& g, unsigned threads = 0);

// Shortest cycle length; infinite for forests.
Length girth(const UnitGraph& g, unsigned threads = 0);

struct Bipartition {
  bool bipartite = false;
  // Side (0 or 1) of every vertex; filled only when bipartite.
  std::vector<std::uint8_t> coloring;
};

Bipartition bipartition(const UnitGraph& g);
bool is_bipartite(const UnitGraph& g);

struct DegreeStats {
  std::uint64_t min_degree = 0;
  std::uint64_t max_degree = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // degree -> vertex count
};

DegreeStats degree_stats(const UnitGraph& g);

// Exact edge connectivity: the minimum over all t != 0 of the unit-capacity
// maximum flow between vertex 0 and t. A global minimum cut separates vertex 0
// from some t, so the sweep is exact. Disconnected graphs and the single-vertex
// graph give 0.
std::uint64_t edge_connectivity(const UnitGraph& g, unsigned threads = 0);

// Maximum number of edge-disjoint source-sink paths, stopping early once
// limit paths are found.
std::uint64_t max_flow(const UnitGraph& g, VertexId source, VertexId sink,
                       std::uint64_t limit);

struct GraphInvariants {
  bool connected = false;
  Length diameter;
  Length girth;
  bool bipartite = false;
  std::uint64_t min_degree = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t edge_connectivity = 0;

  friend bool operator==(const GraphInvariants&, const GraphInvariants&) = default;
};

GraphInvariants analyze_graph(const UnitGraph& g, unsigned threads = 0);

// "p <vertices> <edges>" followed by one "u v" line per edge.
void write_edge_list(std::ostream& out, const UnitGraph& g);

}  // namespace unitgraph

#endif  // UNITGRAPH_UNIT_GRAPH_H_
