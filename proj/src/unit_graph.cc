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

#include "unitgraph/unit_graph.h"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "unitgraph/parallel.h"

namespace unitgraph {

bool UnitGraph::adjacent(VertexId a, VertexId b) const {
  const auto n = neighbors(a);
  return std::binary_search(n.begin(), n.end(), b);
}

UnitGraph build_unit_graph(const RingSpec& spec, std::uint64_t max_vertices) {
  if (spec.cardinality() > max_vertices) {
    throw ResourceError("unit graph of " + spec.to_string() + " has " +
                        std::to_string(spec.cardinality()) +
                        " vertices, above the budget of " +
                        std::to_string(max_vertices));
  }
  if (spec.cardinality() > std::numeric_limits<VertexId>::max()) {
    throw ResourceError("vertex count exceeds the vertex id range");
  }
  UnitGraph g(spec);
  const std::size_t n = spec.cardinality();
  const std::size_t r = spec.arity();
  const auto& moduli = spec.moduli();

  g.vertices_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g.vertices_.push_back(element_at(i, spec));

  // The neighbors of a are exactly u - a for units u, minus a itself (when
  // 2a is a unit). Distinct units give distinct neighbors.
  const std::vector<RingElement> unit_list = units(spec);
  g.offsets_.assign(n + 1, 0);
  std::vector<std::vector<VertexId>> lists(n);
  for (std::size_t a = 0; a < n; ++a) {
    const RingElement& x = g.vertices_[a];
    auto& out = lists[a];
    out.reserve(unit_list.size());
    for (const RingElement& u : unit_list) {
      std::uint64_t index = 0;
      for (std::size_t i = 0; i < r; ++i) {
        const std::uint64_t m = moduli[i];
        index = index * m + (u.residues[i] + m - x.residues[i]) % m;
      }
      if (index != a) out.push_back(static_cast<VertexId>(index));
    }
    std::sort(out.begin(), out.end());
    g.offsets_[a + 1] = g.offsets_[a] + out.size();
  }
  g.adjacency_.reserve(g.offsets_[n]);
  for (std::size_t a = 0; a < n; ++a) {
    for (VertexId b : lists[a]) {
      g.adjacency_.push_back(b);
      if (a < b) g.edges_.push_back({static_cast<VertexId>(a), b});
    }
  }
  return g;
}

std::uint64_t edge_count(const UnitGraph& g) { return g.edge_count(); }

std::uint64_t expected_edge_count(const RingSpec& spec) {
  bool all_odd = true;
  unsigned __int128 phi = 1;
  for (std::uint64_t m : spec.moduli()) {
    phi *= euler_phi(m);
    if (m % 2 == 0) all_odd = false;
  }
  const unsigned __int128 n = spec.cardinality();
  const unsigned __int128 twice = all_odd ? (n - 1) * phi : n * phi;
  const unsigned __int128 edges = twice / 2;
  if (edges > std::numeric_limits<std::uint64_t>::max()) {
    throw ResourceError("edge count overflows 64 bits");
  }
  return static_cast<std::uint64_t>(edges);
}

std::vector<Length> bfs_distances(const UnitGraph& g, VertexId source) {
  std::vector<Length> dist(g.vertex_count());
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w]) continue;
      dist[w] = *dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

bool is_connected(const UnitGraph& g) {
  if (g.vertex_count() == 0) return true;
  const std::vector<Length> dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(),
                     [](const Length& d) { return d.has_value(); });
}

namespace {

// Eccentricity of source, or nullopt if some vertex is unreachable.
Length eccentricity(const UnitGraph& g, VertexId source,
                    std::vector<std::uint32_t>& dist,
                    std::vector<VertexId>& queue) {
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::fill(dist.begin(), dist.end(), kUnseen);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] != kUnseen) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  if (queue.size() != g.vertex_count()) return std::nullopt;
  return dist[queue.back()];
}

}  // namespace

Length diameter(const UnitGraph& g, unsigned threads) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  if (!is_connected(g)) return std::nullopt;
  const unsigned workers = resolve_threads(threads);
  std::vector<std::vector<std::uint32_t>> dist(workers, std::vector<std::uint32_t>(n));
  std::vector<std::vector<VertexId>> queue(workers);
  std::vector<std::uint64_t> best(workers, 0);
  parallel_for(n, workers, [&](unsigned w, std::size_t v) {
    const Length ecc = eccentricity(g, static_cast<VertexId>(v), dist[w], queue[w]);
    best[w] = std::max(best[w], *ecc);
  });
  return *std::max_element(best.begin(), best.end());
}

Length girth(const UnitGraph& g, unsigned threads) {
  // BFS from every root; a non-tree edge (u, w) closes a closed walk of
  // length dist[u] + dist[w] + 1 through the root, and the minimum over all
  // roots is the girth. Once 2 * dist[u] reaches the current best, nothing
  // shorter can appear below u.
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  const unsigned workers = resolve_threads(threads);
  std::vector<std::vector<std::uint32_t>> dist(workers, std::vector<std::uint32_t>(n));
  std::vector<std::vector<VertexId>> parent(workers, std::vector<VertexId>(n));
  std::vector<std::vector<VertexId>> queue(workers);
  parallel_for(n, workers, [&](unsigned w, std::size_t root) {
    auto& d = dist[w];
    auto& p = parent[w];
    auto& q = queue[w];
    std::fill(d.begin(), d.end(), kUnseen);
    q.clear();
    d[root] = 0;
    p[root] = static_cast<VertexId>(root);
    q.push_back(static_cast<VertexId>(root));
    std::uint64_t local = best.load();
    for (std::size_t head = 0; head < q.size(); ++head) {
      const VertexId u = q[head];
      if (2ull * d[u] >= local) break;
      for (VertexId x : g.neighbors(u)) {
        if (d[x] == kUnseen) {
          d[x] = d[u] + 1;
          p[x] = u;
          q.push_back(x);
        } else if (p[u] != x) {
          local = std::min<std::uint64_t>(local, std::uint64_t{d[u]} + d[x] + 1);
        }
      }
    }
    std::uint64_t seen = best.load();
    while (local < seen && !best.compare_exchange_weak(seen, local)) {
    }
  });
  if (best.load() == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return best.load();
}

Bipartition bipartition(const UnitGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint8_t kNone = 2;
  std::vector<std::uint8_t> color(n, kNone);
  std::vector<VertexId> queue;
  for (std::size_t start = 0; start < n; ++start) {
    if (color[start] != kNone) continue;
    color[start] = 0;
    queue.assign(1, static_cast<VertexId>(start));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      for (VertexId w : g.neighbors(u)) {
        if (color[w] == kNone) {
          color[w] = color[u] ^ 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return {};
        }
      }
    }
  }
  return {true, std::move(color)};
}

bool is_bipartite(const UnitGraph& g) { return bipartition(g).bipartite; }

DegreeStats degree_stats(const UnitGraph& g) {
  DegreeStats stats;
  if (g.vertex_count() == 0) return stats;
  stats.min_degree = std::numeric_limits<std::uint64_t>::max();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint64_t d = g.degree(v);
    stats.min_degree = std::min(stats.min_degree, d);
    stats.max_degree = std::max(stats.max_degree, d);
    ++stats.histogram[d];
  }
  return stats;
}

namespace {

// Dinic's algorithm on the symmetric unit-capacity network of an undirected
// graph. Arc k runs from the vertex owning CSR slot k to adjacency[k]; each
// undirected edge contributes one arc per direction with capacity 1.
class FlowSolver {
 public:
  FlowSolver(const UnitGraph& g, const std::vector<std::size_t>& reverse)
      : g_(g),
        reverse_(reverse),
        capacity_(reverse.size()),
        level_(g.vertex_count()),
        cursor_(g.vertex_count()) {}

  std::uint64_t run(VertexId source, VertexId sink, std::uint64_t limit) {
    std::fill(capacity_.begin(), capacity_.end(), 1);
    std::uint64_t flow = 0;
    while (flow < limit && build_levels(source, sink)) {
      for (VertexId v = 0; v < g_.vertex_count(); ++v) cursor_[v] = begin(v);
      while (flow < limit && augment(source, sink)) ++flow;
    }
    return flow;
  }

 private:
  std::size_t begin(VertexId v) const { return g_.neighbors(v).data() - base(); }
  std::size_t end(VertexId v) const { return begin(v) + g_.degree(v); }
  const VertexId* base() const { return g_.neighbors(0).data(); }
  VertexId head(std::size_t arc) const { return base()[arc]; }

  bool build_levels(VertexId source, VertexId sink) {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    level_[source] = 0;
    queue_.push_back(source);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const VertexId u = queue_[i];
      for (std::size_t arc = begin(u); arc < end(u); ++arc) {
        const VertexId w = head(arc);
        if (capacity_[arc] > 0 && level_[w] < 0) {
          level_[w] = level_[u] + 1;
          if (w == sink) return true;
          queue_.push_back(w);
        }
      }
    }
    return false;
  }

  // Finds one augmenting path in the level graph and pushes a unit along it.
  bool augment(VertexId source, VertexId sink) {
    path_.clear();
    VertexId u = source;
    while (u != sink) {
      std::size_t& arc = cursor_[u];
      while (arc < end(u) &&
             (capacity_[arc] == 0 || level_[head(arc)] != level_[u] + 1)) {
        ++arc;
      }
      if (arc == end(u)) {
        // Dead end: prune u from the level graph and retreat.
        level_[u] = -1;
        if (path_.empty()) return false;
        path_.pop_back();
        u = path_.empty() ? source : head(path_.back());
        ++cursor_[u];
        continue;
      }
      path_.push_back(arc);
      u = head(arc);
    }
    for (std::size_t arc : path_) {
      --capacity_[arc];
      ++capacity_[reverse_[arc]];
    }
    return true;
  }

  const UnitGraph& g_;
  const std::vector<std::size_t>& reverse_;
  std::vector<std::uint8_t> capacity_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  std::vector<VertexId> queue_;
  std::vector<std::size_t> path_;
};

std::vector<std::size_t> reverse_arcs(const UnitGraph& g) {
  std::vector<std::size_t> reverse;
  if (g.vertex_count() == 0) return reverse;
  const VertexId* base = g.neighbors(0).data();
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId w : g.neighbors(u)) {
      const auto nw = g.neighbors(w);
      const auto it = std::lower_bound(nw.begin(), nw.end(), u);
      reverse.push_back(static_cast<std::size_t>(&*it - base));
    }
  }
  return reverse;
}

}  // namespace

std::uint64_t max_flow(const UnitGraph& g, VertexId source, VertexId sink,
                       std::uint64_t limit) {
  if (source >= g.vertex_count() || sink >= g.vertex_count()) {
    throw DomainError("max_flow endpoint out of range");
  }
  if (source == sink) throw DomainError("max_flow needs distinct endpoints");
  const std::vector<std::size_t> reverse = reverse_arcs(g);
  FlowSolver solver(g, reverse);
  return solver.run(source, sink, limit);
}

std::uint64_t edge_connectivity(const UnitGraph& g, unsigned threads) {
  const std::size_t n = g.vertex_count();
  if (n <= 1 || !is_connected(g)) return 0;
  // Multiplying by a unit is an automorphism fixing 0, so one sink per
  // orbit suffices. Orbits are the classes of componentwise gcd(x_i, m_i).
  std::vector<VertexId> sinks;
  std::set<std::vector<std::uint64_t>> seen;
  const auto& moduli = g.spec().moduli();
  for (VertexId v = 1; v < n; ++v) {
    std::vector<std::uint64_t> key(moduli.size());
    for (std::size_t k = 0; k < moduli.size(); ++k) {
      key[k] = std::gcd(g.vertices()[v].residues[k], moduli[k]);
    }
    if (seen.insert(std::move(key)).second) sinks.push_back(v);
  }
  const std::vector<std::size_t> reverse = reverse_arcs(g);
  // lambda <= deg(0), so flows are capped at the best cut seen so far.
  std::atomic<std::uint64_t> best{g.degree(0)};
  const unsigned workers = resolve_threads(threads);
  std::vector<FlowSolver> solvers;
  solvers.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) solvers.emplace_back(g, reverse);
  parallel_for(sinks.size(), workers, [&](unsigned w, std::size_t i) {
    const VertexId sink = sinks[i];
    std::uint64_t cap = best.load();
    const std::uint64_t flow = solvers[w].run(0, sink, cap);
    while (flow < cap && !best.compare_exchange_weak(cap, flow)) {
    }
  });
  return best.load();
}

GraphInvariants analyze_graph(const UnitGraph& g, unsigned threads) {
  GraphInvariants inv;
  inv.connected = is_connected(g);
  inv.diameter = diameter(g, threads);
  inv.girth = girth(g, threads);
  inv.bipartite = is_bipartite(g);
  const DegreeStats stats = degree_stats(g);
  inv.min_degree = stats.min_degree;
  inv.max_degree = stats.max_degree;
  inv.edge_count = g.edge_count();
  inv.edge_connectivity = edge_connectivity(g, threads);
  return inv;
}

void write_edge_list(std::ostream& out, const UnitGraph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace unitgraph
