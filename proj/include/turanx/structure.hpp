#pragma once

#include <vector>

#include "turanx/core.hpp"
#include "turanx/ops.hpp"

namespace turanx {

struct StructureReport {
  Graph fat_graph;                        // t-fat pairs of the input
  std::vector<std::vector<Vertex>> parts;  // k-partition minimizing internal fat edges
  std::vector<int> internal_degree;        // within-part fat-degree per vertex
  std::vector<Vertex> b_candidates;        // internal_degree >= theta * n
  std::uint64_t internal_edges = 0;
  bool exact = false;
};

namespace detail {

inline std::uint64_t internal_edge_count(const Graph& g, const std::vector<int>& owner) {
  std::uint64_t count = 0;
  for (const Edge& e : g.edges)
    if (owner[static_cast<std::size_t>(e[0])] == owner[static_cast<std::size_t>(e[1])]) ++count;
  return count;
}

// Exact minimum-internal-edge partition into at most k classes, by restricted
// growth strings with incremental pruning.
inline std::vector<int> min_internal_partition_exact(const Graph& g, int k) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
  for (const Edge& e : g.edges) {
    adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  std::vector<int> owner(static_cast<std::size_t>(g.n), -1);
  std::vector<int> best_owner(static_cast<std::size_t>(g.n), 0);
  std::uint64_t best = ~std::uint64_t{0};
  auto rec = [&](auto&& self, int v, int used, std::uint64_t cost) -> void {
    if (cost >= best) return;
    if (v == g.n) {
      best = cost;
      best_owner = owner;
      return;
    }
    int limit = std::min(used, k - 1);
    for (int c = 0; c <= limit; ++c) {
      std::uint64_t extra = 0;
      for (int u : adj[static_cast<std::size_t>(v)])
        if (u < v && owner[static_cast<std::size_t>(u)] == c) ++extra;
      owner[static_cast<std::size_t>(v)] = c;
      self(self, v + 1, std::max(used, c + 1), cost + extra);
      owner[static_cast<std::size_t>(v)] = -1;
    }
  };
  rec(rec, 0, 0, 0);
  return best_owner;
}

// Deterministic local search: greedy assignment followed by single-vertex
// improvement sweeps.
inline std::vector<int> min_internal_partition_local(const Graph& g, int k) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
  for (const Edge& e : g.edges) {
    adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  std::vector<int> owner(static_cast<std::size_t>(g.n), 0);
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> load(static_cast<std::size_t>(k), 0);
    for (int u : adj[static_cast<std::size_t>(v)])
      if (u < v) ++load[static_cast<std::size_t>(owner[static_cast<std::size_t>(u)])];
    int pick = 0;
    for (int c = 1; c < k; ++c)
      if (load[static_cast<std::size_t>(c)] < load[static_cast<std::size_t>(pick)]) pick = c;
    owner[static_cast<std::size_t>(v)] = pick;
  }
  bool improved = true;
  while (improved) {
    improved = false;
    for (int v = 0; v < g.n; ++v) {
      std::vector<int> load(static_cast<std::size_t>(k), 0);
      for (int u : adj[static_cast<std::size_t>(v)])
        ++load[static_cast<std::size_t>(owner[static_cast<std::size_t>(u)])];
      int cur = owner[static_cast<std::size_t>(v)];
      int pick = cur;
      for (int c = 0; c < k; ++c)
        if (load[static_cast<std::size_t>(c)] < load[static_cast<std::size_t>(pick)]) pick = c;
      if (pick != cur) {
        owner[static_cast<std::size_t>(v)] = pick;
        improved = true;
      }
    }
  }
  return owner;
}

}  // namespace detail

// Finite proxy for the fat-graph structure analysis: computes the t-fat pair
// graph, a k-partition minimizing its internal edges (exact up to
// exact_bound vertices, deterministic local search beyond), per-vertex
// internal fat-degree, and the vertices whose internal degree reaches
// theta * n.
inline StructureReport analyze_structure(const UniformHypergraph& h, int k, int t, double theta,
                                         int exact_bound = 12) {
  if (k < 1) fail(errc::invalid_argument, "need at least one part");
  StructureReport report;
  report.fat_graph = fat_pair_graph(h, t);
  report.exact = h.n <= exact_bound;
  std::vector<int> owner = report.exact
                               ? detail::min_internal_partition_exact(report.fat_graph, k)
                               : detail::min_internal_partition_local(report.fat_graph, k);
  report.parts.assign(static_cast<std::size_t>(k), {});
  for (int v = 0; v < h.n; ++v)
    report.parts[static_cast<std::size_t>(owner[static_cast<std::size_t>(v)])].push_back(v);
  report.internal_degree.assign(static_cast<std::size_t>(std::max(h.n, 1)), 0);
  for (const Edge& e : report.fat_graph.edges) {
    if (owner[static_cast<std::size_t>(e[0])] != owner[static_cast<std::size_t>(e[1])]) continue;
    ++report.internal_edges;
    ++report.internal_degree[static_cast<std::size_t>(e[0])];
    ++report.internal_degree[static_cast<std::size_t>(e[1])];
  }
  for (int v = 0; v < h.n; ++v)
    if (report.internal_degree[static_cast<std::size_t>(v)] >= theta * h.n)
      report.b_candidates.push_back(v);
  return report;
}

}  // namespace turanx
