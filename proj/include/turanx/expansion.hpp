#pragma once

#include <map>
#include <optional>
#include <vector>

#include "turanx/core.hpp"
#include "turanx/ops.hpp"

namespace turanx {

// Certificate that a host r-graph contains F^(r)+: an injective placement of
// the core plus one host hyperedge per core edge. The r-2 extension vertices
// of each assigned hyperedge avoid every core image and the extension
// vertices of all other assigned hyperedges.
struct ExpansionWitness {
  std::vector<int> core_map;              // F vertex -> host vertex
  std::vector<Edge> edge_hyperedges;      // per F edge (lex order); empty = unassigned

  bool complete() const {
    for (const Edge& e : edge_hyperedges)
      if (e.empty()) return false;
    return true;
  }
};

// The r-uniform expansion: each edge gains r-2 fresh vertices. Core vertices
// keep their labels; fresh vertices are numbered consecutively after them,
// following the lexicographic order of the core edges.
inline UniformHypergraph expand(const Graph& f, int r) {
  require_graph(f, "expand");
  if (r < 2) fail(errc::invalid_argument, "expansion uniformity must be >= 2");
  int n = f.n + (r - 2) * static_cast<int>(f.edge_count());
  std::vector<Edge> edges;
  edges.reserve(f.edge_count());
  int next = f.n;
  for (const Edge& e : f.edges) {
    Edge he = e;
    for (int j = 0; j < r - 2; ++j) he.push_back(next++);
    std::sort(he.begin(), he.end());
    edges.push_back(std::move(he));
  }
  std::sort(edges.begin(), edges.end());
  return UniformHypergraph{n, r, std::move(edges)};
}

// Fatness threshold sufficient for greedy extension: (r-2)|E(F)| + |V(F)|.
inline int default_t(const Graph& f, int r) {
  require_graph(f, "default_t");
  return (r - 2) * static_cast<int>(f.edge_count()) + f.n;
}

inline bool validate_expansion_witness(const UniformHypergraph& host, const Graph& f, int r,
                                       const ExpansionWitness& w) {
  if (host.r != r) return false;
  if (static_cast<int>(w.core_map.size()) != f.n) return false;
  if (w.edge_hyperedges.size() != f.edges.size()) return false;
  std::vector<char> used(std::max(host.n, 1), 0);
  for (int img : w.core_map) {
    if (img < 0 || img >= host.n || used[img]) return false;
    used[img] = 1;
  }
  for (std::size_t j = 0; j < f.edges.size(); ++j) {
    const Edge& he = w.edge_hyperedges[j];
    if (he.empty()) return false;
    if (!host.has_edge(he)) return false;
    Edge pair{w.core_map[f.edges[j][0]], w.core_map[f.edges[j][1]]};
    std::sort(pair.begin(), pair.end());
    if (!std::includes(he.begin(), he.end(), pair.begin(), pair.end())) return false;
    for (Vertex v : he) {
      if (v == pair[0] || v == pair[1]) continue;
      if (used[v]) return false;  // hits the core or another extension
      used[v] = 1;
    }
  }
  return true;
}

namespace detail {

struct ExpansionSearch {
  const UniformHypergraph& host;
  const Graph& core;
  std::map<Edge, std::vector<int>> pair_edges;  // host pair -> hyperedge indices
  std::vector<int> core_map;
  std::vector<char> host_used;    // taken by a core image
  std::vector<char> ext_used;     // taken by core images or extensions
  std::vector<Edge> assignment;

  ExpansionSearch(const UniformHypergraph& h, const Graph& f) : host(h), core(f) {
    for (std::size_t i = 0; i < host.edges.size(); ++i) {
      const Edge& e = host.edges[i];
      for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t b = a + 1; b < e.size(); ++b)
          pair_edges[{e[a], e[b]}].push_back(static_cast<int>(i));
    }
    core_map.assign(f.n, -1);
    host_used.assign(std::max(h.n, 1), 0);
  }

  bool pair_coverable(Vertex u, Vertex v) const {
    Edge key{std::min(u, v), std::max(u, v)};
    return pair_edges.count(key) != 0;
  }

  // Stage 1: place core vertices in index order; each fully placed core edge
  // must lie inside at least one host hyperedge.
  bool place(int cv) {
    if (cv == core.n) return assign_edges();
    for (Vertex hv = 0; hv < host.n; ++hv) {
      if (host_used[hv]) continue;
      bool ok = true;
      for (const Edge& e : core.edges) {
        Vertex other = -1;
        if (e[0] == cv && e[1] < cv) other = e[1];
        if (e[1] == cv && e[0] < cv) other = e[0];
        if (other < 0) continue;
        if (!pair_coverable(core_map[other], hv)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      core_map[cv] = hv;
      host_used[hv] = 1;
      if (place(cv + 1)) return true;
      host_used[hv] = 0;
      core_map[cv] = -1;
    }
    return false;
  }

  // Stage 2: pick pairwise-compatible host hyperedges for the core edges.
  bool assign_edges() {
    ext_used.assign(std::max(host.n, 1), 0);
    for (int img : core_map) ext_used[img] = 1;
    assignment.assign(core.edges.size(), {});
    return assign_from(0);
  }

  bool assign_from(std::size_t j) {
    if (j == core.edges.size()) return true;
    Vertex u = core_map[core.edges[j][0]];
    Vertex v = core_map[core.edges[j][1]];
    Edge key{std::min(u, v), std::max(u, v)};
    auto it = pair_edges.find(key);
    if (it == pair_edges.end()) return false;
    for (int idx : it->second) {
      const Edge& he = host.edges[static_cast<std::size_t>(idx)];
      bool ok = true;
      for (Vertex w : he) {
        if (w == u || w == v) continue;
        if (ext_used[w]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (Vertex w : he)
        if (w != u && w != v) ext_used[w] = 1;
      assignment[j] = he;
      if (assign_from(j + 1)) return true;
      assignment[j] = {};
      for (Vertex w : he)
        if (w != u && w != v) ext_used[w] = 0;
    }
    return false;
  }
};

}  // namespace detail

// Searches for a copy of F^(r)+ in the host; returns the first witness under
// the deterministic ordering (core vertices in index order, host candidates
// ascending, hyperedges in lexicographic order).
inline std::optional<ExpansionWitness> contains_expansion(const UniformHypergraph& host,
                                                          const Graph& f, int r) {
  require_graph(f, "contains_expansion");
  if (host.r != r) fail(errc::uniformity_mismatch, "host uniformity differs from r");
  if (f.n + (r - 2) * static_cast<int>(f.edge_count()) > host.n) return std::nullopt;
  detail::ExpansionSearch search(host, f);
  if (!search.place(0)) return std::nullopt;
  return ExpansionWitness{std::move(search.core_map), std::move(search.assignment)};
}

inline bool is_expansion_free(const UniformHypergraph& host, const Graph& f, int r) {
  return !contains_expansion(host, f, r).has_value();
}

// Completes a partial witness whose unassigned core edges all map to t-fat
// host pairs. With t >= default_t(F, r) a compatible hyperedge always exists
// among the t pairwise-disjoint ones, because fewer than t vertices are in use.
inline ExpansionWitness greedy_extend(const UniformHypergraph& host, ExpansionWitness partial,
                                      const Graph& f, int t) {
  require_graph(f, "greedy_extend");
  if (t < default_t(f, host.r))
    fail(errc::precondition_violated, "threshold below (r-2)|E(F)|+|V(F)|");
  if (static_cast<int>(partial.core_map.size()) != f.n)
    fail(errc::precondition_violated, "core map must place every vertex of F");
  if (partial.edge_hyperedges.size() != f.edges.size())
    fail(errc::precondition_violated, "edge assignment size mismatch");
  std::vector<char> used(std::max(host.n, 1), 0);
  for (int img : partial.core_map) {
    if (img < 0 || img >= host.n || used[img])
      fail(errc::precondition_violated, "core map is not an injective placement");
    used[img] = 1;
  }
  for (std::size_t j = 0; j < f.edges.size(); ++j) {
    const Edge& he = partial.edge_hyperedges[j];
    if (he.empty()) continue;
    Edge pair{partial.core_map[f.edges[j][0]], partial.core_map[f.edges[j][1]]};
    std::sort(pair.begin(), pair.end());
    if (!host.has_edge(he) || !std::includes(he.begin(), he.end(), pair.begin(), pair.end()))
      fail(errc::precondition_violated, "assigned hyperedge does not cover its core edge");
    for (Vertex v : he) {
      if (v == pair[0] || v == pair[1]) continue;
      if (used[v]) fail(errc::precondition_violated, "partial witness reuses a vertex");
      used[v] = 1;
    }
  }
  for (std::size_t j = 0; j < f.edges.size(); ++j) {
    if (!partial.edge_hyperedges[j].empty()) continue;
    Edge pair{partial.core_map[f.edges[j][0]], partial.core_map[f.edges[j][1]]};
    std::sort(pair.begin(), pair.end());
    auto disjoint_links = maximum_matching(link(host, pair));
    if (static_cast<int>(disjoint_links.size()) < t)
      fail(errc::precondition_violated, "core edge maps to a pair that is not t-fat");
    bool placed = false;
    for (const Edge& ls : disjoint_links) {
      bool ok = true;
      for (Vertex v : ls)
        if (used[v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      Edge he = pair;
      he.insert(he.end(), ls.begin(), ls.end());
      std::sort(he.begin(), he.end());
      partial.edge_hyperedges[j] = he;
      for (Vertex v : ls) used[v] = 1;
      placed = true;
      break;
    }
    if (!placed)
      throw std::logic_error("greedy extension found no free hyperedge despite t-fatness");
  }
  return partial;
}

}  // namespace turanx
