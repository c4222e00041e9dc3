#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace turanx {

using Vertex = int;

// A hyperedge is a strictly increasing tuple of vertices.
using Edge = std::vector<Vertex>;

enum class errc {
  arity,                 // tuple length != r
  vertex_range,          // vertex out of 0..n-1
  duplicate_vertex,      // repeated vertex inside one edge
  uniformity_too_low,    // shadow-type operator needs r >= 2
  bad_target,            // iterated shadow target uniformity out of range
  set_too_large,         // |A| >= r in link/fatness queries
  uniformity_mismatch,   // host.r != requested r
  too_large,             // beyond the exact canonicalization bound
  too_few_colors,
  no_edges,
  k_too_small,           // k < r in a multipartite construction
  bad_m,                 // distinguished part size out of range
  seed_not_free,
  precondition_violated,
  budget_exceeded,
  invalid_argument,
  parse,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::arity: return "arity";
    case errc::vertex_range: return "vertex_range";
    case errc::duplicate_vertex: return "duplicate_vertex";
    case errc::uniformity_too_low: return "uniformity_too_low";
    case errc::bad_target: return "bad_target";
    case errc::set_too_large: return "set_too_large";
    case errc::uniformity_mismatch: return "uniformity_mismatch";
    case errc::too_large: return "too_large";
    case errc::too_few_colors: return "too_few_colors";
    case errc::no_edges: return "no_edges";
    case errc::k_too_small: return "k_too_small";
    case errc::bad_m: return "bad_m";
    case errc::seed_not_free: return "seed_not_free";
    case errc::precondition_violated: return "precondition_violated";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::invalid_argument: return "invalid_argument";
    case errc::parse: return "parse";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

// r-uniform hypergraph on vertices 0..n-1. Isolated vertices matter, so n is
// stored explicitly. Edges are kept sorted lexicographically with no
// duplicates; every operation that returns a hypergraph preserves this.
struct UniformHypergraph {
  int n = 0;
  int r = 1;
  std::vector<Edge> edges;

  std::size_t edge_count() const { return edges.size(); }

  bool has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
  }

  int degree(Vertex v) const {
    int d = 0;
    for (const Edge& e : edges)
      if (std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
  }

  bool operator==(const UniformHypergraph&) const = default;
};

// Uniformity-2 special case.
using Graph = UniformHypergraph;

inline UniformHypergraph make_hypergraph(int n, int r, std::vector<Edge> edges) {
  if (n < 0) fail(errc::invalid_argument, "vertex count must be non-negative");
  if (r < 1) fail(errc::invalid_argument, "uniformity must be at least 1");
  for (Edge& e : edges) {
    if (static_cast<int>(e.size()) != r)
      fail(errc::arity, "edge of size " + std::to_string(e.size()) + " in a " +
                            std::to_string(r) + "-graph");
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n)
        fail(errc::vertex_range, "vertex " + std::to_string(e[i]) + " outside 0.." +
                                     std::to_string(n - 1));
      if (i > 0 && e[i] == e[i - 1])
        fail(errc::duplicate_vertex, "vertex " + std::to_string(e[i]) + " repeated in edge");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return UniformHypergraph{n, r, std::move(edges)};
}

inline Graph make_graph(int n, std::vector<Edge> edges) {
  return make_hypergraph(n, 2, std::move(edges));
}

inline void require_graph(const UniformHypergraph& g, const char* who) {
  if (g.r != 2) fail(errc::uniformity_mismatch, std::string(who) + " expects a 2-graph");
}

// Calls fn(edge) for every sorted r-subset of 0..n-1, in lexicographic order.
template <typename Fn>
void for_each_rset(int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return;
  Edge cur(r);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    fn(const_cast<const Edge&>(cur));
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * static_cast<std::uint64_t>(n - k + i) / i;
  return acc;
}

inline UniformHypergraph complete_hypergraph(int n, int r) {
  std::vector<Edge> es;
  for_each_rset(n, r, [&](const Edge& e) { es.push_back(e); });
  return UniformHypergraph{n, r, std::move(es)};
}

inline Graph complete_graph(int n) { return complete_hypergraph(n, 2); }

inline UniformHypergraph empty_hypergraph(int n, int r) { return UniformHypergraph{n, r, {}}; }

// Relabels H by perm (old vertex v becomes perm[v]).
inline UniformHypergraph apply_permutation(const UniformHypergraph& h,
                                           const std::vector<int>& perm) {
  std::vector<Edge> es;
  es.reserve(h.edges.size());
  for (const Edge& e : h.edges) {
    Edge img(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) img[i] = perm[e[i]];
    std::sort(img.begin(), img.end());
    es.push_back(std::move(img));
  }
  std::sort(es.begin(), es.end());
  return UniformHypergraph{h.n, h.r, std::move(es)};
}

// Drops vertices that lie in no edge and compresses labels, preserving order.
inline UniformHypergraph drop_isolated(const UniformHypergraph& h) {
  std::vector<char> used(h.n, 0);
  for (const Edge& e : h.edges)
    for (Vertex v : e) used[v] = 1;
  std::vector<int> relabel(h.n, -1);
  int next = 0;
  for (int v = 0; v < h.n; ++v)
    if (used[v]) relabel[v] = next++;
  std::vector<Edge> es;
  es.reserve(h.edges.size());
  for (const Edge& e : h.edges) {
    Edge img(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) img[i] = relabel[e[i]];
    es.push_back(std::move(img));
  }
  std::sort(es.begin(), es.end());
  return UniformHypergraph{next, h.r, std::move(es)};
}

// Adjacency bitmasks for a 2-graph; requires n <= 64.
inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  require_graph(g, "adjacency_masks");
  if (g.n > 64) fail(errc::too_large, "bitmask adjacency limited to 64 vertices");
  std::vector<std::uint64_t> adj(g.n, 0);
  for (const Edge& e : g.edges) {
    adj[e[0]] |= std::uint64_t{1} << e[1];
    adj[e[1]] |= std::uint64_t{1} << e[0];
  }
  return adj;
}

// Vertices joined through shared hyperedges form one component.
inline bool is_connected(const UniformHypergraph& h) {
  if (h.n <= 1) return true;
  std::vector<int> parent(h.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : h.edges)
    for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);
  int root = find(0);
  for (int v = 1; v < h.n; ++v)
    if (find(v) != root) return false;
  return true;
}

// Ordered partition of 0..n-1 into k parts.
struct VertexPartition {
  std::vector<std::vector<Vertex>> parts;

  int k() const { return static_cast<int>(parts.size()); }

  int part_of(Vertex v) const {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (std::binary_search(parts[i].begin(), parts[i].end(), v)) return static_cast<int>(i);
    return -1;
  }
};

}  // namespace turanx
