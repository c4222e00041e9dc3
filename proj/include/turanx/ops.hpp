#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "turanx/core.hpp"

namespace turanx {

// (r-1)-sets contained in at least one hyperedge.
inline UniformHypergraph shadow(const UniformHypergraph& h) {
  if (h.r < 2) fail(errc::uniformity_too_low, "shadow needs uniformity >= 2");
  std::set<Edge> out;
  for (const Edge& e : h.edges) {
    Edge sub(e.size() - 1);
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      std::size_t j = 0;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != skip) sub[j++] = e[i];
      out.insert(sub);
    }
  }
  return UniformHypergraph{h.n, h.r - 1, {out.begin(), out.end()}};
}

// (r-1)-sets contained in at least t hyperedges.
inline UniformHypergraph heavy_shadow(const UniformHypergraph& h, int t) {
  if (h.r < 2) fail(errc::uniformity_too_low, "heavy shadow needs uniformity >= 2");
  if (t < 1) fail(errc::invalid_argument, "heaviness threshold must be >= 1");
  std::map<Edge, int> count;
  for (const Edge& e : h.edges) {
    Edge sub(e.size() - 1);
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      std::size_t j = 0;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != skip) sub[j++] = e[i];
      ++count[sub];
    }
  }
  std::vector<Edge> out;
  for (const auto& [e, c] : count)
    if (c >= t) out.push_back(e);
  return UniformHypergraph{h.n, h.r - 1, std::move(out)};
}

// Applies heavy_shadow with the same threshold until uniformity i is reached.
inline UniformHypergraph iterated_heavy(const UniformHypergraph& h, int t, int i) {
  if (i < 1 || i >= h.r) fail(errc::bad_target, "target uniformity must lie in 1..r-1");
  UniformHypergraph cur = h;
  while (cur.r > i) cur = heavy_shadow(cur, t);
  return cur;
}

// {E \ A : E edge of h, A subset of E}, an (r-|A|)-graph on the same vertices.
inline UniformHypergraph link(const UniformHypergraph& h, const Edge& a) {
  if (static_cast<int>(a.size()) >= h.r)
    fail(errc::set_too_large, "link set must be smaller than the uniformity");
  Edge sorted_a = a;
  std::sort(sorted_a.begin(), sorted_a.end());
  for (std::size_t i = 0; i < sorted_a.size(); ++i) {
    if (sorted_a[i] < 0 || sorted_a[i] >= h.n)
      fail(errc::vertex_range, "link set vertex outside 0..n-1");
    if (i > 0 && sorted_a[i] == sorted_a[i - 1])
      fail(errc::duplicate_vertex, "link set repeats a vertex");
  }
  std::set<Edge> out;
  for (const Edge& e : h.edges) {
    if (!std::includes(e.begin(), e.end(), sorted_a.begin(), sorted_a.end())) continue;
    Edge rest;
    rest.reserve(e.size() - sorted_a.size());
    std::set_difference(e.begin(), e.end(), sorted_a.begin(), sorted_a.end(),
                        std::back_inserter(rest));
    out.insert(std::move(rest));
  }
  return UniformHypergraph{h.n, h.r - static_cast<int>(sorted_a.size()),
                           {out.begin(), out.end()}};
}

namespace detail {

struct MatchingSearch {
  const std::vector<Edge>& edges;
  std::vector<char> covered;
  int best = 0;
  std::vector<int> chosen, best_chosen;

  MatchingSearch(const std::vector<Edge>& es, int n) : edges(es) {
    covered.assign(std::max(n, 1), 0);
  }

  bool free_edge(const Edge& e) const {
    for (Vertex v : e)
      if (covered[v]) return false;
    return true;
  }

  void mark(const Edge& e, char val) {
    for (Vertex v : e) covered[v] = val;
  }

  // branch on the lowest-index uncovered edge, include branch first
  void run(std::size_t idx) {
    while (idx < edges.size() && !free_edge(edges[idx])) ++idx;
    if (idx == edges.size()) {
      if (static_cast<int>(chosen.size()) > best) {
        best = static_cast<int>(chosen.size());
        best_chosen = chosen;
      }
      return;
    }
    if (static_cast<int>(chosen.size()) + static_cast<int>(edges.size() - idx) <= best)
      return;
    mark(edges[idx], 1);
    chosen.push_back(static_cast<int>(idx));
    run(idx + 1);
    chosen.pop_back();
    mark(edges[idx], 0);
    run(idx + 1);
  }
};

}  // namespace detail

// Maximum number of pairwise disjoint hyperedges, with one witness matching.
inline std::vector<Edge> maximum_matching(const UniformHypergraph& h) {
  detail::MatchingSearch search(h.edges, h.n);
  search.run(0);
  std::vector<Edge> out;
  out.reserve(search.best_chosen.size());
  for (int idx : search.best_chosen) out.push_back(h.edges[idx]);
  return out;
}

inline int matching_number(const UniformHypergraph& h) {
  detail::MatchingSearch search(h.edges, h.n);
  search.run(0);
  return search.best;
}

// A is t-fat iff at least t hyperedges contain A and pairwise intersect
// exactly in A, i.e. their link sets admit a matching of size t.
inline bool is_fat(const UniformHypergraph& h, const Edge& a, int t) {
  return matching_number(link(h, a)) >= t;
}

// Graph of the t-fat pairs on the same vertex set.
inline Graph fat_pair_graph(const UniformHypergraph& h, int t) {
  if (h.r < 2) fail(errc::uniformity_too_low, "fat pair graph needs uniformity >= 2");
  std::vector<Edge> out;
  if (h.r == 2) {
    // a pair in a 2-graph is covered only by itself, so fatness caps at 1
    if (t <= 1) out = h.edges;
    return Graph{h.n, 2, std::move(out)};
  }
  for_each_rset(h.n, 2, [&](const Edge& pair) {
    if (is_fat(h, pair, t)) out.push_back(pair);
  });
  return Graph{h.n, 2, std::move(out)};
}

namespace detail {

inline void count_cliques_rec(const std::vector<std::uint64_t>& adj, std::uint64_t cand,
                              int min_vertex, int depth, std::uint64_t& acc) {
  if (depth == 0) {
    ++acc;
    return;
  }
  if (min_vertex >= 64) return;
  std::uint64_t rest = (cand >> min_vertex) << min_vertex;
  while (rest) {
    int v = __builtin_ctzll(rest);
    rest &= rest - 1;
    count_cliques_rec(adj, cand & adj[v], v + 1, depth - 1, acc);
  }
}

}  // namespace detail

// Number of r-vertex cliques of a graph; exact enumeration.
inline std::uint64_t count_cliques(const Graph& g, int r) {
  require_graph(g, "count_cliques");
  if (r < 1) fail(errc::invalid_argument, "clique order must be >= 1");
  if (r == 1) return static_cast<std::uint64_t>(g.n);
  if (g.n > 64) fail(errc::too_large, "clique counting limited to 64 vertices");
  auto adj = adjacency_masks(g);
  std::uint64_t all = (g.n == 64) ? ~std::uint64_t{0}
                                  : ((std::uint64_t{1} << g.n) - 1);
  std::uint64_t acc = 0;
  detail::count_cliques_rec(adj, all, 0, r, acc);
  return acc;
}

// Number of r-vertex sets all of whose h.r-subsets are hyperedges of h.
inline std::uint64_t count_hypercliques(const UniformHypergraph& h, int r) {
  if (r < h.r) fail(errc::invalid_argument, "hyperclique order must be >= uniformity");
  if (r == h.r) return h.edge_count();
  std::set<Edge> edge_set(h.edges.begin(), h.edges.end());
  std::uint64_t acc = 0;
  std::vector<Vertex> cur;
  // extend by increasing vertex; on adding v, check the new h.r-subsets through v
  auto ok_with = [&](Vertex v) {
    if (static_cast<int>(cur.size()) + 1 < h.r) return true;
    Edge sub(h.r);
    std::vector<int> pick(h.r - 1);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      for (int i = 0; i < h.r - 1; ++i) sub[i] = cur[pick[i]];
      sub[h.r - 1] = v;
      if (!edge_set.count(sub)) return false;
      int i = h.r - 2;
      while (i >= 0 && pick[i] == static_cast<int>(cur.size()) - (h.r - 1) + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < h.r - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
    return true;
  };
  auto rec = [&](auto&& self, Vertex from) -> void {
    if (static_cast<int>(cur.size()) == r) {
      ++acc;
      return;
    }
    for (Vertex v = from; v < h.n; ++v) {
      if (h.n - v < r - static_cast<int>(cur.size())) break;
      if (!ok_with(v)) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return acc;
}

// r-graph whose hyperedges are the vertex sets of the r-cliques of g.
inline UniformHypergraph clique_expansion(const Graph& g, int r) {
  require_graph(g, "clique_expansion");
  if (r < 2) fail(errc::invalid_argument, "clique expansion needs order >= 2");
  if (g.n > 64) fail(errc::too_large, "clique expansion limited to 64 vertices");
  auto adj = adjacency_masks(g);
  std::vector<Edge> out;
  std::vector<Vertex> cur;
  auto rec = [&](auto&& self, Vertex from, std::uint64_t cand) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = from; v < g.n; ++v) {
      if (!(cand >> v & 1)) continue;
      cur.push_back(v);
      self(self, v + 1, cand & adj[v]);
      cur.pop_back();
    }
  };
  std::uint64_t all = (g.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
  rec(rec, 0, all);
  std::sort(out.begin(), out.end());
  return UniformHypergraph{g.n, r, std::move(out)};
}

}  // namespace turanx
