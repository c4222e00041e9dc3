#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "turanx/core.hpp"

namespace turanx {

// Contiguous part layout for multipartite constructions: sizes[i] vertices
// per part, assigned 0..n-1 in order.
struct PartSizeProfile {
  std::vector<int> sizes;

  int total() const {
    int s = 0;
    for (int x : sizes) s += x;
    return s;
  }

  VertexPartition partition() const {
    VertexPartition p;
    int v = 0;
    for (int s : sizes) {
      std::vector<Vertex> part(static_cast<std::size_t>(s));
      std::iota(part.begin(), part.end(), v);
      v += s;
      p.parts.push_back(std::move(part));
    }
    return p;
  }

  std::vector<int> part_of_vertex() const {
    std::vector<int> owner(static_cast<std::size_t>(total()));
    int v = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
      for (int j = 0; j < sizes[i]; ++j) owner[static_cast<std::size_t>(v++)] = static_cast<int>(i);
    return owner;
  }
};

// Balanced split of n into k parts, larger parts first.
inline std::vector<int> balanced_sizes(int n, int k) {
  std::vector<int> sizes(static_cast<std::size_t>(k), n / k);
  for (int i = 0; i < n % k; ++i) ++sizes[static_cast<std::size_t>(i)];
  return sizes;
}

// Complete multipartite r-graph: all r-sets meeting each part at most once.
inline UniformHypergraph complete_multipartite(const PartSizeProfile& profile, int r) {
  int n = profile.total();
  auto owner = profile.part_of_vertex();
  std::vector<Edge> edges;
  for_each_rset(n, r, [&](const Edge& e) {
    for (std::size_t i = 1; i < e.size(); ++i)
      if (owner[static_cast<std::size_t>(e[i])] == owner[static_cast<std::size_t>(e[i - 1])]) return;
    edges.push_back(e);
  });
  return UniformHypergraph{n, r, std::move(edges)};
}

inline Graph turan_graph(int n, int k) {
  if (k < 1) fail(errc::invalid_argument, "need at least one part");
  if (n == 0) return empty_hypergraph(0, 2);
  return complete_multipartite(PartSizeProfile{balanced_sizes(n, k)}, 2);
}

inline UniformHypergraph turan_hypergraph(int n, int k, int r) {
  if (r < 2) fail(errc::uniformity_too_low, "uniformity must be >= 2");
  if (k < r) fail(errc::k_too_small, "need k >= r parts");
  return complete_multipartite(PartSizeProfile{balanced_sizes(n, k)}, r);
}

// Closed-form edge count of the balanced complete k-partite r-graph: sum over
// r-subsets of parts of the product of their sizes.
inline std::uint64_t turan_count(int n, int k, int r) {
  if (r < 2) fail(errc::uniformity_too_low, "uniformity must be >= 2");
  if (k < r) fail(errc::k_too_small, "need k >= r parts");
  std::vector<int> sizes = balanced_sizes(n, k);
  // dp[j] = sum of size products over j-subsets of the parts seen so far
  std::vector<std::uint64_t> dp(static_cast<std::size_t>(r) + 1, 0);
  dp[0] = 1;
  for (int s : sizes)
    for (int j = r; j >= 1; --j)
      dp[static_cast<std::size_t>(j)] +=
          dp[static_cast<std::size_t>(j - 1)] * static_cast<std::uint64_t>(s);
  return dp[static_cast<std::size_t>(r)];
}

// T_r(n-i, k) on vertices i..n-1 plus every r-set meeting {0..i-1}.
inline UniformHypergraph turan_cone(int n, int k, int r, int i) {
  if (r < 2) fail(errc::uniformity_too_low, "uniformity must be >= 2");
  if (k < r) fail(errc::k_too_small, "need k >= r parts");
  if (i < 0 || i > n) fail(errc::invalid_argument, "apex count out of range");
  std::set<Edge> edges;
  std::vector<int> sizes = balanced_sizes(n - i, k);
  std::vector<int> owner(static_cast<std::size_t>(n), -1);  // -1 = apex
  {
    int v = i;
    for (std::size_t p = 0; p < sizes.size(); ++p)
      for (int j = 0; j < sizes[p]; ++j) owner[static_cast<std::size_t>(v++)] = static_cast<int>(p);
  }
  for_each_rset(n, r, [&](const Edge& e) {
    if (e[0] < i) {
      edges.insert(e);
      return;
    }
    for (std::size_t a = 1; a < e.size(); ++a)
      if (owner[static_cast<std::size_t>(e[a])] == owner[static_cast<std::size_t>(e[a - 1])]) return;
    edges.insert(e);
  });
  return UniformHypergraph{n, r, {edges.begin(), edges.end()}};
}

// Distinguished part V_1 = {0..m-1}, remaining n-m vertices split into k-1
// balanced parts; complete k-partite r-graph on that profile.
inline UniformHypergraph h_part(int n, int k, int r, int m) {
  if (r < 2) fail(errc::uniformity_too_low, "uniformity must be >= 2");
  if (k < r) fail(errc::k_too_small, "need k >= r parts");
  if (m < 1 || m > n - k + 1) fail(errc::bad_m, "part size must lie in 1..n-k+1");
  PartSizeProfile profile;
  profile.sizes.push_back(m);
  for (int s : balanced_sizes(n - m, k - 1)) profile.sizes.push_back(s);
  return complete_multipartite(profile, r);
}

// h_part plus every r-set through {u,v} = {0,1} and every r-set through u
// whose other r-1 vertices avoid V_1.
inline UniformHypergraph h_prime(int n, int k, int r, int m) {
  if (m < 2) fail(errc::bad_m, "distinguished part needs the two special vertices");
  UniformHypergraph base = h_part(n, k, r, m);
  std::set<Edge> edges(base.edges.begin(), base.edges.end());
  constexpr Vertex u = 0, v = 1;
  for_each_rset(n, r, [&](const Edge& e) {
    bool has_u = std::binary_search(e.begin(), e.end(), u);
    if (!has_u) return;
    if (std::binary_search(e.begin(), e.end(), v)) {
      edges.insert(e);
      return;
    }
    for (Vertex w : e)
      if (w != u && w < m) return;  // a non-u vertex inside V_1
    edges.insert(e);
  });
  return UniformHypergraph{n, r, {edges.begin(), edges.end()}};
}

struct OptimalM {
  int m = 0;
  std::uint64_t edges = 0;
};

// Enumerates all feasible m and maximizes |E(h_prime)|; ties toward smaller m.
inline OptimalM optimal_m(int n, int k, int r) {
  if (r < 2) fail(errc::uniformity_too_low, "uniformity must be >= 2");
  if (k < r) fail(errc::k_too_small, "need k >= r parts");
  if (n < k + 1) fail(errc::invalid_argument, "need n >= k+1 for a feasible part size");
  OptimalM best;
  for (int m = 2; m <= n - k + 1; ++m) {
    std::uint64_t count = h_prime(n, k, r, m).edge_count();
    if (best.m == 0 || count > best.edges) best = {m, count};
  }
  return best;
}

// Two copies of K_{k+1} sharing exactly the vertex 0.
inline Graph book_graph(int k) {
  if (k < 1) fail(errc::invalid_argument, "book parameter must be >= 1");
  std::vector<Edge> edges;
  auto add_clique = [&](int from, int count) {
    std::vector<Vertex> verts{0};
    for (int j = 0; j < count; ++j) verts.push_back(from + j);
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = a + 1; b < verts.size(); ++b)
        edges.push_back({verts[a], verts[b]});
  };
  add_clique(1, k);
  add_clique(k + 1, k);
  return make_graph(2 * k + 1, std::move(edges));
}

// All r-sets containing vertex 0.
inline UniformHypergraph fixed_vertex_hypergraph(int n, int r) {
  if (n < r) fail(errc::invalid_argument, "need n >= r");
  std::vector<Edge> edges;
  for_each_rset(n, r, [&](const Edge& e) {
    if (e[0] == 0) edges.push_back(e);
  });
  return UniformHypergraph{n, r, std::move(edges)};
}

}  // namespace turanx
