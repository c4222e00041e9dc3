#pragma once

#include <set>
#include <vector>

#include "turanx/core.hpp"

namespace turanx {

namespace detail {

struct SubIsoSearch {
  const UniformHypergraph& host;
  const UniformHypergraph& pattern;
  std::set<Edge> host_edges;
  std::vector<int> order;              // pattern vertices, by descending degree
  std::vector<std::vector<int>> done;  // pattern edges fully placed at step i
  std::vector<int> map;                // pattern -> host, -1 unassigned
  std::vector<char> used;              // host vertex taken

  SubIsoSearch(const UniformHypergraph& h, const UniformHypergraph& p)
      : host(h), pattern(p), host_edges(h.edges.begin(), h.edges.end()) {
    std::vector<int> deg(p.n, 0);
    for (const Edge& e : p.edges)
      for (Vertex v : e) ++deg[v];
    order.resize(p.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (deg[a] != deg[b]) return deg[a] > deg[b];
      return a < b;
    });
    std::vector<int> pos(p.n, 0);
    for (int i = 0; i < p.n; ++i) pos[order[i]] = i;
    done.resize(p.n + 1);
    for (std::size_t ei = 0; ei < p.edges.size(); ++ei) {
      int last = 0;
      for (Vertex v : p.edges[ei]) last = std::max(last, pos[v]);
      done[last + 1].push_back(static_cast<int>(ei));
    }
    map.assign(p.n, -1);
    used.assign(std::max(h.n, 1), 0);
  }

  bool edges_ok(int step) const {
    for (int ei : done[step + 1]) {
      Edge img;
      img.reserve(pattern.edges[ei].size());
      for (Vertex v : pattern.edges[ei]) img.push_back(map[v]);
      std::sort(img.begin(), img.end());
      if (!host_edges.count(img)) return false;
    }
    return true;
  }

  bool search(int step) {
    if (step == pattern.n) return true;
    Vertex pv = order[step];
    for (Vertex hv = 0; hv < host.n; ++hv) {
      if (used[hv]) continue;
      map[pv] = hv;
      used[hv] = 1;
      if (edges_ok(step) && search(step + 1)) return true;
      used[hv] = 0;
      map[pv] = -1;
    }
    return false;
  }
};

}  // namespace detail

// True iff some injective vertex map sends every pattern edge to a host edge.
inline bool contains_subhypergraph(const UniformHypergraph& host,
                                   const UniformHypergraph& pattern) {
  if (host.r != pattern.r)
    fail(errc::uniformity_mismatch, "host and pattern uniformity differ");
  if (pattern.n > host.n || pattern.edge_count() > host.edge_count()) return false;
  detail::SubIsoSearch search(host, pattern);
  return search.search(0);
}

}  // namespace turanx
