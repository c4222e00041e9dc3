#pragma once

#include <vector>

#include "turanx/core.hpp"
#include "turanx/ops.hpp"

namespace turanx {

// Proper coloring with exactly c classes, each class 0..c-1 used.
struct ColoringCertificate {
  std::vector<int> colors;  // vertex -> color
  int c = 0;
};

namespace detail {

struct ChromaticSearch {
  const std::vector<std::uint64_t>& adj;
  int n;
  int target = 0;
  std::vector<int> color;

  ChromaticSearch(const std::vector<std::uint64_t>& a, int nn) : adj(a), n(nn) {}

  // DSATUR order: pick the uncolored vertex with most distinct neighbor
  // colors, ties by degree then index.
  int next_vertex() const {
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      std::uint64_t seen = 0;
      std::uint64_t nb = adj[v];
      while (nb) {
        int u = __builtin_ctzll(nb);
        nb &= nb - 1;
        if (color[u] >= 0) seen |= std::uint64_t{1} << color[u];
      }
      int sat = __builtin_popcountll(seen);
      int deg = __builtin_popcountll(adj[v]);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    return pick;
  }

  bool colorable(int colored, int used) {
    if (colored == n) return true;
    int v = next_vertex();
    std::uint64_t banned = 0;
    std::uint64_t nb = adj[v];
    while (nb) {
      int u = __builtin_ctzll(nb);
      nb &= nb - 1;
      if (color[u] >= 0) banned |= std::uint64_t{1} << color[u];
    }
    int limit = std::min(target - 1, used);  // first unused color is enough to try
    for (int c = 0; c <= limit; ++c) {
      if (banned >> c & 1) continue;
      color[v] = c;
      if (colorable(colored + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  }

  bool run(int t) {
    target = t;
    color.assign(n, -1);
    return colorable(0, 0);
  }
};

// Largest clique found greedily along a degeneracy-ish order; lower bound only.
inline int clique_lower_bound(const std::vector<std::uint64_t>& adj, int n) {
  int best = 0;
  for (int v = 0; v < n; ++v) {
    std::uint64_t cand = adj[v];
    int size = 1;
    std::uint64_t rest = cand;
    while (rest) {
      int u = __builtin_ctzll(rest);
      rest &= rest - 1;
      if ((cand >> u & 1) == 0) continue;
      ++size;
      cand &= adj[u];
      rest &= adj[u];
    }
    best = std::max(best, size);
  }
  return best;
}

}  // namespace detail

inline int chromatic_number(const Graph& g) {
  require_graph(g, "chromatic_number");
  if (g.n == 0) return 0;
  if (g.edges.empty()) return 1;
  if (g.n > 64) fail(errc::too_large, "chromatic number limited to 64 vertices");
  auto adj = adjacency_masks(g);
  detail::ChromaticSearch search(adj, g.n);
  for (int c = detail::clique_lower_bound(adj, g.n); c <= g.n; ++c)
    if (search.run(c)) return c;
  return g.n;
}

// All surjective proper colorings with exactly c classes, one representative
// per class partition (canonical first-occurrence color numbering).
inline std::vector<ColoringCertificate> proper_colorings(const Graph& g, int c) {
  require_graph(g, "proper_colorings");
  if (c < chromatic_number(g)) fail(errc::too_few_colors, "fewer colors than the chromatic number");
  std::vector<ColoringCertificate> out;
  if (g.n == 0) {
    if (c == 0) out.push_back({{}, 0});
    return out;
  }
  if (c > g.n) return out;  // surjectivity impossible
  auto adj = adjacency_masks(g);
  std::vector<int> color(g.n, -1);
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (v == g.n) {
      if (used == c) out.push_back({color, c});
      return;
    }
    if (used + (g.n - v) < c) return;  // cannot reach c classes
    std::uint64_t banned = 0;
    std::uint64_t nb = adj[v];
    while (nb) {
      int u = __builtin_ctzll(nb);
      nb &= nb - 1;
      if (color[u] >= 0) banned |= std::uint64_t{1} << color[u];
    }
    int limit = std::min(used, c - 1);  // new color = used, old colors < used
    for (int col = 0; col <= limit; ++col) {
      if (banned >> col & 1) continue;
      color[v] = col;
      self(self, v + 1, std::max(used, col + 1));
      color[v] = -1;
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Edges whose deletion decreases the chromatic number.
inline std::vector<Edge> color_critical_edges(const Graph& g) {
  require_graph(g, "color_critical_edges");
  if (g.edges.empty()) fail(errc::no_edges, "graph has no edges");
  int chi = chromatic_number(g);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    Graph smaller = g;
    smaller.edges.erase(smaller.edges.begin() + static_cast<std::ptrdiff_t>(i));
    if (chromatic_number(smaller) == chi - 1) out.push_back(g.edges[i]);
  }
  return out;
}

// True iff all edges share a common vertex (vacuously true without edges).
inline bool is_star(const Graph& g) {
  require_graph(g, "is_star");
  if (g.edges.empty()) return true;
  Edge common = g.edges.front();
  for (const Edge& e : g.edges) {
    Edge next;
    std::set_intersection(common.begin(), common.end(), e.begin(), e.end(),
                          std::back_inserter(next));
    common = std::move(next);
    if (common.empty()) return false;
  }
  return true;
}

}  // namespace turanx
