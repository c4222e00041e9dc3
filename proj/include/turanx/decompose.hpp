#pragma once

#include <string>
#include <vector>

#include "turanx/canonical.hpp"
#include "turanx/coloring.hpp"
#include "turanx/core.hpp"
#include "turanx/search.hpp"
#include "turanx/subiso.hpp"

namespace turanx {

struct DecompositionFamily {
  std::vector<Graph> members;  // deduplicated up to isomorphism, isolated vertices dropped
  bool minimal = false;
};

// Bipartite graphs left after deleting k-1 color classes from a surjective
// proper (k+1)-coloring of F, where chi(F) = k+1. One candidate per unordered
// pair of kept classes and class partition; edgeless leftovers are dropped,
// members deduplicated up to isomorphism. With minimal=true, members that
// contain another member as a subgraph are removed as redundant forbidders.
inline DecompositionFamily decomposition_family(const Graph& f, bool minimal = true) {
  require_graph(f, "decomposition_family");
  int chi = chromatic_number(f);
  if (chi < 2) fail(errc::invalid_argument, "decomposition needs chromatic number >= 2");
  std::vector<std::pair<std::string, Graph>> keyed;
  for (const ColoringCertificate& cert : proper_colorings(f, chi)) {
    for (int i = 0; i < chi; ++i) {
      for (int j = i + 1; j < chi; ++j) {
        std::vector<Edge> kept;
        for (const Edge& e : f.edges) {
          int cu = cert.colors[static_cast<std::size_t>(e[0])];
          int cv = cert.colors[static_cast<std::size_t>(e[1])];
          if ((cu == i && cv == j) || (cu == j && cv == i)) kept.push_back(e);
        }
        if (kept.empty()) continue;
        Graph member = drop_isolated(Graph{f.n, 2, [&] {
                                             std::sort(kept.begin(), kept.end());
                                             return kept;
                                           }()});
        std::string key = canonical_form(member).key;
        bool fresh = true;
        for (const auto& [k2, m2] : keyed)
          if (k2 == key) {
            fresh = false;
            break;
          }
        if (fresh) keyed.emplace_back(std::move(key), std::move(member));
      }
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.n != b.second.n) return a.second.n < b.second.n;
    if (a.second.edge_count() != b.second.edge_count())
      return a.second.edge_count() < b.second.edge_count();
    return a.first < b.first;
  });
  DecompositionFamily family;
  family.minimal = minimal;
  for (const auto& [key, member] : keyed) family.members.push_back(member);
  if (minimal) {
    std::vector<Graph> reduced;
    for (std::size_t i = 0; i < family.members.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < family.members.size(); ++j) {
        if (i == j) continue;
        if (contains_subhypergraph(family.members[i], family.members[j])) {
          dominated = true;
          break;
        }
      }
      if (!dominated) reduced.push_back(family.members[i]);
    }
    family.members = std::move(reduced);
  }
  return family;
}

// biex(n, F): largest edge count of an n-vertex graph containing no member of
// the decomposition family of F.
inline SearchResult biex_search(int n, const Graph& f, bool minimal = true,
                                const SearchOptions& options = {}) {
  if (n < 1) fail(errc::invalid_argument, "need at least one vertex");
  return ex_graph_edges(n, decomposition_family(f, minimal).members, options);
}

inline std::uint64_t biex(int n, const Graph& f, bool minimal = true,
                          const SearchOptions& options = {}) {
  return biex_search(n, f, minimal, options).value;
}

}  // namespace turanx
