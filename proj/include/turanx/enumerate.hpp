#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <unordered_set>
#include <vector>

#include "turanx/canonical.hpp"
#include "turanx/core.hpp"

namespace turanx {

// Visits every r-graph on exactly n labelled vertices (all 2^C(n,r) edge
// subsets). Only sensible for tiny ground sets.
template <typename Fn>
void for_each_labeled_hypergraph(int n, int r, Fn&& fn) {
  std::vector<Edge> ground;
  for_each_rset(n, r, [&](const Edge& e) { ground.push_back(e); });
  if (ground.size() > 30) fail(errc::too_large, "labelled enumeration limited to 2^30 subsets");
  std::uint64_t total = std::uint64_t{1} << ground.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (mask >> i & 1) edges.push_back(ground[i]);
    fn(UniformHypergraph{n, r, std::move(edges)});
  }
}

// Isomorph-free enumeration of the hereditary family {H : keep(H)} on exactly
// n vertices: breadth-first edge additions with canonical-key deduplication.
// Visits one canonically labelled representative per isomorphism class.
// keep() must be downward closed (deleting an edge never falsifies it).
// Returns false if the visitor aborted the walk.
template <typename Keep, typename Visit>
bool for_each_isomorph_free(int n, int r, Keep&& keep, Visit&& visit,
                            int canonical_bound = kCanonicalBound) {
  UniformHypergraph start = empty_hypergraph(n, r);
  if (!keep(start)) return true;
  std::vector<UniformHypergraph> level{canonical_copy(start, canonical_bound)};
  std::unordered_set<std::string> seen;
  while (!level.empty()) {
    std::vector<UniformHypergraph> next;
    seen.clear();
    for (const UniformHypergraph& rep : level) {
      if (!visit(rep)) return false;
      for_each_rset(n, r, [&](const Edge& e) {
        if (rep.has_edge(e)) return;
        UniformHypergraph child = rep;
        child.edges.insert(
            std::upper_bound(child.edges.begin(), child.edges.end(), e), e);
        if (!keep(child)) return;
        CanonicalLabeling lab = canonical_labeling(child, canonical_bound);
        if (seen.insert(lab.form.key).second)
          next.push_back(apply_permutation(child, lab.relabel));
      });
    }
    level = std::move(next);
  }
  return true;
}

// Every graph class on exactly n vertices (no constraint).
template <typename Visit>
bool for_each_graph_class(int n, Visit&& visit) {
  return for_each_isomorph_free(
      n, 2, [](const UniformHypergraph&) { return true; },
      std::forward<Visit>(visit));
}

inline UniformHypergraph random_hypergraph(int n, int r, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for_each_rset(n, r, [&](const Edge& e) {
    if (coin(rng)) edges.push_back(e);
  });
  return UniformHypergraph{n, r, std::move(edges)};
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  return random_hypergraph(n, 2, p, rng);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(pick(rng))]);
  }
  return perm;
}

}  // namespace turanx
