#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "turanx/canonical.hpp"
#include "turanx/core.hpp"
#include "turanx/enumerate.hpp"
#include "turanx/expansion.hpp"
#include "turanx/ops.hpp"
#include "turanx/parallel.hpp"
#include "turanx/subiso.hpp"

namespace turanx {

struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  double max_secs = 300.0;
};

struct SearchOptions {
  Budget budget;
  bool parallel = false;
};

struct ForbiddenPattern {
  enum class Kind { subgraph, expansion };
  Kind kind = Kind::subgraph;
  Graph graph;  // forbidden subgraph, or the core F of a forbidden expansion
  int r = 2;    // expansion uniformity; unused for subgraph patterns

  static ForbiddenPattern make_subgraph(Graph g) {
    return {Kind::subgraph, std::move(g), 2};
  }
  static ForbiddenPattern make_expansion(Graph f, int r) {
    return {Kind::expansion, std::move(f), r};
  }
};

inline bool is_pattern_free(const UniformHypergraph& host,
                            const std::vector<ForbiddenPattern>& forbidden) {
  for (const ForbiddenPattern& p : forbidden) {
    if (p.kind == ForbiddenPattern::Kind::subgraph) {
      if (contains_subhypergraph(host, p.graph)) return false;
    } else {
      if (contains_expansion(host, p.graph, p.r).has_value()) return false;
    }
  }
  return true;
}

struct SearchObjective {
  enum class Kind { edge_count, clique_count };
  Kind kind = Kind::edge_count;
  int order = 2;  // clique order when kind == clique_count

  std::uint64_t evaluate(const UniformHypergraph& h) const {
    if (kind == Kind::edge_count) return h.edge_count();
    return count_hypercliques(h, order);
  }
};

struct SearchProblem {
  int n = 0;
  int r = 2;
  std::vector<ForbiddenPattern> forbidden;
  SearchObjective objective;
};

struct SearchResult {
  std::uint64_t value = 0;
  UniformHypergraph witness;
  bool exhaustive = false;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

namespace detail {

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Breadth-first walk over isomorphism classes of forbidden-free graphs on n
// vertices, maximizing the objective. Free graphs form a down-set under edge
// deletion, so every class is reachable from the empty graph. Budgets are
// enforced at level boundaries, which keeps results schedule-independent.
inline SearchResult graph_class_search(int n, const std::vector<ForbiddenPattern>& forbidden,
                                       const SearchObjective& objective,
                                       const SearchOptions& options) {
  Stopwatch clock;
  SearchResult result;
  result.exhaustive = true;
  UniformHypergraph empty = empty_hypergraph(n, 2);
  if (!is_pattern_free(empty, forbidden))
    fail(errc::invalid_argument, "even the empty graph contains a forbidden pattern");
  result.value = objective.evaluate(empty);
  result.witness = empty;
  std::string best_key = canonical_form(empty).key;

  std::vector<UniformHypergraph> level{empty};
  std::vector<std::string> level_keys{best_key};
  while (!level.empty()) {
    if (result.nodes > options.budget.max_nodes || clock.ms() / 1000.0 > options.budget.max_secs) {
      result.exhaustive = false;
      break;
    }
    struct PerRep {
      std::uint64_t value = 0;
      std::uint64_t nodes = 0;
      std::vector<std::pair<std::string, UniformHypergraph>> children;
    };
    std::vector<PerRep> outputs(level.size());
    parallel_for(level.size(), options.parallel, [&](std::size_t i) {
      const UniformHypergraph& rep = level[i];
      PerRep& out = outputs[i];
      out.value = objective.evaluate(rep);
      for_each_rset(n, 2, [&](const Edge& e) {
        if (rep.has_edge(e)) return;
        ++out.nodes;
        UniformHypergraph child = rep;
        child.edges.insert(std::upper_bound(child.edges.begin(), child.edges.end(), e), e);
        if (!is_pattern_free(child, forbidden)) return;
        CanonicalLabeling lab = canonical_labeling(child);
        out.children.emplace_back(lab.form.key, apply_permutation(child, lab.relabel));
      });
    });
    std::vector<UniformHypergraph> next;
    std::vector<std::string> next_keys;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < level.size(); ++i) {
      result.nodes += outputs[i].nodes;
      if (outputs[i].value > result.value ||
          (outputs[i].value == result.value && level_keys[i] < best_key)) {
        result.value = outputs[i].value;
        result.witness = level[i];
        best_key = level_keys[i];
      }
      for (auto& [key, child] : outputs[i].children) {
        if (seen.insert(key).second) {
          next.push_back(std::move(child));
          next_keys.push_back(key);
        }
      }
    }
    level = std::move(next);
    level_keys = std::move(next_keys);
  }
  result.elapsed_ms = clock.ms();
  return result;
}

}  // namespace detail

// Largest edge count of an n-vertex graph avoiding every forbidden subgraph.
inline SearchResult ex_graph_edges(int n, const std::vector<Graph>& forbidden,
                                   const SearchOptions& options = {}) {
  std::vector<ForbiddenPattern> pats;
  pats.reserve(forbidden.size());
  for (const Graph& f : forbidden) pats.push_back(ForbiddenPattern::make_subgraph(f));
  return detail::graph_class_search(n, pats, {SearchObjective::Kind::edge_count, 2}, options);
}

// Largest number of r-cliques over forbidden-free n-vertex graphs.
inline SearchResult ex_graph_cliques(int n, int order, const std::vector<Graph>& forbidden,
                                     const SearchOptions& options = {}) {
  std::vector<ForbiddenPattern> pats;
  pats.reserve(forbidden.size());
  for (const Graph& f : forbidden) pats.push_back(ForbiddenPattern::make_subgraph(f));
  return detail::graph_class_search(n, pats, {SearchObjective::Kind::clique_count, order},
                                    options);
}

// Largest hyperedge count of an F^(r)+-free r-graph on n vertices.
// Branch-and-bound over edge inclusion in lexicographic order; the witness is
// the canonically smallest optimum encountered.
inline SearchResult ex_hypergraph(int n, int r, const Graph& f,
                                  const SearchOptions& options = {}) {
  require_graph(f, "ex_hypergraph");
  detail::Stopwatch clock;
  std::vector<Edge> ground;
  for_each_rset(n, r, [&](const Edge& e) { ground.push_back(e); });
  SearchResult result;
  result.exhaustive = true;
  UniformHypergraph current = empty_hypergraph(n, r);
  bool have_best = false;
  std::string best_key;
  std::uint64_t budget_nodes = options.budget.max_nodes;
  double budget_secs = options.budget.max_secs;
  bool aborted = false;

  auto leaf = [&](const UniformHypergraph& h) {
    std::uint64_t value = h.edge_count();
    if (have_best && value < result.value) return;
    if (n <= kCanonicalBound) {
      CanonicalLabeling lab = canonical_labeling(h);
      if (!have_best || value > result.value || lab.form.key < best_key) {
        result.value = value;
        result.witness = apply_permutation(h, lab.relabel);
        best_key = lab.form.key;
        have_best = true;
      }
    } else if (!have_best || value > result.value) {
      // beyond the canonicalization bound keep the first optimum found
      result.value = value;
      result.witness = h;
      have_best = true;
    }
  };

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    ++result.nodes;
    if (result.nodes > budget_nodes ||
        ((result.nodes & 0xfff) == 0 && clock.ms() / 1000.0 > budget_secs)) {
      aborted = true;
      return;
    }
    if (have_best &&
        current.edge_count() + (ground.size() - idx) < result.value)
      return;
    if (idx == ground.size()) {
      leaf(current);
      return;
    }
    current.edges.push_back(ground[idx]);
    if (is_expansion_free(current, f, r)) {
      self(self, idx + 1);
      if (aborted) {
        current.edges.pop_back();
        return;
      }
    }
    current.edges.pop_back();
    self(self, idx + 1);
  };
  rec(rec, 0);
  if (aborted) {
    result.exhaustive = false;
    if (!have_best) leaf(empty_hypergraph(n, r));
  }
  result.elapsed_ms = clock.ms();
  return result;
}

// Hill climbing from a forbidden-free seed: random additions, with a random
// remove+add swap when the addition is blocked. Never worsens the seed.
inline SearchResult lower_bound_local_search(const SearchProblem& problem,
                                             const UniformHypergraph& seed, int restarts,
                                             int steps, std::uint64_t rng_seed = 1) {
  detail::Stopwatch clock;
  if (seed.n != problem.n || seed.r != problem.r)
    fail(errc::invalid_argument, "seed shape does not match the problem");
  if (!is_pattern_free(seed, problem.forbidden))
    fail(errc::seed_not_free, "seed already contains a forbidden pattern");
  std::vector<Edge> ground;
  for_each_rset(problem.n, problem.r, [&](const Edge& e) { ground.push_back(e); });
  std::mt19937_64 rng(rng_seed);
  SearchResult result;
  result.value = problem.objective.evaluate(seed);
  result.witness = seed;
  result.exhaustive = false;
  if (ground.empty()) {
    result.elapsed_ms = clock.ms();
    return result;
  }
  std::uniform_int_distribution<std::size_t> pick_ground(0, ground.size() - 1);
  for (int round = 0; round < std::max(restarts, 1); ++round) {
    UniformHypergraph cur = seed;
    std::uint64_t cur_value = problem.objective.evaluate(cur);
    for (int step = 0; step < steps; ++step) {
      ++result.nodes;
      const Edge& e = ground[pick_ground(rng)];
      bool changed = false;
      if (!cur.has_edge(e)) {
        UniformHypergraph cand = cur;
        cand.edges.insert(std::upper_bound(cand.edges.begin(), cand.edges.end(), e), e);
        if (is_pattern_free(cand, problem.forbidden)) {
          cur = std::move(cand);
          changed = true;
        }
      }
      if (!changed && !cur.edges.empty()) {
        std::uniform_int_distribution<std::size_t> pick_edge(0, cur.edges.size() - 1);
        std::size_t out = pick_edge(rng);
        const Edge& g = ground[pick_ground(rng)];
        UniformHypergraph cand = cur;
        cand.edges.erase(cand.edges.begin() + static_cast<std::ptrdiff_t>(out));
        if (!cand.has_edge(g)) {
          cand.edges.insert(std::upper_bound(cand.edges.begin(), cand.edges.end(), g), g);
          if (is_pattern_free(cand, problem.forbidden)) cur = std::move(cand);
        }
      }
      cur_value = problem.objective.evaluate(cur);
      if (cur_value > result.value) {
        result.value = cur_value;
        result.witness = cur;
      }
    }
  }
  result.elapsed_ms = clock.ms();
  return result;
}

}  // namespace turanx
