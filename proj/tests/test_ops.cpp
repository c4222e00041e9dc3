#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "turanx/canonical.hpp"
#include "turanx/core.hpp"
#include "turanx/enumerate.hpp"
#include "turanx/ops.hpp"

using namespace turanx;

namespace {

// Oracle: maximum matching by checking every edge subset.
int matching_oracle(const UniformHypergraph& h) {
  REQUIRE(h.edge_count() <= 12);
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.edge_count()); ++mask) {
    std::vector<char> used(h.n, 0);
    bool ok = true;
    int size = 0;
    for (std::size_t i = 0; ok && i < h.edges.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      ++size;
      for (Vertex v : h.edges[i]) {
        if (used[v]) {
          ok = false;
          break;
        }
        used[v] = 1;
      }
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

// Oracle: count r-cliques by testing all r-subsets.
std::uint64_t clique_count_oracle(const Graph& g, int r) {
  std::uint64_t count = 0;
  for_each_rset(g.n, r, [&](const Edge& vs) {
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (!g.has_edge({vs[a], vs[b]})) return;
    ++count;
  });
  return count;
}

std::uint64_t hyperclique_oracle(const UniformHypergraph& h, int r) {
  std::uint64_t count = 0;
  for_each_rset(h.n, r, [&](const Edge& vs) {
    bool all = true;
    for_each_rset(static_cast<int>(vs.size()), h.r, [&](const Edge& idx) {
      Edge sub;
      for (int i : idx) sub.push_back(vs[i]);
      if (!h.has_edge(sub)) all = false;
    });
    if (all) ++count;
  });
  return count;
}

UniformHypergraph hg(int n, int r, std::vector<Edge> edges) {
  return make_hypergraph(n, r, std::move(edges));
}

}  // namespace

TEST_CASE("shadow basics") {
  REQUIRE(shadow(hg(3, 3, {{0, 1, 2}})).edges ==
          std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  REQUIRE(shadow(hg(4, 3, {{0, 1, 2}, {0, 1, 3}})).edges ==
          std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  REQUIRE(shadow(empty_hypergraph(5, 3)).edges.empty());
  REQUIRE_THROWS_AS(shadow(hg(3, 1, {{0}})), error);
}

TEST_CASE("heavy shadow thresholds") {
  UniformHypergraph h = hg(5, 3, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  REQUIRE(heavy_shadow(h, 2).edges == std::vector<Edge>{{0, 1}});
  REQUIRE(heavy_shadow(h, 4).edges.empty());
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    UniformHypergraph rand_h = random_hypergraph(6, 3, 0.5, rng);
    REQUIRE(heavy_shadow(rand_h, 1) == shadow(rand_h));
  }
}

TEST_CASE("heavy shadow is monotone in the threshold") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    UniformHypergraph h = random_hypergraph(6, 3, 0.5, rng);
    UniformHypergraph s = shadow(h);
    for (int t = 1; t <= 4; ++t) {
      UniformHypergraph a = heavy_shadow(h, t + 1);
      UniformHypergraph b = heavy_shadow(h, t);
      for (const Edge& e : a.edges) REQUIRE(b.has_edge(e));
      for (const Edge& e : b.edges) REQUIRE(s.has_edge(e));
    }
  }
}

TEST_CASE("iterated heavy shadow") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    UniformHypergraph h = random_hypergraph(6, 3, 0.6, rng);
    REQUIRE(iterated_heavy(h, 2, 2) == heavy_shadow(h, 2));
  }
  UniformHypergraph k53 = complete_hypergraph(5, 3);
  UniformHypergraph singletons = iterated_heavy(k53, 3, 1);
  REQUIRE(singletons.r == 1);
  REQUIRE(singletons.edges == std::vector<Edge>{{0}, {1}, {2}, {3}, {4}});
  REQUIRE(iterated_heavy(empty_hypergraph(4, 3), 2, 1).edges.empty());
  REQUIRE_THROWS_AS(iterated_heavy(k53, 2, 3), error);
  REQUIRE_THROWS_AS(iterated_heavy(k53, 2, 0), error);
}

TEST_CASE("link") {
  UniformHypergraph h = hg(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
  REQUIRE(link(h, {0}).edges == std::vector<Edge>{{1, 2}, {3, 4}, {5, 6}});
  REQUIRE(link(h, {3}).edges == std::vector<Edge>{{0, 4}});
  REQUIRE(link(hg(3, 3, {{0, 1, 2}}), Edge{}).edges == std::vector<Edge>{{0, 1, 2}});
  UniformHypergraph pairs = hg(4, 3, {{0, 1, 2}, {0, 1, 3}});
  REQUIRE(link(pairs, {0, 1}).edges == std::vector<Edge>{{2}, {3}});
  REQUIRE_THROWS_AS(link(pairs, {0, 1, 2}), error);
}

TEST_CASE("matching number agrees with subset enumeration") {
  REQUIRE(matching_number(hg(6, 3, {{0, 1, 2}, {3, 4, 5}, {0, 1, 3}})) == 2);
  REQUIRE(matching_number(hg(5, 3, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}})) == 1);
  REQUIRE(matching_number(empty_hypergraph(4, 2)) == 0);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    std::uniform_int_distribution<int> pick_n(3, 7), pick_r(2, 3);
    int n = pick_n(rng);
    int r = std::min(pick_r(rng), n);
    UniformHypergraph h = random_hypergraph(n, r, 0.35, rng);
    if (h.edge_count() > 12) continue;
    REQUIRE(matching_number(h) == matching_oracle(h));
    auto witness = maximum_matching(h);
    REQUIRE(static_cast<int>(witness.size()) == matching_number(h));
    std::set<Vertex> seen;
    for (const Edge& e : witness)
      for (Vertex v : e) REQUIRE(seen.insert(v).second);
  }
}

TEST_CASE("fatness basics") {
  REQUIRE(is_fat(hg(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}), {0}, 3));
  REQUIRE(is_fat(hg(5, 3, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}), {0, 1}, 3));
  REQUIRE_FALSE(is_fat(hg(4, 3, {{0, 1, 2}, {0, 1, 3}}), {0}, 2));
  REQUIRE_THROWS_AS(is_fat(hg(3, 3, {{0, 1, 2}}), {0, 1, 2}, 1), error);
}

TEST_CASE("an (r-1)-set is t-heavy iff t-fat, exhaustively on n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    for_each_labeled_hypergraph(n, 3, [&](const UniformHypergraph& h) {
      for (int t = 1; t <= 4; ++t) {
        UniformHypergraph heavy = heavy_shadow(h, t);
        for_each_rset(n, 2, [&](const Edge& pair) {
          REQUIRE(is_fat(h, pair, t) == heavy.has_edge(pair));
        });
      }
    });
  }
}

TEST_CASE("fat pair graph matches the definition") {
  UniformHypergraph h = hg(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {0, 1, 3}});
  REQUIRE(fat_pair_graph(h, 3).edges.empty());
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    UniformHypergraph rand_h = random_hypergraph(7, 3, 0.4, rng);
    for (int t = 1; t <= 3; ++t) {
      Graph fat = fat_pair_graph(rand_h, t);
      for_each_rset(rand_h.n, 2, [&](const Edge& pair) {
        REQUIRE(fat.has_edge(pair) == is_fat(rand_h, pair, t));
      });
    }
    Graph fat1 = fat_pair_graph(rand_h, 1);
    UniformHypergraph two_shadow = rand_h.edges.empty()
                                       ? empty_hypergraph(rand_h.n, 2)
                                       : iterated_heavy(rand_h, 1, 2);
    REQUIRE(fat1 == two_shadow);
  }
  REQUIRE(fat_pair_graph(empty_hypergraph(5, 3), 2).edges.empty());
  // 2-graph degenerate case: pairs are never 2-fat
  Graph g = make_graph(3, {{0, 1}});
  REQUIRE(fat_pair_graph(g, 1) == g);
  REQUIRE(fat_pair_graph(g, 2).edges.empty());
}

TEST_CASE("clique counting") {
  REQUIRE(count_cliques(complete_graph(4), 3) == 4);
  REQUIRE(count_cliques(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}), 3) == 0);
  REQUIRE(count_cliques(complete_graph(6), 1) == 6);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(8, 0.5, rng);
    for (int r = 2; r <= 4; ++r) REQUIRE(count_cliques(g, r) == clique_count_oracle(g, r));
  }
}

TEST_CASE("hyperclique counting") {
  REQUIRE(count_hypercliques(complete_hypergraph(5, 3), 4) == 5);
  UniformHypergraph h = hg(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  REQUIRE(count_hypercliques(h, 3) == h.edge_count());
  REQUIRE(count_hypercliques(h, 4) == 0);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    UniformHypergraph rand_h = random_hypergraph(7, 3, 0.6, rng);
    for (int r = 3; r <= 5; ++r)
      REQUIRE(count_hypercliques(rand_h, r) == hyperclique_oracle(rand_h, r));
  }
}

TEST_CASE("clique expansion") {
  REQUIRE(clique_expansion(complete_graph(4), 3).edge_count() == 4);
  std::mt19937_64 rng(47);
  Graph triangle_free = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  REQUIRE(clique_expansion(triangle_free, 3).edges.empty());
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(7, 0.5, rng);
    for (int r = 2; r <= 4; ++r) {
      UniformHypergraph ce = clique_expansion(g, r);
      REQUIRE(ce.edge_count() == count_cliques(g, r));
      REQUIRE(ce.r == r);
      REQUIRE(ce.n == g.n);
    }
    REQUIRE(clique_expansion(g, 2) == g);
  }
}

TEST_CASE("clique expansion consistency over all graph classes up to 8 vertices") {
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t classes = 0;
    for_each_graph_class(n, [&](const UniformHypergraph& g) {
      ++classes;
      REQUIRE(clique_expansion(g, 3).edge_count() == count_cliques(g, 3));
      return true;
    });
    REQUIRE(classes > 0);
  }
}
