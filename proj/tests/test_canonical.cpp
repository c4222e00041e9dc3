#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "turanx/canonical.hpp"
#include "turanx/enumerate.hpp"
#include "turanx/subiso.hpp"

using namespace turanx;

namespace {

// Independent isomorphism oracle: equal shape plus mutual embedding.
bool iso_oracle(const UniformHypergraph& a, const UniformHypergraph& b) {
  if (a.n != b.n || a.r != b.r || a.edge_count() != b.edge_count()) return false;
  return contains_subhypergraph(a, b);
}

}  // namespace

TEST_CASE("canonical form examples") {
  Graph path_a = make_graph(3, {{0, 1}, {1, 2}});
  Graph path_b = make_graph(3, {{0, 2}, {0, 1}});  // relabeled path
  Graph triangle = complete_graph(3);
  REQUIRE(canonical_form(path_a) == canonical_form(path_b));
  REQUIRE(canonical_form(path_a) != canonical_form(triangle));
}

TEST_CASE("canonical form is permutation invariant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> pick_n(1, 7), pick_r(2, 3);
    int n = pick_n(rng);
    int r = std::min(pick_r(rng), n);
    UniformHypergraph h = random_hypergraph(n, r, 0.45, rng);
    UniformHypergraph relabeled = apply_permutation(h, random_permutation(n, rng));
    REQUIRE(canonical_form(h) == canonical_form(relabeled));
  }
}

TEST_CASE("canonical form separates non-isomorphic pairs") {
  std::mt19937_64 rng(13);
  int non_iso_seen = 0;
  while (non_iso_seen < 200) {
    std::uniform_int_distribution<int> pick_n(2, 6), pick_r(2, 3);
    int n = pick_n(rng);
    int r = std::min(pick_r(rng), n);
    UniformHypergraph a = random_hypergraph(n, r, 0.5, rng);
    UniformHypergraph b = random_hypergraph(n, r, 0.5, rng);
    bool iso = iso_oracle(a, b);
    bool keys_equal = canonical_form(a) == canonical_form(b);
    REQUIRE(keys_equal == iso);
    if (!iso) ++non_iso_seen;
  }
}

TEST_CASE("canonical copy is a relabeling with the same key") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    UniformHypergraph h = random_hypergraph(6, 3, 0.4, rng);
    UniformHypergraph c = canonical_copy(h);
    REQUIRE(c.edge_count() == h.edge_count());
    REQUIRE(canonical_form(c) == canonical_form(h));
    // canonical copy is a fixed point
    REQUIRE(canonical_copy(c) == c);
  }
}

TEST_CASE("highly symmetric inputs stay fast and consistent") {
  REQUIRE(canonical_form(complete_hypergraph(9, 3)) ==
          canonical_form(complete_hypergraph(9, 3)));
  REQUIRE(canonical_form(empty_hypergraph(12, 3)) == canonical_form(empty_hypergraph(12, 3)));
  // complete multipartite graphs exercise the non-special-cased symmetric path
  Graph t93 = make_graph(9, [] {
    std::vector<Edge> es;
    for (int u = 0; u < 9; ++u)
      for (int v = u + 1; v < 9; ++v)
        if (u / 3 != v / 3) es.push_back({u, v});
    return es;
  }());
  std::vector<int> perm{8, 3, 0, 5, 2, 7, 1, 6, 4};
  REQUIRE(canonical_form(t93) == canonical_form(apply_permutation(t93, perm)));
}

TEST_CASE("canonical form respects the size bound") {
  REQUIRE_THROWS_AS(canonical_form(empty_hypergraph(13, 2)), error);
  REQUIRE_NOTHROW(canonical_form(empty_hypergraph(13, 2), 13));
}
