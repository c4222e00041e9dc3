#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "turanx/core.hpp"
#include "turanx/enumerate.hpp"
#include "turanx/io.hpp"

using namespace turanx;

TEST_CASE("make_hypergraph sorts and deduplicates") {
  UniformHypergraph g = make_hypergraph(3, 2, {{0, 1}, {1, 0}});
  REQUIRE(g.edge_count() == 1);
  REQUIRE(g.edges[0] == Edge{0, 1});

  UniformHypergraph h = make_hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}});
  REQUIRE(h.edge_count() == 2);
  REQUIRE(h.n == 6);

  UniformHypergraph scrambled = make_hypergraph(4, 3, {{3, 1, 0}, {0, 1, 3}});
  REQUIRE(scrambled.edge_count() == 1);
  REQUIRE(scrambled.edges[0] == Edge{0, 1, 3});
}

TEST_CASE("make_hypergraph rejects malformed edges") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const error& e) {
      return e.code();
    }
    return errc::invalid_argument;
  };
  REQUIRE(code([] { make_hypergraph(2, 3, {{0, 1, 1}}); }) == errc::duplicate_vertex);
  REQUIRE(code([] { make_hypergraph(3, 3, {{0, 1}}); }) == errc::arity);
  REQUIRE(code([] { make_hypergraph(3, 2, {{0, 5}}); }) == errc::vertex_range);
  REQUIRE(code([] { make_hypergraph(3, 2, {{-1, 0}}); }) == errc::vertex_range);
}

TEST_CASE("edge iteration order is lexicographic") {
  UniformHypergraph h = make_hypergraph(5, 2, {{3, 4}, {0, 2}, {0, 1}, {1, 2}});
  REQUIRE(h.edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {3, 4}});
}

TEST_CASE("hg format round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> pick_n(1, 8), pick_r(1, 4);
    int n = pick_n(rng);
    int r = std::min(pick_r(rng), n);
    UniformHypergraph h = random_hypergraph(n, r, 0.4, rng);
    UniformHypergraph back = read_hg_string(to_hg_string(h));
    REQUIRE(back == h);
  }
}

TEST_CASE("hg parser flags malformed input with line numbers") {
  auto message = [](const std::string& text) {
    try {
      read_hg_string(text);
    } catch (const error& e) {
      REQUIRE(e.code() == errc::parse);
      return std::string(e.what());
    }
    return std::string();
  };
  REQUIRE(message("3 2\n0 1 2\n").find("line 2") != std::string::npos);
  REQUIRE(message("3 2\n0 x\n").find("line 2") != std::string::npos);
  REQUIRE(message("3\n").find("line 1") != std::string::npos);
  REQUIRE(message("").find("header") != std::string::npos);
  REQUIRE(message("3 2\n0 7\n").find("line 2") != std::string::npos);
}

TEST_CASE("hg parser skips comments and blank lines") {
  UniformHypergraph h = read_hg_string("# triangle\n3 2\n\n0 1 # first\n1 2\n0 2\n");
  REQUIRE(h.n == 3);
  REQUIRE(h.edge_count() == 3);
}

TEST_CASE("connectivity helper") {
  REQUIRE(is_connected(make_graph(3, {{0, 1}, {1, 2}})));
  REQUIRE_FALSE(is_connected(make_graph(4, {{0, 1}, {2, 3}})));
  REQUIRE_FALSE(is_connected(make_graph(3, {{0, 1}})));  // isolated vertex 2
  REQUIRE(is_connected(make_hypergraph(3, 3, {{0, 1, 2}})));
  REQUIRE(is_connected(empty_hypergraph(1, 2)));
}

TEST_CASE("drop_isolated compresses labels in order") {
  Graph g = make_graph(5, {{1, 3}});
  Graph d = drop_isolated(g);
  REQUIRE(d.n == 2);
  REQUIRE(d.edges == std::vector<Edge>{{0, 1}});
}
