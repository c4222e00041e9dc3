#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "turanx/canonical.hpp"
#include "turanx/constructions.hpp"
#include "turanx/core.hpp"
#include "turanx/decompose.hpp"
#include "turanx/enumerate.hpp"
#include "turanx/expansion.hpp"
#include "turanx/gap.hpp"
#include "turanx/ops.hpp"
#include "turanx/parallel.hpp"
#include "turanx/search.hpp"
#include "turanx/subiso.hpp"

namespace turanx {

struct ClaimResult {
  std::string id;
  std::string anchor;  // what the claim pins down, in formula form
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;
};

struct VerifySuiteReport {
  std::string suite;
  std::vector<ClaimResult> claims;
  bool pass = true;

  void add(std::string id, std::string anchor, bool ok, std::string detail) {
    claims.push_back({std::move(id), std::move(anchor), ok ? "pass" : "fail",
                      std::move(detail)});
    if (!ok) pass = false;
  }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  SearchOptions search;
};

inline const std::vector<std::string>& verify_suite_ids() {
  static const std::vector<std::string> ids = {
      "arny",       "fat-corollary", "biex-book",          "decomp-book",
      "optimal-m-r3", "counts",      "lower-bounds",       "oracle-equivalence",
      "zykov-small", "hprime-critical"};
  return ids;
}

namespace detail {

inline Graph triangle_graph() { return make_graph(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline Graph path3_graph() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Graph star3_graph() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline Graph matching2_graph() { return make_graph(4, {{0, 1}, {2, 3}}); }
inline Graph star2_graph() { return make_graph(3, {{0, 1}, {0, 2}}); }
inline Graph k4_graph() { return complete_graph(4); }

struct NamedCore {
  std::string name;
  Graph graph;
};

// Shadow-threshold suites share this walk: every F^(3)+-free 3-graph class on
// n <= max_n, with check(H) evaluated per class.
template <typename Check>
std::pair<std::uint64_t, std::uint64_t> scan_free_classes(const Graph& f, int max_n,
                                                          bool parallel, Check&& check) {
  std::uint64_t classes = 0, violations = 0;
  for (int n = 3; n <= max_n; ++n) {
    std::vector<UniformHypergraph> reps;
    for_each_isomorph_free(
        n, 3, [&](const UniformHypergraph& h) { return is_expansion_free(h, f, 3); },
        [&](const UniformHypergraph& rep) {
          reps.push_back(rep);
          return true;
        });
    std::vector<char> bad(reps.size(), 0);
    parallel_for(reps.size(), parallel, [&](std::size_t i) {
      if (!check(reps[i])) bad[i] = 1;
    });
    classes += reps.size();
    for (char b : bad) violations += b;
  }
  return {classes, violations};
}

}  // namespace detail

// Shadow threshold: heavy_shadow with t = (r-2)|E(F)|+|V(F)| of an
// F^(3)+-free 3-graph is F-free. Exhaustive over n <= 6 up to isomorphism.
inline VerifySuiteReport verify_arny(const VerifyOptions& options = {}) {
  VerifySuiteReport report;
  report.suite = "arny";
  std::vector<detail::NamedCore> cores = {{"k3", detail::triangle_graph()},
                                          {"path3", detail::path3_graph()},
                                          {"star3", detail::star3_graph()}};
  for (const auto& core : cores) {
    int t = default_t(core.graph, 3);
    auto [classes, violations] = detail::scan_free_classes(
        core.graph, 6, options.search.parallel, [&](const UniformHypergraph& h) {
          return !contains_subhypergraph(heavy_shadow(h, t), core.graph);
        });
    std::ostringstream detail_text;
    detail_text << classes << " free classes, t=" << t << ", " << violations
                << " counterexamples";
    report.add("arny-" + core.name, "heavy_shadow(H,t) stays " + core.name + "-free",
               violations == 0, detail_text.str());
  }
  return report;
}

// Fat-pair graph of an F^(3)+-free 3-graph is F-free; same instance family.
inline VerifySuiteReport verify_fat_corollary(const VerifyOptions& options = {}) {
  VerifySuiteReport report;
  report.suite = "fat-corollary";
  std::vector<detail::NamedCore> cores = {{"k3", detail::triangle_graph()},
                                          {"path3", detail::path3_graph()},
                                          {"star3", detail::star3_graph()}};
  for (const auto& core : cores) {
    int t = default_t(core.graph, 3);
    auto [classes, violations] = detail::scan_free_classes(
        core.graph, 6, options.search.parallel, [&](const UniformHypergraph& h) {
          return !contains_subhypergraph(fat_pair_graph(h, t), core.graph);
        });
    std::ostringstream detail_text;
    detail_text << classes << " free classes, t=" << t << ", " << violations
                << " counterexamples";
    report.add("fat-" + core.name, "fat_pair_graph(H,t) stays " + core.name + "-free",
               violations == 0, detail_text.str());
  }
  return report;
}

// biex(n, B_{3,1}) = 1 for n = 4..8.
inline VerifySuiteReport verify_biex_book(const VerifyOptions& options = {}) {
  VerifySuiteReport report;
  report.suite = "biex-book";
  Graph book = book_graph(2);
  for (int n = 4; n <= 8; ++n) {
    std::uint64_t value = biex(n, book, true, options.search);
    report.add("biex-book-n" + std::to_string(n), "biex(n,B_{3,1}) = 1", value == 1,
               "biex(" + std::to_string(n) + ") = " + std::to_string(value));
  }
  return report;
}

// The decomposition family of B_{3,1} holds the two-edge matching and the
// two-edge star.
inline VerifySuiteReport verify_decomp_book(const VerifyOptions& = {}) {
  VerifySuiteReport report;
  report.suite = "decomp-book";
  DecompositionFamily family = decomposition_family(book_graph(2), /*minimal=*/false);
  auto holds = [&](const Graph& wanted) {
    for (const Graph& member : family.members)
      if (is_isomorphic(member, wanted)) return true;
    return false;
  };
  std::string sizes;
  for (const Graph& member : family.members) {
    if (!sizes.empty()) sizes += ",";
    sizes += std::to_string(member.n) + "v" + std::to_string(member.edge_count()) + "e";
  }
  report.add("decomp-book-matching", "2-matching in D(B_{3,1})", holds(detail::matching2_graph()),
             "members: " + sizes);
  report.add("decomp-book-star", "2-star in D(B_{3,1})", holds(detail::star2_graph()),
             "members: " + sizes);
  return report;
}

// Formula floor((n-1)/(k-1)) against the enumerated argmax of |E(H'(m))|,
// r = 3, k = 3..5, n = k+2..30.
inline VerifySuiteReport verify_optimal_m_r3(const VerifyOptions& = {}) {
  VerifySuiteReport report;
  report.suite = "optimal-m-r3";
  for (int k = 3; k <= 5; ++k) {
    std::ostringstream mismatches;
    int bad = 0, total = 0;
    for (int n = k + 2; n <= 30; ++n) {
      ++total;
      int formula = (n - 1) / (k - 1);
      std::uint64_t best = 0;
      std::vector<int> argmax;
      for (int m = 2; m <= n - k + 1; ++m) {
        std::uint64_t count = h_prime(n, k, 3, m).edge_count();
        if (count > best) {
          best = count;
          argmax.assign(1, m);
        } else if (count == best) {
          argmax.push_back(m);
        }
      }
      bool ok = std::find(argmax.begin(), argmax.end(), formula) != argmax.end();
      if (!ok) {
        ++bad;
        if (bad <= 6) {
          mismatches << " n=" << n << ":formula=" << formula << ",argmax=" << argmax.front();
          if (argmax.size() > 1) mismatches << ".." << argmax.back();
        }
      }
    }
    std::ostringstream detail_text;
    detail_text << bad << "/" << total << " instances off";
    if (bad > 0) detail_text << ";" << mismatches.str();
    report.add("optimal-m-k" + std::to_string(k),
               "floor((n-1)/(k-1)) in argmax_m |E(H'(m))|", bad == 0, detail_text.str());
  }
  return report;
}

// Closed-form counts against literal enumeration.
inline VerifySuiteReport verify_counts(const VerifyOptions& = {}) {
  VerifySuiteReport report;
  report.suite = "counts";
  {
    std::uint64_t checked = 0, bad = 0;
    for (int r = 2; r <= 4; ++r)
      for (int k = r; k <= 5; ++k)
        for (int n = 1; n <= 15; ++n) {
          ++checked;
          if (turan_count(n, k, r) != turan_hypergraph(n, k, r).edge_count()) ++bad;
        }
    report.add("turan-count", "t_r(n,k) = |E(T_r(n,k))|", bad == 0,
               std::to_string(checked) + " instances, " + std::to_string(bad) + " off");
  }
  {
    std::uint64_t checked = 0, bad = 0;
    for (int r = 2; r <= 4; ++r)
      for (int k = r; k <= 5; ++k)
        for (int n = 1; n <= 15; ++n)
          for (int i = 0; i <= std::min(3, n); ++i) {
            ++checked;
            std::uint64_t formula = turan_count(n - i, k, r);
            for (int j = 1; j <= i; ++j) formula += binomial(n - j, r - 1);
            if (formula != turan_cone(n, k, r, i).edge_count()) ++bad;
          }
    report.add("cone-count", "|E(T_r(n,k,i))| = sum_j C(n-j,r-1) + t_r(n-i,k)", bad == 0,
               std::to_string(checked) + " instances, " + std::to_string(bad) + " off");
  }
  {
    std::uint64_t count = h_prime(7, 3, 3, 3).edge_count();
    report.add("hprime-7333", "|E(H'(3))| = 19 at n=7,k=3,r=3", count == 19,
               "got " + std::to_string(count));
  }
  return report;
}

// ex_3(n, K_3^(3)+) sandwich: at least the clique-count bound and the
// fixed-vertex bound, n = 4..6.
inline VerifySuiteReport verify_lower_bounds(const VerifyOptions& options = {}) {
  VerifySuiteReport report;
  report.suite = "lower-bounds";
  Graph k3 = detail::triangle_graph();
  for (int n = 4; n <= 6; ++n) {
    SearchResult exact = ex_hypergraph(n, 3, k3, options.search);
    SearchResult cliques = ex_graph_cliques(n, 3, {k3}, options.search);
    std::uint64_t fixed = binomial(n - 1, 2);
    bool ok = exact.exhaustive && cliques.exhaustive && exact.value >= cliques.value &&
              exact.value >= fixed;
    std::ostringstream detail_text;
    detail_text << "value=" << exact.value << " clique_lb=" << cliques.value
                << " fixed_lb=" << fixed;
    report.add("sandwich-n" + std::to_string(n),
               "ex_3(n,K_3^+) >= max(ex(n,K_3,K_3), C(n-1,2))", ok, detail_text.str());
  }
  return report;
}

// contains_expansion against the expand+subhypergraph oracle.
inline VerifySuiteReport verify_oracle_equivalence(const VerifyOptions& options = {}) {
  VerifySuiteReport report;
  report.suite = "oracle-equivalence";
  {
    std::vector<detail::NamedCore> cores = {{"k3", detail::triangle_graph()},
                                            {"path3", detail::path3_graph()},
                                            {"matching2", detail::matching2_graph()}};
    std::uint64_t checked = 0, disagreements = 0;
    for (int n = 3; n <= 5; ++n) {
      for_each_labeled_hypergraph(n, 3, [&](const UniformHypergraph& host) {
        for (const auto& core : cores) {
          ++checked;
          bool direct = contains_expansion(host, core.graph, 3).has_value();
          bool oracle = contains_subhypergraph(host, expand(core.graph, 3));
          if (direct != oracle) ++disagreements;
        }
      });
    }
    report.add("oracle-exhaustive", "contains_expansion = subhypergraph(expand) on all n<=5",
               disagreements == 0,
               std::to_string(checked) + " checks, " + std::to_string(disagreements) +
                   " disagreements");
  }
  {
    std::mt19937_64 rng(options.seed);
    std::uint64_t disagreements = 0;
    int witness_hits = 0;
    for (int trial = 0; trial < 500; ++trial) {
      std::uniform_int_distribution<int> host_n(4, 9), core_n(2, 5), pick_r(3, 4);
      int r = pick_r(rng);
      std::uniform_real_distribution<double> density(0.1, 0.9);
      UniformHypergraph host = random_hypergraph(host_n(rng), r, density(rng), rng);
      Graph core = random_graph(core_n(rng), density(rng), rng);
      auto witness = contains_expansion(host, core, r);
      bool oracle = contains_subhypergraph(host, expand(core, r));
      if (witness.has_value() != oracle) ++disagreements;
      if (witness && validate_expansion_witness(host, core, r, *witness)) ++witness_hits;
      if (witness && !validate_expansion_witness(host, core, r, *witness)) ++disagreements;
    }
    report.add("oracle-random", "500 seeded random instances agree", disagreements == 0,
               std::to_string(disagreements) + " disagreements, " +
                   std::to_string(witness_hits) + " validated witnesses");
  }
  return report;
}

// Mantel and the K_4-free triangle-count maxima at small n.
inline VerifySuiteReport verify_zykov_small(const VerifyOptions& options = {}) {
  VerifySuiteReport report;
  report.suite = "zykov-small";
  Graph k3 = detail::triangle_graph();
  for (int n = 4; n <= 8; ++n) {
    SearchResult res = ex_graph_edges(n, {k3}, options.search);
    std::uint64_t expected = static_cast<std::uint64_t>(n) * n / 4;
    bool ok = res.exhaustive && res.value == expected;
    report.add("mantel-n" + std::to_string(n), "ex(n,K_3) = floor(n^2/4)", ok,
               "got " + std::to_string(res.value) + ", want " + std::to_string(expected));
  }
  for (int n = 4; n <= 7; ++n) {
    SearchResult res = ex_graph_cliques(n, 3, {detail::k4_graph()}, options.search);
    std::uint64_t expected = count_cliques(turan_graph(n, 3), 3);
    bool ok = res.exhaustive && res.value == expected;
    report.add("zykov-n" + std::to_string(n), "ex(n,K_3,K_4) = N(K_3,T_2(n,3))", ok,
               "got " + std::to_string(res.value) + ", want " + std::to_string(expected));
  }
  return report;
}

// Cores with chromatic number 4 and no color-critical edge never expand into
// H'(m*) with k = 3: checked over all connected cores on <= 5 vertices.
inline VerifySuiteReport verify_hprime_critical(const VerifyOptions& = {}) {
  VerifySuiteReport report;
  report.suite = "hprime-critical";
  std::vector<Graph> qualifying;
  for (int nf = 1; nf <= 5; ++nf) {
    for_each_graph_class(nf, [&](const UniformHypergraph& g) {
      if (!g.edges.empty() && is_connected(g) && chromatic_number(g) == 4 &&
          color_critical_edges(g).empty())
        qualifying.push_back(g);
      return true;
    });
  }
  std::uint64_t checked = 0, violations = 0;
  for (int n = 4; n <= 9; ++n) {
    UniformHypergraph host = h_prime(n, 3, 3, optimal_m(n, 3, 3).m);
    for (const Graph& core : qualifying) {
      ++checked;
      if (contains_expansion(host, core, 3).has_value()) ++violations;
    }
  }
  std::ostringstream detail_text;
  detail_text << qualifying.size() << " qualifying cores, " << checked << " host checks, "
              << violations << " violations";
  report.add("hprime-critical", "no F^(3)+ in H'(m*) without a color-critical edge",
             violations == 0, detail_text.str());
  return report;
}

inline VerifySuiteReport verify_suite(const std::string& id, const VerifyOptions& options = {}) {
  if (id == "arny") return verify_arny(options);
  if (id == "fat-corollary") return verify_fat_corollary(options);
  if (id == "biex-book") return verify_biex_book(options);
  if (id == "decomp-book") return verify_decomp_book(options);
  if (id == "optimal-m-r3") return verify_optimal_m_r3(options);
  if (id == "counts") return verify_counts(options);
  if (id == "lower-bounds") return verify_lower_bounds(options);
  if (id == "oracle-equivalence") return verify_oracle_equivalence(options);
  if (id == "zykov-small") return verify_zykov_small(options);
  if (id == "hprime-critical") return verify_hprime_critical(options);
  fail(errc::invalid_argument, "unknown verify suite: " + id);
}

}  // namespace turanx
