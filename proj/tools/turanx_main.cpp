#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "turanx/canonical.hpp"
#include "turanx/coloring.hpp"
#include "turanx/constructions.hpp"
#include "turanx/core.hpp"
#include "turanx/decompose.hpp"
#include "turanx/expansion.hpp"
#include "turanx/gap.hpp"
#include "turanx/io.hpp"
#include "turanx/json_out.hpp"
#include "turanx/ops.hpp"
#include "turanx/search.hpp"
#include "turanx/structure.hpp"
#include "turanx/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
  std::string format = "text";
  std::uint64_t budget_nodes = turanx::Budget{}.max_nodes;
  double budget_secs = turanx::Budget{}.max_secs;
  std::uint64_t seed = 1;
  bool parallel = false;

  turanx::SearchOptions search() const {
    turanx::SearchOptions opts;
    opts.budget.max_nodes = budget_nodes;
    opts.budget.max_secs = budget_secs;
    opts.parallel = parallel;
    return opts;
  }

  turanx::VerifyOptions verify() const {
    turanx::VerifyOptions opts;
    opts.seed = seed;
    opts.search = search();
    return opts;
  }
};

turanx::UniformHypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) turanx::fail(turanx::errc::parse, "cannot open '" + path + "'");
  return turanx::read_hg(in);
}

turanx::Graph load_graph(const std::string& path) {
  turanx::UniformHypergraph h = load_hypergraph(path);
  if (h.r != 2)
    turanx::fail(turanx::errc::uniformity_mismatch, "'" + path + "' is not a 2-graph");
  return h;
}

void emit_json(const json& payload) { std::cout << payload.dump(2) << '\n'; }

int emit_hypergraph(const turanx::UniformHypergraph& h, const GlobalOpts& opts,
                    const json& record) {
  if (opts.format == "hg") {
    turanx::write_hg(std::cout, h);
  } else if (opts.format == "json") {
    emit_json(record);
  } else {
    std::cout << "n=" << h.n << " r=" << h.r << " edges=" << h.edge_count() << '\n';
    turanx::write_hg(std::cout, h);
  }
  return kExitOk;
}

int emit_search_result(const turanx::SearchResult& result, const json& problem,
                       const GlobalOpts& opts, bool budget_matters) {
  if (opts.format == "json") {
    emit_json(turanx::search_result_json(result, problem));
  } else if (opts.format == "hg") {
    turanx::write_hg(std::cout, result.witness);
  } else {
    std::cout << "value=" << result.value << " exhaustive=" << (result.exhaustive ? "yes" : "no")
              << " nodes=" << result.nodes << '\n';
    turanx::write_hg(std::cout, result.witness);
  }
  if (budget_matters && !result.exhaustive) return kExitBudget;
  return kExitOk;
}

std::string pretty_edge(const turanx::Edge& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"expansion Turán toolkit: operators, constructions, exact searches"};
  app.require_subcommand(1);

  GlobalOpts opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "hg", "text"}))
      ->capture_default_str();
  app.add_option("--budget-nodes", opts.budget_nodes, "search node budget")
      ->capture_default_str();
  app.add_option("--budget-secs", opts.budget_secs, "search time budget (seconds)")
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "random seed for randomized checks")
      ->capture_default_str();
  app.add_flag("--parallel", opts.parallel, "explore independent work items with a thread pool");

  std::function<int()> action;

  // ---- expand ----
  {
    auto* cmd = app.add_subcommand("expand", "r-uniform expansion of a core graph");
    auto core_path = std::make_shared<std::string>();
    auto r = std::make_shared<int>(3);
    cmd->add_option("--core", *core_path, "core graph file (.hg with r=2)")->required();
    cmd->add_option("--r", *r, "target uniformity")->required();
    cmd->callback([&, core_path, r] {
      action = [&, core_path, r] {
        turanx::Graph core = load_graph(*core_path);
        turanx::UniformHypergraph result = turanx::expand(core, *r);
        return emit_hypergraph(result, opts,
                               {{"construction", "expand"},
                                {"params", {{"core", *core_path}, {"r", *r}}},
                                {"edges", result.edge_count()},
                                {"n", result.n}});
      };
    });
  }

  // ---- contains ----
  {
    auto* cmd = app.add_subcommand("contains", "decide expansion containment");
    auto host_path = std::make_shared<std::string>();
    auto core_path = std::make_shared<std::string>();
    auto r = std::make_shared<int>(3);
    cmd->add_option("--host", *host_path, "host hypergraph file")->required();
    cmd->add_option("--core", *core_path, "core graph file")->required();
    cmd->add_option("--r", *r, "uniformity")->required();
    cmd->callback([&, host_path, core_path, r] {
      action = [&, host_path, core_path, r] {
        turanx::UniformHypergraph host = load_hypergraph(*host_path);
        turanx::Graph core = load_graph(*core_path);
        auto witness = turanx::contains_expansion(host, core, *r);
        if (opts.format == "json") {
          json out{{"contained", witness.has_value()}};
          if (witness) {
            out["core_map"] = witness->core_map;
            out["edge_hyperedges"] = witness->edge_hyperedges;
          }
          emit_json(out);
        } else if (witness) {
          std::cout << "contained; core ->";
          for (int v : witness->core_map) std::cout << ' ' << v;
          std::cout << "; hyperedges:";
          for (const turanx::Edge& e : witness->edge_hyperedges)
            std::cout << ' ' << pretty_edge(e);
          std::cout << '\n';
        } else {
          std::cout << "not contained\n";
        }
        return kExitOk;
      };
    });
  }

  // ---- shadow / heavy / fatgraph ----
  {
    auto* cmd = app.add_subcommand("shadow", "(r-1)-sets contained in some hyperedge");
    auto path = std::make_shared<std::string>();
    cmd->add_option("--input", *path, "hypergraph file")->required();
    cmd->callback([&, path] {
      action = [&, path] {
        turanx::UniformHypergraph result = turanx::shadow(load_hypergraph(*path));
        return emit_hypergraph(result, opts,
                               {{"construction", "shadow"},
                                {"params", {{"input", *path}}},
                                {"edges", result.edge_count()}});
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("heavy", "(r-1)-sets contained in at least t hyperedges");
    auto path = std::make_shared<std::string>();
    auto t = std::make_shared<int>(1);
    cmd->add_option("--input", *path, "hypergraph file")->required();
    cmd->add_option("--t", *t, "heaviness threshold")->required();
    cmd->callback([&, path, t] {
      action = [&, path, t] {
        turanx::UniformHypergraph result = turanx::heavy_shadow(load_hypergraph(*path), *t);
        return emit_hypergraph(result, opts,
                               {{"construction", "heavy"},
                                {"params", {{"input", *path}, {"t", *t}}},
                                {"edges", result.edge_count()}});
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("fatgraph", "graph of the t-fat pairs");
    auto path = std::make_shared<std::string>();
    auto t = std::make_shared<int>(1);
    cmd->add_option("--input", *path, "hypergraph file")->required();
    cmd->add_option("--t", *t, "fatness threshold")->required();
    cmd->callback([&, path, t] {
      action = [&, path, t] {
        turanx::Graph result = turanx::fat_pair_graph(load_hypergraph(*path), *t);
        return emit_hypergraph(result, opts,
                               {{"construction", "fatgraph"},
                                {"params", {{"input", *path}, {"t", *t}}},
                                {"edges", result.edge_count()}});
      };
    });
  }

  // ---- chromatic / critical / decomp / biex ----
  {
    auto* cmd = app.add_subcommand("chromatic", "exact chromatic number");
    auto path = std::make_shared<std::string>();
    cmd->add_option("--input", *path, "graph file")->required();
    cmd->callback([&, path] {
      action = [&, path] {
        int chi = turanx::chromatic_number(load_graph(*path));
        if (opts.format == "json")
          emit_json({{"chromatic_number", chi}});
        else
          std::cout << chi << '\n';
        return kExitOk;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("critical", "edges whose deletion lowers the chromatic number");
    auto path = std::make_shared<std::string>();
    cmd->add_option("--input", *path, "graph file")->required();
    cmd->callback([&, path] {
      action = [&, path] {
        auto edges = turanx::color_critical_edges(load_graph(*path));
        if (opts.format == "json") {
          emit_json({{"color_critical_edges", edges}});
        } else {
          for (const turanx::Edge& e : edges) std::cout << pretty_edge(e) << '\n';
          std::cout << edges.size() << " color-critical edge(s)\n";
        }
        return kExitOk;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("decomp", "decomposition family of a core graph");
    auto path = std::make_shared<std::string>();
    auto full = std::make_shared<bool>(false);
    cmd->add_option("--input", *path, "graph file")->required();
    cmd->add_flag("--full", *full, "keep members that contain another member");
    cmd->callback([&, path, full] {
      action = [&, path, full] {
        auto family = turanx::decomposition_family(load_graph(*path), !*full);
        if (opts.format == "json") {
          json members = json::array();
          for (const turanx::Graph& m : family.members)
            members.push_back(turanx::hypergraph_json(m));
          emit_json({{"members", members}, {"minimal", family.minimal}});
        } else {
          std::cout << family.members.size() << " member(s), minimal="
                    << (family.minimal ? "yes" : "no") << '\n';
          for (const turanx::Graph& m : family.members) turanx::write_hg(std::cout, m);
        }
        return kExitOk;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("biex", "extremal number of the decomposition family");
    auto path = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto full = std::make_shared<bool>(false);
    cmd->add_option("--input", *path, "core graph file")->required();
    cmd->add_option("--n", *n, "host order")->required();
    cmd->add_flag("--full", *full, "use the unreduced family");
    cmd->callback([&, path, n, full] {
      action = [&, path, n, full] {
        turanx::SearchResult result =
            turanx::biex_search(*n, load_graph(*path), !*full, opts.search());
        return emit_search_result(result, {{"kind", "biex"}, {"n", *n}, {"core", *path}}, opts,
                                  /*budget_matters=*/true);
      };
    });
  }

  // ---- construct ----
  {
    auto* cmd = app.add_subcommand("construct", "extremal construction generators");
    cmd->require_subcommand(1);
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    auto r = std::make_shared<int>(3);
    auto m = std::make_shared<int>(0);
    auto i = std::make_shared<int>(0);

    auto emit_construct = [&opts](const std::string& name, const json& params,
                                  const turanx::UniformHypergraph& h) {
      return emit_hypergraph(
          h, opts, {{"construction", name}, {"params", params}, {"edges", h.edge_count()}});
    };

    auto* turan = cmd->add_subcommand("turan", "balanced complete k-partite r-graph");
    turan->add_option("--n", *n)->required();
    turan->add_option("--k", *k)->required();
    turan->add_option("--r", *r)->capture_default_str();
    turan->callback([&, n, k, r, emit_construct] {
      action = [&, n, k, r, emit_construct] {
        turanx::UniformHypergraph h = (*r == 2) ? turanx::turan_graph(*n, *k)
                                                : turanx::turan_hypergraph(*n, *k, *r);
        return emit_construct("turan", {{"n", *n}, {"k", *k}, {"r", *r}}, h);
      };
    });

    auto* cone = cmd->add_subcommand("turan-cone", "Turán hypergraph plus apex vertices");
    cone->add_option("--n", *n)->required();
    cone->add_option("--k", *k)->required();
    cone->add_option("--r", *r)->capture_default_str();
    cone->add_option("--i", *i, "apex vertex count")->required();
    cone->callback([&, n, k, r, i, emit_construct] {
      action = [&, n, k, r, i, emit_construct] {
        return emit_construct("turan-cone", {{"n", *n}, {"k", *k}, {"r", *r}, {"i", *i}},
                              turanx::turan_cone(*n, *k, *r, *i));
      };
    });

    auto* hpart = cmd->add_subcommand("hpart", "k-partite r-graph with distinguished part");
    hpart->add_option("--n", *n)->required();
    hpart->add_option("--k", *k)->required();
    hpart->add_option("--r", *r)->capture_default_str();
    hpart->add_option("--m", *m, "distinguished part size")->required();
    hpart->callback([&, n, k, r, m, emit_construct] {
      action = [&, n, k, r, m, emit_construct] {
        return emit_construct("hpart", {{"n", *n}, {"k", *k}, {"r", *r}, {"m", *m}},
                              turanx::h_part(*n, *k, *r, *m));
      };
    });

    auto* hprime = cmd->add_subcommand("hprime", "hpart plus the two added edge families");
    hprime->add_option("--n", *n)->required();
    hprime->add_option("--k", *k)->required();
    hprime->add_option("--r", *r)->capture_default_str();
    hprime->add_option("--m", *m, "distinguished part size")->required();
    hprime->callback([&, n, k, r, m, emit_construct] {
      action = [&, n, k, r, m, emit_construct] {
        return emit_construct("hprime", {{"n", *n}, {"k", *k}, {"r", *r}, {"m", *m}},
                              turanx::h_prime(*n, *k, *r, *m));
      };
    });

    auto* book = cmd->add_subcommand("book", "two cliques sharing one vertex");
    book->add_option("--k", *k)->required();
    book->callback([&, k, emit_construct] {
      action = [&, k, emit_construct] {
        return emit_construct("book", {{"k", *k}}, turanx::book_graph(*k));
      };
    });

    auto* fixed = cmd->add_subcommand("fixed-vertex", "all r-sets through one vertex");
    fixed->add_option("--n", *n)->required();
    fixed->add_option("--r", *r)->capture_default_str();
    fixed->callback([&, n, r, emit_construct] {
      action = [&, n, r, emit_construct] {
        return emit_construct("fixed-vertex", {{"n", *n}, {"r", *r}},
                              turanx::fixed_vertex_hypergraph(*n, *r));
      };
    });
  }

  // ---- optimal-m ----
  {
    auto* cmd = app.add_subcommand("optimal-m", "maximize |E(H'(m))| over feasible m");
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    auto r = std::make_shared<int>(3);
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--k", *k)->required();
    cmd->add_option("--r", *r)->capture_default_str();
    cmd->callback([&, n, k, r] {
      action = [&, n, k, r] {
        turanx::OptimalM best = turanx::optimal_m(*n, *k, *r);
        if (opts.format == "json")
          emit_json({{"m", best.m}, {"edges", best.edges}});
        else
          std::cout << "m=" << best.m << " edges=" << best.edges << '\n';
        return kExitOk;
      };
    });
  }

  // ---- search ----
  {
    auto* cmd = app.add_subcommand("search", "exact extremal searches");
    cmd->require_subcommand(1);
    auto n = std::make_shared<int>(0);
    auto r = std::make_shared<int>(3);
    auto forbidden = std::make_shared<std::vector<std::string>>();
    auto core_path = std::make_shared<std::string>();
    auto seed_path = std::make_shared<std::string>();
    auto restarts = std::make_shared<int>(1);
    auto steps = std::make_shared<int>(1000);

    auto* exg = cmd->add_subcommand("ex-graph", "max edges avoiding forbidden subgraphs");
    exg->add_option("--n", *n)->required();
    exg->add_option("--forbidden", *forbidden, "forbidden subgraph file(s)")->required();
    exg->callback([&, n, forbidden] {
      action = [&, n, forbidden] {
        std::vector<turanx::Graph> pats;
        for (const std::string& p : *forbidden) pats.push_back(load_graph(p));
        turanx::SearchResult result = turanx::ex_graph_edges(*n, pats, opts.search());
        return emit_search_result(
            result, {{"kind", "ex-graph"}, {"n", *n}, {"forbidden", *forbidden}}, opts, true);
      };
    });

    auto* exc = cmd->add_subcommand("ex-cliques", "max r-clique count avoiding subgraphs");
    exc->add_option("--n", *n)->required();
    exc->add_option("--r", *r, "clique order")->required();
    exc->add_option("--forbidden", *forbidden, "forbidden subgraph file(s)")->required();
    exc->callback([&, n, r, forbidden] {
      action = [&, n, r, forbidden] {
        std::vector<turanx::Graph> pats;
        for (const std::string& p : *forbidden) pats.push_back(load_graph(p));
        turanx::SearchResult result = turanx::ex_graph_cliques(*n, *r, pats, opts.search());
        return emit_search_result(
            result,
            {{"kind", "ex-cliques"}, {"n", *n}, {"r", *r}, {"forbidden", *forbidden}}, opts,
            true);
      };
    });

    auto* exh = cmd->add_subcommand("ex-hyper", "max hyperedges avoiding a core expansion");
    exh->add_option("--n", *n)->required();
    exh->add_option("--r", *r)->required();
    exh->add_option("--core", *core_path, "core graph file")->required();
    exh->callback([&, n, r, core_path] {
      action = [&, n, r, core_path] {
        turanx::SearchResult result =
            turanx::ex_hypergraph(*n, *r, load_graph(*core_path), opts.search());
        return emit_search_result(
            result, {{"kind", "ex-hyper"}, {"n", *n}, {"r", *r}, {"core", *core_path}}, opts,
            true);
      };
    });

    auto* local = cmd->add_subcommand("local", "hill-climbing lower bound from a seed");
    local->add_option("--seed-hg", *seed_path, "forbidden-free seed hypergraph")->required();
    local->add_option("--core", *core_path, "forbidden expansion core")->required();
    local->add_option("--restarts", *restarts)->capture_default_str();
    local->add_option("--steps", *steps)->capture_default_str();
    local->callback([&, seed_path, core_path, restarts, steps] {
      action = [&, seed_path, core_path, restarts, steps] {
        turanx::UniformHypergraph seed = load_hypergraph(*seed_path);
        turanx::Graph core = load_graph(*core_path);
        turanx::SearchProblem problem;
        problem.n = seed.n;
        problem.r = seed.r;
        problem.forbidden.push_back(turanx::ForbiddenPattern::make_expansion(core, seed.r));
        problem.objective = {turanx::SearchObjective::Kind::edge_count, 2};
        turanx::SearchResult result =
            turanx::lower_bound_local_search(problem, seed, *restarts, *steps, opts.seed);
        return emit_search_result(result,
                                  {{"kind", "local"},
                                   {"seed", *seed_path},
                                   {"core", *core_path},
                                   {"restarts", *restarts},
                                   {"steps", *steps},
                                   {"rng_seed", opts.seed}},
                                  opts, /*budget_matters=*/false);
      };
    });
  }

  // ---- gap-table ----
  {
    auto* cmd = app.add_subcommand("gap-table", "lower bounds vs exhaustive values per n");
    auto core_path = std::make_shared<std::string>();
    auto r = std::make_shared<int>(3);
    auto n_from = std::make_shared<int>(4);
    auto n_to = std::make_shared<int>(6);
    cmd->add_option("--core", *core_path, "core graph file")->required();
    cmd->add_option("--r", *r)->capture_default_str();
    cmd->add_option("--n-from", *n_from)->capture_default_str();
    cmd->add_option("--n-to", *n_to)->capture_default_str();
    cmd->callback([&, core_path, r, n_from, n_to] {
      action = [&, core_path, r, n_from, n_to] {
        turanx::GapTable table =
            turanx::gap_table(load_graph(*core_path), *r, *n_from, *n_to, opts.search());
        if (opts.format == "json")
          emit_json(turanx::gap_table_json(table));
        else
          std::cout << turanx::gap_table_csv(table);
        return kExitOk;
      };
    });
  }

  // ---- analyze-structure ----
  {
    auto* cmd = app.add_subcommand("analyze-structure",
                                   "min-internal-fat-edge partition and B-candidates");
    auto path = std::make_shared<std::string>();
    auto k = std::make_shared<int>(0);
    auto t = std::make_shared<int>(1);
    auto theta = std::make_shared<double>(0.25);
    cmd->add_option("--input", *path, "hypergraph file")->required();
    cmd->add_option("--k", *k, "number of parts")->required();
    cmd->add_option("--t", *t, "fatness threshold")->required();
    cmd->add_option("--theta", *theta, "internal-degree fraction for B-candidates")
        ->capture_default_str();
    cmd->callback([&, path, k, t, theta] {
      action = [&, path, k, t, theta] {
        turanx::StructureReport report =
            turanx::analyze_structure(load_hypergraph(*path), *k, *t, *theta);
        if (opts.format == "json") {
          emit_json(turanx::structure_report_json(report));
        } else {
          std::cout << "internal_edges=" << report.internal_edges
                    << " exact=" << (report.exact ? "yes" : "no") << '\n';
          for (std::size_t p = 0; p < report.parts.size(); ++p) {
            std::cout << "part " << p << ":";
            for (int v : report.parts[p]) std::cout << ' ' << v;
            std::cout << '\n';
          }
          std::cout << "b_candidates:";
          for (int v : report.b_candidates) std::cout << ' ' << v;
          std::cout << '\n';
        }
        return kExitOk;
      };
    });
  }

  // ---- verify ----
  {
    auto* cmd = app.add_subcommand("verify", "run a claim-verification suite");
    auto suite = std::make_shared<std::string>();
    cmd->add_option("suite", *suite, "suite id")->required();
    cmd->callback([&, suite] {
      action = [&, suite] {
        const auto& ids = turanx::verify_suite_ids();
        if (std::find(ids.begin(), ids.end(), *suite) == ids.end())
          turanx::fail(turanx::errc::invalid_argument, "unknown verify suite: " + *suite);
        turanx::VerifySuiteReport report = turanx::verify_suite(*suite, opts.verify());
        if (opts.format == "text") {
          for (const turanx::ClaimResult& claim : report.claims)
            std::cout << claim.status << ' ' << claim.id << " [" << claim.anchor
                      << "] " << claim.detail << '\n';
          std::cout << (report.pass ? "PASS" : "FAIL") << ' ' << report.suite << '\n';
        } else {
          emit_json(turanx::verify_report_json(report));
        }
        return report.pass ? kExitOk : kExitClaimFailure;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const turanx::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
}
