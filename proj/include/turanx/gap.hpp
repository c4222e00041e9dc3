#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "turanx/coloring.hpp"
#include "turanx/constructions.hpp"
#include "turanx/core.hpp"
#include "turanx/search.hpp"

namespace turanx {

// One row of the expansion Turán gap instrument: lower bounds from clique
// counting, the fixed-vertex construction (non-star cores only) and the
// multipartite constructions, against the exhaustive value when feasible.
struct GapRow {
  int n = 0;
  std::optional<std::uint64_t> lb_clique;
  bool lb_clique_exhaustive = false;
  std::optional<std::uint64_t> lb_fixed;
  std::optional<std::uint64_t> lb_turan;
  std::optional<std::uint64_t> lb_hprime;
  std::optional<std::uint64_t> value;
  bool value_exhaustive = false;
};

struct GapTable {
  int r = 2;
  int k = 0;  // chi(F) - 1
  std::vector<GapRow> rows;
};

// Exhaustion is attempted only when the ground set is small enough for the
// branch-and-bound to finish at desk scale.
inline bool gap_value_feasible(int n, int r) { return binomial(n, r) <= 24; }

inline GapTable gap_table(const Graph& f, int r, int n_from, int n_to,
                          const SearchOptions& options = {}) {
  require_graph(f, "gap_table");
  if (n_from < 1 || n_to < n_from) fail(errc::invalid_argument, "bad n range");
  GapTable table;
  table.r = r;
  table.k = chromatic_number(f) - 1;
  bool star = is_star(f);
  for (int n = n_from; n <= n_to; ++n) {
    GapRow row;
    row.n = n;
    if (n <= 10) {
      SearchResult cliques = ex_graph_cliques(n, r, {f}, options);
      row.lb_clique = cliques.value;
      row.lb_clique_exhaustive = cliques.exhaustive;
    }
    if (!star && n >= r) row.lb_fixed = binomial(n - 1, r - 1);
    if (table.k >= r) {
      row.lb_turan = turan_count(n, table.k, r);
      if (n >= table.k + 1) row.lb_hprime = optimal_m(n, table.k, r).edges;
    }
    if (gap_value_feasible(n, r)) {
      SearchResult exact = ex_hypergraph(n, r, f, options);
      row.value = exact.value;
      row.value_exhaustive = exact.exhaustive;
    }
    table.rows.push_back(row);
  }
  return table;
}

inline std::string gap_table_csv(const GapTable& table) {
  std::ostringstream out;
  out << "n,lb_clique,lb_fixed,lb_turan,lb_hprime,value,exhaustive\n";
  auto cell = [&](const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const GapRow& row : table.rows) {
    out << row.n << ',' << cell(row.lb_clique) << ',' << cell(row.lb_fixed) << ','
        << cell(row.lb_turan) << ',' << cell(row.lb_hprime) << ',' << cell(row.value) << ','
        << (row.value ? (row.value_exhaustive ? "true" : "false") : "") << '\n';
  }
  return out.str();
}

}  // namespace turanx
