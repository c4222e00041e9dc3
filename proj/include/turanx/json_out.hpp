#pragma once

#include <nlohmann/json.hpp>

#include "turanx/core.hpp"
#include "turanx/gap.hpp"
#include "turanx/search.hpp"
#include "turanx/structure.hpp"
#include "turanx/verify.hpp"

namespace turanx {

inline nlohmann::json hypergraph_json(const UniformHypergraph& h) {
  return {{"n", h.n}, {"r", h.r}, {"edges", h.edges}};
}

// Timing is reported separately from the reproducible payload so reports can
// be compared byte for byte.
inline nlohmann::json search_result_json(const SearchResult& result,
                                         const nlohmann::json& problem,
                                         bool with_timing = true) {
  nlohmann::json out{{"problem", problem},
                     {"value", result.value},
                     {"witness_edges", result.witness.edges},
                     {"exhaustive", result.exhaustive},
                     {"nodes", result.nodes}};
  if (with_timing) out["elapsed_ms"] = result.elapsed_ms;
  return out;
}

inline nlohmann::json verify_report_json(const VerifySuiteReport& report) {
  nlohmann::json claims = nlohmann::json::array();
  for (const ClaimResult& claim : report.claims)
    claims.push_back({{"id", claim.id},
                      {"anchor", claim.anchor},
                      {"status", claim.status},
                      {"detail", claim.detail}});
  return {{"suite", report.suite}, {"claims", claims}, {"pass", report.pass}};
}

inline nlohmann::json gap_table_json(const GapTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const GapRow& row : table.rows) {
    nlohmann::json r{{"n", row.n}};
    if (row.lb_clique) {
      r["lb_clique"] = *row.lb_clique;
      r["lb_clique_exhaustive"] = row.lb_clique_exhaustive;
    }
    if (row.lb_fixed) r["lb_fixed"] = *row.lb_fixed;
    if (row.lb_turan) r["lb_turan"] = *row.lb_turan;
    if (row.lb_hprime) r["lb_hprime"] = *row.lb_hprime;
    if (row.value) {
      r["value"] = *row.value;
      r["exhaustive"] = row.value_exhaustive;
    }
    rows.push_back(std::move(r));
  }
  return {{"r", table.r}, {"k", table.k}, {"rows", rows}};
}

inline nlohmann::json structure_report_json(const StructureReport& report) {
  return {{"parts", report.parts},
          {"internal_degree", report.internal_degree},
          {"b_candidates", report.b_candidates},
          {"internal_edges", report.internal_edges},
          {"fat_edges", report.fat_graph.edges},
          {"exact", report.exact}};
}

}  // namespace turanx
