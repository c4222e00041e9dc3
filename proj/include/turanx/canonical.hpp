#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "turanx/core.hpp"

namespace turanx {

inline constexpr int kCanonicalBound = 12;

// Total-order key identifying a hypergraph up to isomorphism. Equal keys iff
// isomorphic; the encoding is exact, not a hash.
struct CanonicalForm {
  std::string key;

  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> relabel;  // old vertex -> canonical label
};

namespace detail {

// Iterative refinement of a vertex coloring by edge neighborhood signatures.
// Colors are renumbered after every round by sorted signature, so the final
// cell order depends only on the isomorphism type.
inline std::vector<int> refine_colors(const UniformHypergraph& h) {
  std::vector<int> color(h.n, 0);
  int classes = h.n > 0 ? 1 : 0;
  for (int round = 0; round < h.n; ++round) {
    // signature: current color plus the sorted list of partner-color tuples
    // over incident edges
    std::vector<std::vector<int>> sig(h.n);
    for (int v = 0; v < h.n; ++v) sig[v].push_back(color[v]);
    std::vector<std::vector<std::vector<int>>> incident(h.n);
    for (const Edge& e : h.edges) {
      std::vector<int> cols;
      cols.reserve(e.size());
      for (Vertex v : e) cols.push_back(color[v]);
      std::sort(cols.begin(), cols.end());
      for (Vertex v : e) {
        std::vector<int> rest;
        rest.reserve(cols.size());
        int self_skipped = 0;
        for (int c : cols) {
          if (!self_skipped && c == color[v]) {
            self_skipped = 1;
            continue;
          }
          rest.push_back(c);
        }
        incident[v].push_back(std::move(rest));
      }
    }
    for (int v = 0; v < h.n; ++v) {
      std::sort(incident[v].begin(), incident[v].end());
      for (auto& t : incident[v]) {
        sig[v].push_back(-1);  // separator
        sig[v].insert(sig[v].end(), t.begin(), t.end());
      }
    }
    std::map<std::vector<int>, int> order;
    for (int v = 0; v < h.n; ++v) order[sig[v]] = 0;
    int next = 0;
    for (auto& [s, id] : order) id = next++;
    std::vector<int> fresh(h.n);
    for (int v = 0; v < h.n; ++v) fresh[v] = order[sig[v]];
    if (next == classes) break;
    classes = next;
    color = std::move(fresh);
    if (classes == h.n) break;
  }
  return color;
}

// Row m of the code: all edges whose maximum canonical label equals m,
// each written as its label tuple, rows concatenated with length prefixes.
struct CodeBuilder {
  const UniformHypergraph& h;
  std::vector<std::vector<Vertex>> edges_by_max;  // filled per position
  std::vector<int> label;                         // old -> new, -1 unassigned
  std::vector<int> chosen;                        // position -> old vertex
  std::vector<std::vector<std::vector<int>>> incident;  // per old vertex, its edges

  explicit CodeBuilder(const UniformHypergraph& hh) : h(hh), label(hh.n, -1) {
    incident.resize(h.n);
    for (const Edge& e : h.edges)
      for (Vertex v : e) incident[v].push_back(e);
  }

  // Edges fully labelled once `v` receives label `pos`, as sorted label tuples.
  std::vector<std::vector<int>> row_for(Vertex v, int pos) const {
    std::vector<std::vector<int>> row;
    for (const auto& e : incident[v]) {
      std::vector<int> img;
      img.reserve(e.size());
      bool complete = true;
      for (Vertex w : e) {
        int lw = (w == v) ? pos : label[w];
        if (lw < 0) {
          complete = false;
          break;
        }
        img.push_back(lw);
      }
      if (!complete) continue;
      std::sort(img.begin(), img.end());
      row.push_back(std::move(img));
    }
    std::sort(row.begin(), row.end());
    return row;
  }
};

inline void append_row(std::string& out, const std::vector<std::vector<int>>& row) {
  out.push_back(static_cast<char>(row.size() & 0xff));
  out.push_back(static_cast<char>((row.size() >> 8) & 0xff));
  for (const auto& e : row)
    for (int v : e) out.push_back(static_cast<char>(v));
}

struct CanonicalSearch {
  CodeBuilder builder;
  std::vector<std::vector<int>> cells;  // refined cells in signature order
  std::string best;                     // best complete code so far
  std::vector<int> best_relabel;
  bool have_best = false;
  std::string prefix;  // code of the current partial assignment
  std::vector<std::size_t> prefix_len;

  explicit CanonicalSearch(const UniformHypergraph& h) : builder(h) {
    std::vector<int> color = refine_colors(h);
    int classes = 0;
    for (int c : color) classes = std::max(classes, c + 1);
    cells.assign(classes, {});
    for (int v = 0; v < h.n; ++v) cells[color[v]].push_back(v);
  }

  void run() {
    prefix.clear();
    prefix_len.assign(1, 0);
    descend(0, /*tight=*/true);
  }

  // tight: prefix equals best's prefix so far (only then can we prune).
  void descend(int pos, bool tight) {
    const UniformHypergraph& h = builder.h;
    if (pos == h.n) {
      if (!have_best || prefix < best) {
        best = prefix;
        best_relabel = builder.label;
        have_best = true;
      }
      return;
    }
    int cell_idx = 0, seen = 0;
    for (; cell_idx < static_cast<int>(cells.size()); ++cell_idx) {
      seen += static_cast<int>(cells[cell_idx].size());
      if (pos < seen) break;
    }
    for (Vertex v : cells[cell_idx]) {
      if (builder.label[v] >= 0) continue;
      auto row = builder.row_for(v, pos);
      std::size_t mark = prefix.size();
      append_row(prefix, row);
      bool child_tight = tight;
      if (tight && have_best) {
        // compare the appended fragment against the same slice of best;
        // a greater-than partial code can never beat best, equal stays tight
        std::size_t len = prefix.size() - mark;
        int cmp = prefix.compare(mark, len, best, mark, len);
        if (cmp > 0) {
          prefix.resize(mark);
          continue;
        }
        if (cmp < 0) child_tight = false;
      }
      builder.label[v] = pos;
      descend(pos + 1, child_tight);
      builder.label[v] = -1;
      prefix.resize(mark);
    }
  }
};

}  // namespace detail

// Exact canonical labeling via partition-refined backtracking over vertex
// orderings; equal keys iff isomorphic. Exponential in the worst case, which
// is acceptable at the configured bound.
inline CanonicalLabeling canonical_labeling(const UniformHypergraph& h,
                                            int bound = kCanonicalBound) {
  if (h.n > bound)
    fail(errc::too_large, "canonical form limited to " + std::to_string(bound) + " vertices");
  std::string header;
  header.push_back(static_cast<char>(h.n));
  header.push_back(static_cast<char>(h.r));
  if (h.edges.empty() || h.edge_count() == binomial(h.n, h.r)) {
    // Vertex order is irrelevant for the empty and the complete hypergraph.
    std::vector<int> identity(h.n);
    std::iota(identity.begin(), identity.end(), 0);
    std::string code = header;
    detail::CodeBuilder b(h);
    for (int v = 0; v < h.n; ++v) {
      detail::append_row(code, b.row_for(v, v));
      b.label[v] = v;
    }
    return CanonicalLabeling{CanonicalForm{std::move(code)}, std::move(identity)};
  }
  detail::CanonicalSearch search(h);
  search.run();
  return CanonicalLabeling{CanonicalForm{header + search.best}, std::move(search.best_relabel)};
}

inline CanonicalForm canonical_form(const UniformHypergraph& h, int bound = kCanonicalBound) {
  return canonical_labeling(h, bound).form;
}

// The canonically labelled copy of h.
inline UniformHypergraph canonical_copy(const UniformHypergraph& h,
                                        int bound = kCanonicalBound) {
  return apply_permutation(h, canonical_labeling(h, bound).relabel);
}

inline bool is_isomorphic(const UniformHypergraph& a, const UniformHypergraph& b,
                          int bound = kCanonicalBound) {
  if (a.n != b.n || a.r != b.r || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, bound) == canonical_form(b, bound);
}

}  // namespace turanx
