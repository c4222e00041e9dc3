#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "turanx/core.hpp"

namespace turanx {

// Text format: first non-comment line "n r", then one edge per line as r
// space-separated 0-based vertex indices. '#' starts a comment line.
inline UniformHypergraph read_hg(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1, r = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    std::istringstream row(body);
    std::vector<long long> nums;
    long long x;
    while (row >> x) nums.push_back(x);
    if (!row.eof())
      fail(errc::parse, "line " + std::to_string(lineno) + ": non-numeric token");
    if (nums.empty()) continue;
    if (n < 0) {
      if (nums.size() != 2)
        fail(errc::parse, "line " + std::to_string(lineno) + ": header must be 'n r'");
      if (nums[0] < 0 || nums[1] < 1)
        fail(errc::parse, "line " + std::to_string(lineno) + ": bad header values");
      n = static_cast<int>(nums[0]);
      r = static_cast<int>(nums[1]);
      continue;
    }
    if (static_cast<int>(nums.size()) != r)
      fail(errc::parse, "line " + std::to_string(lineno) + ": expected " + std::to_string(r) +
                            " vertices, got " + std::to_string(nums.size()));
    Edge e;
    for (long long v : nums) {
      if (v < 0 || v >= n)
        fail(errc::parse, "line " + std::to_string(lineno) + ": vertex " + std::to_string(v) +
                              " outside 0.." + std::to_string(n - 1));
      e.push_back(static_cast<int>(v));
    }
    edges.push_back(std::move(e));
  }
  if (n < 0) fail(errc::parse, "missing 'n r' header");
  try {
    return make_hypergraph(n, r, std::move(edges));
  } catch (const error& err) {
    fail(errc::parse, err.what());
  }
}

inline UniformHypergraph read_hg_string(const std::string& text) {
  std::istringstream in(text);
  return read_hg(in);
}

inline void write_hg(std::ostream& out, const UniformHypergraph& h) {
  out << h.n << ' ' << h.r << '\n';
  for (const Edge& e : h.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

inline std::string to_hg_string(const UniformHypergraph& h) {
  std::ostringstream out;
  write_hg(out, h);
  return out.str();
}

}  // namespace turanx
