#pragma once

// Simple undirected graphs with stable vertex/edge indexing. Edges are stored
// normalized (u < v) in insertion order; edge ids double as engine slot ids
// for the edge-coloring problems.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace lal {

struct graph {
  std::uint32_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // normalized u < v
  std::vector<std::vector<std::uint32_t>> adj;                 // neighbor vertices, sorted
  std::vector<std::vector<std::uint32_t>> inc;                 // incident edge ids, sorted

  static graph from_edges(std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> es) {
    graph g;
    g.n = n;
    std::map<std::pair<std::uint32_t, std::uint32_t>, bool> seen;
    for (auto [u, v] : es) {
      if (u == v) fail(errc::parse_error, "self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (v >= n) fail(errc::parse_error, "vertex " + std::to_string(v) + " out of range");
      if (seen.count({u, v})) fail(errc::parse_error, "duplicate edge");
      seen[{u, v}] = true;
      g.edges.emplace_back(u, v);
    }
    g.rebuild();
    return g;
  }

  void rebuild() {
    adj.assign(n, {});
    inc.assign(n, {});
    for (std::uint32_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      adj[u].push_back(v);
      adj[v].push_back(u);
      inc[u].push_back(e);
      inc[v].push_back(e);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    for (auto& i : inc) std::sort(i.begin(), i.end());
  }

  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges.size()); }

  std::uint32_t max_degree() const {
    std::uint32_t d = 0;
    for (const auto& a : adj) d = std::max(d, static_cast<std::uint32_t>(a.size()));
    return d;
  }

  bool has_edge(std::uint32_t u, std::uint32_t v) const {
    if (u >= n || v >= n) return false;
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  /** Edge id of {u,v}, or -1. */
  std::int64_t edge_id(std::uint32_t u, std::uint32_t v) const {
    if (u > v) std::swap(u, v);
    if (v >= n) return -1;
    for (std::uint32_t e : inc[u]) {
      if (edges[e] == std::make_pair(u, v)) return e;
    }
    return -1;
  }
};

inline graph path_graph(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  for (std::uint32_t i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return graph::from_edges(n, std::move(es));
}

inline graph cycle_graph(std::uint32_t n) {
  if (n < 3) fail(errc::bad_argument, "cycle needs at least 3 vertices");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  for (std::uint32_t i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  es.emplace_back(0, n - 1);
  return graph::from_edges(n, std::move(es));
}

inline graph complete_graph(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return graph::from_edges(n, std::move(es));
}

/**
 * Random d-regular graph by the pairing model: d points per vertex, a random
 * perfect matching of points, resampled from scratch until simple.
 * Deterministic per seed.
 */
inline graph random_regular_graph(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
  if (d >= n) fail(errc::bad_argument, "degree must be below vertex count");
  if ((static_cast<std::uint64_t>(n) * d) % 2 != 0) fail(errc::bad_argument, "n*d must be even");
  rng64 rng(seed);
  std::vector<std::uint32_t> points(static_cast<std::size_t>(n) * d);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<std::uint32_t>(i / d);
  for (std::uint64_t attempt = 0; attempt < 200000; ++attempt) {
    for (std::size_t i = points.size(); i > 1; --i)
      std::swap(points[i - 1], points[rng.below(i)]);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    std::map<std::pair<std::uint32_t, std::uint32_t>, bool> seen;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < points.size() && ok; i += 2) {
      std::uint32_t u = points[i], v = points[i + 1];
      if (u == v) ok = false;
      if (u > v) std::swap(u, v);
      if (ok && seen.count({u, v})) ok = false;
      if (ok) {
        seen[{u, v}] = true;
        es.emplace_back(u, v);
      }
    }
    if (ok) return graph::from_edges(n, std::move(es));
  }
  fail(errc::too_large, "pairing model failed to produce a simple graph");
}

/**
 * Random tree with a degree cap: vertex i attaches to a uniformly random
 * earlier vertex that still has spare degree. Deterministic per seed.
 */
inline graph random_bounded_tree(std::uint32_t n, std::uint32_t max_degree, std::uint64_t seed) {
  if (max_degree < 2) fail(errc::bad_argument, "degree cap below 2 cannot host a tree");
  rng64 rng(seed);
  std::vector<std::uint32_t> deg(n, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  for (std::uint32_t i = 1; i < n; ++i) {
    std::vector<std::uint32_t> open;
    for (std::uint32_t j = 0; j < i; ++j)
      if (deg[j] < max_degree) open.push_back(j);
    if (open.empty()) fail(errc::bad_argument, "degree cap exhausted");
    std::uint32_t parent = open[rng.below(open.size())];
    es.emplace_back(parent, i);
    ++deg[parent];
    ++deg[i];
  }
  return graph::from_edges(n, std::move(es));
}

/** Parse "u v" per line, 0-indexed; blank lines and '#' comments allowed. */
inline graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  std::uint32_t max_v = 0;
  std::string line;
  std::size_t lineno = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank
    if (!(ls >> v)) fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected two vertex ids");
    std::string extra;
    if (ls >> extra) fail(errc::parse_error, "line " + std::to_string(lineno) + ": trailing tokens");
    if (u < 0 || v < 0) fail(errc::parse_error, "line " + std::to_string(lineno) + ": negative vertex id");
    es.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    max_v = std::max({max_v, static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
    any = true;
  }
  if (!any) fail(errc::parse_error, "edge list is empty");
  return graph::from_edges(max_v + 1, std::move(es));
}

inline std::string to_edge_list(const graph& g) {
  std::string out;
  for (auto [u, v] : g.edges) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

}  // namespace lal
