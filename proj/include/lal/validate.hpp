#pragma once

// Independent checkers for every output class, a backtracking feasibility
// oracle for tiny instances, and exact probability enumeration over explicit
// outcome spaces. Everything here works from the definitions alone and never
// calls into the problem detectors; the test suite leans on that independence.
//
// The *_in functions scan partial states and only consider structures whose
// slots are all filled. The check_* entry points demand total assignments.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "assignment.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "monoid.hpp"
#include "problems/choice_function.hpp"
#include "problems/nonrep_sequence.hpp"

namespace lal {

// ---------------------------------------------------------------------------
// sequences

struct repetition_witness {
  std::uint32_t s = 0;  // 1-based start of the first block
  std::uint32_t t = 0;  // block length: a_k = a_{k+t} for s <= k <= s+t-1
};

inline std::optional<repetition_witness> check_nonrepetitive_sequence(
    const std::vector<std::int32_t>& a) {
  const std::uint32_t n = static_cast<std::uint32_t>(a.size());
  for (std::uint32_t s = 1; s + 1 <= n; ++s) {
    for (std::uint32_t t = 1; s + 2 * t - 1 <= n; ++t) {
      bool equal = true;
      for (std::uint32_t k = s; k <= s + t - 1; ++k) {
        if (a[k - 1] != a[k + t - 1]) {
          equal = false;
          break;
        }
      }
      if (equal) return repetition_witness{s, t};
    }
  }
  return std::nullopt;
}

/** Prefix scan of a partial sequence state (filled slots form a prefix). */
inline std::optional<repetition_witness> repetition_in(const partial_assignment& state) {
  std::vector<std::int32_t> prefix;
  prefix.reserve(state.filled_count());
  for (slot_id i = 0; i < state.size(); ++i) {
    if (!state.is_filled(i)) break;
    prefix.push_back(state.value_at(i));
  }
  return check_nonrepetitive_sequence(prefix);
}

// ---------------------------------------------------------------------------
// vertex colorings

/** First same-colored edge among fully filled edges, as (u, v). */
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> proper_conflict_in(
    const graph& g, const partial_assignment& state) {
  if (state.size() != g.n) fail(errc::bad_argument, "state size is not the vertex count");
  for (const auto& [u, v] : g.edges) {
    if (state.is_filled(u) && state.is_filled(v) && state.value_at(u) == state.value_at(v))
      return std::make_pair(u, v);
  }
  return std::nullopt;
}

inline std::optional<std::pair<std::uint32_t, std::uint32_t>> check_proper_coloring(
    const graph& g, const partial_assignment& state) {
  if (!state.total()) fail(errc::incomplete_coloring, "coloring leaves vertices unfilled");
  return proper_conflict_in(g, state);
}

inline partial_assignment total_state(const std::vector<std::int32_t>& values) {
  partial_assignment x(values.size());
  for (slot_id i = 0; i < values.size(); ++i) x.fill(i, values[i]);
  return x;
}

inline std::optional<std::pair<std::uint32_t, std::uint32_t>> check_proper_coloring(
    const graph& g, const std::vector<std::int32_t>& colors) {
  return check_proper_coloring(g, total_state(colors));
}

namespace detail {

// Depth-first enumeration of simple paths in the filled subgraph, ascending
// start vertex and ascending neighbor extension; yields each even-length path
// to `found` until it returns true.
inline bool repetitive_even_path(const graph& g, const partial_assignment& state,
                                 std::vector<std::uint32_t>& path, std::vector<std::uint8_t>& used,
                                 const std::function<bool(const std::vector<std::uint32_t>&)>& found) {
  const std::uint32_t len = static_cast<std::uint32_t>(path.size());
  if (len >= 2 && len % 2 == 0 && found(path)) return true;
  for (std::uint32_t w : g.adj[path.back()]) {
    if (used[w] || !state.is_filled(w)) continue;
    used[w] = 1;
    path.push_back(w);
    if (repetitive_even_path(g, state, path, used, found)) return true;
    path.pop_back();
    used[w] = 0;
  }
  return false;
}

}  // namespace detail

/**
 * First repetitively colored even path in the filled subgraph: a simple path
 * v_1..v_{2t} with f(v_i) = f(v_{i+t}) for all i. Exhaustive, exponential in
 * general; guarded by vertex count.
 */
inline std::optional<std::vector<std::uint32_t>> repetitive_path_in(
    const graph& g, const partial_assignment& state, std::uint32_t size_guard = 30) {
  if (g.n > size_guard) fail(errc::too_large, "graph too large for exhaustive path search");
  if (state.size() != g.n) fail(errc::bad_argument, "state size is not the vertex count");
  std::optional<std::vector<std::uint32_t>> hit;
  auto repetitive = [&](const std::vector<std::uint32_t>& path) {
    const std::uint32_t t = static_cast<std::uint32_t>(path.size()) / 2;
    for (std::uint32_t i = 0; i < t; ++i)
      if (state.value_at(path[i]) != state.value_at(path[i + t])) return false;
    hit = path;
    return true;
  };
  std::vector<std::uint8_t> used(g.n, 0);
  std::vector<std::uint32_t> path;
  for (std::uint32_t s = 0; s < g.n; ++s) {
    if (!state.is_filled(s)) continue;
    used[s] = 1;
    path.assign(1, s);
    if (detail::repetitive_even_path(g, state, path, used, repetitive)) return hit;
    used[s] = 0;
  }
  return std::nullopt;
}

inline std::optional<std::vector<std::uint32_t>> check_nonrepetitive_coloring(
    const graph& g, const partial_assignment& state, std::uint32_t size_guard = 30) {
  if (!state.total()) fail(errc::incomplete_coloring, "coloring leaves vertices unfilled");
  return repetitive_path_in(g, state, size_guard);
}

inline std::optional<std::vector<std::uint32_t>> check_nonrepetitive_coloring(
    const graph& g, const std::vector<std::int32_t>& colors, std::uint32_t size_guard = 30) {
  return check_nonrepetitive_coloring(g, total_state(colors), size_guard);
}

// ---------------------------------------------------------------------------
// edge colorings

struct acyclic_violation {
  bool adjacent = false;                      // same-color adjacent pair vs bichromatic cycle
  std::array<std::int32_t, 2> colors{0, 0};   // one color twice, or the cycle's two colors
  std::vector<std::uint32_t> edges;           // the pair, or the cycle's edge ids
};

namespace detail {

struct union_find {
  std::vector<std::uint32_t> parent;
  explicit union_find(std::uint32_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Path from u to v through the listed edges, as edge ids; BFS, so the call
// sites get a shortest (hence simple) path. Empty if disconnected.
inline std::vector<std::uint32_t> edge_path(const graph& g, const std::vector<std::uint32_t>& eids,
                                            std::uint32_t u, std::uint32_t v) {
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> next(g.n);  // (vertex, via edge)
  for (std::uint32_t e : eids) {
    auto [a, b] = g.edges[e];
    next[a].push_back({b, e});
    next[b].push_back({a, e});
  }
  std::vector<std::int64_t> via(g.n, -1);
  std::vector<std::int64_t> from(g.n, -1);
  std::queue<std::uint32_t> q;
  q.push(u);
  from[u] = u;
  while (!q.empty()) {
    std::uint32_t x = q.front();
    q.pop();
    if (x == v) break;
    for (auto [y, e] : next[x]) {
      if (from[y] >= 0) continue;
      from[y] = x;
      via[y] = static_cast<std::int64_t>(e);
      q.push(y);
    }
  }
  std::vector<std::uint32_t> path;
  if (from[v] < 0) return path;
  for (std::uint32_t x = v; x != u; x = static_cast<std::uint32_t>(from[x]))
    path.push_back(static_cast<std::uint32_t>(via[x]));
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

/**
 * Violation of acyclicity among fully filled edges: an adjacent same-color
 * pair, or a cycle inside the union of two color classes (union-find forest
 * test; the witness cycle is recovered by BFS).
 */
inline std::optional<acyclic_violation> acyclic_conflict_in(const graph& g,
                                                            const partial_assignment& state) {
  if (state.size() != g.edge_count()) fail(errc::bad_argument, "state size is not the edge count");
  for (std::uint32_t v = 0; v < g.n; ++v) {
    for (std::size_t i = 0; i < g.inc[v].size(); ++i) {
      for (std::size_t j = i + 1; j < g.inc[v].size(); ++j) {
        std::uint32_t e1 = g.inc[v][i], e2 = g.inc[v][j];
        if (!state.is_filled(e1) || !state.is_filled(e2)) continue;
        if (state.value_at(e1) != state.value_at(e2)) continue;
        acyclic_violation w;
        w.adjacent = true;
        w.colors = {state.value_at(e1), state.value_at(e1)};
        w.edges = {e1, e2};
        return w;
      }
    }
  }
  std::vector<std::int32_t> palette;
  for (std::uint32_t e = 0; e < g.edge_count(); ++e)
    if (state.is_filled(e)) palette.push_back(state.value_at(e));
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  for (std::size_t ci = 0; ci < palette.size(); ++ci) {
    for (std::size_t di = ci + 1; di < palette.size(); ++di) {
      detail::union_find uf(g.n);
      std::vector<std::uint32_t> added;
      for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        if (!state.is_filled(e)) continue;
        std::int32_t c = state.value_at(e);
        if (c != palette[ci] && c != palette[di]) continue;
        auto [u, v] = g.edges[e];
        if (!uf.unite(u, v)) {
          acyclic_violation w;
          w.adjacent = false;
          w.colors = {palette[ci], palette[di]};
          w.edges = detail::edge_path(g, added, u, v);
          w.edges.push_back(e);
          return w;
        }
        added.push_back(e);
      }
    }
  }
  return std::nullopt;
}

inline std::optional<acyclic_violation> check_acyclic_edge_coloring(
    const graph& g, const partial_assignment& state) {
  if (!state.total()) fail(errc::incomplete_coloring, "coloring leaves edges unfilled");
  return acyclic_conflict_in(g, state);
}

inline std::optional<acyclic_violation> check_acyclic_edge_coloring(
    const graph& g, const std::vector<std::int32_t>& colors) {
  return check_acyclic_edge_coloring(g, total_state(colors));
}

// ---------------------------------------------------------------------------
// two-colorings of complete graphs

struct clique_witness {
  std::int32_t color = 0;                // ramsey_blue for the triangle, ramsey_red for the clique
  std::vector<std::uint32_t> vertices;   // ascending
};

namespace detail {

// Bron–Kerbosch with pivoting, stopping as soon as the growing clique reaches
// k vertices. `nodes` counts recursion entries against the budget.
inline bool clique_of_size(const std::vector<std::vector<std::uint8_t>>& adj, std::uint32_t k,
                           std::vector<std::uint32_t>& r, std::vector<std::uint32_t>& p,
                           std::vector<std::uint32_t>& x, std::uint64_t& nodes,
                           std::uint64_t budget, std::vector<std::uint32_t>& out) {
  if (++nodes > budget) fail(errc::too_large, "clique search budget exhausted");
  if (r.size() >= k) {
    out = r;
    return true;
  }
  if (r.size() + p.size() < k) return false;
  std::uint32_t pivot = 0;
  std::size_t best = 0;
  bool have = false;
  for (std::uint32_t u : p) {
    std::size_t deg = 0;
    for (std::uint32_t w : p)
      if (adj[u][w]) ++deg;
    if (!have || deg > best) {
      pivot = u;
      best = deg;
      have = true;
    }
  }
  for (std::uint32_t u : x) {
    std::size_t deg = 0;
    for (std::uint32_t w : p)
      if (adj[u][w]) ++deg;
    if (!have || deg > best) {
      pivot = u;
      best = deg;
      have = true;
    }
  }
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t v : p)
    if (!have || !adj[pivot][v]) candidates.push_back(v);
  for (std::uint32_t v : candidates) {
    std::vector<std::uint32_t> np, nx;
    for (std::uint32_t w : p)
      if (adj[v][w]) np.push_back(w);
    for (std::uint32_t w : x)
      if (adj[v][w]) nx.push_back(w);
    r.push_back(v);
    if (clique_of_size(adj, k, r, np, nx, nodes, budget, out)) return true;
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
  return false;
}

inline std::uint32_t lex_edge_id(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
  if (i > j) std::swap(i, j);
  std::uint64_t base = static_cast<std::uint64_t>(i) * (2ull * n - i - 1) / 2;
  return static_cast<std::uint32_t>(base + (j - i - 1));
}

}  // namespace detail

/**
 * Blue triangle or red k-clique among fully filled edges of K_n; blue
 * triangles take priority, and the triple scan returns the lexicographically
 * least one. Edge ids follow the lexicographic (i, j) order of complete_graph.
 */
inline std::optional<clique_witness> ramsey_conflict_in(std::uint32_t n, std::uint32_t k,
                                                        const partial_assignment& state,
                                                        std::uint64_t clique_budget = 100'000'000) {
  if (k < 2) fail(errc::bad_argument, "clique size below 2");
  if (state.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
    fail(errc::bad_argument, "state size is not C(n,2)");
  for (slot_id e = 0; e < state.size(); ++e) {
    if (!state.is_filled(e)) continue;
    std::int32_t c = state.value_at(e);
    if (c != 0 && c != 1) fail(errc::bad_argument, "edge color outside {0,1}");
  }
  auto colored = [&](std::uint32_t i, std::uint32_t j, std::int32_t c) {
    std::uint32_t e = detail::lex_edge_id(n, i, j);
    return state.is_filled(e) && state.value_at(e) == c;
  };
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (!colored(a, b, 1)) continue;
      for (std::uint32_t c = b + 1; c < n; ++c)
        if (colored(a, c, 1) && colored(b, c, 1)) return clique_witness{1, {a, b, c}};
    }
  std::vector<std::vector<std::uint8_t>> red(n, std::vector<std::uint8_t>(n, 0));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      if (colored(a, b, 0)) red[a][b] = red[b][a] = 1;
  std::vector<std::uint32_t> r, p(n), x, out;
  std::iota(p.begin(), p.end(), 0u);
  std::uint64_t nodes = 0;
  if (detail::clique_of_size(red, k, r, p, x, nodes, clique_budget, out)) {
    std::sort(out.begin(), out.end());
    return clique_witness{0, std::move(out)};
  }
  return std::nullopt;
}

inline std::optional<clique_witness> check_ramsey_witness(std::uint32_t n, std::uint32_t k,
                                                          const partial_assignment& state) {
  if (!state.total()) fail(errc::incomplete_coloring, "coloring leaves edges unfilled");
  return ramsey_conflict_in(n, k, state);
}

inline std::optional<clique_witness> check_ramsey_witness(std::uint32_t n, std::uint32_t k,
                                                          const std::vector<std::int32_t>& colors) {
  return check_ramsey_witness(n, k, total_state(colors));
}

// ---------------------------------------------------------------------------
// choice functions

/** Index of the first forbidden partial choice fully selected by the state. */
inline std::optional<std::uint32_t> forbidden_choice_in(const choice_system& sys,
                                                        const partial_assignment& state) {
  if (state.size() != sys.block_count()) fail(errc::bad_argument, "state size is not the block count");
  for (std::uint32_t j = 0; j < sys.forbidden.size(); ++j) {
    bool matches = true;
    for (auto [b, u] : sys.forbidden[j]) {
      if (!state.is_filled(b) || state.value_at(b) != static_cast<std::int32_t>(u)) {
        matches = false;
        break;
      }
    }
    if (matches) return j;
  }
  return std::nullopt;
}

inline std::optional<std::uint32_t> check_choice_function(const choice_system& sys,
                                                          const partial_assignment& state) {
  if (!state.total()) fail(errc::incomplete_coloring, "choice leaves blocks unfilled");
  return forbidden_choice_in(sys, state);
}

inline std::optional<std::uint32_t> check_choice_function(const choice_system& sys,
                                                          const std::vector<std::int32_t>& picks) {
  return check_choice_function(sys, total_state(picks));
}

// ---------------------------------------------------------------------------
// feasibility oracle

/**
 * A backtracking search space: per-slot domain sizes, a per-slot value map
 * (defaults to the identity), and a step acceptance predicate called after
 * each fill. The predicate sees the state and the slot just filled, may
 * assume the state before that fill was accepted, and must be monotone: a
 * rejected prefix stays rejected under every extension.
 */
struct feasibility_problem {
  std::vector<std::int32_t> domain_sizes;
  std::function<std::int32_t(slot_id, std::int32_t)> value_of;
  std::function<bool(const partial_assignment&, slot_id)> step_ok;
};

namespace detail {

inline bool feasible_from(const feasibility_problem& p, partial_assignment& state, slot_id next) {
  if (next == p.domain_sizes.size()) return true;
  for (std::int32_t k = 0; k < p.domain_sizes[next]; ++k) {
    state.fill(next, p.value_of ? p.value_of(next, k) : k);
    if (p.step_ok(state, next) && feasible_from(p, state, next + 1)) return true;
  }
  state.erase(next);
  return false;
}

}  // namespace detail

/** Does any total assignment satisfy every step predicate? Slots fill in index order. */
inline bool exhaustive_feasibility(const feasibility_problem& p,
                                   std::uint64_t leaf_guard = 10'000'000) {
  long double leaves = 1.0L;
  for (std::int32_t d : p.domain_sizes) {
    if (d <= 0) fail(errc::bad_argument, "empty slot domain");
    leaves *= static_cast<long double>(d);
    if (leaves > static_cast<long double>(leaf_guard))
      fail(errc::too_large, "search space exceeds the leaf guard");
  }
  partial_assignment state(p.domain_sizes.size());
  return detail::feasible_from(p, state, 0);
}

inline feasibility_problem sequence_feasibility(const list_system& lists) {
  feasibility_problem p;
  for (const auto& l : lists.lists) p.domain_sizes.push_back(static_cast<std::int32_t>(l.size()));
  p.value_of = [lists](slot_id s, std::int32_t k) { return lists.lists[s][static_cast<std::size_t>(k)]; };
  p.step_ok = [](const partial_assignment& state, slot_id) {
    return !repetition_in(state).has_value();
  };
  return p;
}

inline feasibility_problem proper_coloring_feasibility(const graph& g, std::uint32_t colors) {
  feasibility_problem p;
  p.domain_sizes.assign(g.n, static_cast<std::int32_t>(colors));
  p.step_ok = [g](const partial_assignment& state, slot_id) {
    return !proper_conflict_in(g, state).has_value();
  };
  return p;
}

inline feasibility_problem nonrepetitive_coloring_feasibility(const graph& g, std::uint32_t colors,
                                                              std::uint32_t size_guard = 30) {
  feasibility_problem p;
  p.domain_sizes.assign(g.n, static_cast<std::int32_t>(colors));
  p.step_ok = [g, size_guard](const partial_assignment& state, slot_id) {
    return !repetitive_path_in(g, state, size_guard).has_value();
  };
  return p;
}

inline feasibility_problem acyclic_edge_feasibility(const graph& g, std::uint32_t colors) {
  feasibility_problem p;
  p.domain_sizes.assign(g.edge_count(), static_cast<std::int32_t>(colors));
  p.step_ok = [g](const partial_assignment& state, slot_id) {
    return !acyclic_conflict_in(g, state).has_value();
  };
  return p;
}

inline feasibility_problem ramsey_feasibility(std::uint32_t n, std::uint32_t k) {
  feasibility_problem p;
  p.domain_sizes.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 2);
  p.step_ok = [n, k](const partial_assignment& state, slot_id) {
    return !ramsey_conflict_in(n, k, state).has_value();
  };
  return p;
}

inline feasibility_problem choice_feasibility(const choice_system& sys) {
  sys.validate();
  feasibility_problem p;
  for (const auto& block : sys.marginals)
    p.domain_sizes.push_back(static_cast<std::int32_t>(block.size()));
  p.step_ok = [sys](const partial_assignment& state, slot_id) {
    return !forbidden_choice_in(sys, state).has_value();
  };
  return p;
}

// ---------------------------------------------------------------------------
// exact enumeration

/**
 * Probability that none of the events holds, summed outcome by outcome over
 * an explicit space. Events are arbitrary predicates on the outcome index.
 */
inline double exact_event_enumeration(
    const std::vector<double>& probabilities,
    const std::vector<std::function<bool(std::size_t)>>& events) {
  if (probabilities.size() > (1u << 20)) fail(errc::too_large, "outcome space exceeds 2^20");
  double total = 0.0;
  for (double pr : probabilities) {
    if (!(pr >= 0.0)) fail(errc::invalid_distribution, "negative outcome probability");
    total += pr;
  }
  if (std::abs(total - 1.0) > 1e-12)
    fail(errc::invalid_distribution, "outcome probabilities do not sum to 1");
  double good = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    bool hit = false;
    for (const auto& ev : events) {
      if (ev(i)) {
        hit = true;
        break;
      }
    }
    if (!hit) good += probabilities[i];
  }
  return good;
}

}  // namespace lal
