#pragma once
/**
 * Crossing structure of convex geometric drawings.
 *
 * With vertices in convex position only the cyclic order matters: chords
 * {a,b} and {c,d} cross iff their endpoints are distinct and interleave.
 * Chords sharing an endpoint never cross.
 *
 * Pairwise crossing families are found exactly. Write every chord as (a,b)
 * with a < b and sort a family by a; it is pairwise crossing iff
 * a_1 < a_2 < ... < a_m < b_1 < b_2 < ... < b_m. Fixing the member with the
 * smallest a, every other member has a inside (a_1, b_1) and b beyond b_1,
 * and what remains is a longest strictly increasing run of b after sorting by
 * a. That gives O(E^2 log E) for the largest family instead of a clique search.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "model.hpp"

namespace visikit {

inline bool chords_cross(std::size_t n, Edge e1, Edge e2) {
  if (e1.u >= n || e1.v >= n || e2.u >= n || e2.v >= n) throw Error("index out of range");
  e1 = e1.ordered();
  e2 = e2.ordered();
  if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) return false;
  const auto inside = [&](std::size_t t) { return e1.u < t && t < e1.v; };
  return inside(e2.u) != inside(e2.v);
}

namespace detail {

/// Same test without range checks; chords must already be ordered.
inline bool crossing_ordered(const Edge& x, const Edge& y) {
  return (x.u < y.u && y.u < x.v && x.v < y.v) || (y.u < x.u && x.u < y.v && y.v < x.v);
}

/// Largest pairwise crossing family among ordered, distinct chords. Returns as
/// soon as a family of `enough` members is found (0 = search for the maximum).
inline std::vector<Edge> crossing_family(std::span<const Edge> chords, std::size_t enough = 0) {
  std::vector<Edge> best;
  if (chords.empty()) return best;
  best.push_back(chords.front());
  if (enough == 1) return best;

  std::vector<Edge> cand;
  std::vector<std::size_t> tails, parent;
  for (const Edge& first : chords) {
    cand.clear();
    for (const Edge& c : chords)
      if (first.u < c.u && c.u < first.v && first.v < c.v) cand.push_back(c);
    if (cand.size() + 1 <= best.size()) continue;

    // Equal a sorted by descending b so that no two of them chain.
    std::sort(cand.begin(), cand.end(), [](const Edge& x, const Edge& y) {
      return x.u != y.u ? x.u < y.u : x.v > y.v;
    });
    tails.clear();
    parent.assign(cand.size(), SIZE_MAX);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      auto pos = std::lower_bound(tails.begin(), tails.end(), cand[i].v,
                                  [&](std::size_t idx, std::size_t b) { return cand[idx].v < b; });
      const std::size_t level = static_cast<std::size_t>(pos - tails.begin());
      if (level > 0) parent[i] = tails[level - 1];
      if (pos == tails.end()) tails.push_back(i); else *pos = i;
    }
    if (tails.size() + 1 > best.size()) {
      best.clear();
      for (std::size_t i = tails.back(); i != SIZE_MAX; i = parent[i]) best.push_back(cand[i]);
      best.push_back(first);
      std::reverse(best.begin(), best.end());
      if (enough != 0 && best.size() >= enough) return best;
    }
  }
  return best;
}

/// Would adding chord e (not present) complete a family of `size` pairwise crossing chords?
inline bool completes_family(std::span<const Edge> chords, Edge e, std::size_t size) {
  if (size <= 1) return true;
  std::vector<Edge> crossing;
  for (const Edge& c : chords)
    if (crossing_ordered(c, e)) crossing.push_back(c);
  if (crossing.size() + 1 < size) return false;
  return crossing_family(crossing, size - 1).size() + 1 >= size;
}

inline void require_valid(const ConvexDrawing& d) {
  const auto problems = validate(d);
  if (!problems.empty()) throw Error("invalid drawing: " + problems.front());
}

} // namespace detail

/// Some m edges of d that pairwise cross, or nullopt when there are none.
inline std::optional<std::vector<Edge>> find_pairwise_crossing(const ConvexDrawing& d,
                                                               std::size_t m) {
  if (m < 1) throw Error("family size must be >= 1");
  detail::require_valid(d);
  const auto chords = normalize_edges(d.edges);
  auto family = detail::crossing_family(chords, m);
  if (family.size() < m) return std::nullopt;
  family.resize(m);
  return family;
}

/// Size of the largest pairwise crossing family.
inline std::size_t max_crossing_family_size(const ConvexDrawing& d) {
  detail::require_valid(d);
  return detail::crossing_family(normalize_edges(d.edges)).size();
}

/// No k+2 pairwise crossing edges.
inline bool is_quasiplanar(const ConvexDrawing& d, int k) {
  if (k < 0) throw Error("k must be nonnegative");
  return !find_pairwise_crossing(d, static_cast<std::size_t>(k) + 2).has_value();
}

inline bool is_maximal(const ConvexDrawing& d, int k) {
  if (!is_quasiplanar(d, k)) throw Error("input not quasiplanar");
  const auto chords = normalize_edges(d.edges);
  const AdjacencyMatrix adj(d.n, chords);
  const std::size_t forbidden = static_cast<std::size_t>(k) + 2;
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = i + 1; j < d.n; ++j)
      if (!adj(i, j) && !detail::completes_family(chords, Edge{i, j}, forbidden)) return false;
  return true;
}

/// Non-edges in insertion order for maximal_completion: by chord span, then (i, j).
inline std::vector<Edge> completion_order(std::size_t n) {
  std::vector<Edge> order;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) order.emplace_back(i, j);
  std::stable_sort(order.begin(), order.end(), [n](const Edge& x, const Edge& y) {
    return chord_span(n, x.u, x.v) < chord_span(n, y.u, y.v);
  });
  return order;
}

/// Greedy single pass: a chord rejected once stays rejected as edges are only added.
inline ConvexDrawing maximal_completion(const ConvexDrawing& d, int k) {
  if (!is_quasiplanar(d, k)) throw Error("input not quasiplanar");
  auto chords = normalize_edges(d.edges);
  AdjacencyMatrix adj(d.n, chords);
  const std::size_t forbidden = static_cast<std::size_t>(k) + 2;
  for (const Edge& e : completion_order(d.n)) {
    if (adj(e.u, e.v) || detail::completes_family(chords, e, forbidden)) continue;
    chords.push_back(e);
    adj.set(e.u, e.v, true);
  }
  return ConvexDrawing{d.n, normalize_edges(std::move(chords))};
}

/// Pairs whose smaller cyclic side holds exactly j points.
inline std::vector<Edge> j_pairs(std::size_t n, std::size_t j) {
  if (n < 2 || j > n - 2) throw Error("level out of range");
  std::vector<Edge> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (chord_span(n, a, b) == j) out.emplace_back(a, b);
  return out;
}

inline std::vector<Edge> j_pairs(const ConvexDrawing& d, std::size_t j) { return j_pairs(d.n, j); }

/// True when d contains every j-pair chord for all j <= k.
inline bool contains_low_j_pairs(const ConvexDrawing& d, int k) {
  const AdjacencyMatrix adj(d.n, normalize_edges(d.edges));
  for (std::size_t a = 0; a < d.n; ++a)
    for (std::size_t b = a + 1; b < d.n; ++b)
      if (chord_span(d.n, a, b) <= static_cast<std::size_t>(k) && !adj(a, b)) return false;
  return true;
}

/// Exact edge count of distinct-length cylindrical k-visibility graphs, which
/// is also the ceiling for (k+2)-quasiplanar convex geometric graphs.
constexpr long long max_edges(long long n, long long k) {
  if (n <= 2 * k + 2) return n * (n - 1) / 2;
  return (k + 1) * (2 * n - 2 * k - 3);
}

struct Degeneracy {
  std::size_t value = 0;
  std::vector<std::size_t> order; ///< removal order, minimum degree first
};

/// Repeated minimum-degree removal, lowest label on ties.
inline Degeneracy degeneracy(const Graph& g) {
  const std::size_t n = g.n;
  const auto edges = normalize_edges(g.edges);
  std::vector<std::vector<std::size_t>> nbrs(n);
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : edges) {
    nbrs[e.u].push_back(e.v);
    nbrs[e.v].push_back(e.u);
    ++deg[e.u];
    ++deg[e.v];
  }
  std::vector<char> removed(n, 0);
  Degeneracy result;
  result.order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = SIZE_MAX;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (pick == SIZE_MAX || deg[v] < deg[pick])) pick = v;
    result.value = std::max(result.value, deg[pick]);
    result.order.push_back(pick);
    removed[pick] = 1;
    for (std::size_t w : nbrs[pick])
      if (!removed[w]) --deg[w];
  }
  return result;
}

/// Colors vertices in reverse elimination order with the smallest free color.
inline std::vector<std::size_t> greedy_color(const Graph& g, const std::vector<std::size_t>& order) {
  const std::size_t n = g.n;
  {
    std::vector<char> seen(n, 0);
    if (order.size() != n) throw Error("order is not a permutation of the vertices");
    for (std::size_t v : order)
      if (v >= n || seen[v]++) throw Error("order is not a permutation of the vertices");
  }
  std::vector<std::vector<std::size_t>> nbrs(n);
  for (const Edge& e : normalize_edges(g.edges)) {
    nbrs[e.u].push_back(e.v);
    nbrs[e.v].push_back(e.u);
  }
  constexpr std::size_t uncolored = SIZE_MAX;
  std::vector<std::size_t> color(n, uncolored);
  std::vector<char> used;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    used.assign(nbrs[*it].size() + 1, 0);
    for (std::size_t w : nbrs[*it])
      if (color[w] != uncolored && color[w] < used.size()) used[color[w]] = 1;
    color[*it] = static_cast<std::size_t>(std::find(used.begin(), used.end(), 0) - used.begin());
  }
  return color;
}

inline std::size_t color_count(const std::vector<std::size_t>& coloring) {
  return coloring.empty() ? 0 : *std::max_element(coloring.begin(), coloring.end()) + 1;
}

} // namespace visikit
