#pragma once
/**
 * k-visibility graphs of semi-bar arrangements.
 *
 * A sightline at height t (distance from the axis) crosses every bar of
 * length >= t. Two bars see each other when some sightline t <= min of their
 * lengths crosses at most k bars strictly between them; the blocking count is
 * smallest at t = min, so an intermediate bar blocks iff its length is >= the
 * shorter of the pair. On the cylinder either arc may carry the sightline.
 */

#include <cstddef>
#include <vector>

#include "model.hpp"

namespace visikit {

namespace detail {

/// True when at most k of the given bars reach the threshold. Stops early.
template <typename Indices>
bool arc_open(const std::vector<Length>& lengths, const Indices& between, Length threshold, int k) {
  int blockers = 0;
  for (std::size_t t : between)
    if (lengths[t] >= threshold && ++blockers > k) return false;
  return true;
}

/// Walks cyclic indices from+1 .. to-1 without materialising the arc.
inline bool cyclic_arc_open(const std::vector<Length>& lengths, std::size_t from, std::size_t to,
                            Length threshold, int k) {
  const std::size_t n = lengths.size();
  int blockers = 0;
  for (std::size_t t = from + 1 == n ? 0 : from + 1; t != to; t = t + 1 == n ? 0 : t + 1)
    if (lengths[t] >= threshold && ++blockers > k) return false;
  return true;
}

} // namespace detail

inline Graph flat_visibility(const FlatArrangement& arr) {
  const std::size_t n = arr.size();
  Graph g{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Length threshold = std::min(arr.lengths[i], arr.lengths[j]);
      int blockers = 0;
      for (std::size_t t = i + 1; t < j && blockers <= arr.k; ++t)
        if (arr.lengths[t] >= threshold) ++blockers;
      if (blockers <= arr.k) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

inline Graph cyl_visibility(const CylArrangement& arr) {
  const std::size_t n = arr.size();
  Graph g{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Length threshold = std::min(arr.lengths[i], arr.lengths[j]);
      if (detail::cyclic_arc_open(arr.lengths, i, j, threshold, arr.k) ||
          detail::cyclic_arc_open(arr.lengths, j, i, threshold, arr.k))
        g.edges.emplace_back(i, j);
    }
  }
  return g;
}

/// Direct simulation of the sightline quantifier: tries every candidate height
/// (the bar lengths not exceeding both endpoints) on every available side.
inline bool sightline_oracle(const FlatArrangement& arr, std::size_t i, std::size_t j) {
  if (i == j || i >= arr.size() || j >= arr.size()) throw Error("degenerate pair");
  const std::size_t lo = std::min(i, j), hi = std::max(i, j);
  for (Length t : arr.lengths) {
    if (t > arr.lengths[i] || t > arr.lengths[j]) continue;
    std::vector<std::size_t> between;
    for (std::size_t b = lo + 1; b < hi; ++b) between.push_back(b);
    if (detail::arc_open(arr.lengths, between, t, arr.k)) return true;
  }
  return false;
}

inline bool sightline_oracle(const CylArrangement& arr, std::size_t i, std::size_t j) {
  const std::size_t n = arr.size();
  if (i == j || i >= n || j >= n) throw Error("degenerate pair");
  const std::vector<std::size_t> sides[2] = {cyclic_between(n, i, j, Side::ccw),
                                             cyclic_between(n, i, j, Side::cw)};
  for (Length t : arr.lengths) {
    if (t > arr.lengths[i] || t > arr.lengths[j]) continue;
    for (const auto& arc : sides)
      if (detail::arc_open(arr.lengths, arc, t, arr.k)) return true;
  }
  return false;
}

/// Number of edges at bar i whose other endpoint is strictly longer.
inline std::size_t shorter_bar_edge_count(const CylArrangement& arr, std::size_t i) {
  if (!arr.distinct()) throw Error("distinct lengths required");
  if (i >= arr.size()) throw Error("index out of range");
  const std::size_t n = arr.size();
  std::size_t count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i || arr.lengths[j] < arr.lengths[i]) continue;
    const Length threshold = arr.lengths[i];
    if (detail::cyclic_arc_open(arr.lengths, i, j, threshold, arr.k) ||
        detail::cyclic_arc_open(arr.lengths, j, i, threshold, arr.k))
      ++count;
  }
  return count;
}

} // namespace visikit
