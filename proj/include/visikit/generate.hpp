#pragma once
/**
 * Instance families: seeded random arrangements, the K_{2k+3} arrangement,
 * the non-degenerate quasiplanar drawing, and the forced-peel family together
 * with its analyser. All vertex indices are 0-based.
 */

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "model.hpp"
#include "quasiplanar.hpp"
#include "transform.hpp"

namespace visikit {

/// Uniform permutation of 1..n, deterministic in (n, seed).
inline std::vector<Length> random_lengths(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw Error("n must be >= 1");
  std::vector<Length> lengths(n);
  std::iota(lengths.begin(), lengths.end(), Length{1});
  std::mt19937_64 rng(seed);
  std::shuffle(lengths.begin(), lengths.end(), rng);
  return lengths;
}

inline FlatArrangement random_flat(std::size_t n, int k, std::uint64_t seed) {
  return FlatArrangement{random_lengths(n, seed), k};
}

inline CylArrangement random_cyl(std::size_t n, int k, std::uint64_t seed) {
  return CylArrangement{random_lengths(n, seed), k};
}

/// 2k+3 bars of increasing length; every pair sees the other.
inline CylArrangement complete_graph_arrangement(int k) {
  if (k < 0) throw Error("k must be nonnegative");
  std::vector<Length> lengths(static_cast<std::size_t>(2 * k + 3));
  std::iota(lengths.begin(), lengths.end(), Length{1});
  return CylArrangement{std::move(lengths), k};
}

/// 4(k+1) points with the 2(k+1) long chords {v_i, v_{3(k+1)+1-i}} and
/// {v_{k+1+i}, v_{4(k+1)+1-i}}, i = 1..k+1 (1-based names).
inline ConvexDrawing quasiplanar_counterexample(int k) {
  if (k < 1) throw Error("k must be >= 1");
  const std::size_t q = static_cast<std::size_t>(k) + 1;
  ConvexDrawing d{4 * q, {}};
  for (std::size_t i = 1; i <= q; ++i) {
    d.edges.push_back(Edge{i - 1, 3 * q - i}.ordered());
    d.edges.push_back(Edge{q + i - 1, 4 * q - i}.ordered());
  }
  d.edges = normalize_edges(std::move(d.edges));
  return d;
}

/// (2k+3)(k+1) bars in 2k+3 blocks; block b reads b, b+(2k+3), ..., b+k(2k+3).
inline CylArrangement forced_peel_family(int k) {
  if (k < 1) throw Error("k must be >= 1");
  const Length stride = 2 * k + 3;
  CylArrangement arr{{}, k};
  for (Length block = 1; block <= stride; ++block)
    for (Length j = 0; j <= k; ++j) arr.lengths.push_back(block + j * stride);
  return arr;
}

/// No two of the `count` longest bars sit next to each other cyclically.
inline bool longest_pairwise_nonadjacent(const CylArrangement& arr, std::size_t count) {
  const std::size_t n = arr.size();
  if (n < 2) return true;
  std::vector<Length> sorted = arr.lengths;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const Length cutoff = sorted[std::min(count, n) - 1];
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (i != j && arr.lengths[i] >= cutoff && arr.lengths[j] >= cutoff) return false;
  }
  return true;
}

struct ForcedPeelOptions {
  bool exhaustive = false;             ///< also walk every valid peel order
  std::size_t max_orders = 1'000'000;  ///< stop the exhaustive walk after this many orders
};

struct ForcedPeelReport {
  std::size_t steps_checked = 0;
  std::vector<bool> forced;       ///< per step of the lowest-index peel
  bool all_forced = false;
  std::size_t forced_prefix = 0;  ///< leading forced steps of the lowest-index peel
  std::vector<std::size_t> first_unforced_eligible; ///< eligible vertices at the first unforced step
  CylArrangement arrangement;     ///< lowest-index peel result
  bool reproduces_input = false;
  bool longest_nonadjacent = false; ///< among the 2k+3 longest bars of `arrangement`

  // Exhaustive walk, filled only when requested.
  bool exhaustive = false;
  std::size_t orders_explored = 0;
  bool truncated = false;
  bool every_order_forced = false;
  bool every_order_nonadjacent = false;
  bool every_order_reproduces = false;
  std::size_t orders_with_adjacent_longest = 0;
};

namespace detail {

struct OrderWalk {
  const Graph& target;
  int k;
  std::size_t steps;
  std::size_t max_orders;
  std::size_t limit;
  ForcedPeelReport& report;
  std::vector<PeelStep> path;

  void visit(const PeelState& state) {
    if (report.truncated) return;
    const std::size_t i = path.size();
    if (i == target.n) {
      if (++report.orders_explored >= max_orders) report.truncated = true;
      const CylArrangement arr = arrangement_from_steps(target.n, k, path);
      if (!longest_pairwise_nonadjacent(arr, static_cast<std::size_t>(2 * k + 3))) {
        report.every_order_nonadjacent = false;
        ++report.orders_with_adjacent_longest;
      }
      if (cyl_visibility(arr) != target) report.every_order_reproduces = false;
      return;
    }
    const auto eligible = state.eligible(limit);
    if (eligible.empty()) throw Error(not_degenerate(i));
    if (i < steps && eligible.size() != 1) report.every_order_forced = false;
    for (std::size_t v : eligible) {
      PeelState next = state;
      next.remove(v);
      path.push_back(PeelStep{v, static_cast<Length>(i + 1), state.degree(v), eligible.size() == 1});
      visit(next);
      path.pop_back();
      if (report.truncated) return;
    }
  }
};

} // namespace detail

/// Runs the lowest-index peel and records which of the first `steps` steps
/// had a single eligible vertex.
inline ForcedPeelReport forced_peel_analysis(const ConvexDrawing& d, int k, std::size_t steps,
                                             ForcedPeelOptions options = {}) {
  const PeelResult base = peel(d, k);
  ForcedPeelReport report;
  report.steps_checked = std::min(steps, d.n);
  report.all_forced = true;
  for (std::size_t i = 0; i < report.steps_checked; ++i) {
    report.forced.push_back(base.trace.steps[i].forced);
    report.all_forced = report.all_forced && base.trace.steps[i].forced;
  }
  detail::PeelState replay(d);
  for (const PeelStep& s : base.trace.steps) {
    if (!s.forced) {
      report.first_unforced_eligible = replay.eligible(static_cast<std::size_t>(2 * k + 2));
      break;
    }
    ++report.forced_prefix;
    replay.remove(s.vertex);
  }
  report.arrangement = base.arrangement;
  report.reproduces_input = base.reproduces_input;
  report.longest_nonadjacent =
      longest_pairwise_nonadjacent(base.arrangement, static_cast<std::size_t>(2 * k + 3));

  if (options.exhaustive) {
    report.exhaustive = true;
    report.every_order_forced = true;
    report.every_order_nonadjacent = true;
    report.every_order_reproduces = true;
    const Graph target = graph_of(d);
    detail::OrderWalk walk{target, k, report.steps_checked, options.max_orders,
                           static_cast<std::size_t>(2 * k + 2), report, {}};
    walk.visit(detail::PeelState(d));
  }
  return report;
}

} // namespace visikit
