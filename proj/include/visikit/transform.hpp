#pragma once
/**
 * Conversions between semi-bar arrangements and convex geometric drawings.
 *
 *   embed          cylindrical arrangement -> drawing with the same cyclic order
 *   peel           maximal (k+2)-quasiplanar, (2k+2)-degenerate drawing
 *                  -> cylindrical arrangement with lengths 1..n
 *   flat_peel      maximal planar drawing -> flat arrangement (k = 0)
 *   curl / cut     flat <-> cylindrical reinterpretation
 *
 * Peeling assigns lengths shortest first. A vertex of degree <= 2k+2 in a
 * maximal drawing is joined exactly to its k+1 nearest remaining neighbours on
 * each side, and a bar shorter than every remaining bar sees exactly those, so
 * the ordering choice among eligible vertices does not affect the result.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "model.hpp"
#include "quasiplanar.hpp"
#include "visibility.hpp"

namespace visikit {

inline ConvexDrawing embed(const CylArrangement& arr) {
  return ConvexDrawing{arr.size(), cyl_visibility(arr).edges};
}

inline CylArrangement curl(const FlatArrangement& r) { return CylArrangement{r.lengths, r.k}; }

namespace detail {

class PeelState {
public:
  explicit PeelState(const ConvexDrawing& d)
      : adj_(d.n, normalize_edges(d.edges)), deg_(d.n, 0), alive_(d.n, 1), remaining_(d.n) {
    for (const Edge& e : normalize_edges(d.edges)) {
      ++deg_[e.u];
      ++deg_[e.v];
    }
  }

  std::size_t remaining() const { return remaining_; }
  std::size_t degree(std::size_t v) const { return deg_[v]; }
  bool alive(std::size_t v) const { return alive_[v] != 0; }

  std::vector<std::size_t> eligible(std::size_t max_degree) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < deg_.size(); ++v)
      if (alive_[v] && deg_[v] <= max_degree) out.push_back(v);
    return out;
  }

  void remove(std::size_t v) {
    alive_[v] = 0;
    --remaining_;
    for (std::size_t w = 0; w < deg_.size(); ++w)
      if (alive_[w] && adj_(v, w)) --deg_[w];
  }

private:
  AdjacencyMatrix adj_;
  std::vector<std::size_t> deg_;
  std::vector<char> alive_;
  std::size_t remaining_;
};

inline std::string not_degenerate(std::size_t step) {
  return "not degenerate: no vertex of degree <= 2k+2 at step " + std::to_string(step);
}

/// Chooses one vertex from a non-empty, ascending list of eligible vertices.
using PeelChooser = std::function<std::size_t(std::size_t step, const std::vector<std::size_t>&)>;

inline std::vector<PeelStep> run_peel(const ConvexDrawing& d, int k, const PeelChooser& choose) {
  PeelState state(d);
  const std::size_t limit = static_cast<std::size_t>(2 * k + 2);
  std::vector<PeelStep> steps;
  steps.reserve(d.n);
  for (std::size_t i = 0; i < d.n; ++i) {
    const auto eligible = state.eligible(limit);
    if (eligible.empty()) throw Error(not_degenerate(i));
    const std::size_t v = choose(i, eligible);
    steps.push_back(PeelStep{v, static_cast<Length>(i + 1), state.degree(v), eligible.size() == 1});
    state.remove(v);
  }
  return steps;
}

inline CylArrangement arrangement_from_steps(std::size_t n, int k, const std::vector<PeelStep>& steps) {
  CylArrangement arr{std::vector<Length>(n, 0), k};
  for (const PeelStep& s : steps) arr.lengths[s.vertex] = s.length;
  return arr;
}

inline std::size_t lowest_eligible(std::size_t, const std::vector<std::size_t>& eligible) {
  return eligible.front();
}

} // namespace detail

struct PeelOptions {
  /// Skip the maximality refusal and return even if the result does not reproduce the input.
  bool force = false;
};

struct PeelResult {
  CylArrangement arrangement;
  PeelTrace trace;
  bool reproduces_input = false; ///< cyl_visibility(arrangement) equals the drawing's graph
};

inline PeelResult peel(const ConvexDrawing& d, int k, PeelOptions options = {}) {
  detail::require_valid(d);
  if (k < 0) throw Error("k must be nonnegative");
  if (!options.force) {
    if (!is_quasiplanar(d, k) || !is_maximal(d, k)) throw Error("not maximal");
  }
  auto steps = detail::run_peel(d, k, detail::lowest_eligible);
  PeelResult result;
  result.arrangement = detail::arrangement_from_steps(d.n, k, steps);
  result.trace = PeelTrace{std::move(steps), result.arrangement};
  result.reproduces_input = cyl_visibility(result.arrangement) == graph_of(d);
  if (!result.reproduces_input && !options.force)
    throw Error("peel did not reproduce the input graph");
  return result;
}

/**
 * Flat representation of a maximal planar convex drawing. Vertex 0 becomes the
 * topmost bar with length n and vertex n-1 the bottommost with length n-1; the
 * remaining vertices are peeled as degree-2 ears, lowest index first, and get
 * lengths 1..n-2. Bars are listed bottom to top, so bar t holds vertex n-1-t.
 *
 * The two anchor assignments appear as the final trace steps, marked forced
 * since nothing is chosen there.
 */
struct FlatPeelResult {
  FlatArrangement arrangement;
  PeelTrace trace;
};

inline std::size_t flat_bar_of_vertex(std::size_t n, std::size_t v) { return n - 1 - v; }

inline FlatPeelResult flat_peel(const ConvexDrawing& d) {
  detail::require_valid(d);
  const std::size_t n = d.n;
  if (n == 0) throw Error("not maximal planar");
  if (!is_quasiplanar(d, 0) || !is_maximal(d, 0)) throw Error("not maximal planar");

  std::vector<PeelStep> steps;
  detail::PeelState state(d);
  if (n == 1) {
    steps.push_back(PeelStep{0, 1, 0, true});
  } else {
    for (std::size_t i = 0; i + 2 < n; ++i) {
      std::vector<std::size_t> interior;
      for (std::size_t v : state.eligible(2))
        if (v != 0 && v != n - 1) interior.push_back(v);
      if (interior.empty()) throw Error("no peelable interior vertex");
      const std::size_t v = interior.front();
      steps.push_back(PeelStep{v, static_cast<Length>(i + 1), state.degree(v), interior.size() == 1});
      state.remove(v);
    }
    steps.push_back(PeelStep{n - 1, static_cast<Length>(n - 1), state.degree(n - 1), true});
    state.remove(n - 1);
    steps.push_back(PeelStep{0, static_cast<Length>(n), state.degree(0), true});
  }

  FlatArrangement arr{std::vector<Length>(n, 0), 0};
  for (const PeelStep& s : steps) arr.lengths[flat_bar_of_vertex(n, s.vertex)] = s.length;

  // Relabel bars back to vertices before comparing.
  Graph flat = flat_visibility(arr);
  for (Edge& e : flat.edges) e = Edge{flat_bar_of_vertex(n, e.u), flat_bar_of_vertex(n, e.v)};
  if (normalize_edges(flat.edges) != normalize_edges(d.edges))
    throw Error("flat peel did not reproduce the input graph");
  return FlatPeelResult{arr, PeelTrace{std::move(steps), arr}};
}

/// Curling keeps the graph iff it holds (for distinct lengths). Below n = 2k+2
/// the top and bottom k+1 bars overlap and the test is applied literally.
inline bool curl_preserves(const FlatArrangement& r) {
  if (!r.distinct()) throw Error("distinct lengths required");
  if (r.k < 0) throw Error("k must be nonnegative");
  const std::size_t n = r.size();
  const std::size_t ends = static_cast<std::size_t>(r.k) + 1;
  const std::size_t want = std::min(n, 2 * ends);

  std::vector<std::size_t> end_bars;
  for (std::size_t i = 0; i < n; ++i)
    if (i < ends || i + ends >= n) end_bars.push_back(i);

  std::vector<std::size_t> by_length(n);
  std::iota(by_length.begin(), by_length.end(), std::size_t{0});
  std::sort(by_length.begin(), by_length.end(),
            [&](std::size_t a, std::size_t b) { return r.lengths[a] > r.lengths[b]; });
  std::vector<std::size_t> longest(by_length.begin(), by_length.begin() + static_cast<std::ptrdiff_t>(want));
  std::sort(longest.begin(), longest.end());
  if (longest != end_bars) return false;

  const AdjacencyMatrix adj(n, flat_visibility(r).edges);
  for (std::size_t a = 0; a < longest.size(); ++a)
    for (std::size_t b = a + 1; b < longest.size(); ++b)
      if (!adj(longest[a], longest[b])) return false;
  return true;
}

/// True when curl_preserves is evaluated on overlapping top and bottom groups.
inline bool curl_condition_is_literal(const FlatArrangement& r) {
  return r.k >= 0 && r.size() < 2 * static_cast<std::size_t>(r.k) + 2;
}

/// Cylindrical indices in bottom-to-top order after cutting between the two
/// longest bars: the second longest goes to the bottom, then the walk moves
/// away from the longest, which ends on top. This may reverse the cyclic
/// orientation.
inline std::vector<std::size_t> cut_order(const CylArrangement& arr) {
  if (!arr.distinct()) throw Error("distinct lengths required");
  const std::size_t n = arr.size();
  if (n == 0) throw Error("empty arrangement");
  if (n == 1) return {0};

  std::size_t longest = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (arr.lengths[i] > arr.lengths[longest]) longest = i;
  std::size_t second = longest == 0 ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i)
    if (i != longest && arr.lengths[i] > arr.lengths[second]) second = i;

  const bool after = (longest + 1) % n == second;
  const bool before = (second + 1) % n == longest;
  if (!after && !before) throw Error("two longest not adjacent");

  std::vector<std::size_t> order;
  order.reserve(n);
  std::size_t t = second;
  for (std::size_t step = 0; step < n; ++step) {
    order.push_back(t);
    t = after ? (t + 1) % n : (t + n - 1) % n;
  }
  return order;
}

inline FlatArrangement cut(const CylArrangement& arr) {
  FlatArrangement flat{{}, arr.k};
  for (std::size_t i : cut_order(arr)) flat.lengths.push_back(arr.lengths[i]);
  return flat;
}

} // namespace visikit
