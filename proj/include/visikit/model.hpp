#pragma once
/**
 * Core value types for semi-bar arrangements and convex geometric drawings.
 *
 * Lengths are positive integers. Canonical instances with distinct lengths
 * are permutations of 1..n; ties are representable, and operations that need
 * distinct lengths say so and throw visikit::Error otherwise.
 *
 * Vertex i of every graph or drawing produced from an arrangement is bar i of
 * that arrangement. For flat arrangements index 0 is the bottommost bar; for
 * cylindrical arrangements indices follow the cyclic order around the axis.
 */

#include <algorithm>
#include <cstddef>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace visikit {

/// Domain failure of a library operation (precondition or construction).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Length = long long;

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  constexpr Edge() = default;
  constexpr Edge(std::size_t a, std::size_t b) : u(a), v(b) {}

  /// Same pair with u <= v.
  constexpr Edge ordered() const { return u <= v ? Edge{u, v} : Edge{v, u}; }

  constexpr auto operator<=>(const Edge&) const = default;
};

struct FlatArrangement {
  std::vector<Length> lengths; ///< index 0 = bottommost bar
  int k = 0;

  std::size_t size() const { return lengths.size(); }
  bool distinct() const;
  bool operator==(const FlatArrangement&) const = default;
};

struct CylArrangement {
  std::vector<Length> lengths; ///< cyclic order around the cylinder
  int k = 0;

  std::size_t size() const { return lengths.size(); }
  bool distinct() const;
  bool operator==(const CylArrangement&) const = default;
};

/// Points in convex position, identified by cyclic index 0..n-1, plus chords.
struct ConvexDrawing {
  std::size_t n = 0;
  std::vector<Edge> edges;

  bool operator==(const ConvexDrawing&) const = default;
};

struct Graph {
  std::size_t n = 0;
  std::vector<Edge> edges;

  std::size_t edge_count() const { return edges.size(); }
  bool operator==(const Graph&) const = default;
};

struct PeelStep {
  std::size_t vertex = 0; ///< cyclic index of the peeled vertex
  Length length = 0;      ///< length assigned to its bar
  std::size_t degree = 0; ///< degree in the remaining drawing when peeled
  bool forced = false;    ///< the eligible set was a singleton

  bool operator==(const PeelStep&) const = default;
};

struct PeelTrace {
  std::vector<PeelStep> steps;
  std::variant<CylArrangement, FlatArrangement> output;

  bool operator==(const PeelTrace&) const = default;
};

namespace detail {

inline bool all_distinct(std::vector<Length> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

inline std::string edge_str(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

inline void validate_lengths(const std::vector<Length>& lengths, int k,
                             std::vector<std::string>& out) {
  if (lengths.empty())
    out.emplace_back("lengths: arrangement must have at least one bar");
  for (std::size_t i = 0; i < lengths.size(); ++i)
    if (lengths[i] < 1)
      out.push_back("lengths[" + std::to_string(i) + "]: length must be >= 1, got " +
                    std::to_string(lengths[i]));
  if (k < 0)
    out.push_back("k: must be nonnegative, got " + std::to_string(k));
}

inline void validate_edges(std::size_t n, const std::vector<Edge>& edges,
                           std::vector<std::string>& out) {
  std::vector<Edge> seen;
  seen.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      out.push_back("index out of range: edge " + edge_str(e) + " with n=" + std::to_string(n));
      continue;
    }
    if (e.u == e.v) {
      out.push_back("self-loop at " + std::to_string(e.u));
      continue;
    }
    seen.push_back(e.ordered());
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i] == seen[i - 1] && (i < 2 || seen[i - 2] != seen[i]))
      out.push_back("duplicate edge " + edge_str(seen[i]));
}

} // namespace detail

inline bool FlatArrangement::distinct() const { return detail::all_distinct(lengths); }
inline bool CylArrangement::distinct() const { return detail::all_distinct(lengths); }

/// Sorted, deduplicated copy with every edge stored as u < v. Loops are dropped.
inline std::vector<Edge> normalize_edges(std::vector<Edge> edges) {
  for (Edge& e : edges) e = e.ordered();
  std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

inline Graph graph_of(const ConvexDrawing& d) { return Graph{d.n, normalize_edges(d.edges)}; }
inline ConvexDrawing drawing_of(const Graph& g) { return ConvexDrawing{g.n, normalize_edges(g.edges)}; }

// validate: an empty result means every invariant holds. Never throws on bad data.

inline std::vector<std::string> validate(const FlatArrangement& a) {
  std::vector<std::string> out;
  detail::validate_lengths(a.lengths, a.k, out);
  return out;
}

inline std::vector<std::string> validate(const CylArrangement& a) {
  std::vector<std::string> out;
  detail::validate_lengths(a.lengths, a.k, out);
  return out;
}

inline std::vector<std::string> validate(const ConvexDrawing& d) {
  std::vector<std::string> out;
  detail::validate_edges(d.n, d.edges, out);
  return out;
}

inline std::vector<std::string> validate(const Graph& g) {
  std::vector<std::string> out;
  detail::validate_edges(g.n, g.edges, out);
  return out;
}

/// Checks that the trace assigns each of 1..N exactly once to N distinct
/// vertices, that the output carries those lengths, and that no step peeled a
/// vertex of degree above 2k+2.
inline std::vector<std::string> validate(const PeelTrace& t) {
  std::vector<std::string> out;
  const auto [out_lengths, k] = std::visit(
      [](const auto& a) { return std::pair{a.lengths, a.k}; }, t.output);
  std::visit([&](const auto& a) {
    for (auto& msg : validate(a)) out.push_back("output." + msg);
  }, t.output);

  const std::size_t n = t.steps.size();
  if (out_lengths.size() != n)
    out.push_back("steps: " + std::to_string(n) + " steps for an output of " +
                  std::to_string(out_lengths.size()) + " bars");

  std::vector<char> vertex_seen(n, 0), length_seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const PeelStep& s = t.steps[i];
    const std::string where = "steps[" + std::to_string(i) + "]";
    if (s.vertex >= n) {
      out.push_back(where + ".vertex: index out of range");
    } else if (vertex_seen[s.vertex]++) {
      out.push_back(where + ".vertex: vertex " + std::to_string(s.vertex) + " peeled twice");
    }
    if (s.length < 1 || s.length > static_cast<Length>(n)) {
      out.push_back(where + ".length: must lie in 1.." + std::to_string(n));
    } else if (length_seen[s.length - 1]++) {
      out.push_back(where + ".length: length " + std::to_string(s.length) + " assigned twice");
    }
    if (k >= 0 && s.degree > static_cast<std::size_t>(2 * k + 2))
      out.push_back(where + ".degree: exceeds 2k+2");
  }
  std::vector<Length> assigned;
  for (const PeelStep& s : t.steps) assigned.push_back(s.length);
  std::sort(assigned.begin(), assigned.end());
  auto sorted_out = out_lengths;
  std::sort(sorted_out.begin(), sorted_out.end());
  if (assigned != sorted_out)
    out.emplace_back("output.lengths: do not match the assigned lengths");
  return out;
}

enum class Side { ccw, cw };

/// Indices strictly between a and b on one side of the circle. Both sides are
/// listed in increasing cyclic order: ccw walks a+1 .. b-1, cw walks b+1 .. a-1.
inline std::vector<std::size_t> cyclic_between(std::size_t n, std::size_t a, std::size_t b,
                                               Side side) {
  if (n < 2 || a == b || a >= n || b >= n) throw Error("degenerate pair");
  const std::size_t from = side == Side::ccw ? a : b;
  const std::size_t to = side == Side::ccw ? b : a;
  std::vector<std::size_t> out;
  for (std::size_t t = (from + 1) % n; t != to; t = (t + 1) % n) out.push_back(t);
  return out;
}

/// Points strictly inside the smaller of the two arcs cut off by chord {a,b}.
inline std::size_t chord_span(std::size_t n, std::size_t a, std::size_t b) {
  const std::size_t gap = a < b ? b - a : a - b;
  return std::min(gap, n - gap) - 1;
}

/// Dense symmetric adjacency, used internally by the peeling and degeneracy code.
class AdjacencyMatrix {
public:
  explicit AdjacencyMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}
  AdjacencyMatrix(std::size_t n, const std::vector<Edge>& edges) : AdjacencyMatrix(n) {
    for (const Edge& e : edges) set(e.u, e.v, true);
  }

  std::size_t size() const { return n_; }
  bool operator()(std::size_t a, std::size_t b) const { return bits_[a * n_ + b] != 0; }
  void set(std::size_t a, std::size_t b, bool on) {
    bits_[a * n_ + b] = on;
    bits_[b * n_ + a] = on;
  }

private:
  std::size_t n_;
  std::vector<unsigned char> bits_;
};

} // namespace visikit
