#pragma once
/**
 * Acceptance sweeps. Each criterion runs its own instances, so criteria are
 * evaluated concurrently; results come back ordered by criterion id.
 *
 * Tolerances are all exact: every check is an integer or boolean equality.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "generate.hpp"
#include "model.hpp"
#include "quasiplanar.hpp"
#include "transform.hpp"
#include "visibility.hpp"

namespace visikit {

struct VerifyConfig {
  std::size_t edge_count_max_n = 9; ///< criterion 1, every permutation n = 2..this
  std::size_t embed_max_n = 8;      ///< criteria 2, 5, 8, 9 exhaustive part
  std::size_t oracle_max_n = 7;     ///< criterion 3
  std::size_t curl_max_n = 8;       ///< criterion 4
  std::size_t random_count = 1000;
  std::size_t random_max_n = 40;
  int random_max_k = 4;
  std::uint64_t seed = 20100101;
  bool parallel = true;

  /// Exhaustive sizes at most `cap`; the random part is unchanged.
  VerifyConfig capped(std::size_t cap) const {
    VerifyConfig c = *this;
    c.edge_count_max_n = std::min(c.edge_count_max_n, cap);
    c.embed_max_n = std::min(c.embed_max_n, cap);
    c.oracle_max_n = std::min(c.oracle_max_n, cap);
    c.curl_max_n = std::min(c.curl_max_n, cap);
    return c;
  }
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail; ///< first few failing instances, or a summary
};

namespace detail {

class Tally {
public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (ok) return;
    if (failures_++ < kShown) shown_.push_back(describe());
  }

  CriterionResult finish(int id, std::string name, std::string summary = {}) const {
    CriterionResult r{id, std::move(name), failures_ == 0, cases_, failures_, {}};
    if (failures_ == 0) {
      r.detail = std::move(summary);
    } else {
      r.detail = "failures: ";
      for (std::size_t i = 0; i < shown_.size(); ++i) r.detail += (i ? "; " : "") + shown_[i];
      if (failures_ > shown_.size()) r.detail += "; ...";
    }
    return r;
  }

private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  static constexpr std::size_t kShown = 3;
  std::vector<std::string> shown_;
};

inline std::string describe(const std::vector<Length>& lengths, int k) {
  std::ostringstream ss;
  ss << "k=" << k << " lengths=[";
  for (std::size_t i = 0; i < lengths.size(); ++i) ss << (i ? "," : "") << lengths[i];
  ss << "]";
  return ss.str();
}

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

/// Calls fn on every permutation of 1..n for n in [lo, hi].
inline void for_each_permutation(std::size_t lo, std::size_t hi,
                                 const std::function<void(const std::vector<Length>&)>& fn) {
  for (std::size_t n = lo; n <= hi; ++n) {
    std::vector<Length> p(n);
    std::iota(p.begin(), p.end(), Length{1});
    do fn(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
}

/// Exhaustive distinct-length cylindrical arrangements (n <= max_n, k <= 2)
/// followed by the seeded random ones.
inline std::vector<CylArrangement> sweep_instances(const VerifyConfig& c) {
  std::vector<CylArrangement> out;
  for (int k = 0; k <= 2; ++k)
    for_each_permutation(1, c.embed_max_n, [&](const std::vector<Length>& p) { out.push_back({p, k}); });
  std::mt19937_64 rng(c.seed);
  for (std::size_t i = 0; i < c.random_count; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % c.random_max_n);
    const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(c.random_max_k + 1));
    out.push_back(random_cyl(n, k, rng()));
  }
  return out;
}

inline CriterionResult criterion_edge_count(const VerifyConfig& c) {
  Tally t;
  for (int k = 0; k <= 2; ++k)
    for_each_permutation(2, c.edge_count_max_n, [&](const std::vector<Length>& p) {
      const auto m = static_cast<long long>(cyl_visibility(CylArrangement{p, k}).edge_count());
      t.check(m == max_edges(static_cast<long long>(p.size()), k), [&] {
        return describe(p, k) + " edges=" + std::to_string(m);
      });
    });
  return t.finish(1, "edge-count exactness (every permutation, n=2.." +
                         std::to_string(c.edge_count_max_n) + ", k=0..2)");
}

inline CriterionResult criterion_embed_quasiplanar(const VerifyConfig& c) {
  Tally t;
  for (const CylArrangement& arr : sweep_instances(c))
    t.check(is_quasiplanar(embed(arr), arr.k), [&] { return describe(arr.lengths, arr.k); });
  return t.finish(2, "embedding is (k+2)-quasiplanar (exhaustive n<=" + std::to_string(c.embed_max_n) +
                         " k<=2, plus " + std::to_string(c.random_count) + " random)");
}

inline CriterionResult criterion_oracle(const VerifyConfig& c) {
  Tally t;
  for (int k = 0; k <= 3; ++k)
    for_each_permutation(1, c.oracle_max_n, [&](const std::vector<Length>& p) {
      const FlatArrangement flat{p, k};
      const CylArrangement cyl{p, k};
      const AdjacencyMatrix fa(p.size(), flat_visibility(flat).edges);
      const AdjacencyMatrix ca(p.size(), cyl_visibility(cyl).edges);
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
          t.check(fa(i, j) == sightline_oracle(flat, i, j), [&] {
            return "flat " + describe(p, k) + " pair " + std::to_string(i) + "," + std::to_string(j);
          });
          t.check(ca(i, j) == sightline_oracle(cyl, i, j), [&] {
            return "cyl " + describe(p, k) + " pair " + std::to_string(i) + "," + std::to_string(j);
          });
        }
    });
  return t.finish(3, "fast visibility matches the sightline oracle (n<=" + std::to_string(c.oracle_max_n) +
                         ", k<=3)");
}

inline CriterionResult criterion_curl_iff(const VerifyConfig& c) {
  Tally t;
  std::size_t preserved = 0;
  for (int k = 0; k <= 2; ++k)
    for_each_permutation(static_cast<std::size_t>(2 * k + 2), c.curl_max_n, [&](const std::vector<Length>& p) {
      const FlatArrangement r{p, k};
      const bool same = flat_visibility(r) == cyl_visibility(curl(r));
      const bool predicted = curl_preserves(r);
      preserved += same;
      t.check(same == predicted, [&] {
        return describe(p, k) + " graphs_equal=" + std::to_string(same) + " condition=" +
               std::to_string(predicted);
      });
    });
  return t.finish(4, "curl keeps the graph iff the end-bar condition holds (n<=" +
                         std::to_string(c.curl_max_n) + ", k=0..2, n>=2k+2)",
                  std::to_string(preserved) + " preserving instances");
}

inline CriterionResult criterion_peel_round_trip(const VerifyConfig& c) {
  Tally t;
  for (const CylArrangement& arr : sweep_instances(c)) {
    bool ok = false;
    std::string why;
    try {
      const PeelResult res = peel(embed(arr), arr.k);
      ok = cyl_visibility(res.arrangement) == cyl_visibility(arr) && validate(res.trace).empty();
    } catch (const Error& e) {
      why = std::string(" error: ") + e.what();
    }
    t.check(ok, [&] { return describe(arr.lengths, arr.k) + why; });
  }
  return t.finish(5, "peel(embed(arr)) reproduces the visibility graph (instances of criterion 2)");
}

inline CriterionResult criterion_counterexample(const VerifyConfig&) {
  Tally t;
  std::string summary;
  for (int k = 1; k <= 4; ++k) {
    const ConvexDrawing d = quasiplanar_counterexample(k);
    t.check(is_quasiplanar(d, k), [&] { return "k=" + std::to_string(k) + " drawing not quasiplanar"; });
    const ConvexDrawing full = maximal_completion(d, k);
    t.check(is_maximal(full, k), [&] { return "k=" + std::to_string(k) + " completion not maximal"; });
    const Degeneracy dg = degeneracy(graph_of(full));
    std::vector<std::size_t> deg(full.n, 0);
    for (const Edge& e : full.edges) ++deg[e.u], ++deg[e.v];
    const std::size_t min_deg = *std::min_element(deg.begin(), deg.end());
    const auto need = static_cast<std::size_t>(2 * k + 3);
    t.check(min_deg >= need, [&] { return "k=" + std::to_string(k) + " min degree " + std::to_string(min_deg); });
    t.check(dg.value >= need, [&] { return "k=" + std::to_string(k) + " degeneracy " + std::to_string(dg.value); });
    summary += (summary.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) +
               ": min degree " + std::to_string(min_deg) + ", degeneracy " + std::to_string(dg.value);
  }
  return t.finish(6, "non-degenerate quasiplanar drawings (k=1..4)", summary);
}

inline CriterionResult criterion_forced_peel(const VerifyConfig&) {
  Tally t;
  std::string summary;
  {
    const ConvexDrawing c1 = embed(forced_peel_family(1));
    t.check(is_maximal(c1, 1), [] { return std::string("k=1 embedding not maximal"); });
    const ForcedPeelReport r = forced_peel_analysis(c1, 1, 5, ForcedPeelOptions{true, 1'000'000});
    t.check(r.all_forced && r.every_order_forced && !r.truncated,
            [&] { return "k=1 only the first " + std::to_string(r.forced_prefix) +
                         " of 5 steps forced; step " + std::to_string(r.forced_prefix + 1) +
                         " eligible vertices " + join(r.first_unforced_eligible); });
    t.check(r.longest_nonadjacent && r.every_order_nonadjacent,
            [&] { return "k=1 two of the 5 longest bars adjacent in " +
                         std::to_string(r.orders_with_adjacent_longest) + " of " +
                         std::to_string(r.orders_explored) + " peel orders"; });
    t.check(r.reproduces_input && r.every_order_reproduces,
            [] { return std::string("k=1 some peel order does not reproduce the drawing"); });
    summary = "k=1: " + std::to_string(r.orders_explored) + " peel orders";
  }
  {
    const ConvexDrawing c2 = embed(forced_peel_family(2));
    t.check(is_maximal(c2, 2), [] { return std::string("k=2 embedding not maximal"); });
    const ForcedPeelReport r = forced_peel_analysis(c2, 2, 14);
    t.check(r.all_forced && r.steps_checked == 14,
            [&] { return "k=2 only the first " + std::to_string(r.forced_prefix) + " of 14 steps forced"; });
    t.check(r.longest_nonadjacent, [] { return std::string("k=2 two of the 7 longest bars adjacent"); });
  }
  return t.finish(7, "forced-peel family (k=1 exhaustive over peel orders, k=2 deterministic)", summary);
}

inline CriterionResult criterion_bounds(const VerifyConfig& c) {
  Tally t;
  for (const CylArrangement& arr : sweep_instances(c)) {
    const Graph g = cyl_visibility(arr);
    const Degeneracy dg = degeneracy(g);
    const auto colors = greedy_color(g, dg.order);
    const auto limit = static_cast<std::size_t>(2 * arr.k + 2);
    t.check(dg.value <= limit, [&] { return describe(arr.lengths, arr.k) + " degeneracy " + std::to_string(dg.value); });
    t.check(color_count(colors) <= limit + 1,
            [&] { return describe(arr.lengths, arr.k) + " colors " + std::to_string(color_count(colors)); });
  }
  for (int k = 0; k <= 4; ++k) {
    const Graph g = cyl_visibility(complete_graph_arrangement(k));
    const auto n = static_cast<std::size_t>(2 * k + 3);
    t.check(g.n == n && g.edge_count() == n * (n - 1) / 2, [&] { return "K_{2k+3} not produced at k=" + std::to_string(k); });
  }
  return t.finish(8, "degeneracy <= 2k+2, greedy colors <= 2k+3, K_{2k+3} realised for k=0..4");
}

inline CriterionResult criterion_j_pairs(const VerifyConfig& c) {
  Tally t;
  for (int k = 1; k <= 4; ++k) {
    const ConvexDrawing full = maximal_completion(quasiplanar_counterexample(k), k);
    t.check(contains_low_j_pairs(full, k), [&] { return "completion k=" + std::to_string(k); });
  }
  for (const CylArrangement& arr : sweep_instances(c))
    t.check(contains_low_j_pairs(embed(arr), arr.k), [&] { return "embed " + describe(arr.lengths, arr.k); });
  return t.finish(9, "maximal drawings contain every j-pair chord for j <= k");
}

} // namespace detail

inline std::vector<CriterionResult> run_acceptance(const VerifyConfig& config) {
  using Fn = CriterionResult (*)(const VerifyConfig&);
  const Fn criteria[] = {
      detail::criterion_edge_count,     detail::criterion_embed_quasiplanar, detail::criterion_oracle,
      detail::criterion_curl_iff,       detail::criterion_peel_round_trip,   detail::criterion_counterexample,
      detail::criterion_forced_peel,    detail::criterion_bounds,            detail::criterion_j_pairs,
  };
  std::vector<CriterionResult> results;
  if (config.parallel) {
    std::vector<std::future<CriterionResult>> pending;
    for (Fn f : criteria) pending.push_back(std::async(std::launch::async, f, std::cref(config)));
    for (auto& p : pending) results.push_back(p.get());
  } else {
    for (Fn f : criteria) results.push_back(f(config));
  }
  std::sort(results.begin(), results.end(),
            [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
  return results;
}

inline std::string format_result(const CriterionResult& r) {
  std::string line = std::string(r.passed ? "[PASS]" : "[FAIL]") + " criterion " + std::to_string(r.id) + ": " +
                     r.name + " -- " + std::to_string(r.cases) + " checks";
  if (!r.passed) line += ", " + std::to_string(r.failures) + " failed";
  if (!r.detail.empty()) line += " (" + r.detail + ")";
  return line;
}

} // namespace visikit
