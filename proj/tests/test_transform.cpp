#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <visikit/generate.hpp>
#include <visikit/transform.hpp>

#include "oracles.hpp"

using namespace visikit;

namespace {

ConvexDrawing square_with_diagonal() {
  return ConvexDrawing{4, normalize_edges({{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}})};
}

ConvexDrawing fan(std::size_t n) {
  ConvexDrawing d{n, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
  for (std::size_t i = 2; i < n; ++i) d.edges.emplace_back(0, i);
  d.edges = normalize_edges(d.edges);
  return d;
}

ConvexDrawing random_triangulation(std::mt19937_64& rng, std::size_t n) {
  ConvexDrawing seed{n, {}};
  for (int t = 0; t < 3; ++t) {
    const std::size_t a = rng() % n, b = rng() % n;
    if (a == b) continue;
    ConvexDrawing next = seed;
    next.edges.push_back(Edge{a, b}.ordered());
    next.edges = normalize_edges(next.edges);
    if (is_quasiplanar(next, 0)) seed = next;
  }
  return maximal_completion(seed, 0);
}

template <typename Fn>
void each_permutation(std::size_t n, Fn fn) {
  std::vector<Length> p(n);
  std::iota(p.begin(), p.end(), Length{1});
  do fn(p);
  while (std::next_permutation(p.begin(), p.end()));
}

} // namespace

TEST(Embed, Examples) {
  EXPECT_EQ(embed(CylArrangement{{3, 1, 2}, 0}), (ConvexDrawing{3, {{0, 1}, {0, 2}, {1, 2}}}));
  EXPECT_EQ(embed(CylArrangement{{1, 2, 3, 4}, 0}), (ConvexDrawing{4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}));
  EXPECT_EQ(embed(CylArrangement{{7}, 1}), (ConvexDrawing{1, {}}));
}

TEST(Embed, QuasiplanarForDistinctLengths) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 25;
    const int k = static_cast<int>(rng() % 4);
    EXPECT_TRUE(is_quasiplanar(embed(CylArrangement{oracle::random_permutation(n, rng), k}), k));
  }
}

TEST(Peel, SquareWithDiagonal) {
  const PeelResult r = peel(square_with_diagonal(), 0);
  EXPECT_EQ(r.arrangement.lengths, (std::vector<Length>{2, 1, 3, 4}));
  EXPECT_TRUE(r.reproduces_input);
  ASSERT_EQ(r.trace.steps.size(), 4u);
  EXPECT_EQ(r.trace.steps[0], (PeelStep{1, 1, 2, false}));
  EXPECT_TRUE(validate(r.trace).empty());
}

TEST(Peel, Triangle) {
  const PeelResult r = peel(ConvexDrawing{3, {{0, 1}, {1, 2}, {0, 2}}}, 0);
  EXPECT_EQ(r.arrangement.lengths, (std::vector<Length>{1, 2, 3}));
}

TEST(Peel, FamilyRoundTrip) {
  const CylArrangement fam = forced_peel_family(1);
  const PeelResult r = peel(embed(fam), 1);
  EXPECT_TRUE(r.reproduces_input);
  EXPECT_EQ(r.arrangement.lengths, (std::vector<Length>{1, 6, 2, 5, 3, 7, 4, 8, 9, 10}));
  EXPECT_EQ(cyl_visibility(r.arrangement), cyl_visibility(fam));
}

TEST(Peel, Errors) {
  const ConvexDrawing square{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
  try {
    peel(square, 0);
    FAIL() << "expected rejection";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "not maximal");
  }
  EXPECT_THROW(peel(square, -1), Error);
  EXPECT_THROW(peel(ConvexDrawing{3, {{0, 3}}}, 0), Error);

  const PeelResult forced = peel(square, 0, PeelOptions{true});
  EXPECT_FALSE(forced.reproduces_input);
  EXPECT_EQ(forced.arrangement.lengths, (std::vector<Length>{1, 2, 3, 4}));

  ConvexDrawing k6{6, {}};
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b) k6.edges.emplace_back(a, b);
  try {
    peel(k6, 0, PeelOptions{true});
    FAIL() << "expected degeneracy failure";
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()), "not degenerate: no vertex of degree <= 2k+2 at step 0");
  }
}

TEST(Peel, RoundTripOnRandomEmbeds) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 22;
    const int k = static_cast<int>(rng() % 4);
    const CylArrangement arr{oracle::random_permutation(n, rng), k};
    const ConvexDrawing d = embed(arr);
    const PeelResult r = peel(d, k);
    ASSERT_TRUE(r.reproduces_input);
    ASSERT_EQ(cyl_visibility(r.arrangement), graph_of(d));
    ASSERT_TRUE(validate(r.trace).empty());
  }
}

TEST(Peel, RoundTripOnMaximalCompletions) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 12;
    const int k = static_cast<int>(rng() % 3);
    ConvexDrawing seed{n, {}};
    for (int t = 0; t < 4; ++t) {
      const std::size_t a = rng() % n, b = rng() % n;
      if (a == b) continue;
      ConvexDrawing next = seed;
      next.edges.push_back(Edge{a, b}.ordered());
      next.edges = normalize_edges(next.edges);
      if (is_quasiplanar(next, k)) seed = next;
    }
    const ConvexDrawing full = maximal_completion(seed, k);
    if (degeneracy(graph_of(full)).value > static_cast<std::size_t>(2 * k + 2)) continue;
    EXPECT_TRUE(peel(full, k).reproduces_input);
  }
}

TEST(FlatPeel, Triangle) {
  const FlatPeelResult r = flat_peel(ConvexDrawing{3, {{0, 1}, {1, 2}, {0, 2}}});
  EXPECT_EQ(r.arrangement.lengths, (std::vector<Length>{2, 1, 3}));
  EXPECT_EQ(r.arrangement.k, 0);
}

TEST(FlatPeel, Square) {
  const FlatPeelResult r = flat_peel(square_with_diagonal());
  EXPECT_EQ(r.arrangement.lengths, (std::vector<Length>{3, 2, 1, 4}));
  EXPECT_TRUE(validate(r.trace).empty());
  Graph g = flat_visibility(r.arrangement);
  for (Edge& e : g.edges) e = Edge{flat_bar_of_vertex(4, e.u), flat_bar_of_vertex(4, e.v)};
  EXPECT_EQ(normalize_edges(g.edges), square_with_diagonal().edges);
}

TEST(FlatPeel, FanOnEight) {
  const FlatPeelResult r = flat_peel(fan(8));
  EXPECT_EQ(r.arrangement.lengths.back(), 8);
  EXPECT_EQ(r.arrangement.lengths.front(), 7);
}

TEST(FlatPeel, Errors) {
  EXPECT_THROW(flat_peel(ConvexDrawing{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}}), Error);
  EXPECT_THROW(flat_peel(ConvexDrawing{0, {}}), Error);
  EXPECT_THROW(flat_peel(ConvexDrawing{4, {{0, 2}, {1, 3}}}), Error);
}

TEST(FlatPeel, RandomTriangulations) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 18;
    const ConvexDrawing d = random_triangulation(rng, n);
    const FlatPeelResult r = flat_peel(d);
    ASSERT_TRUE(validate(r.trace).empty());
    ASSERT_EQ(r.arrangement.lengths.back(), static_cast<Length>(n));
    ASSERT_EQ(r.arrangement.lengths.front(), static_cast<Length>(n - 1));
    const AdjacencyMatrix adj(n, flat_visibility(r.arrangement).edges);
    ASSERT_TRUE(adj(0, n - 1));
  }
}

TEST(Curl, KeepsLengthsAndK) {
  EXPECT_EQ(curl(FlatArrangement{{2, 1, 3}, 2}), (CylArrangement{{2, 1, 3}, 2}));
}

TEST(CurlPreserves, Examples) {
  EXPECT_TRUE(curl_preserves(FlatArrangement{{2, 1, 3}, 0}));
  EXPECT_FALSE(curl_preserves(FlatArrangement{{1, 2, 3}, 0}));
  EXPECT_FALSE(curl_preserves(FlatArrangement{{3, 1, 2, 5, 6, 4}, 1}));
  EXPECT_THROW(curl_preserves(FlatArrangement{{1, 1, 2}, 0}), Error);
  EXPECT_TRUE(curl_condition_is_literal(FlatArrangement{{1, 2, 3}, 1}));
  EXPECT_FALSE(curl_condition_is_literal(FlatArrangement{{1, 2, 3, 4}, 1}));
}

TEST(CurlPreserves, IffGraphUnchanged) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (int k = 0; k <= 2; ++k) {
      const FlatArrangement probe{std::vector<Length>(n, 1), k};
      if (curl_condition_is_literal(probe)) continue;
      each_permutation(n, [&](const std::vector<Length>& p) {
        const FlatArrangement r{p, k};
        ASSERT_EQ(curl_preserves(r), cyl_visibility(curl(r)) == flat_visibility(r));
      });
    }
}

TEST(Cut, Examples) {
  EXPECT_EQ(cut(CylArrangement{{2, 3, 1}, 0}).lengths, (std::vector<Length>{2, 1, 3}));
  EXPECT_EQ(cut(CylArrangement{{1, 2, 3}, 0}).lengths, (std::vector<Length>{2, 1, 3}));
  EXPECT_EQ(cut(CylArrangement{{4}, 3}), (FlatArrangement{{4}, 3}));
  try {
    cut(CylArrangement{{5, 1, 4, 2, 3}, 0});
    FAIL() << "expected rejection";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "two longest not adjacent");
  }
  EXPECT_THROW(cut(CylArrangement{{2, 2, 1}, 0}), Error);
}

TEST(Cut, RotationOrReflection) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 15;
    const CylArrangement arr{oracle::random_permutation(n, rng), static_cast<int>(rng() % 3)};
    std::vector<std::size_t> order;
    try {
      order = cut_order(arr);
    } catch (const Error&) {
      continue;
    }
    const FlatArrangement flat = cut(arr);
    ASSERT_EQ(flat.k, arr.k);
    ASSERT_EQ(flat.lengths[0], static_cast<Length>(n - 1));
    ASSERT_EQ(flat.lengths[n - 1], static_cast<Length>(n));
    auto reversed = flat.lengths;
    std::reverse(reversed.begin(), reversed.end());
    ASSERT_TRUE(oracle::is_rotation(flat.lengths, arr.lengths) || oracle::is_rotation(reversed, arr.lengths));
  }
}

TEST(Cut, PreservesGraphAtKZero) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 15;
    const CylArrangement arr{oracle::random_permutation(n, rng), 0};
    std::vector<std::size_t> order;
    try {
      order = cut_order(arr);
    } catch (const Error&) {
      continue;
    }
    const FlatArrangement flat = cut(arr);
    ASSERT_TRUE(curl_preserves(flat));
    Graph g = flat_visibility(flat);
    for (Edge& e : g.edges) e = Edge{order[e.u], order[e.v]};
    ASSERT_EQ(normalize_edges(g.edges), cyl_visibility(arr).edges);
  }
}
