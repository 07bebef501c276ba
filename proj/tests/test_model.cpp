#include <gtest/gtest.h>

#include <random>

#include <visikit/model.hpp>

using namespace visikit;

TEST(Validate, WellFormedArrangement) {
  EXPECT_TRUE(validate(FlatArrangement{{1, 2, 3}, 0}).empty());
  EXPECT_TRUE(validate(CylArrangement{{3, 1, 2}, 1}).empty());
}

TEST(Validate, ArrangementViolations) {
  const auto v = validate(FlatArrangement{{1, 0, -2}, -1});
  ASSERT_EQ(v.size(), 3u);
  EXPECT_NE(v[0].find("lengths[1]"), std::string::npos);
  EXPECT_NE(v[1].find("lengths[2]"), std::string::npos);
  EXPECT_NE(v[2].find("k:"), std::string::npos);
  EXPECT_FALSE(validate(CylArrangement{{}, 0}).empty());
}

TEST(Validate, SelfLoop) {
  EXPECT_EQ(validate(Graph{3, {{0, 0}}}), std::vector<std::string>{"self-loop at 0"});
}

TEST(Validate, IndexOutOfRange) {
  const auto v = validate(ConvexDrawing{3, {{0, 5}}});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rfind("index out of range", 0), 0u);
}

TEST(Validate, DuplicateReportedOnce) {
  const auto v = validate(Graph{4, {{0, 1}, {1, 0}, {0, 1}, {2, 3}}});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("duplicate edge {0,1}"), std::string::npos);
}

TEST(Validate, TotalOnGarbage) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g{rng() % 5, {}};
    for (int e = 0; e < 6; ++e) g.edges.emplace_back(rng() % 7, rng() % 7);
    const auto once = validate(g);
    EXPECT_EQ(once, validate(g));
  }
}

TEST(Validate, PeelTrace) {
  PeelTrace good{{{1, 1, 2, true}, {0, 2, 2, false}, {2, 3, 1, false}}, CylArrangement{{2, 1, 3}, 0}};
  EXPECT_TRUE(validate(good).empty());

  PeelTrace twice = good;
  twice.steps[1].length = 1;
  EXPECT_FALSE(validate(twice).empty());

  PeelTrace high = good;
  high.steps[0].degree = 3;
  EXPECT_FALSE(validate(high).empty());
}

TEST(Distinct, Flag) {
  EXPECT_TRUE((FlatArrangement{{3, 1, 2}, 0}).distinct());
  EXPECT_FALSE((CylArrangement{{3, 1, 3}, 0}).distinct());
}

TEST(CyclicBetween, Examples) {
  EXPECT_EQ(cyclic_between(5, 0, 2, Side::ccw), (std::vector<std::size_t>{1}));
  EXPECT_EQ(cyclic_between(5, 0, 2, Side::cw), (std::vector<std::size_t>{3, 4}));
  EXPECT_TRUE(cyclic_between(2, 0, 1, Side::ccw).empty());
  EXPECT_TRUE(cyclic_between(2, 0, 1, Side::cw).empty());
}

TEST(CyclicBetween, DegeneratePair) {
  EXPECT_THROW(cyclic_between(5, 2, 2, Side::cw), Error);
  EXPECT_THROW(cyclic_between(1, 0, 0, Side::cw), Error);
  EXPECT_THROW(cyclic_between(4, 0, 4, Side::ccw), Error);
}

TEST(CyclicBetween, SidesPartitionTheRest) {
  for (std::size_t n = 2; n <= 9; ++n)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        auto ccw = cyclic_between(n, a, b, Side::ccw);
        auto cw = cyclic_between(n, a, b, Side::cw);
        ASSERT_EQ(ccw.size() + cw.size(), n - 2);
        std::vector<char> hit(n, 0);
        hit[a] = hit[b] = 1;
        for (auto t : ccw) ++hit[t];
        for (auto t : cw) ++hit[t];
        for (auto h : hit) EXPECT_EQ(h, 1);
      }
}

TEST(CyclicBetween, RotationEquivariant) {
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t r = 0; r < n; ++r) {
          if (a == b) continue;
          for (Side s : {Side::ccw, Side::cw}) {
            auto base = cyclic_between(n, a, b, s);
            for (auto& t : base) t = (t + r) % n;
            EXPECT_EQ(base, cyclic_between(n, (a + r) % n, (b + r) % n, s));
          }
        }
}

TEST(NormalizeEdges, SortsOrdersAndDedupes) {
  EXPECT_EQ(normalize_edges({{3, 1}, {1, 3}, {0, 2}, {2, 2}}), (std::vector<Edge>{{0, 2}, {1, 3}}));
}

TEST(ChordSpan, Values) {
  EXPECT_EQ(chord_span(8, 0, 1), 0u);
  EXPECT_EQ(chord_span(8, 7, 0), 0u);
  EXPECT_EQ(chord_span(8, 0, 4), 3u);
  EXPECT_EQ(chord_span(8, 1, 7), 1u);
}
