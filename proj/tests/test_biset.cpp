#include <gtest/gtest.h>

#include "bisetcover/biset.hpp"
#include "bisetcover/errors.hpp"
#include "brute.hpp"

using namespace bisetcover;

TEST(Rational, ParsesAndPrints) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), UsageError);
  EXPECT_THROW(parse_rational("abc"), UsageError);
}

TEST(Rational, HarmonicAndLog) {
  EXPECT_EQ(harmonic(0), Rational(0));
  EXPECT_EQ(harmonic(3), Rational(11, 6));
  EXPECT_EQ(floor_log2(1), 0);
  EXPECT_EQ(floor_log2(4), 2);
  EXPECT_EQ(floor_log2(7), 2);
}

TEST(NodeSet, Operations) {
  const NodeSet a{0, 2, 3};
  const NodeSet b{2, 5};
  EXPECT_EQ((a & b), NodeSet{2});
  EXPECT_EQ((a | b), (NodeSet{0, 2, 3, 5}));
  EXPECT_EQ((a - b), (NodeSet{0, 3}));
  EXPECT_EQ(a.complement(4), NodeSet{1});
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ(a.min(), 0);
  EXPECT_EQ(a.max(), 3);
  EXPECT_EQ(a.to_vector(), (std::vector<int>{0, 2, 3}));
}

TEST(Biset, ValidatesConstruction) {
  EXPECT_THROW(Biset(4, NodeSet{0, 1}, NodeSet{0}), UsageError);
  EXPECT_THROW(Biset(4, NodeSet{0}, NodeSet{0, 5}), UsageError);
  EXPECT_THROW(GroundSet(0), UsageError);
  EXPECT_THROW(GroundSet(65), UsageError);
  EXPECT_NO_THROW(GroundSet(64));
}

TEST(Biset, ProperAndBoundary) {
  const Biset x(4, NodeSet{0}, NodeSet{0, 1});
  EXPECT_TRUE(x.is_proper());
  EXPECT_EQ(x.boundary(), NodeSet{1});
  EXPECT_EQ(x.exterior(), (NodeSet{2, 3}));
  EXPECT_FALSE(Biset(3, NodeSet{}, NodeSet{0}).is_proper());
  EXPECT_FALSE(Biset(3, NodeSet{0}, NodeSet{0, 1, 2}).is_proper());
}

TEST(Biset, MeetJoinCo) {
  const Biset x(5, NodeSet{0, 1}, NodeSet{0, 1, 2});
  const Biset y(5, NodeSet{1, 3}, NodeSet{1, 3});
  EXPECT_EQ(meet(x, y), Biset(5, NodeSet{1}, NodeSet{1}));
  EXPECT_EQ(join(x, y), Biset(5, NodeSet{0, 1, 3}, NodeSet{0, 1, 2, 3}));
  EXPECT_TRUE(crosses(x, y));
  EXPECT_EQ(co_biset(x), Biset(5, NodeSet{3, 4}, NodeSet{2, 3, 4}));
  EXPECT_EQ(co_biset(co_biset(x)), x);
}

TEST(Biset, EdgeCoverage) {
  const Biset x(3, NodeSet{0}, NodeSet{0, 1});
  EXPECT_TRUE(edge_covers(Arc{0, 2}, x));
  EXPECT_FALSE(edge_covers(Arc{0, 1}, x));
  EXPECT_FALSE(edge_covers(Arc{1, 2}, x));
}

TEST(Biset, CoverIndexAgreesWithEdgeCovers) {
  const std::vector<Arc> arcs{{0, 2}, {1, 3}, {3, 0}};
  const CoverIndex index(4, arcs);
  for (const Biset& b : brute::all_bisets(4, false)) {
    bool any = false;
    for (const Arc& a : arcs) any = any || edge_covers(a, b);
    EXPECT_EQ(index.covers(b), any) << b.to_string();
  }
}

TEST(Biset, MinimalElementsMatchesScan) {
  const auto all = brute::all_bisets(3, true);
  std::vector<Biset> pool;
  for (std::size_t i = 0; i < all.size(); i += 3) pool.push_back(all[i]);
  auto got = minimal_elements(pool);
  auto want = brute::minimal(pool);
  std::sort(got.begin(), got.end(), BisetLess{});
  std::sort(want.begin(), want.end(), BisetLess{});
  EXPECT_EQ(got, want);
}

// Exhaustive over all bisets and arcs on four nodes.
TEST(CoverageFacts, UnionIntersectionCoverage) {
  const int n = 4;
  const auto all = brute::all_bisets(n, false);
  std::size_t checked = 0;
  for (const Biset& x : all) {
    for (const Biset& y : all) {
      const Biset lo = meet(x, y);
      const Biset hi = join(x, y);
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (u == v) continue;
          const Arc e{u, v};
          const bool cx = edge_covers(e, x);
          const bool cy = edge_covers(e, y);
          if (edge_covers(e, lo) || edge_covers(e, hi)) {
            ASSERT_TRUE(cx || cy);
          }
          if (edge_covers(e, hi) && x.inner().contains(u)) {
            ASSERT_TRUE(cx);
          }
          if (edge_covers(e, lo) && edge_covers(e, hi)) {
            ASSERT_TRUE(cx && cy);
          }
          ++checked;
        }
      }
    }
  }
  EXPECT_EQ(checked, 81u * 81u * 12u);
}

TEST(CoverageFacts, CoBisetsSwapCrossingAndOperations) {
  const int n = 4;
  const auto all = brute::all_bisets(n, true);
  for (const Biset& x : all) {
    for (const Biset& y : all) {
      ASSERT_EQ(crosses(x, y), crosses(co_biset(x), co_biset(y)));
      ASSERT_EQ(co_biset(meet(x, y)), join(co_biset(x), co_biset(y)));
      ASSERT_EQ(co_biset(join(x, y)), meet(co_biset(x), co_biset(y)));
    }
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v) ASSERT_EQ(edge_covers(Arc{u, v}, x), edge_covers(Arc{v, u}, co_biset(x)));
      }
    }
  }
}
