#include <gtest/gtest.h>

#include "bisetcover/crossing_cover.hpp"
#include "bisetcover/errors.hpp"
#include "bisetcover/exact.hpp"
#include "bisetcover/generators.hpp"
#include "brute.hpp"

using namespace bisetcover;

namespace {

std::shared_ptr<ExplicitFamily> explicit_family(int n, std::vector<Biset> members) {
  return std::make_shared<ExplicitFamily>(n, std::move(members));
}

std::shared_ptr<ExplicitFamily> three_member() {
  return explicit_family(4, brute::set_bisets(4, {0b0001, 0b0010, 0b0011}));
}

Digraph cycle(int n) {
  Digraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, 0);
  return g;
}

}  // namespace

TEST(Bounds, Formulas) {
  // n = 8, k = 2: floor(16 / 8) = 2, floor((8 - 2 + 2) / 2) = 4.
  EXPECT_EQ(semi_ratio_bound(8, 2), 1 + harmonic(2));
  EXPECT_EQ(halving_ratio_bound(8, 2), Rational(2));
  EXPECT_EQ(regular_ratio_bound(8, 2), Rational(4));
  EXPECT_EQ(hitting_ratio_bound(4, 2), Rational(3));
}

TEST(LogCover, ProperSubsetsOfThree) {
  const auto f = explicit_family(3, brute::all_proper_sets(3));
  const Digraph g = complete_digraph(3);
  const CoverResult r = cover_crossing_log(f, g);
  EXPECT_EQ(r.cost, Rational(3));
  EXPECT_EQ(r.ratio_bound, harmonic(3));
  EXPECT_EQ(r.trace.size(), 3u);
  EXPECT_TRUE(verify_cover(*f, g, r.edges).ok());
  EXPECT_LE(r.cost, r.ratio_bound * tau_lp(*f, g));
}

TEST(LogCover, SingleMemberTakesCheapestEdge) {
  const auto f = explicit_family(3, {Biset::of_set(3, NodeSet{1})});
  Digraph g(3);
  g.add_edge(1, 0, 6);
  g.add_edge(1, 2, 2);
  g.add_edge(0, 2, 1);
  const CoverResult r = cover_crossing_log(f, g);
  EXPECT_EQ(r.edges, EdgeSet{1});
}

TEST(LogCover, TwoCoresNeedTwoEdges) {
  const auto f = three_member();
  const Digraph g = complete_digraph(4);
  const CoverResult r = cover_crossing_log(f, g);
  EXPECT_EQ(r.cost, Rational(2));
  EXPECT_EQ(brute::opt(f->members(), g), Rational(2));
  ASSERT_EQ(r.trace.size(), 2u);
  EXPECT_EQ(r.trace[0].cores_before, 2);
  EXPECT_EQ(r.trace[0].cores_after, 1);
}

TEST(LogCover, TraceCountsDownAndRespectsBudget) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 3);
    const auto f = std::make_shared<ExplicitFamily>(gen_crossing_family(n, seed, 6));
    const Digraph g = gen_candidate_edges(n, seed);
    const Rational tau = tau_lp(*f, g);
    const CoverResult r = cover_crossing_log(f, g);
    const int nu = static_cast<int>(brute::minimal(f->members()).size());
    ASSERT_EQ(static_cast<int>(r.trace.size()), nu);
    for (int i = 0; i < nu; ++i) {
      ASSERT_EQ(r.trace[i].cores_before, nu - i);
      ASSERT_EQ(r.trace[i].cores_after, nu - i - 1);
      ASSERT_LE(r.trace[i].cost * (nu - i), tau) << "seed " << seed;
    }
    ASSERT_TRUE(verify_cover(*f, g, r.edges).ok());
    ASSERT_LE(r.cost, harmonic(nu) * tau);
  }
}

TEST(AllBranches, TwoSingletonCores) {
  const auto f = three_member();
  const Digraph g = complete_digraph(4);
  const EdgeSet j = cover_all_core_branches(f, {}, g, 4);
  EXPECT_EQ(g.cost(j), Rational(2));
}

TEST(AllBranches, FourCycleTightCoresHalve) {
  const auto f = std::make_shared<ConnectivityFamily>(cycle(4), 1);
  const Digraph g = complete_digraph(4);
  ASSERT_EQ(f->cores({}).size(), 4u);
  std::vector<TraceEntry> trace;
  const EdgeSet j = cover_all_core_branches(f, {}, g, 1, &trace);
  EXPECT_EQ(j.size(), 4u);
  EXPECT_EQ(trace.size(), 4u);
  EXPECT_LE(f->cores(g.arcs(j)).size(), 2u);
}

TEST(Halving, FourCycleOneRound) {
  const auto f = std::make_shared<ConnectivityFamily>(cycle(4), 1);
  const CoverResult r = cover_small_halving(f, complete_digraph(4), 1);
  EXPECT_EQ(r.trace.size(), 1u);
}

TEST(Halving, NothingSmall) {
  const auto f = explicit_family(6, {Biset::of_set(6, NodeSet{0, 1, 2, 3})});
  const CoverResult r = cover_small_halving(f, complete_digraph(6), 0);
  EXPECT_TRUE(r.edges.empty());
  EXPECT_TRUE(r.trace.empty());
}

TEST(Halving, RoundCountOnRegularFamilies) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto f = std::make_shared<ExplicitFamily>(gen_regular_family(8, 1, seed, 10));
    const CoverResult r = cover_small_halving(f, gen_candidate_edges(8, seed), 1);
    EXPECT_LE(r.trace.size(), 2u) << "seed " << seed;
    for (const Biset& c : f->cores(gen_candidate_edges(8, seed).arcs(r.edges))) EXPECT_GT(c.inner().size(), 3);
  }
}

// Two rounds are needed although floor(log2(floor((n - k + 2) / 2))) = 1 here.
TEST(Halving, SecondRoundWhenQIsTwo) {
  const auto f = three_member();
  Digraph g = complete_digraph(4, 10);
  for (std::size_t e = 0; e < g.size(); ++e) {
    const Edge& x = g.edge(e);
    if ((x.tail == 0 && x.head == 1) || (x.tail == 1 && x.head == 0)) {
      std::vector<Edge> edges = g.edges();
      edges[e].cost = 1;
      g = Digraph(4, edges);
    }
  }
  EXPECT_EQ(halving_ratio_bound(4, 0), Rational(1));
  const CoverResult r = cover_small_halving(f, g, 0);
  EXPECT_EQ(r.trace.size(), 2u);
  EXPECT_TRUE(verify_cover(*f, g, r.edges).ok());
}

TEST(Semi, SingletonsCoveredByPrimalDual) {
  const auto f = explicit_family(3, brute::set_bisets(3, {1, 2, 4}));
  const CoverResult r = cover_small_semi(f, complete_digraph(3), 1);
  EXPECT_EQ(r.cost, Rational(3));
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].step, "semi-pd");
}

TEST(Semi, RegularFamiliesWithinBound) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto f = std::make_shared<ExplicitFamily>(gen_regular_family(8, 2, seed, 10));
    const Digraph g = gen_candidate_edges(8, seed);
    const CoverResult r = cover_small_semi(f, g, 2);
    const ExplicitFamily small = restrict_small(*f, 3);
    EXPECT_TRUE(verify_cover(small, g, r.edges).ok());
    EXPECT_LE(r.cost, (1 + harmonic(2)) * tau_lp(*f, g));
  }
}

TEST(Regular, FourCycleAugmentation) {
  const auto f = std::make_shared<ConnectivityFamily>(cycle(4), 1);
  const Digraph g = complete_digraph(4);
  const CoverResult r = cover_crossing_regular(f, g, 1);
  const Rational tau = tau_lp(tight_biset_family(cycle(4), 1), g);
  EXPECT_EQ(tau, Rational(4));
  EXPECT_GE(r.cost, Rational(4));
  EXPECT_LE(r.cost, r.ratio_bound * tau);
  auto arcs = cycle(4).arcs();
  for (const Arc& a : g.arcs(r.edges)) arcs.push_back(a);
  EXPECT_TRUE(brute::k_connected(4, arcs, 2));
}

TEST(Regular, SetFamilyAgainstBaseline) {
  const auto f = explicit_family(3, brute::all_proper_sets(3));
  const Digraph g = complete_digraph(3);
  const Rational tau = tau_lp(*f, g);
  const CoverResult r = cover_crossing_regular(f, g, 0);
  const CoverResult b = decompose_baseline(f, g);
  EXPECT_TRUE(verify_cover(*f, g, r.edges).ok());
  EXPECT_TRUE(verify_cover(*f, g, b.edges).ok());
  EXPECT_LE(r.cost, r.ratio_bound * tau);
  EXPECT_LE(b.cost, b.ratio_bound * tau);
}

TEST(Regular, FreeEdgesCostNothing) {
  const auto f = std::make_shared<ConnectivityFamily>(cycle(4), 1);
  Digraph g(4);
  for (int i = 0; i < 4; ++i) g.add_edge(i, (i + 2) % 4, 0);
  const CoverResult r = cover_crossing_regular(f, g, 1);
  EXPECT_EQ(r.cost, Rational(0));
}

TEST(HittingSet, Examples) {
  const CoreSet two{Biset::of_set(4, NodeSet{0, 1}), Biset::of_set(4, NodeSet{2, 3})};
  EXPECT_EQ(greedy_hitting_set(two, 2, 4).size(), 2u);
  EXPECT_EQ(greedy_hitting_set({Biset::of_set(4, NodeSet{1, 2})}, 2, 4).size(), 1u);
  const CoreSet overlap{Biset::of_set(6, NodeSet{0, 1, 2}), Biset::of_set(6, NodeSet{2, 3, 4})};
  EXPECT_EQ(greedy_hitting_set(overlap, 3, 6), std::vector<int>{2});
  EXPECT_THROW(greedy_hitting_set({Biset(4, NodeSet{}, NodeSet{0})}, 1, 4), UsageError);
  EXPECT_THROW(greedy_hitting_set(two, 3, 4), UsageError);
}

TEST(Gamma, RegularFamiliesWithinBound) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const int n = 6 + static_cast<int>(seed % 2);
    const int k = 1 + static_cast<int>(seed % 2);
    const auto f = std::make_shared<ExplicitFamily>(gen_regular_family(n, k, seed, 8));
    const Digraph g = gen_candidate_edges(n, seed);
    const CoverResult r = cover_crossing_gamma(f, g, k);
    EXPECT_TRUE(verify_cover(*f, g, r.edges).ok());
    EXPECT_LE(r.cost, r.ratio_bound * tau_lp(*f, g));
  }
}

TEST(Gamma, LargeInnerPartsOnly) {
  // Every inner part has at least three of six nodes: nothing is small for k = 1.
  const auto f = explicit_family(6, {Biset(6, NodeSet{0, 1, 2}, NodeSet{0, 1, 2, 3}),
                                     Biset(6, NodeSet{0, 1, 2, 3}, NodeSet{0, 1, 2, 3, 4})});
  ASSERT_TRUE(f->claims().crossing);
  const Digraph g = complete_digraph(6);
  const CoverResult r = cover_crossing_gamma(f, g, 1);
  EXPECT_TRUE(verify_cover(*f, g, r.edges).ok());
  EXPECT_EQ(r.cost, Rational(1));
}

TEST(Baseline, ProperSubsetsOfThree) {
  const auto f = explicit_family(3, brute::all_proper_sets(3));
  const Digraph g = complete_digraph(3);
  const CoverResult r = decompose_baseline(f, g, 0);
  EXPECT_LE(r.cost, Rational(4));
  EXPECT_EQ(r.ratio_bound, Rational(2));
  EXPECT_EQ(r.trace.size(), 2u);
  EXPECT_TRUE(verify_cover(*f, g, r.edges).ok());
}

TEST(Baseline, SingleMemberContainingStart) {
  const auto f = explicit_family(4, {Biset::of_set(4, NodeSet{0, 1})});
  const Digraph g = gen_candidate_edges(4, 5);
  const CoverResult r = decompose_baseline(f, g, 0);
  EXPECT_EQ(r.cost, *brute::opt(f->members(), g));
}

TEST(Baseline, BoundaryOneUsesFourSubproblems) {
  const auto f = std::make_shared<ConnectivityFamily>(cycle(5), 1);
  const ExplicitFamily tight = tight_biset_family(cycle(5), 1);
  const auto explicit_tight = std::make_shared<ExplicitFamily>(tight);
  const Digraph g = gen_candidate_edges(5, 2);
  const CoverResult r = decompose_baseline(explicit_tight, g, 0);
  EXPECT_EQ(r.trace.size(), 4u);
  EXPECT_TRUE(verify_cover(tight, g, r.edges).ok());
  EXPECT_LE(r.cost, 4 * tau_lp(tight, g));
}
