#include <gtest/gtest.h>

#include "bisetcover/errors.hpp"
#include "bisetcover/exact.hpp"
#include "bisetcover/generators.hpp"
#include "brute.hpp"

using namespace bisetcover;

TEST(ExactOpt, ProperSubsetsOfThree) {
  const ExplicitFamily f(3, brute::all_proper_sets(3));
  const Digraph g = complete_digraph(3);
  const EdgeSet j = exact_opt(f, g);
  EXPECT_EQ(g.cost(j), Rational(3));
  EXPECT_EQ(brute::opt(f.members(), g), Rational(3));
  EXPECT_EQ(tau_lp(f, g), Rational(3));
}

TEST(ExactOpt, SingleBisetCheapestEdge) {
  const ExplicitFamily f(3, {Biset::of_set(3, NodeSet{0})});
  Digraph g(3);
  g.add_edge(0, 1, 9);
  g.add_edge(0, 2, 4);
  g.add_edge(1, 0, 1);
  EXPECT_EQ(g.cost(exact_opt(f, g)), Rational(4));
}

TEST(ExactOpt, UncoverableReportsWitness) {
  const Biset x(3, NodeSet{0}, NodeSet{0, 1});
  const ExplicitFamily f(3, {x});
  Digraph g(3);
  g.add_edge(0, 1, 1);
  g.add_edge(2, 0, 1);
  try {
    exact_opt(f, g);
    FAIL() << "expected infeasible";
  } catch (const InfeasibleError& e) {
    ASSERT_TRUE(e.witness());
    EXPECT_EQ(*e.witness(), x);
  }
  EXPECT_THROW(tau_lp(f, g), InfeasibleError);
}

TEST(ExactOpt, EmptyFamily) {
  const ExplicitFamily f(3, {});
  EXPECT_TRUE(exact_opt(f, complete_digraph(3)).empty());
  EXPECT_EQ(tau_lp(f, complete_digraph(3)), Rational(0));
}

TEST(ExactOpt, MatchesSubsetEnumeration) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const ExplicitFamily f = gen_crossing_family(n, seed, 5);
    const Digraph g = gen_candidate_edges(n, seed);
    const auto want = brute::opt(f.members(), g);
    ASSERT_TRUE(want);
    const EdgeSet j = exact_opt(f, g);
    ASSERT_TRUE(verify_cover(f, g, j).ok());
    ASSERT_EQ(g.cost(j), *want) << "seed " << seed;
  }
}

TEST(TauLp, SmallCases) {
  Digraph two(4);
  two.add_edge(0, 2, 1);
  two.add_edge(1, 3, 1);
  const ExplicitFamily disjoint(4, {Biset(4, NodeSet{0}, NodeSet{0, 1, 3}), Biset(4, NodeSet{1}, NodeSet{1, 0, 2})});
  EXPECT_EQ(tau_lp(disjoint, two), Rational(2));

  Digraph parallel(2);
  parallel.add_edge(0, 1, 1);
  parallel.add_edge(0, 1, 1);
  EXPECT_EQ(tau_lp(ExplicitFamily(2, {Biset::of_set(2, NodeSet{0})}), parallel), Rational(1));
}

TEST(TauLp, FractionalOptimum) {
  // Triangle of odd-cycle constraints: each pair of edges shares one set.
  // x = 1/2 on all three edges gives 3/2 < 2.
  Digraph g(4);
  g.add_edge(0, 3, 1);
  g.add_edge(1, 3, 1);
  g.add_edge(2, 3, 1);
  const ExplicitFamily f(4, brute::set_bisets(4, {0b011, 0b110, 0b101}));
  EXPECT_EQ(tau_lp(f, g), Rational(3, 2));
  EXPECT_EQ(g.cost(exact_opt(f, g)), Rational(2));
}

TEST(TauLp, CertificatesAreOptimal) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 3);
    const ExplicitFamily f = gen_crossing_family(n, seed * 7, 6);
    const Digraph g = gen_candidate_edges(n, seed);
    const LpSolution lp = covering_lp(f, g);
    Rational primal = 0;
    for (std::size_t e = 0; e < g.size(); ++e) {
      ASSERT_GE(lp.x[e], 0);
      primal += g.edge(e).cost * lp.x[e];
    }
    Rational dual = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      ASSERT_GE(lp.y[i], 0);
      dual += lp.y[i];
      Rational lhs = 0;
      for (std::size_t e = 0; e < g.size(); ++e) {
        if (edge_covers(g.edge(e), f.members()[i])) lhs += lp.x[e];
      }
      ASSERT_GE(lhs, 1);
    }
    for (std::size_t e = 0; e < g.size(); ++e) {
      Rational load = 0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (edge_covers(g.edge(e), f.members()[i])) load += lp.y[i];
      }
      ASSERT_LE(load, g.edge(e).cost);
    }
    ASSERT_EQ(primal, lp.value);
    ASSERT_EQ(dual, lp.value);
    if (const auto opt = brute::opt(f.members(), g)) ASSERT_LE(lp.value, *opt);
  }
}

TEST(TauLp, DemandsAboveOne) {
  // No upper bounds on x: demand 2 is met by doubling the cheaper edge.
  const LpSolution s = solve_covering_lp({{0, 1}}, {Rational(2)}, {Rational(3), Rational(5)});
  EXPECT_EQ(s.value, Rational(6));
  EXPECT_EQ(s.x[0], Rational(2));
  const LpSolution two = solve_covering_lp({{0}, {0, 1}, {1}}, {Rational(1), Rational(2), Rational(1)},
                                           {Rational(3), Rational(5)});
  EXPECT_EQ(two.value, Rational(8));
  const LpSolution none = solve_covering_lp({{0, 1}}, {Rational(0)}, {Rational(3), Rational(5)});
  EXPECT_EQ(none.value, Rational(0));
}

TEST(ExactReport, Sandwich) {
  const ExplicitFamily f = gen_crossing_family(5, 3, 6);
  const Digraph g = gen_candidate_edges(5, 3);
  const ExactReport r = exact_report(f, g);
  EXPECT_TRUE(r.tau_le_opt);
  EXPECT_TRUE(r.dual_matches_tau);
  EXPECT_EQ(g.cost(r.optimal_edges), r.opt_integral);
}

TEST(VerifyCover, MissingMemberHasWitness) {
  const ExplicitFamily f(3, brute::all_proper_sets(3));
  const Digraph g = complete_digraph(3);
  const Audit a = verify_cover(f, g, exact_opt(f, g));
  EXPECT_TRUE(a.ok());
  const Audit b = verify_cover(f, g, {0});
  EXPECT_FALSE(b.ok());
  ASSERT_TRUE(b.witness);
  EXPECT_FALSE(edge_covers(g.edge(0), *b.witness));
}

TEST(SemiIntersecting, Checks) {
  const ExplicitFamily singletons(3, brute::set_bisets(3, {1, 2, 4}));
  EXPECT_TRUE(verify_semi_intersecting(singletons, 1));
  EXPECT_TRUE(is_weakly_intersecting(singletons));

  // {0,1} and {1,2} intersect with union size 3 <= q but the union is missing.
  const ExplicitFamily broken(5, brute::set_bisets(5, {0b00011, 0b00110, 0b00010}));
  std::optional<std::pair<Biset, Biset>> witness;
  EXPECT_FALSE(verify_semi_intersecting(broken, 3, &witness));
  ASSERT_TRUE(witness);
  EXPECT_TRUE(intersects(witness->first, witness->second));
  EXPECT_TRUE(verify_semi_intersecting(broken, 2));
  EXPECT_FALSE(verify_semi_intersecting(broken, 1));

  const ExplicitFamily no_meet(5, brute::set_bisets(5, {0b00011, 0b00110}));
  EXPECT_FALSE(is_intersection_closed(no_meet));
}
