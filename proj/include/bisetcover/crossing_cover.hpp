#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bisetcover/biset.hpp"
#include "bisetcover/digraph.hpp"
#include "bisetcover/family.hpp"

namespace bisetcover {

struct TraceEntry {
  std::string step;
  std::optional<Biset> core;
  Rational cost;
  int cores_before = 0;
  int cores_after = 0;
};

struct CoverResult {
  std::string algorithm;
  EdgeSet edges;
  Rational cost;
  // A-priori factor against tau(F) the algorithm guarantees.
  Rational ratio_bound;
  std::vector<TraceEntry> trace;
};

// Greedy core elimination: each round adds the cheapest optimal branch cover.
// Cost <= H(nu(F)) * tau(F).
CoverResult cover_crossing_log(const OraclePtr& family, const Digraph& graph);

// Continues greedy core elimination from `chosen` until no core of F^J has an
// inner part of size <= q.
CoverResult eliminate_small_cores(const OraclePtr& family, const Digraph& graph, EdgeSet chosen, int q,
                                  const std::string& step);

// Union of optimal branch covers of every core of F^J whose inner part has at
// most q nodes.
EdgeSet cover_all_core_branches(const OraclePtr& family, const EdgeSet& chosen, const Digraph& graph,
                                int q, std::vector<TraceEntry>* trace = nullptr);

// Covers {S in F : |S| <= q} by rounds of cover_all_core_branches.
CoverResult cover_small_halving(const OraclePtr& family, const Digraph& graph, int k);
// Semi-intersecting primal-dual on the small sub-family, then greedy
// elimination of the remaining small cores.
CoverResult cover_small_semi(const OraclePtr& family, const Digraph& graph, int k);

// Both sides of the small-inner covering (family, then co-family on the
// reversed graph), each side the cheaper of halving and semi.
CoverResult cover_crossing_regular(const OraclePtr& family, const Digraph& graph, int k);

// Greedy hitting set over the inner parts of the given cores.
std::vector<int> greedy_hitting_set(const CoreSet& cores, int q, int n);

// Small-inner covering on both sides, then one intersecting cover per node of
// a greedy hitting set of the residual cores.
CoverResult cover_crossing_gamma(const OraclePtr& family, const Digraph& graph, int k);

// 2(gamma + 1) intersecting sub-problems {s in S} and {s outside S+} for
// gamma + 1 consecutive nodes s.
CoverResult decompose_baseline(const OraclePtr& family, const Digraph& graph, int s = 0);

// Factor bounds with the floors applied exactly as stated.
Rational regular_ratio_bound(int n, int k);
Rational halving_ratio_bound(int n, int k);
Rational semi_ratio_bound(int n, int k);
Rational hitting_ratio_bound(int n, int q);

}  // namespace bisetcover
