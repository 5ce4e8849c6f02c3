#pragma once

#include <optional>
#include <vector>

#include "bisetcover/crossing_cover.hpp"
#include "bisetcover/digraph.hpp"
#include "bisetcover/exact.hpp"
#include "bisetcover/family.hpp"

namespace bisetcover {

struct AugmentInstance {
  Digraph base;        // G0, cost zero, ell-connected
  Digraph candidates;  // edges available for purchase
  int ell = 0;
};

// Cheaper of the two-sided regular algorithm and greedy core elimination on
// the tight bisets of G0; the result makes G0 + J (ell+1)-connected.
CoverResult augment(const AugmentInstance& instance);

struct LadderLevel {
  int ell = 0;
  EdgeSet edges;
  Rational cost;
  Rational ratio_bound;
};

struct LadderResult {
  int k = 0;
  std::vector<LadderLevel> levels;
  EdgeSet edges;
  Rational cost;
  // sum over levels of ratio_bound / (k - ell), and H(k) * max ratio_bound.
  Rational sum_bound;
  Rational harmonic_bound;
  std::optional<Rational> opt_k;
};

// Raises connectivity one level at a time, each level an augmentation with the
// edges bought so far as the free base graph.
LadderResult k_connected_subgraph(const Digraph& graph, int k, bool with_opt_k = false);

// min x(E) s.t. x(delta(S)) >= k - |boundary(S)| over every proper biset;
// enumerates 3^n bisets, so n is capped at 7.
Rational opt_k_lp(const Digraph& graph, int k);

// Maps X to (X & S, S | (X & T)). Requires S, T a partition of the ground
// set, X & S nonempty and T - X nonempty.
ExplicitFamily st_crossing_to_biset(int n, const std::vector<NodeSet>& sets, NodeSet s, NodeSet t);

bool st_cross(NodeSet x, NodeSet y, NodeSet s, NodeSet t);
bool is_st_crossing(const std::vector<NodeSet>& sets, NodeSet s, NodeSet t);

}  // namespace bisetcover
