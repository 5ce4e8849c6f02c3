#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bisetcover/biset.hpp"
#include "bisetcover/digraph.hpp"
#include "bisetcover/family.hpp"
#include "bisetcover/primal_dual.hpp"

namespace bisetcover {

struct ExactReport {
  EdgeSet optimal_edges;
  Rational opt_integral;
  Rational tau_fractional;
  // Optimal fractional x, nonzero entries only.
  std::vector<std::pair<std::size_t, Rational>> lp_support;
  DualSolution lp_dual;
  bool tau_le_opt = false;
  bool dual_matches_tau = false;
};

// Minimum-cost J covering every member. Throws InfeasibleError with an
// uncoverable member as witness.
EdgeSet exact_opt(const ExplicitFamily& family, const Digraph& graph);

struct LpSolution {
  Rational value;
  std::vector<Rational> x;  // per edge
  std::vector<Rational> y;  // per constraint
};

// min c.x s.t. sum_{e in rows[i]} x_e >= demand[i], x >= 0, solved exactly
// through its dual. Rows with nonpositive demand are ignored.
LpSolution solve_covering_lp(const std::vector<std::vector<std::size_t>>& rows, const std::vector<Rational>& demand,
                             const std::vector<Rational>& cost);

Rational tau_lp(const ExplicitFamily& family, const Digraph& graph);
LpSolution covering_lp(const ExplicitFamily& family, const Digraph& graph);

ExactReport exact_report(const ExplicitFamily& family, const Digraph& graph);

struct Audit {
  std::vector<std::string> violations;
  std::optional<Biset> witness;

  bool ok() const { return violations.empty(); }
  void fail(std::string message, std::optional<Biset> at = std::nullopt);
};

// Every member (or every residual core, for implicit families) is covered.
Audit verify_cover(const ExplicitFamily& family, const Digraph& graph, const EdgeSet& chosen);
Audit verify_cover(const FamilyOracle& family, const Digraph& graph, const EdgeSet& chosen);

// Dual feasibility and complementary slackness of (J, y) for the sub-family
// S[U] (all of S when U is absent); dual value against tau when given.
Audit verify_dual(const ExplicitFamily& family, const Digraph& graph, const DualSolution& dual,
                  const EdgeSet& chosen, const std::optional<std::vector<Biset>>& maintained = std::nullopt,
                  const std::optional<Rational>& tau = std::nullopt);

// Structural checks on a finished primal-dual run over an explicit family:
// U pairwise disjoint, |delta_J(U)| = 1, and for every residual core C the
// union B_C of C with the members of U meeting it has no phase-1 edge leaving
// it and is not a member.
Audit verify_pd_structure(const ExplicitFamily& family, const Digraph& graph, const PdResult& result);

// S[U]: members contained in some member of U.
ExplicitFamily down_family(const ExplicitFamily& family, const std::vector<Biset>& maintained);

bool is_intersection_closed(const ExplicitFamily& family, std::optional<std::pair<Biset, Biset>>* witness = nullptr);
bool verify_semi_intersecting(const ExplicitFamily& family, int q,
                              std::optional<std::pair<Biset, Biset>>* witness = nullptr);
bool is_weakly_intersecting(const ExplicitFamily& family, std::optional<std::pair<Biset, Biset>>* witness = nullptr);

}  // namespace bisetcover
