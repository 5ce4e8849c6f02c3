#pragma once

#include <optional>
#include <vector>

#include "bisetcover/biset.hpp"
#include "bisetcover/digraph.hpp"
#include "bisetcover/family.hpp"

namespace bisetcover {

struct DualEntry {
  Biset biset;
  Rational value;
};

// Sparse dual solution of the covering LP, one entry per raised biset.
struct DualSolution {
  std::vector<DualEntry> entries;

  Rational value() const;
  std::optional<Rational> at(const Biset& b) const;
};

struct PdResult {
  EdgeSet edges;                        // J after reverse delete
  std::vector<Biset> maintained;        // U, pairwise disjoint
  DualSolution dual;                    // y
  std::vector<std::size_t> phase1_edges;  // insertion order before reverse delete
  CoreSet residual_cores;               // cores of S^J at output
  Rational cost;
};

// Two-phase primal-dual for weakly-intersecting families. Phase 1 raises the
// dual of one core at a time (lexicographically smallest inner part first)
// until an edge covering it becomes tight; phase 2 deletes, last to first,
// every edge not needed to cover S[U]. When q is given the result is checked
// against the residual core bound floor(n / (q + 1)).
PdResult semi_intersecting_cover(const FamilyOracle& family, const Digraph& graph,
                                 std::optional<int> q = std::nullopt);

// The q = n case: an optimal cover of an intersecting family.
PdResult cover_intersecting(const FamilyOracle& family, const Digraph& graph);

// Optimal cover of the branch F^J0(C), computed on its co-family with the
// edges reversed. Edge indices refer to `graph`.
PdResult cover_branch_via_co(const OraclePtr& family, const Biset& core, const EdgeSet& chosen,
                             const Digraph& graph);

}  // namespace bisetcover
