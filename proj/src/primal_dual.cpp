#include "bisetcover/primal_dual.hpp"

#include <algorithm>

#include "bisetcover/errors.hpp"

namespace bisetcover {

Rational DualSolution::value() const {
  Rational sum = 0;
  for (const DualEntry& e : entries) sum += e.value;
  return sum;
}

std::optional<Rational> DualSolution::at(const Biset& b) const {
  for (const DualEntry& e : entries) {
    if (e.biset == b) return e.value;
  }
  return std::nullopt;
}

namespace {

bool contained_in_some(const Biset& core, const std::vector<Biset>& family) {
  return std::any_of(family.begin(), family.end(), [&](const Biset& u) { return contains(u, core); });
}

const Biset& pick_core(const CoreSet& cores) {
  return *std::min_element(cores.begin(), cores.end(), presentation_less);
}

}  // namespace

PdResult semi_intersecting_cover(const FamilyOracle& family, const Digraph& graph, std::optional<int> q) {
  const int n = family.ground_size();
  if (graph.n() != n) throw UsageError("graph and family have different ground sets");

  PdResult result;
  std::vector<Rational> load(graph.size(), Rational(0));
  std::vector<bool> in_cover(graph.size(), false);
  std::vector<Arc> chosen;

  // Phase 1.
  for (;;) {
    const CoreSet current = family.cores(chosen);
    if (current.empty()) break;
    const Biset core = pick_core(current);

    std::erase_if(result.maintained, [&](const Biset& u) { return contains(core, u); });
    result.maintained.push_back(core);

    std::optional<std::size_t> entering;
    Rational step;
    for (std::size_t i = 0; i < graph.size(); ++i) {
      if (in_cover[i] || !edge_covers(graph.edge(i), core)) continue;
      Rational slack = graph.edge(i).cost - load[i];
      if (!entering || slack < step) {
        entering = i;
        step = std::move(slack);
      }
    }
    if (!entering) {
      throw InfeasibleError("no candidate edge covers " + core.to_string(), core);
    }
    if (step < 0) throw InvariantViolation("dual solution became infeasible");
    result.dual.entries.push_back({core, step});
    for (std::size_t i = 0; i < graph.size(); ++i) {
      if (edge_covers(graph.edge(i), core)) load[i] += step;
    }
    in_cover[*entering] = true;
    chosen.push_back(graph.edge(*entering).arc());
    result.phase1_edges.push_back(*entering);
  }

  // Phase 2: reverse delete against S[U].
  std::vector<std::size_t> kept = result.phase1_edges;
  for (std::size_t pos = kept.size(); pos-- > 0;) {
    std::vector<std::size_t> trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
    const CoreSet residual = family.cores(graph.arcs(trial));
    const bool needed = std::any_of(residual.begin(), residual.end(),
                                    [&](const Biset& c) { return contained_in_some(c, result.maintained); });
    if (!needed) kept = std::move(trial);
  }

  result.edges = normalized(kept);
  result.cost = graph.cost(result.edges);
  result.residual_cores = family.cores(graph.arcs(result.edges));
  if (q && static_cast<int>(result.residual_cores.size()) > n / (*q + 1)) {
    throw InvariantViolation(std::to_string(result.residual_cores.size()) + " residual cores exceed floor(n/(q+1)) = " +
                             std::to_string(n / (*q + 1)));
  }
  return result;
}

PdResult cover_intersecting(const FamilyOracle& family, const Digraph& graph) {
  PdResult result = semi_intersecting_cover(family, graph);
  if (!result.residual_cores.empty()) {
    throw InvariantViolation("primal-dual left " + result.residual_cores.front().to_string() +
                             " uncovered; the family is not intersecting");
  }
  return result;
}

PdResult cover_branch_via_co(const OraclePtr& family, const Biset& core, const EdgeSet& chosen,
                             const Digraph& graph) {
  const auto arcs = graph.arcs(chosen);
  const CoBranchOracle co(core_branch(family, core, arcs), core.inner().min());
  try {
    return cover_intersecting(co, reverse(graph));
  } catch (const InfeasibleError& e) {
    // Report the uncoverable member in the orientation of F.
    std::optional<Biset> witness;
    if (e.witness()) witness = co_biset(*e.witness());
    throw InfeasibleError("branch of core " + core.to_string() + " cannot be covered", witness);
  }
}

}  // namespace bisetcover
