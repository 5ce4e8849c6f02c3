#include "bisetcover/crossing_cover.hpp"

#include <algorithm>

#include "bisetcover/errors.hpp"
#include "bisetcover/primal_dual.hpp"

namespace bisetcover {

Rational halving_ratio_bound(int n, int k) { return floor_log2((n - k + 2) / 2); }

Rational semi_ratio_bound(int n, int k) { return 1 + harmonic((2 * n) / (n - k + 2)); }

Rational regular_ratio_bound(int n, int k) {
  return 2 * std::min(semi_ratio_bound(n, k), halving_ratio_bound(n, k));
}

Rational hitting_ratio_bound(int n, int q) {
  Rational r(n, q);
  r.canonicalize();
  return r * harmonic(n / q);
}

namespace {

int small_core_count(const CoreSet& cores, int q) {
  return static_cast<int>(std::count_if(cores.begin(), cores.end(),
                                        [&](const Biset& c) { return c.inner().size() <= q; }));
}

void check_ground(const FamilyOracle& family, const Digraph& graph) {
  if (family.ground_size() != graph.n()) throw UsageError("graph and family have different ground sets");
}

CoverResult finish(std::string algorithm, const Digraph& graph, EdgeSet edges, Rational bound,
                   std::vector<TraceEntry> trace) {
  CoverResult r;
  r.algorithm = std::move(algorithm);
  r.edges = normalized(std::move(edges));
  r.cost = graph.cost(r.edges);
  r.ratio_bound = std::move(bound);
  r.trace = std::move(trace);
  return r;
}

}  // namespace

CoverResult eliminate_small_cores(const OraclePtr& family, const Digraph& graph, EdgeSet chosen, int q,
                                  const std::string& step) {
  check_ground(*family, graph);
  std::vector<TraceEntry> trace;
  int initial = -1;
  for (;;) {
    const CoreSet current = family->cores(graph.arcs(chosen));
    const int before = small_core_count(current, q);
    if (initial < 0) initial = before;
    if (before == 0) break;

    std::optional<PdResult> best;
    const Biset* best_core = nullptr;
    for (const Biset& c : current) {
      if (c.inner().size() > q) continue;
      PdResult branch = cover_branch_via_co(family, c, chosen, graph);
      if (!best || branch.cost < best->cost) {
        best = std::move(branch);
        best_core = &c;
      }
    }
    chosen = set_union(chosen, best->edges);
    const int after = small_core_count(family->cores(graph.arcs(chosen)), q);
    if (after != before - 1) {
      throw InvariantViolation("core count went from " + std::to_string(before) + " to " + std::to_string(after) +
                               " after covering one branch");
    }
    trace.push_back({step, *best_core, best->cost, before, after});
  }
  return finish(step, graph, std::move(chosen), harmonic(initial), std::move(trace));
}

CoverResult cover_crossing_log(const OraclePtr& family, const Digraph& graph) {
  CoverResult r = eliminate_small_cores(family, graph, {}, graph.n(), "log");
  r.algorithm = "log";
  return r;
}

EdgeSet cover_all_core_branches(const OraclePtr& family, const EdgeSet& chosen, const Digraph& graph, int q,
                                std::vector<TraceEntry>* trace) {
  check_ground(*family, graph);
  const CoreSet current = family->cores(graph.arcs(chosen));
  const int before = small_core_count(current, q);
  const std::size_t first = trace ? trace->size() : 0;
  EdgeSet added;
  for (const Biset& c : current) {
    if (c.inner().size() > q) continue;
    PdResult branch = cover_branch_via_co(family, c, chosen, graph);
    if (trace) trace->push_back({"branch", c, branch.cost, before, before});
    added = set_union(added, branch.edges);
  }
  if (trace) {
    const int after = small_core_count(family->cores(graph.arcs(set_union(chosen, added))), q);
    for (std::size_t i = first; i < trace->size(); ++i) (*trace)[i].cores_after = after;
  }
  return added;
}

CoverResult cover_small_halving(const OraclePtr& family, const Digraph& graph, int k) {
  check_ground(*family, graph);
  const int n = graph.n();
  const int q = (n - k) / 2;
  // Every round merges cores pairwise, so a small core after round i has at
  // least 2^i nodes.
  const int max_rounds = q >= 1 ? floor_log2(q) + 1 : 0;
  EdgeSet chosen;
  std::vector<TraceEntry> trace;
  for (int round = 0;; ++round) {
    const CoreSet current = family->cores(graph.arcs(chosen));
    const int small = small_core_count(current, q);
    if (small == 0) break;
    if (round >= max_rounds) {
      throw InvariantViolation("halving exceeded " + std::to_string(max_rounds) + " rounds");
    }
    for (const Biset& c : current) {
      if (c.inner().size() <= q && c.inner().size() < (1 << round)) {
        throw InvariantViolation("core " + c.to_string() + " too small after " + std::to_string(round) + " rounds");
      }
    }
    const EdgeSet added = cover_all_core_branches(family, chosen, graph, q);
    chosen = set_union(chosen, added);
    const int after = small_core_count(family->cores(graph.arcs(chosen)), q);
    if (2 * after > small) {
      throw InvariantViolation("small core count did not halve: " + std::to_string(small) + " -> " +
                               std::to_string(after));
    }
    trace.push_back({"halving", std::nullopt, graph.cost(added), small, after});
  }
  return finish("halving", graph, std::move(chosen), halving_ratio_bound(n, k), std::move(trace));
}

CoverResult cover_small_semi(const OraclePtr& family, const Digraph& graph, int k) {
  check_ground(*family, graph);
  const int n = graph.n();
  const int q = (n - k) / 2;
  std::vector<TraceEntry> trace;
  EdgeSet chosen;
  if (q >= 1) {
    const auto small = restrict_small(family, q);
    const int before = static_cast<int>(small->cores({}).size());
    PdResult pd = semi_intersecting_cover(*small, graph, q);
    trace.push_back({"semi-pd", std::nullopt, pd.cost, before, static_cast<int>(pd.residual_cores.size())});
    chosen = pd.edges;
  }
  CoverResult rest = eliminate_small_cores(family, graph, chosen, q, "semi-log");
  trace.insert(trace.end(), rest.trace.begin(), rest.trace.end());
  return finish("semi", graph, std::move(rest.edges), semi_ratio_bound(n, k), std::move(trace));
}

namespace {

CoverResult cheaper_small_side(const OraclePtr& family, const Digraph& graph, int k) {
  CoverResult halving = cover_small_halving(family, graph, k);
  CoverResult semi = cover_small_semi(family, graph, k);
  return semi.cost < halving.cost ? semi : halving;
}

// Covers every member with |S| <= q or |V - S+| <= q.
CoverResult cover_both_small_sides(const OraclePtr& family, const Digraph& graph, int k,
                                   std::vector<TraceEntry>& trace) {
  CoverResult first = cheaper_small_side(family, graph, k);
  for (TraceEntry t : first.trace) {
    t.step = "out/" + first.algorithm + "/" + t.step;
    trace.push_back(std::move(t));
  }
  const auto co = std::make_shared<CoFamilyOracle>(
      std::make_shared<ResidualOracle>(family, graph.arcs(first.edges)));
  CoverResult second = cheaper_small_side(co, reverse(graph), k);
  for (TraceEntry t : second.trace) {
    t.step = "in/" + second.algorithm + "/" + t.step;
    if (t.core) t.core = co_biset(*t.core);
    trace.push_back(std::move(t));
  }
  CoverResult both;
  both.edges = set_union(first.edges, second.edges);
  return both;
}

}  // namespace

CoverResult cover_crossing_regular(const OraclePtr& family, const Digraph& graph, int k) {
  check_ground(*family, graph);
  const int n = graph.n();
  if (k < 0 || k >= n) throw UsageError("k must lie in [0, n)");
  std::vector<TraceEntry> trace;
  CoverResult both = cover_both_small_sides(family, graph, k, trace);
  const auto left = family->cores(graph.arcs(both.edges));
  if (!left.empty()) {
    throw InvariantViolation("two-sided cover left " + left.front().to_string() +
                             " uncovered; the boundary sizes are not all k");
  }
  return finish("regular", graph, std::move(both.edges), regular_ratio_bound(n, k), std::move(trace));
}

std::vector<int> greedy_hitting_set(const CoreSet& cores, int q, int n) {
  if (q < 1) throw UsageError("hitting-set size bound q must be positive");
  std::vector<NodeSet> open;
  for (const Biset& c : cores) {
    if (c.inner().empty()) throw UsageError("core with empty inner part");
    if (c.inner().size() < q) {
      throw UsageError("core " + c.to_string() + " has fewer than q = " + std::to_string(q) + " inner nodes");
    }
    open.push_back(c.inner());
  }
  std::vector<int> hitting;
  while (!open.empty()) {
    int best = -1;
    int best_degree = 0;
    for (int v = 0; v < n; ++v) {
      const int degree = static_cast<int>(
          std::count_if(open.begin(), open.end(), [&](NodeSet s) { return s.contains(v); }));
      if (degree > best_degree) {
        best = v;
        best_degree = degree;
      }
    }
    hitting.push_back(best);
    std::erase_if(open, [&](NodeSet s) { return s.contains(best); });
  }
  std::sort(hitting.begin(), hitting.end());
  return hitting;
}

namespace {

// Optimal cover of {S in F : s in S}: its co-family is intersecting.
PdResult cover_containing(const OraclePtr& family, int s, const Digraph& graph) {
  const auto co = std::make_shared<ExcludeFromOuterOracle>(std::make_shared<CoFamilyOracle>(family), s);
  return cover_intersecting(*co, reverse(graph));
}

// Optimal cover of {S in F : s outside S+}, itself intersecting.
PdResult cover_avoiding(const OraclePtr& family, int s, const Digraph& graph) {
  const ExcludeFromOuterOracle sub(family, s);
  return cover_intersecting(sub, graph);
}

int core_count(const OraclePtr& family, const Digraph& graph, const EdgeSet& chosen) {
  return static_cast<int>(family->cores(graph.arcs(chosen)).size());
}

}  // namespace

CoverResult cover_crossing_gamma(const OraclePtr& family, const Digraph& graph, int k) {
  check_ground(*family, graph);
  const int n = graph.n();
  if (k < 0 || k >= n) throw UsageError("k must lie in [0, n)");
  std::vector<TraceEntry> trace;
  EdgeSet chosen = cover_both_small_sides(family, graph, k, trace).edges;

  // Every residual member and co-member now has more than (n - k) / 2 inner nodes.
  const int q = (n - k) / 2 + 1;
  const auto residual = std::make_shared<ResidualOracle>(family, graph.arcs(chosen));
  const CoreSet left = residual->cores({});
  const std::vector<int> hitting = greedy_hitting_set(left, q, n);
  for (int s : hitting) {
    const int before = core_count(family, graph, chosen);
    const auto rest = std::make_shared<ResidualOracle>(family, graph.arcs(chosen));
    PdResult part = cover_containing(rest, s, graph);
    chosen = set_union(chosen, part.edges);
    trace.push_back({"hit/" + std::to_string(s), std::nullopt, part.cost, before, core_count(family, graph, chosen)});
  }
  const auto uncovered = family->cores(graph.arcs(chosen));
  if (!uncovered.empty()) {
    throw InvariantViolation("hitting-set phase left " + uncovered.front().to_string() + " uncovered");
  }
  return finish("gamma", graph, std::move(chosen),
                regular_ratio_bound(n, k) + (q <= n ? hitting_ratio_bound(n, q) : Rational(0)), std::move(trace));
}

CoverResult decompose_baseline(const OraclePtr& family, const Digraph& graph, int s) {
  check_ground(*family, graph);
  const int n = graph.n();
  if (s < 0 || s >= n) throw UsageError("baseline node out of range");
  const auto gamma = family->claims().gamma;
  if (!gamma) throw UsageError("baseline needs a known maximum boundary size");
  if (*gamma + 1 > n) throw UsageError("gamma + 1 exceeds the number of nodes");

  EdgeSet chosen;
  std::vector<TraceEntry> trace;
  for (int i = 0; i <= *gamma; ++i) {
    const int node = (s + i) % n;
    for (const bool inside : {true, false}) {
      const int before = core_count(family, graph, chosen);
      const auto rest = std::make_shared<ResidualOracle>(family, graph.arcs(chosen));
      PdResult part = inside ? cover_containing(rest, node, graph) : cover_avoiding(rest, node, graph);
      chosen = set_union(chosen, part.edges);
      trace.push_back({(inside ? "out/" : "in/") + std::to_string(node), std::nullopt, part.cost, before,
                       core_count(family, graph, chosen)});
    }
  }
  const auto uncovered = family->cores(graph.arcs(chosen));
  if (!uncovered.empty()) {
    throw InvariantViolation("decomposition left " + uncovered.front().to_string() + " uncovered");
  }
  return finish("baseline", graph, std::move(chosen), 2 * (*gamma + 1), std::move(trace));
}

}  // namespace bisetcover
