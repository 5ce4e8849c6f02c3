#include "bisetcover/connectivity.hpp"

#include <algorithm>
#include <set>

#include "bisetcover/errors.hpp"

namespace bisetcover {

namespace {

std::vector<Arc> joined_arcs(const Digraph& base, const Digraph& extra, const EdgeSet& chosen) {
  std::vector<Arc> arcs = base.arcs();
  for (const Arc& a : extra.arcs(chosen)) arcs.push_back(a);
  return arcs;
}

}  // namespace

CoverResult augment(const AugmentInstance& instance) {
  const int n = instance.base.n();
  const int ell = instance.ell;
  if (instance.candidates.n() != n) throw UsageError("candidate graph has a different node count");
  if (ell < 0) throw UsageError("ell must be nonnegative");
  if (n < ell + 2) throw UsageError("raising connectivity to ell + 1 needs at least ell + 2 nodes");
  const auto family = std::make_shared<ConnectivityFamily>(instance.base, ell);

  const CoreSet hopeless = family->cores(instance.candidates.arcs());
  if (!hopeless.empty()) {
    throw InfeasibleError("candidate edges cannot cover tight biset " + hopeless.front().to_string(),
                          hopeless.front());
  }

  CoverResult regular = cover_crossing_regular(family, instance.candidates, ell);
  CoverResult log = cover_crossing_log(family, instance.candidates);
  CoverResult best = log.cost < regular.cost ? log : regular;
  best.ratio_bound = std::min(regular.ratio_bound, log.ratio_bound);

  if (!is_k_connected(n, joined_arcs(instance.base, instance.candidates, best.edges), ell + 1)) {
    throw InvariantViolation("augmented graph is not " + std::to_string(ell + 1) + "-connected");
  }
  return best;
}

LadderResult k_connected_subgraph(const Digraph& graph, int k, bool with_opt_k) {
  const int n = graph.n();
  if (k < 0) throw UsageError("k must be nonnegative");
  if (k > 0 && n < k + 1) throw UsageError("k-connectivity needs at least k + 1 nodes");
  LadderResult r;
  r.k = k;
  EdgeSet chosen;
  Rational max_bound = 0;
  for (int ell = 0; ell < k; ++ell) {
    std::vector<Edge> bought;
    for (std::size_t e : chosen) bought.push_back({graph.edge(e).tail, graph.edge(e).head, 0});
    std::vector<Edge> priced = graph.edges();
    for (std::size_t e : chosen) priced[e].cost = 0;
    AugmentInstance level{Digraph(n, std::move(bought)), Digraph(n, std::move(priced)), ell};
    CoverResult step = augment(level);
    EdgeSet fresh;
    std::set_difference(step.edges.begin(), step.edges.end(), chosen.begin(), chosen.end(),
                        std::back_inserter(fresh));
    LadderLevel l{ell, fresh, graph.cost(fresh), step.ratio_bound};
    chosen = set_union(chosen, fresh);
    r.sum_bound += step.ratio_bound / (k - ell);
    if (step.ratio_bound > max_bound) max_bound = step.ratio_bound;
    r.levels.push_back(std::move(l));
    if (!is_k_connected(n, graph.arcs(chosen), ell + 1)) {
      throw InvariantViolation("ladder level " + std::to_string(ell) + " did not reach connectivity " +
                               std::to_string(ell + 1));
    }
  }
  r.edges = chosen;
  r.cost = graph.cost(chosen);
  r.harmonic_bound = harmonic(k) * max_bound;
  if (with_opt_k && k > 0) r.opt_k = opt_k_lp(graph, k);
  return r;
}

Rational opt_k_lp(const Digraph& graph, int k) {
  const int n = graph.n();
  if (n > 7) throw UsageError("opt_k enumeration is limited to 7 nodes");
  std::vector<std::vector<std::size_t>> rows;
  std::vector<Rational> demand;
  const NodeSet all = NodeSet::full(n);
  for (std::uint64_t inner = 1; inner <= all.bits(); ++inner) {
    const NodeSet in(inner);
    const NodeSet rest = all - in;
    // Submasks of the complement give the boundary.
    for (std::uint64_t b = rest.bits();; b = (b - 1) & rest.bits()) {
      const NodeSet outer = in | NodeSet(b);
      if (outer != all) {
        const int need = k - NodeSet(b).size();
        if (need > 0) {
          const Biset x(n, in, outer);
          std::vector<std::size_t> row;
          for (std::size_t e = 0; e < graph.size(); ++e) {
            if (edge_covers(graph.edge(e), x)) row.push_back(e);
          }
          if (row.empty()) throw InfeasibleError("no edge leaves " + x.to_string(), x);
          rows.push_back(std::move(row));
          demand.emplace_back(need);
        }
      }
      if (b == 0) break;
    }
  }
  std::vector<Rational> cost;
  for (const Edge& e : graph.edges()) cost.push_back(e.cost);
  return solve_covering_lp(rows, demand, cost).value;
}

bool st_cross(NodeSet x, NodeSet y, NodeSet s, NodeSet t) {
  return !(x & y & s).empty() && !(t - (x | y)).empty();
}

bool is_st_crossing(const std::vector<NodeSet>& sets, NodeSet s, NodeSet t) {
  const std::set<std::uint64_t> present = [&] {
    std::set<std::uint64_t> p;
    for (NodeSet x : sets) p.insert(x.bits());
    return p;
  }();
  for (NodeSet x : sets) {
    for (NodeSet y : sets) {
      if (st_cross(x, y, s, t) && (!present.count((x & y).bits()) || !present.count((x | y).bits()))) return false;
    }
  }
  return true;
}

ExplicitFamily st_crossing_to_biset(int n, const std::vector<NodeSet>& sets, NodeSet s, NodeSet t) {
  GroundSet ground(n);
  if (s.intersects(t)) throw UsageError("S and T overlap");
  if ((s | t) != ground.all()) throw UsageError("S and T must partition the ground set");
  std::vector<Biset> image;
  for (NodeSet x : sets) {
    if (!x.subset_of(ground.all())) throw UsageError("set " + x.to_string() + " leaves the ground set");
    if (!x.intersects(s)) throw UsageError("set " + x.to_string() + " misses S");
    if ((t - x).empty()) throw UsageError("set " + x.to_string() + " contains all of T");
    image.emplace_back(n, x & s, s | (x & t));
  }
  return ExplicitFamily(n, std::move(image));
}

}  // namespace bisetcover
