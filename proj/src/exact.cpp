#include "bisetcover/exact.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <numeric>

#include "bisetcover/errors.hpp"

namespace bisetcover {

namespace {

using Bits = boost::dynamic_bitset<>;

void check_ground(const ExplicitFamily& family, const Digraph& graph) {
  if (family.ground_size() != graph.n()) throw UsageError("graph and family have different ground sets");
}

std::vector<std::vector<std::size_t>> covering_rows(const ExplicitFamily& family, const Digraph& graph) {
  std::vector<std::vector<std::size_t>> rows;
  rows.reserve(family.size());
  for (const Biset& b : family.members()) {
    std::vector<std::size_t> row;
    for (std::size_t e = 0; e < graph.size(); ++e) {
      if (edge_covers(graph.edge(e), b)) row.push_back(e);
    }
    if (row.empty()) throw InfeasibleError("no candidate edge covers " + b.to_string(), b);
    rows.push_back(std::move(row));
  }
  return rows;
}

class BranchAndBound {
 public:
  BranchAndBound(const ExplicitFamily& family, const Digraph& graph)
      : graph_(graph), rows_(covering_rows(family, graph)), m_(rows_.size()) {
    covers_.assign(graph.size(), Bits(m_));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t e : rows_[i]) covers_[e].set(i);
      std::stable_sort(rows_[i].begin(), rows_[i].end(),
                       [&](std::size_t a, std::size_t b) { return graph.edge(a).cost < graph.edge(b).cost; });
    }
    excluded_.assign(graph.size(), 0);
  }

  EdgeSet run() {
    greedy();
    Bits covered(m_);
    EdgeSet chosen;
    search(covered, 0, chosen);
    return normalized(best_);
  }

 private:
  // Upper bound: repeatedly take the edge with least cost per newly covered member.
  void greedy() {
    Bits covered(m_);
    EdgeSet chosen;
    while (!covered.all()) {
      std::optional<std::size_t> pick;
      Rational pick_ratio;
      for (std::size_t e = 0; e < graph_.size(); ++e) {
        const std::size_t gain = (covers_[e] - covered).count();
        if (gain == 0) continue;
        Rational ratio = graph_.edge(e).cost / Rational(static_cast<long>(gain));
        if (!pick || ratio < pick_ratio) {
          pick = e;
          pick_ratio = ratio;
        }
      }
      covered |= covers_[*pick];
      chosen.push_back(*pick);
    }
    best_ = chosen;
    best_cost_ = graph_.cost(chosen);
  }

  void search(Bits& covered, const Rational& cost, EdgeSet& chosen) {
    if (covered.all()) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_ = chosen;
      }
      return;
    }
    std::size_t branch_row = m_;
    std::size_t fewest = SIZE_MAX;
    Rational bound = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (covered.test(i)) continue;
      std::size_t options = 0;
      const Rational* cheapest = nullptr;
      for (std::size_t e : rows_[i]) {
        if (excluded_[e]) continue;
        if (!cheapest) cheapest = &graph_.edge(e).cost;
        ++options;
      }
      if (options == 0) return;
      if (*cheapest > bound) bound = *cheapest;
      if (options < fewest) {
        fewest = options;
        branch_row = i;
      }
    }
    if (cost + bound >= best_cost_) return;

    std::vector<std::size_t> newly_excluded;
    for (std::size_t e : rows_[branch_row]) {
      if (excluded_[e]) continue;
      Bits next = covered | covers_[e];
      chosen.push_back(e);
      search(next, cost + graph_.edge(e).cost, chosen);
      chosen.pop_back();
      excluded_[e] = 1;
      newly_excluded.push_back(e);
    }
    for (std::size_t e : newly_excluded) excluded_[e] = 0;
  }

  const Digraph& graph_;
  std::vector<std::vector<std::size_t>> rows_;
  std::size_t m_;
  std::vector<Bits> covers_;
  std::vector<char> excluded_;
  EdgeSet best_;
  Rational best_cost_;
};

// Dense exact simplex on  max b.y  s.t.  A^T y + s = c,  y, s >= 0,  c >= 0.
class DualSimplex {
 public:
  DualSimplex(const std::vector<std::vector<std::size_t>>& rows, const std::vector<Rational>& demand,
              const std::vector<Rational>& cost)
      : m_(rows.size()), e_(cost.size()), width_(m_ + e_ + 1) {
    table_.assign((e_ + 1) * width_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t e : rows[i]) at(e, i) += 1;
      at(e_, i) = -demand[i];
    }
    for (std::size_t e = 0; e < e_; ++e) {
      if (cost[e] < 0) throw UsageError("covering LP needs nonnegative costs");
      at(e, m_ + e) = 1;
      at(e, width_ - 1) = cost[e];
    }
    basis_.resize(e_);
    std::iota(basis_.begin(), basis_.end(), m_);
  }

  LpSolution solve() {
    bool bland = false;
    int degenerate = 0;
    for (;;) {
      const std::optional<std::size_t> col = entering(bland);
      if (!col) break;
      const std::optional<std::size_t> row = leaving(*col);
      if (!row) throw UsageError("covering LP dual unbounded: some demand cannot be met");
      if (at(*row, width_ - 1) == 0) {
        if (++degenerate > 64) bland = true;
      } else {
        degenerate = 0;
      }
      pivot(*row, *col);
    }
    LpSolution s;
    s.value = at(e_, width_ - 1);
    s.y.assign(m_, Rational(0));
    for (std::size_t r = 0; r < e_; ++r) {
      if (basis_[r] < m_) s.y[basis_[r]] = at(r, width_ - 1);
    }
    s.x.resize(e_);
    for (std::size_t e = 0; e < e_; ++e) s.x[e] = at(e_, m_ + e);
    return s;
  }

 private:
  Rational& at(std::size_t r, std::size_t c) { return table_[r * width_ + c]; }

  std::optional<std::size_t> entering(bool bland) {
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c + 1 < width_; ++c) {
      const Rational& d = at(e_, c);
      if (d >= 0) continue;
      if (bland) return c;
      if (!best || d < at(e_, *best)) best = c;
    }
    return best;
  }

  std::optional<std::size_t> leaving(std::size_t col) {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t r = 0; r < e_; ++r) {
      const Rational& a = at(r, col);
      if (a <= 0) continue;
      Rational ratio = at(r, width_ - 1) / a;
      if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*best])) {
        best = r;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = at(row, col);
    for (std::size_t c = 0; c < width_; ++c) at(row, c) /= p;
    for (std::size_t r = 0; r <= e_; ++r) {
      if (r == row) continue;
      const Rational f = at(r, col);
      if (f == 0) continue;
      for (std::size_t c = 0; c < width_; ++c) {
        if (at(row, c) != 0) at(r, c) -= f * at(row, c);
      }
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t e_;
  std::size_t width_;
  std::vector<Rational> table_;
  std::vector<std::size_t> basis_;
};

}  // namespace

EdgeSet exact_opt(const ExplicitFamily& family, const Digraph& graph) {
  check_ground(family, graph);
  if (family.size() == 0) return {};
  return BranchAndBound(family, graph).run();
}

LpSolution solve_covering_lp(const std::vector<std::vector<std::size_t>>& rows, const std::vector<Rational>& demand,
                             const std::vector<Rational>& cost) {
  if (rows.size() != demand.size()) throw UsageError("covering LP rows and demands differ in length");
  std::vector<std::vector<std::size_t>> kept_rows;
  std::vector<Rational> kept_demand;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (demand[i] <= 0) continue;
    for (std::size_t e : rows[i]) {
      if (e >= cost.size()) throw UsageError("covering LP row names an unknown edge");
    }
    kept_rows.push_back(rows[i]);
    kept_demand.push_back(demand[i]);
    origin.push_back(i);
  }
  LpSolution reduced = DualSimplex(kept_rows, kept_demand, cost).solve();
  LpSolution s;
  s.value = reduced.value;
  s.x = std::move(reduced.x);
  s.y.assign(rows.size(), Rational(0));
  for (std::size_t i = 0; i < origin.size(); ++i) s.y[origin[i]] = reduced.y[i];
  return s;
}

LpSolution covering_lp(const ExplicitFamily& family, const Digraph& graph) {
  check_ground(family, graph);
  const auto rows = covering_rows(family, graph);
  std::vector<Rational> cost;
  for (const Edge& e : graph.edges()) cost.push_back(e.cost);
  return solve_covering_lp(rows, std::vector<Rational>(rows.size(), Rational(1)), cost);
}

Rational tau_lp(const ExplicitFamily& family, const Digraph& graph) { return covering_lp(family, graph).value; }

ExactReport exact_report(const ExplicitFamily& family, const Digraph& graph) {
  ExactReport r;
  r.optimal_edges = exact_opt(family, graph);
  r.opt_integral = graph.cost(r.optimal_edges);
  const LpSolution lp = covering_lp(family, graph);
  r.tau_fractional = lp.value;
  for (std::size_t e = 0; e < lp.x.size(); ++e) {
    if (lp.x[e] != 0) r.lp_support.emplace_back(e, lp.x[e]);
  }
  for (std::size_t i = 0; i < lp.y.size(); ++i) {
    if (lp.y[i] != 0) r.lp_dual.entries.push_back({family.members()[i], lp.y[i]});
  }
  r.tau_le_opt = r.tau_fractional <= r.opt_integral;
  r.dual_matches_tau = r.lp_dual.value() == r.tau_fractional;
  return r;
}

void Audit::fail(std::string message, std::optional<Biset> at) {
  if (!witness && at) witness = at;
  violations.push_back(std::move(message));
}

Audit verify_cover(const ExplicitFamily& family, const Digraph& graph, const EdgeSet& chosen) {
  check_ground(family, graph);
  Audit a;
  const auto arcs = graph.arcs(chosen);
  const CoverIndex index(graph.n(), arcs);
  for (const Biset& b : family.members()) {
    if (!index.covers(b)) a.fail("uncovered member " + b.to_string(), b);
  }
  return a;
}

Audit verify_cover(const FamilyOracle& family, const Digraph& graph, const EdgeSet& chosen) {
  if (family.ground_size() != graph.n()) throw UsageError("graph and family have different ground sets");
  Audit a;
  for (const Biset& c : family.cores(graph.arcs(chosen))) a.fail("uncovered core " + c.to_string(), c);
  return a;
}

ExplicitFamily down_family(const ExplicitFamily& family, const std::vector<Biset>& maintained) {
  std::vector<Biset> kept;
  for (const Biset& b : family.members()) {
    if (std::any_of(maintained.begin(), maintained.end(), [&](const Biset& u) { return contains(u, b); })) {
      kept.push_back(b);
    }
  }
  return ExplicitFamily(family.ground_size(), std::move(kept));
}

Audit verify_dual(const ExplicitFamily& family, const Digraph& graph, const DualSolution& dual,
                  const EdgeSet& chosen, const std::optional<std::vector<Biset>>& maintained,
                  const std::optional<Rational>& tau) {
  check_ground(family, graph);
  Audit a;
  const ExplicitFamily target = maintained ? down_family(family, *maintained) : family;
  for (const DualEntry& d : dual.entries) {
    if (d.value < 0) a.fail("negative dual on " + d.biset.to_string(), d.biset);
    if (!target.contains(d.biset)) a.fail("dual support " + d.biset.to_string() + " outside the family", d.biset);
    if (d.value > 0) {
      const std::size_t crossing = delta(graph, chosen, d.biset).size();
      if (crossing != 1) {
        a.fail("dual support " + d.biset.to_string() + " has " + std::to_string(crossing) + " chosen edges leaving it",
               d.biset);
      }
    }
  }
  const EdgeSet in_j = normalized(chosen);
  for (std::size_t e = 0; e < graph.size(); ++e) {
    Rational load = 0;
    for (const DualEntry& d : dual.entries) {
      if (edge_covers(graph.edge(e), d.biset)) load += d.value;
    }
    if (load > graph.edge(e).cost) a.fail("edge " + std::to_string(e) + " overloaded: " + to_string(load));
    if (std::binary_search(in_j.begin(), in_j.end(), e) && load != graph.edge(e).cost) {
      a.fail("chosen edge " + std::to_string(e) + " not tight");
    }
  }
  const Audit cover = verify_cover(target, graph, chosen);
  for (const std::string& v : cover.violations) a.fail(v, cover.witness);
  if (dual.value() != graph.cost(chosen)) {
    a.fail("dual value " + to_string(dual.value()) + " differs from cost " + to_string(graph.cost(chosen)));
  }
  if (tau && dual.value() > *tau) a.fail("dual value exceeds tau " + to_string(*tau));
  return a;
}

Audit verify_pd_structure(const ExplicitFamily& family, const Digraph& graph, const PdResult& result) {
  check_ground(family, graph);
  Audit a;
  const auto& u = result.maintained;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!family.contains(u[i])) a.fail("maintained " + u[i].to_string() + " not a member", u[i]);
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (intersects(u[i], u[j])) a.fail("maintained bisets " + u[i].to_string() + " and " + u[j].to_string() + " intersect", u[i]);
    }
    const std::size_t leaving = delta(graph, result.edges, u[i]).size();
    if (leaving != 1) {
      a.fail("maintained " + u[i].to_string() + " has " + std::to_string(leaving) + " chosen edges leaving it", u[i]);
    }
  }
  const EdgeSet phase1 = normalized(result.phase1_edges);
  const CoreSet residual = minimal_elements(family.residual(graph.arcs(result.edges)).members());
  NodeSet used;
  for (const Biset& c : residual) {
    Biset b = c;
    for (const Biset& m : u) {
      if (!intersects(m, c)) continue;
      for (const Biset& other : residual) {
        if (other != c && intersects(m, other)) {
          a.fail("maintained " + m.to_string() + " meets two residual cores", m);
        }
      }
      b = join(b, m);
    }
    if (!delta(graph, phase1, b).empty()) a.fail("phase-1 edge leaves " + b.to_string(), b);
    if (family.contains(b)) a.fail("union " + b.to_string() + " is a member", b);
    if (used.intersects(b.inner())) a.fail("unions around residual cores overlap", b);
    used = used | b.inner();
  }
  return a;
}

namespace {

bool pairwise_check(const ExplicitFamily& family, std::optional<std::pair<Biset, Biset>>* witness,
                    const std::function<bool(const Biset&, const Biset&)>& ok) {
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!ok(m[i], m[j])) {
        if (witness) *witness = std::make_pair(m[i], m[j]);
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_intersection_closed(const ExplicitFamily& family, std::optional<std::pair<Biset, Biset>>* witness) {
  return pairwise_check(family, witness, [&](const Biset& x, const Biset& y) {
    return !intersects(x, y) || family.contains(meet(x, y));
  });
}

bool verify_semi_intersecting(const ExplicitFamily& family, int q, std::optional<std::pair<Biset, Biset>>* witness) {
  for (const Biset& b : family.members()) {
    if (b.inner().size() > q) {
      if (witness) *witness = std::make_pair(b, b);
      return false;
    }
  }
  return pairwise_check(family, witness, [&](const Biset& x, const Biset& y) {
    if (!intersects(x, y)) return true;
    if (!family.contains(meet(x, y))) return false;
    const Biset hi = join(x, y);
    return hi.inner().size() > q || family.contains(hi);
  });
}

bool is_weakly_intersecting(const ExplicitFamily& family, std::optional<std::pair<Biset, Biset>>* witness) {
  const auto& m = family.members();
  for (const Biset& top : m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!contains(top, m[i])) continue;
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (!contains(top, m[j]) || !intersects(m[i], m[j])) continue;
        if (!family.contains(meet(m[i], m[j])) || !family.contains(join(m[i], m[j]))) {
          if (witness) *witness = std::make_pair(m[i], m[j]);
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace bisetcover
