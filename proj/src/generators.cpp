#include "bisetcover/generators.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "bisetcover/connectivity.hpp"
#include "bisetcover/errors.hpp"

namespace bisetcover {

NodeSet Rng::subset(int n) { return NodeSet(next() & NodeSet::full(n).bits()); }

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(static_cast<std::uint64_t>(i) + 1)]);
  return p;
}

namespace {

constexpr int kAttempts = 200;
constexpr std::size_t kClosureCap = 400;

using PairRule = std::function<bool(const Biset&, const Biset&)>;

// Closes under meet and join of pairs accepted by `rule`, joins only up to
// `union_limit` inner nodes when given. Returns false when the cap is exceeded
// or a required member would be improper.
bool close(std::vector<Biset>& members, const PairRule& rule, std::optional<int> union_limit = std::nullopt) {
  std::set<Biset, BisetLess> present(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Biset x = members[i];
      const Biset y = members[j];
      if (!rule(x, y)) continue;
      std::vector<Biset> wanted{meet(x, y)};
      const Biset hi = join(x, y);
      if (!union_limit || hi.inner().size() <= *union_limit) wanted.push_back(hi);
      for (const Biset& b : wanted) {
        if (present.count(b)) continue;
        if (!b.is_proper()) return false;
        present.insert(b);
        members.push_back(b);
        if (members.size() > kClosureCap) return false;
      }
    }
  }
  return true;
}

Biset random_biset(Rng& rng, int n, NodeSet forbidden_outer, int max_inner) {
  for (;;) {
    const NodeSet inner = rng.subset(n) - forbidden_outer;
    if (inner.empty() || inner.size() > max_inner) continue;
    NodeSet extra = rng.subset(n) & rng.subset(n);
    const NodeSet outer = (inner | extra) - forbidden_outer;
    const Biset b(n, inner, outer);
    if (b.is_proper()) return b;
  }
}

std::vector<Biset> seeds(Rng& rng, int n, int count, NodeSet forbidden_outer, int max_inner) {
  std::set<Biset, BisetLess> out;
  while (static_cast<int>(out.size()) < count) out.insert(random_biset(rng, n, forbidden_outer, max_inner));
  return {out.begin(), out.end()};
}

ExplicitFamily sorted_family(int n, std::vector<Biset> members) {
  std::sort(members.begin(), members.end(), presentation_less);
  return ExplicitFamily(n, std::move(members));
}

void check_size(int n, int size_target) {
  GroundSet ground(n);
  if (n < 2) throw UsageError("generators need at least 2 nodes");
  if (size_target < 1) throw UsageError("size target must be positive");
}

}  // namespace

ExplicitFamily gen_crossing_family(int n, std::uint64_t seed, int size_target) {
  check_size(n, size_target);
  Rng rng(seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Biset> m = seeds(rng, n, size_target, NodeSet(), n);
    if (!close(m, [](const Biset& x, const Biset& y) { return crosses(x, y); })) continue;
    ExplicitFamily f = sorted_family(n, std::move(m));
    if (f.claims().crossing) return f;
  }
  throw UsageError("crossing family generation exhausted its attempts");
}

ExplicitFamily gen_intersecting_family(int n, std::uint64_t seed, int size_target) {
  check_size(n, size_target);
  Rng rng(seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const NodeSet r = NodeSet::single(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    std::vector<Biset> m = seeds(rng, n, std::min(size_target, 4), r, n);
    if (!close(m, [](const Biset& x, const Biset& y) { return intersects(x, y); })) continue;
    if (static_cast<int>(m.size()) > std::max(size_target, 4) * 5) continue;
    ExplicitFamily f = sorted_family(n, std::move(m));
    if (f.claims().intersecting) return f;
  }
  throw UsageError("intersecting family generation exhausted its attempts");
}

ExplicitFamily gen_semi_intersecting_family(int n, int q, std::uint64_t seed, int size_target) {
  check_size(n, size_target);
  if (q < 1) throw UsageError("q must be positive");
  Rng rng(seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const NodeSet avoid = rng.coin() ? NodeSet::single(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))))
                                     : NodeSet();
    std::vector<Biset> m = seeds(rng, n, std::min(size_target, 5), avoid, q);
    if (!close(m, [](const Biset& x, const Biset& y) { return intersects(x, y); }, q)) continue;
    if (static_cast<int>(m.size()) > std::max(size_target, 5) * 4) continue;
    return sorted_family(n, std::move(m));
  }
  throw UsageError("semi-intersecting family generation exhausted its attempts");
}

ExplicitFamily gen_regular_family(int n, int k, std::uint64_t seed, int size_target) {
  check_size(n, size_target);
  if (k < 0 || k > n - 2) throw UsageError("k must lie in [0, n - 2]");
  Rng rng(seed);
  const NodeSet all = NodeSet::full(n);
  const PairRule rule = [&](const Biset& x, const Biset& y) {
    if (crosses(x, y)) return true;
    if (intersects(x, y) && (all - (x.inner() | y.inner())).size() >= k + 1) return true;
    const Biset cx = co_biset(x);
    const Biset cy = co_biset(y);
    return intersects(cx, cy) && (all - (cx.inner() | cy.inner())).size() >= k + 1;
  };
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const Digraph g = gen_ell_connected_digraph(n, k, rng.next());
    const ExplicitFamily tight = tight_biset_family(g, k);
    if (tight.size() == 0) continue;
    std::vector<Biset> pool = tight.members();
    std::vector<Biset> m;
    const int want = std::min<int>(size_target, static_cast<int>(pool.size()));
    for (int i = 0; i < want; ++i) {
      const std::size_t pick = rng.below(pool.size());
      m.push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    if (!close(m, rule)) continue;
    ExplicitFamily f = sorted_family(n, std::move(m));
    const StructureReport report = explicit_properties(f, k);
    if (!report.is_crossing || !report.is_k_regular.value_or(false) || !report.co_k_regular.value_or(false)) continue;
    if (!report.uniform_boundary || report.gamma != k) continue;
    return f;
  }
  throw UsageError("regular family generation exhausted its attempts");
}

Digraph gen_ell_connected_digraph(int n, int ell, std::uint64_t seed) {
  GroundSet ground(n);
  if (ell < 0 || ell >= n) throw UsageError("ell must lie in [0, n)");
  Rng rng(seed);
  if (ell == 0) return Digraph(n);
  for (int cycles = ell;; ++cycles) {
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      std::set<std::pair<int, int>> arcs;
      for (int c = 0; c < cycles; ++c) {
        const std::vector<int> p = rng.permutation(n);
        for (int i = 0; i < n; ++i) arcs.emplace(p[i], p[(i + 1) % n]);
      }
      std::vector<Edge> edges;
      for (const auto& [u, v] : arcs) edges.push_back({u, v, 0});
      Digraph g(n, std::move(edges));
      if (is_k_connected(g, ell)) return g;
    }
  }
}

Digraph gen_candidate_edges(int n, std::uint64_t seed, int lo, int hi) {
  if (lo < 0 || hi < lo) throw UsageError("bad cost range");
  Rng rng(seed);
  Digraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) g.add_edge(u, v, rng.range(lo, hi));
    }
  }
  return g;
}

Digraph complete_digraph(int n, const Rational& cost) {
  Digraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) g.add_edge(u, v, cost);
    }
  }
  return g;
}

StInstance gen_st_crossing_family(int n, std::uint64_t seed, int size_target) {
  check_size(n, size_target);
  Rng rng(seed);
  StInstance inst;
  inst.n = n;
  const NodeSet all = NodeSet::full(n);
  do {
    inst.s = rng.subset(n);
  } while (inst.s.empty() || inst.s == all);
  inst.t = all - inst.s;

  std::set<std::uint64_t> present;
  std::vector<NodeSet> sets;
  for (int tries = 0; static_cast<int>(sets.size()) < std::min(size_target, 3) && tries < 1000; ++tries) {
    const NodeSet x = rng.subset(n);
    if (!x.intersects(inst.s) || (inst.t - x).empty()) continue;
    if (present.insert(x.bits()).second) sets.push_back(x);
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!st_cross(sets[i], sets[j], inst.s, inst.t)) continue;
      for (NodeSet z : {sets[i] & sets[j], sets[i] | sets[j]}) {
        if (present.insert(z.bits()).second) sets.push_back(z);
      }
    }
  }
  std::sort(sets.begin(), sets.end(), [](NodeSet a, NodeSet b) { return a.bits() < b.bits(); });
  inst.sets = std::move(sets);
  return inst;
}

}  // namespace bisetcover
