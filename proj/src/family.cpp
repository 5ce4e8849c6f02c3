#include "bisetcover/family.hpp"

#include <algorithm>

#include "bisetcover/errors.hpp"

namespace bisetcover {

std::optional<Biset> FamilyOracle::min_core(int u, int v, std::span<const Arc> covered) const {
  if (u == v) throw UsageError("min_core needs distinct nodes");
  return min_core(u, NodeSet::single(v), covered);
}

std::optional<Biset> FamilyOracle::co_min_core(int u, int v, std::span<const Arc> covered) const {
  if (u == v) throw UsageError("co_min_core needs distinct nodes");
  return co_min_core(u, NodeSet::single(v), covered);
}

CoreSet FamilyOracle::cores(std::span<const Arc> covered) const {
  const int n = ground_size();
  std::vector<Biset> found;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (auto c = min_core(u, NodeSet::single(v), covered)) found.push_back(*c);
    }
  }
  return minimal_elements(std::move(found));
}

CoreSet cores(const FamilyOracle& family, std::span<const Arc> covered) { return family.cores(covered); }

// ---------------------------------------------------------------------------
// ExplicitFamily

ExplicitFamily::ExplicitFamily(int n, std::vector<Biset> members) : n_(GroundSet(n).n), members_(std::move(members)) {
  for (const Biset& b : members_) {
    if (b.n() != n_) throw UsageError("family member " + b.to_string() + " over a different ground set");
    if (!b.is_proper()) throw UsageError("family member " + b.to_string() + " is not proper");
    if (!lookup_.insert(b).second) throw UsageError("duplicate family member " + b.to_string());
    co_members_.push_back(co_biset(b));
  }
  const StructureReport report = explicit_properties(*this);
  claims_.crossing = report.is_crossing;
  claims_.intersecting = report.is_intersecting;
  claims_.gamma = report.gamma;
  claims_.uniform_boundary = report.uniform_boundary;
}

std::optional<Biset> ExplicitFamily::scan(const std::vector<Biset>& pool, int n, int u, NodeSet avoid,
                                          std::span<const Arc> covered) {
  if (u < 0 || u >= n) throw UsageError("node out of range");
  if (avoid.contains(u)) throw UsageError("min-core query with u in the avoided set");
  const CoverIndex index(n, covered);
  std::vector<const Biset*> candidates;
  for (const Biset& b : pool) {
    if (b.inner().contains(u) && !b.outer().intersects(avoid) && !index.covers(b)) {
      candidates.push_back(&b);
    }
  }
  std::optional<Biset> found;
  for (const Biset* b : candidates) {
    const bool minimal = std::none_of(candidates.begin(), candidates.end(),
                                      [&](const Biset* o) { return properly_contains(*b, *o); });
    if (!minimal) continue;
    if (found) {
      throw AmbiguousCoreError("several minimal members " + found->to_string() + " and " + b->to_string() +
                               " for node " + std::to_string(u) + " avoiding " + avoid.to_string());
    }
    found = *b;
  }
  return found;
}

std::optional<Biset> ExplicitFamily::min_core(int u, NodeSet avoid, std::span<const Arc> covered) const {
  return scan(members_, n_, u, avoid, covered);
}

std::optional<Biset> ExplicitFamily::co_min_core(int u, NodeSet avoid, std::span<const Arc> covered) const {
  return scan(co_members_, n_, u, avoid, covered);
}

ExplicitFamily ExplicitFamily::residual(std::span<const Arc> covered) const {
  const CoverIndex index(n_, covered);
  std::vector<Biset> kept;
  for (const Biset& b : members_) {
    if (!index.covers(b)) kept.push_back(b);
  }
  return ExplicitFamily(n_, std::move(kept));
}

ExplicitFamily ExplicitFamily::co_family() const { return ExplicitFamily(n_, co_members_); }

// ---------------------------------------------------------------------------
// ConnectivityFamily

ConnectivityFamily::ConnectivityFamily(const Digraph& base, int level)
    : n_(base.n()), level_(level), forward_(base.arcs()), backward_(reversed(forward_)) {
  if (level < 0) throw UsageError("connectivity level must be nonnegative");
  if (!is_k_connected(n_, forward_, level)) {
    throw UsageError("base graph is not " + std::to_string(level) + "-connected");
  }
}

FamilyClaims ConnectivityFamily::claims() const {
  FamilyClaims c;
  c.crossing = true;
  c.regular = level_;
  c.co_regular = level_;
  c.gamma = level_;
  c.uniform_boundary = true;
  return c;
}

std::optional<Biset> ConnectivityFamily::query(int n, int level, const std::vector<Arc>& base, int u,
                                               NodeSet avoid, std::span<const Arc> covered) {
  std::vector<Arc> arcs = base;
  arcs.insert(arcs.end(), covered.begin(), covered.end());
  VertexCut cut = min_vertex_cut(n, arcs, u, avoid);
  if (cut.infinite() || cut.value > level) return std::nullopt;
  if (cut.value < level) {
    throw InvariantViolation("vertex cut of size " + std::to_string(cut.value) + " below level " +
                             std::to_string(level));
  }
  return cut.witness;
}

std::optional<Biset> ConnectivityFamily::min_core(int u, NodeSet avoid, std::span<const Arc> covered) const {
  return query(n_, level_, forward_, u, avoid, covered);
}

// Co-bisets of tight bisets of G0 are exactly the tight bisets of reverse(G0).
std::optional<Biset> ConnectivityFamily::co_min_core(int u, NodeSet avoid, std::span<const Arc> covered) const {
  return query(n_, level_, backward_, u, avoid, covered);
}

// ---------------------------------------------------------------------------
// Adaptors

FamilyClaims CoFamilyOracle::claims() const {
  const FamilyClaims base = base_->claims();
  FamilyClaims c;
  c.crossing = base.crossing;
  c.regular = base.co_regular;
  c.co_regular = base.regular;
  c.gamma = base.gamma;
  c.uniform_boundary = base.uniform_boundary;
  return c;
}

ResidualOracle::ResidualOracle(OraclePtr base, std::vector<Arc> fixed)
    : base_(std::move(base)), fixed_(std::move(fixed)), fixed_reversed_(reversed(fixed_)) {}

std::optional<Biset> ResidualOracle::min_core(int u, NodeSet avoid, std::span<const Arc> covered) const {
  std::vector<Arc> all = fixed_;
  all.insert(all.end(), covered.begin(), covered.end());
  return base_->min_core(u, avoid, all);
}

std::optional<Biset> ResidualOracle::co_min_core(int u, NodeSet avoid, std::span<const Arc> covered) const {
  std::vector<Arc> all = fixed_reversed_;
  all.insert(all.end(), covered.begin(), covered.end());
  return base_->co_min_core(u, avoid, all);
}

FamilyClaims SmallInnerOracle::claims() const {
  FamilyClaims c;
  c.gamma = base_->claims().gamma;
  c.semi_q = q_;
  return c;
}

std::optional<Biset> SmallInnerOracle::min_core(int u, NodeSet avoid, std::span<const Arc> covered) const {
  auto core = base_->min_core(u, avoid, covered);
  if (core && core->inner().size() <= q_) return core;
  return std::nullopt;
}

std::optional<Biset> SmallInnerOracle::co_min_core(int, NodeSet, std::span<const Arc>) const {
  throw UsageError("co-family queries are not available on a size-restricted family");
}

FamilyClaims ExcludeFromOuterOracle::claims() const {
  const FamilyClaims base = base_->claims();
  FamilyClaims c;
  c.intersecting = base.crossing;
  c.crossing = base.crossing;
  c.gamma = base.gamma;
  return c;
}

std::optional<Biset> ExcludeFromOuterOracle::min_core(int u, NodeSet avoid, std::span<const Arc> covered) const {
  if (u == s_) return std::nullopt;
  avoid.insert(s_);
  return base_->min_core(u, avoid, covered);
}

std::optional<Biset> ExcludeFromOuterOracle::co_min_core(int, NodeSet, std::span<const Arc>) const {
  throw UsageError("co-family queries are not available on an outer-exclusion family");
}

CoBranchOracle::CoBranchOracle(OraclePtr branch, int anchor) : branch_(std::move(branch)), anchor_(anchor) {}

FamilyClaims CoBranchOracle::claims() const {
  FamilyClaims c;
  c.intersecting = true;
  c.gamma = branch_->claims().gamma;
  return c;
}

// Every member of the branch contains the anchor, so every member of R(C)
// leaves it outside its outer part.
CoreSet CoBranchOracle::cores(std::span<const Arc> covered) const {
  std::vector<Biset> found;
  const NodeSet anchor = NodeSet::single(anchor_);
  for (int v = 0; v < ground_size(); ++v) {
    if (v == anchor_) continue;
    if (auto c = branch_->co_min_core(v, anchor, covered)) found.push_back(*c);
  }
  return minimal_elements(std::move(found));
}

OraclePtr core_branch(const OraclePtr& family, const Biset& core, std::span<const Arc> covered) {
  const CoreSet current = family->cores(covered);
  if (std::find(current.begin(), current.end(), core) == current.end()) {
    throw UsageError(core.to_string() + " is not a core of the residual family");
  }
  std::vector<Arc> fixed(covered.begin(), covered.end());
  for (const Biset& other : current) {
    if (other == core) continue;
    const NodeSet exterior = other.exterior();
    other.inner().for_each([&](int x) { exterior.for_each([&](int y) { fixed.push_back({x, y}); }); });
  }
  return std::make_shared<ResidualOracle>(family, std::move(fixed));
}

CoreSet branch_co_cores(const OraclePtr& family, const Biset& core, std::span<const Arc> covered) {
  const CoBranchOracle co(core_branch(family, core, covered), core.inner().min());
  return co.cores({});
}

OraclePtr restrict_small(const OraclePtr& family, int q) { return std::make_shared<SmallInnerOracle>(family, q); }

ExplicitFamily restrict_small(const ExplicitFamily& family, int q) {
  std::vector<Biset> kept;
  for (const Biset& b : family.members()) {
    if (b.inner().size() <= q) kept.push_back(b);
  }
  return ExplicitFamily(family.ground_size(), std::move(kept));
}

// ---------------------------------------------------------------------------
// Verification helpers

StructureReport explicit_properties(const ExplicitFamily& family, std::optional<int> k) {
  StructureReport r;
  const int n = family.ground_size();
  const NodeSet all = NodeSet::full(n);
  const auto& members = family.members();
  if (k) {
    r.is_k_regular = true;
    r.co_k_regular = true;
  }
  std::optional<int> boundary_size;
  for (const Biset& b : members) {
    r.gamma = std::max(r.gamma, b.boundary().size());
    if (boundary_size && *boundary_size != b.boundary().size()) r.uniform_boundary = false;
    boundary_size = b.boundary().size();
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Biset& x = members[i];
      const Biset& y = members[j];
      const bool inner_meet = x.inner().intersects(y.inner());
      const bool outer_gap = (x.outer() | y.outer()) != all;
      if (!inner_meet && !(k && outer_gap)) continue;
      const Biset lo = meet(x, y);
      const Biset hi = join(x, y);
      const bool has_lo = family.contains(lo);
      const bool both = has_lo && family.contains(hi);
      if (inner_meet && outer_gap && !both && r.is_crossing) {
        r.is_crossing = false;
        r.crossing_witness = {x, y};
      }
      if (inner_meet && !both && r.is_intersecting) {
        r.is_intersecting = false;
        r.intersecting_witness = {x, y};
      }
      if (inner_meet && !has_lo) r.is_intersection_closed = false;
      if (k) {
        if (inner_meet && (all - (x.inner() | y.inner())).size() >= *k + 1 && !both && *r.is_k_regular) {
          r.is_k_regular = false;
          r.regular_witness = {x, y};
        }
        // Co-bisets intersect iff the outer parts miss a common node; the
        // co-family's "outside the inner union" is the outer intersection.
        if (outer_gap && (x.outer() & y.outer()).size() >= *k + 1 && !both && *r.co_k_regular) {
          r.co_k_regular = false;
          if (!r.regular_witness) r.regular_witness = {x, y};
        }
      }
    }
  }
  return r;
}

ExplicitFamily tight_biset_family(const Digraph& base, int level) {
  const int n = base.n();
  const auto arcs = base.arcs();
  const CoverIndex index(n, arcs);
  const std::uint64_t full = NodeSet::full(n).bits();
  std::vector<Biset> members;
  for (std::uint64_t inner = 1; inner <= full; ++inner) {
    const std::uint64_t rest = full & ~inner;
    // Enumerate boundary subsets of the complement.
    for (std::uint64_t b = rest;; b = (b - 1) & rest) {
      if (std::popcount(b) == level && (rest & ~b) != 0) {
        const Biset candidate(n, NodeSet(inner), NodeSet(inner | b));
        if (!index.covers(candidate)) members.push_back(candidate);
      }
      if (b == 0) break;
    }
  }
  std::sort(members.begin(), members.end(), presentation_less);
  return ExplicitFamily(n, std::move(members));
}

}  // namespace bisetcover
