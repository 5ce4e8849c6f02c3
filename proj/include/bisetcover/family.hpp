#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "bisetcover/biset.hpp"
#include "bisetcover/digraph.hpp"

namespace bisetcover {

// Structure a family is declared to have. Algorithms trust these flags; the
// exact-oracle module is where they get checked.
struct FamilyClaims {
  bool crossing = false;
  bool intersecting = false;
  std::optional<int> regular;      // family k-regular for this k
  std::optional<int> co_regular;   // co-family k-regular for this k
  std::optional<int> gamma;        // max boundary size
  bool uniform_boundary = false;   // every boundary has size gamma
  std::optional<int> semi_q;       // q-semi-intersecting for this q
};

using CoreSet = std::vector<Biset>;

// Query access to a biset-family F of proper bisets over V = {0..n-1}.
//
// All queries take an arc list J and answer about the residual family F^J
// (members no arc of J covers). The co-family queries answer about the family
// of co-bisets, whose residual is taken against arcs in the co orientation.
class FamilyOracle {
 public:
  virtual ~FamilyOracle() = default;

  virtual int ground_size() const = 0;
  virtual FamilyClaims claims() const = 0;

  // The unique inclusion-minimal member S of F^J with u in its inner part and
  // `avoid` disjoint from its outer part, if any member qualifies.
  virtual std::optional<Biset> min_core(int u, NodeSet avoid, std::span<const Arc> covered) const = 0;
  // Same question asked of the co-family.
  virtual std::optional<Biset> co_min_core(int u, NodeSet avoid,
                                           std::span<const Arc> covered) const = 0;

  // Cores of F^J: minimal members among the pairwise min-cores.
  virtual CoreSet cores(std::span<const Arc> covered) const;

  std::optional<Biset> min_core(int u, int v, std::span<const Arc> covered) const;
  std::optional<Biset> co_min_core(int u, int v, std::span<const Arc> covered) const;
};

using OraclePtr = std::shared_ptr<const FamilyOracle>;

// A family given by its members.
class ExplicitFamily : public FamilyOracle {
 public:
  // Rejects improper members, duplicates and ground-set mismatches.
  ExplicitFamily(int n, std::vector<Biset> members);

  int ground_size() const override { return n_; }
  FamilyClaims claims() const override { return claims_; }
  std::optional<Biset> min_core(int u, NodeSet avoid, std::span<const Arc> covered) const override;
  std::optional<Biset> co_min_core(int u, NodeSet avoid, std::span<const Arc> covered) const override;
  using FamilyOracle::co_min_core;
  using FamilyOracle::min_core;

  const std::vector<Biset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Biset& b) const { return lookup_.count(b) != 0; }

  // Members not covered by any of the arcs.
  ExplicitFamily residual(std::span<const Arc> covered) const;
  ExplicitFamily co_family() const;

 private:
  static std::optional<Biset> scan(const std::vector<Biset>& pool, int n, int u, NodeSet avoid,
                                   std::span<const Arc> covered);

  int n_;
  std::vector<Biset> members_;
  std::vector<Biset> co_members_;
  std::unordered_set<Biset, BisetHash> lookup_;
  FamilyClaims claims_;
};

// Tight bisets of an l-connected digraph G0: proper S with |boundary| = l and
// no G0 edge from S to the exterior. Answered by max-flow, never enumerated.
class ConnectivityFamily : public FamilyOracle {
 public:
  ConnectivityFamily(const Digraph& base, int level);

  int ground_size() const override { return n_; }
  FamilyClaims claims() const override;
  std::optional<Biset> min_core(int u, NodeSet avoid, std::span<const Arc> covered) const override;
  std::optional<Biset> co_min_core(int u, NodeSet avoid, std::span<const Arc> covered) const override;
  using FamilyOracle::co_min_core;
  using FamilyOracle::min_core;

  int level() const { return level_; }

 private:
  static std::optional<Biset> query(int n, int level, const std::vector<Arc>& base, int u,
                                    NodeSet avoid, std::span<const Arc> covered);

  int n_;
  int level_;
  std::vector<Arc> forward_;
  std::vector<Arc> backward_;
};

// The co-family of a family.
class CoFamilyOracle : public FamilyOracle {
 public:
  explicit CoFamilyOracle(OraclePtr base) : base_(std::move(base)) {}

  int ground_size() const override { return base_->ground_size(); }
  FamilyClaims claims() const override;
  std::optional<Biset> min_core(int u, NodeSet avoid, std::span<const Arc> covered) const override {
    return base_->co_min_core(u, avoid, covered);
  }
  std::optional<Biset> co_min_core(int u, NodeSet avoid, std::span<const Arc> covered) const override {
    return base_->min_core(u, avoid, covered);
  }

 private:
  OraclePtr base_;
};

// F^L for a fixed arc list L.
class ResidualOracle : public FamilyOracle {
 public:
  ResidualOracle(OraclePtr base, std::vector<Arc> fixed);

  int ground_size() const override { return base_->ground_size(); }
  FamilyClaims claims() const override { return base_->claims(); }
  std::optional<Biset> min_core(int u, NodeSet avoid, std::span<const Arc> covered) const override;
  std::optional<Biset> co_min_core(int u, NodeSet avoid, std::span<const Arc> covered) const override;

 private:
  OraclePtr base_;
  std::vector<Arc> fixed_;
  std::vector<Arc> fixed_reversed_;
};

// {S in F : |S| <= q}. Exact when F is crossing: the minimum of F^J(u, .) is
// below every member, so it is small iff some member is.
class SmallInnerOracle : public FamilyOracle {
 public:
  SmallInnerOracle(OraclePtr base, int q) : base_(std::move(base)), q_(q) {}

  int ground_size() const override { return base_->ground_size(); }
  FamilyClaims claims() const override;
  std::optional<Biset> min_core(int u, NodeSet avoid, std::span<const Arc> covered) const override;
  // Unsupported: the co-family of a size-restricted family has no min-core
  // reduction to the base oracle.
  std::optional<Biset> co_min_core(int u, NodeSet avoid, std::span<const Arc> covered) const override;

 private:
  OraclePtr base_;
  int q_;
};

// {S in F : s outside S+}. Intersecting whenever F is crossing.
class ExcludeFromOuterOracle : public FamilyOracle {
 public:
  ExcludeFromOuterOracle(OraclePtr base, int s) : base_(std::move(base)), s_(s) {}

  int ground_size() const override { return base_->ground_size(); }
  FamilyClaims claims() const override;
  std::optional<Biset> min_core(int u, NodeSet avoid, std::span<const Arc> covered) const override;
  // Unsupported (would need "s in R" constraints on the co side).
  std::optional<Biset> co_min_core(int u, NodeSet avoid, std::span<const Arc> covered) const override;

 private:
  OraclePtr base_;
  int s_;
};

// R(C): the co-family of the branch F^J0(C). Cores are found from one anchor
// node of C with n - 1 queries.
class CoBranchOracle : public FamilyOracle {
 public:
  CoBranchOracle(OraclePtr branch, int anchor);

  int ground_size() const override { return branch_->ground_size(); }
  FamilyClaims claims() const override;
  std::optional<Biset> min_core(int u, NodeSet avoid, std::span<const Arc> covered) const override {
    return branch_->co_min_core(u, avoid, covered);
  }
  std::optional<Biset> co_min_core(int u, NodeSet avoid, std::span<const Arc> covered) const override {
    return branch_->min_core(u, avoid, covered);
  }
  CoreSet cores(std::span<const Arc> covered) const override;

 private:
  OraclePtr branch_;
  int anchor_;
};

CoreSet cores(const FamilyOracle& family, std::span<const Arc> covered);

// Oracle for F^J(C): members of F^J containing C and no other F^J-core,
// realized as F^(J + K) where K holds every arc leaving another core.
OraclePtr core_branch(const OraclePtr& family, const Biset& core, std::span<const Arc> covered);

// Cores of R(C), the co-family of F^J(C).
CoreSet branch_co_cores(const OraclePtr& family, const Biset& core, std::span<const Arc> covered);

OraclePtr restrict_small(const OraclePtr& family, int q);
ExplicitFamily restrict_small(const ExplicitFamily& family, int q);

struct StructureReport {
  bool is_crossing = true;
  bool is_intersecting = true;
  bool is_intersection_closed = true;
  std::optional<bool> is_k_regular;
  std::optional<bool> co_k_regular;
  int gamma = 0;
  bool uniform_boundary = true;
  // First offending pair per failed property, for diagnostics.
  std::optional<std::pair<Biset, Biset>> crossing_witness;
  std::optional<std::pair<Biset, Biset>> intersecting_witness;
  std::optional<std::pair<Biset, Biset>> regular_witness;
};

// Exhaustive pairwise closure checks; the k-regular checks run when k is given.
StructureReport explicit_properties(const ExplicitFamily& family, std::optional<int> k = std::nullopt);

// All tight bisets of an l-connected digraph, enumerated (3^n candidates).
ExplicitFamily tight_biset_family(const Digraph& base, int level);

}  // namespace bisetcover
