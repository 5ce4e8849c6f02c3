#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "bisetcover/node_set.hpp"
#include "bisetcover/rational.hpp"

namespace bisetcover {

// Node count of the ground set V = {0, ..., n-1}.
struct GroundSet {
  int n = 0;

  explicit GroundSet(int count);
  NodeSet all() const { return NodeSet::full(n); }
};

// An ordered pair (inner, outer) with inner a subset of outer; the boundary is
// outer minus inner.
class Biset {
 public:
  Biset(int n, NodeSet inner, NodeSet outer);
  // A set viewed as a biset with empty boundary.
  static Biset of_set(int n, NodeSet set) { return Biset(n, set, set); }

  int n() const { return n_; }
  NodeSet inner() const { return inner_; }
  NodeSet outer() const { return outer_; }
  NodeSet boundary() const { return outer_ - inner_; }
  // Nodes outside the outer part.
  NodeSet exterior() const { return outer_.complement(n_); }
  bool is_proper() const { return !inner_.empty() && outer_ != NodeSet::full(n_); }

  friend bool operator==(const Biset&, const Biset&) = default;
  std::string to_string() const;

 private:
  int n_;
  NodeSet inner_;
  NodeSet outer_;
};

// Total order for containers; not the containment order.
inline std::ostream& operator<<(std::ostream& os, const Biset& b) { return os << b.to_string(); }

struct BisetLess {
  bool operator()(const Biset& a, const Biset& b) const {
    if (a.n() != b.n()) return a.n() < b.n();
    if (a.inner() != b.inner()) return a.inner().bits() < b.inner().bits();
    return a.outer().bits() < b.outer().bits();
  }
};

// Deterministic presentation order: lexicographic on inner, then outer.
bool presentation_less(const Biset& a, const Biset& b);

struct BisetHash {
  std::size_t operator()(const Biset& b) const noexcept {
    return std::hash<std::uint64_t>{}(b.inner().bits() * 0x9E3779B97F4A7C15ULL ^ b.outer().bits());
  }
};

// A directed pair of nodes; the cost-free part of an edge.
struct Arc {
  int tail = 0;
  int head = 0;

  Arc reversed() const { return {head, tail}; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Edge {
  int tail = 0;
  int head = 0;
  Rational cost;

  Arc arc() const { return {tail, head}; }
};

bool intersects(const Biset& x, const Biset& y);
bool crosses(const Biset& x, const Biset& y);
Biset meet(const Biset& x, const Biset& y);
Biset join(const Biset& x, const Biset& y);
Biset co_biset(const Biset& x);
// Componentwise containment: x is contained in y.
bool contains(const Biset& y, const Biset& x);
bool properly_contains(const Biset& y, const Biset& x);

bool edge_covers(Arc e, const Biset& x);
inline bool edge_covers(const Edge& e, const Biset& x) { return edge_covers(e.arc(), x); }

// Heads grouped by tail, for repeated coverage tests against one arc list.
class CoverIndex {
 public:
  CoverIndex(int n, std::span<const Arc> arcs);
  bool covers(const Biset& x) const;
  bool has_arc(int tail, int head) const { return heads_[tail].contains(head); }
  NodeSet heads_of(int tail) const { return heads_[tail]; }

 private:
  std::vector<NodeSet> heads_;
};

// Inclusion-minimal elements, duplicates removed, in presentation order.
std::vector<Biset> minimal_elements(std::vector<Biset> bisets);

}  // namespace bisetcover
