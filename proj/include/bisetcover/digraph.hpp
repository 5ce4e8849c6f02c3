#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "bisetcover/biset.hpp"

namespace bisetcover {

// Sorted, duplicate-free indices into a Digraph's edge list.
using EdgeSet = std::vector<std::size_t>;

// Directed multigraph on {0, ..., n-1} with nonnegative rational edge costs.
class Digraph {
 public:
  explicit Digraph(int n);
  Digraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::size_t add_edge(int tail, int head, Rational cost = 0);

  std::vector<Arc> arcs() const;
  std::vector<Arc> arcs(const EdgeSet& subset) const;
  Rational cost(const EdgeSet& subset) const;
  // The spanning subgraph formed by the given edges (indices renumbered).
  Digraph subgraph(const EdgeSet& subset) const;

 private:
  void check(const Edge& e) const;

  int n_;
  std::vector<Edge> edges_;
};

EdgeSet normalized(EdgeSet set);
EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet all_edges(const Digraph& g);

// Members of J that cover x.
EdgeSet delta(const Digraph& g, const EdgeSet& subset, const Biset& x);

// Every edge flipped; indices and costs preserved.
Digraph reverse(const Digraph& g);
std::vector<Arc> reversed(std::span<const Arc> arcs);

struct VertexCut {
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  // Maximum number of internally node-disjoint paths, or kInfinite when an arc
  // joins the source to a sink directly.
  int value = kInfinite;
  // The inner-minimal biset realizing the cut; absent when value is infinite.
  std::optional<Biset> witness;

  bool infinite() const { return value == kInfinite; }
};

// Node-disjoint u -> sinks paths in (n, arcs), sinks unsplit. The witness is
// the biset (S, S+) read off the residual reachability of the node-split
// network: S holds nodes whose out-copy is reachable, S+ those whose in-copy is.
VertexCut min_vertex_cut(int n, std::span<const Arc> arcs, int source, NodeSet sinks);
VertexCut min_vertex_cut(const Digraph& g, int u, int v);

// n >= k + 1 and no set of fewer than k nodes disconnects the rest.
bool is_k_connected(int n, std::span<const Arc> arcs, int k);
bool is_k_connected(const Digraph& g, int k);

}  // namespace bisetcover
