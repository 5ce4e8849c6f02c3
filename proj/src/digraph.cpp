#include "bisetcover/digraph.hpp"

#include <algorithm>
#include <queue>

#include "bisetcover/errors.hpp"

namespace bisetcover {

Digraph::Digraph(int n) : n_(GroundSet(n).n) {}

Digraph::Digraph(int n, std::vector<Edge> edges) : n_(GroundSet(n).n), edges_(std::move(edges)) {
  for (const Edge& e : edges_) check(e);
}

void Digraph::check(const Edge& e) const {
  if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_) {
    throw UsageError("edge endpoint out of range");
  }
  if (e.tail == e.head) throw UsageError("self-loop at node " + std::to_string(e.tail));
  if (e.cost < 0) throw UsageError("negative edge cost");
}

std::size_t Digraph::add_edge(int tail, int head, Rational cost) {
  Edge e{tail, head, std::move(cost)};
  check(e);
  edges_.push_back(std::move(e));
  return edges_.size() - 1;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.arc());
  return out;
}

std::vector<Arc> Digraph::arcs(const EdgeSet& subset) const {
  std::vector<Arc> out;
  out.reserve(subset.size());
  for (std::size_t i : subset) out.push_back(edge(i).arc());
  return out;
}

Rational Digraph::cost(const EdgeSet& subset) const {
  Rational sum = 0;
  for (std::size_t i : subset) sum += edge(i).cost;
  return sum;
}

Digraph Digraph::subgraph(const EdgeSet& subset) const {
  std::vector<Edge> kept;
  for (std::size_t i : subset) kept.push_back(edge(i));
  return Digraph(n_, std::move(kept));
}

EdgeSet normalized(EdgeSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet all_edges(const Digraph& g) {
  EdgeSet out(g.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

EdgeSet delta(const Digraph& g, const EdgeSet& subset, const Biset& x) {
  EdgeSet out;
  for (std::size_t i : subset) {
    if (edge_covers(g.edge(i), x)) out.push_back(i);
  }
  return out;
}

Digraph reverse(const Digraph& g) {
  std::vector<Edge> flipped;
  flipped.reserve(g.size());
  for (const Edge& e : g.edges()) flipped.push_back({e.head, e.tail, e.cost});
  return Digraph(g.n(), std::move(flipped));
}

std::vector<Arc> reversed(std::span<const Arc> arcs) {
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (const Arc& a : arcs) out.push_back(a.reversed());
  return out;
}

namespace {

// Unit-capacity node-split network. Node w has copies in(w) = 2w and
// out(w) = 2w + 1; the super sink is 2n.
class SplitNetwork {
 public:
  SplitNetwork(int n, std::span<const Arc> arcs, int source, NodeSet sinks)
      : n_(n), adjacency_(static_cast<std::size_t>(2 * n + 1)) {
    const int big = n + 1;
    for (int w = 0; w < n; ++w) {
      if (sinks.contains(w)) {
        add(in(w), sink(), big);
      } else {
        add(in(w), out(w), w == source ? big : 1);
      }
    }
    for (const Arc& a : arcs) {
      if (sinks.contains(a.tail)) continue;
      add(out(a.tail), in(a.head), big);
    }
  }

  int max_flow(int source) {
    int flow = 0;
    std::vector<int> parent_arc;
    while (augment(in(source), parent_arc)) ++flow;
    return flow;
  }

  std::vector<bool> reachable(int source) const {
    std::vector<bool> seen(adjacency_.size(), false);
    std::queue<int> frontier;
    seen[in(source)] = true;
    frontier.push(in(source));
    while (!frontier.empty()) {
      const int x = frontier.front();
      frontier.pop();
      for (int id : adjacency_[x]) {
        const Link& l = links_[id];
        if (l.cap > 0 && !seen[l.to]) {
          seen[l.to] = true;
          frontier.push(l.to);
        }
      }
    }
    return seen;
  }

  static int in(int w) { return 2 * w; }
  static int out(int w) { return 2 * w + 1; }
  int sink() const { return 2 * n_; }

 private:
  struct Link {
    int to;
    int cap;
  };

  void add(int from, int to, int cap) {
    adjacency_[from].push_back(static_cast<int>(links_.size()));
    links_.push_back({to, cap});
    adjacency_[to].push_back(static_cast<int>(links_.size()));
    links_.push_back({from, 0});
  }

  bool augment(int start, std::vector<int>& parent_arc) {
    parent_arc.assign(adjacency_.size(), -1);
    std::vector<bool> seen(adjacency_.size(), false);
    std::queue<int> frontier;
    seen[start] = true;
    frontier.push(start);
    while (!frontier.empty() && !seen[sink()]) {
      const int x = frontier.front();
      frontier.pop();
      for (int id : adjacency_[x]) {
        const Link& l = links_[id];
        if (l.cap > 0 && !seen[l.to]) {
          seen[l.to] = true;
          parent_arc[l.to] = id;
          frontier.push(l.to);
        }
      }
    }
    if (!seen[sink()]) return false;
    for (int x = sink(); x != start;) {
      const int id = parent_arc[x];
      links_[id].cap -= 1;
      links_[id ^ 1].cap += 1;
      x = links_[id ^ 1].to;
    }
    return true;
  }

  int n_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<Link> links_;
};

}  // namespace

VertexCut min_vertex_cut(int n, std::span<const Arc> arcs, int source, NodeSet sinks) {
  if (source < 0 || source >= n) throw UsageError("source node out of range");
  if (sinks.empty()) throw UsageError("empty sink set");
  if (sinks.contains(source)) throw UsageError("source node is also a sink");
  if (!sinks.subset_of(NodeSet::full(n))) throw UsageError("sink node out of range");
  for (const Arc& a : arcs) {
    if (a.tail == source && sinks.contains(a.head)) return {};
  }
  SplitNetwork net(n, arcs, source, sinks);
  VertexCut cut;
  cut.value = net.max_flow(source);
  const std::vector<bool> seen = net.reachable(source);
  NodeSet inner;
  NodeSet outer;
  for (int w = 0; w < n; ++w) {
    if (seen[SplitNetwork::in(w)]) outer.insert(w);
    if (seen[SplitNetwork::out(w)]) inner.insert(w);
  }
  cut.witness = Biset(n, inner, outer);
  return cut;
}

VertexCut min_vertex_cut(const Digraph& g, int u, int v) {
  if (u == v) throw UsageError("min_vertex_cut needs distinct nodes");
  const auto arcs = g.arcs();
  return min_vertex_cut(g.n(), arcs, u, NodeSet::single(v));
}

bool is_k_connected(int n, std::span<const Arc> arcs, int k) {
  if (k < 0) throw UsageError("connectivity level must be nonnegative");
  if (k == 0) return true;
  if (n < k + 1) return false;
  const CoverIndex index(n, arcs);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || index.has_arc(u, v)) continue;
      if (min_vertex_cut(n, arcs, u, NodeSet::single(v)).value < k) return false;
    }
  }
  return true;
}

bool is_k_connected(const Digraph& g, int k) {
  const auto arcs = g.arcs();
  return is_k_connected(g.n(), arcs, k);
}

}  // namespace bisetcover
