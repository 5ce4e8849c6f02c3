#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bisetcover/biset.hpp"
#include "bisetcover/digraph.hpp"
#include "bisetcover/family.hpp"

namespace bisetcover {

// Portable draws: identical across standard libraries for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return (engine_() >> 17) & 1U; }
  NodeSet subset(int n);
  std::vector<int> permutation(int n);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

ExplicitFamily gen_crossing_family(int n, std::uint64_t seed, int size_target);
// Every outer part avoids one random node, so unions stay proper.
ExplicitFamily gen_intersecting_family(int n, std::uint64_t seed, int size_target);
ExplicitFamily gen_semi_intersecting_family(int n, int q, std::uint64_t seed, int size_target);
// Sub-family of the tight bisets of a random k-connected digraph, closed under
// the crossing rule and the k-regular rule on both sides; every boundary has
// size k.
ExplicitFamily gen_regular_family(int n, int k, std::uint64_t seed, int size_target);

// Union of ell random Hamiltonian cycles with zero costs, regenerated until
// ell-connected. ell = 0 gives the edgeless graph.
Digraph gen_ell_connected_digraph(int n, int ell, std::uint64_t seed);
// Complete digraph with integer costs drawn from [lo, hi].
Digraph gen_candidate_edges(int n, std::uint64_t seed, int lo = 1, int hi = 10);
Digraph complete_digraph(int n, const Rational& cost = 1);

struct StInstance {
  int n = 0;
  NodeSet s;
  NodeSet t;
  std::vector<NodeSet> sets;
};

// A random (S,T)-crossing set family over a random partition of n nodes.
StInstance gen_st_crossing_family(int n, std::uint64_t seed, int size_target);

}  // namespace bisetcover
