#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "lbw/gadgets.hpp"
#include "lbw/graph.hpp"
#include "lbw/network.hpp"
#include "lbw/rng.hpp"

namespace lbw::test {

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph star_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

// The standard Petersen graph: outer 5-cycle, inner pentagram, spokes.
// Not Hamiltonian (classical fact, reproduced here by exhaustive search).
inline Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
  for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i);
  return g;
}

inline Graph erdos_renyi(int n, double p, Stream& s) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (s.unit() < p) g.add_edge(i, j);
  return g;
}

// Random graph with every degree <= 2 (union of two random partial matchings).
inline Graph random_degree2(int n, Stream& s) {
  Graph g(n);
  for (int round = 0; round < 2; ++round) {
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(ids[i], ids[s.below(i + 1)]);
    for (int i = 0; i + 1 < n; i += 2) {
      int a = ids[i], b = ids[i + 1];
      if (s.unit() < 0.7 && !g.has_edge(a, b) && g.degree(a) < 2 && g.degree(b) < 2)
        g.add_edge(a, b);
    }
  }
  return g;
}

inline BitstringPair random_pair(int n, Stream& s) {
  BitstringPair p;
  for (int i = 0; i < n; ++i) {
    p.x.push_back(static_cast<uint8_t>(s.bit()));
    p.y.push_back(static_cast<uint8_t>(s.bit()));
  }
  return p;
}

// Random pair with exactly the requested Hamming distance.
inline BitstringPair random_pair_with_distance(int n, int delta, Stream& s) {
  BitstringPair p;
  p.x.resize(n);
  p.y.resize(n);
  for (int i = 0; i < n; ++i) p.x[i] = p.y[i] = static_cast<uint8_t>(s.bit());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(idx[i], idx[s.below(i + 1)]);
  for (int i = 0; i < delta; ++i) p.y[idx[i]] ^= 1;
  return p;
}

// Min over the radius-r ball in g (restricted to `active` edges when given).
inline std::vector<uint64_t> ball_min_oracle(const Graph& g,
                                             const std::vector<uint64_t>& values,
                                             int radius, const EdgeMask* mask) {
  Graph h = mask ? subgraph_from_mask(g, *mask) : g;
  std::vector<uint64_t> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto d = bfs_distances(h, v);
    uint64_t best = values[v];
    for (NodeId w = 0; w < g.node_count(); ++w)
      if (d[w] >= 0 && d[w] <= radius) best = std::min(best, values[w]);
    out[v] = best;
  }
  return out;
}

inline Matching chain_matching_a(int universe) {
  Matching m;
  for (int i = 0; i + 1 < universe; i += 2) m.emplace_back(i, i + 1);
  return m;
}

inline Matching chain_matching_b(int universe) {
  // (1,2), (3,4), ..., (universe-1, 0): together with chain_matching_a this is
  // a single Hamiltonian cycle over U.
  Matching m;
  for (int i = 1; i + 1 < universe; i += 2) m.emplace_back(i, i + 1);
  m.emplace_back(0, universe - 1);
  return m;
}

inline Graph union_of_matchings(int universe, const Matching& a, const Matching& b) {
  Graph g(universe);
  for (const auto& [u, v] : a) g.add_edge(u, v);
  for (const auto& [u, v] : b)
    if (!g.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

}  // namespace lbw::test
