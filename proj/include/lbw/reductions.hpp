#pragma once

#include <string>
#include <vector>

#include "lbw/graph.hpp"

namespace lbw {

struct WeightedGraph {
  Graph graph;
  std::vector<double> weights;  // parallel to graph.edges(), all > 0

  double aspect_ratio() const;  // max/min weight, 1 on edgeless graphs
  void validate() const;
};

// Spanning-tree route to the Hamiltonicity verdict: degree-2 test, then
// delete the lexicographically smallest M-edge and test is_spanning_tree.
// Agrees with is_hamiltonian_cycle by construction.
bool st_from_ham(const Graph& host, const EdgeMask& m);

struct MstWeighting {
  WeightedGraph weighted;
  bool uniform = false;  // all edges got the same weight (M empty or M = host)
};

// Weight 1 on M-edges, W on the rest. W > 1 (BadW otherwise).
MstWeighting mst_weighting(const Graph& host, const EdgeMask& m, double W);

// Exact minimum spanning tree weight (Kruskal). Disconnected hosts throw.
double exact_mst(const WeightedGraph& g);

enum class MstVerdict { Connected, Far };
const char* mst_verdict_name(MstVerdict v);

// Connected iff tree_weight <= alpha * (n - 1), boundary inclusive.
MstVerdict mst_threshold_decide(double tree_weight, double alpha, int n);

// MST weight floor for a delta-far-from-connected subgraph: (n-1-delta) + delta*W.
double weight_lower_bound(int n, int delta, double W);

struct SoundnessReport {
  int n = 0;
  int delta = 0;  // conn_farness of the subgraph
  double exact_weight = 0.0;
  double bound = 0.0;           // weight_lower_bound when delta > 0
  bool separation = false;      // delta*W > alpha*(n-1)
  std::vector<double> factors;  // injected approximation factors
  std::vector<MstVerdict> verdicts;
  bool one_sided_ok = false;
};

// Models the alpha-approximation adversarially: the reported tree weight is
// exact_mst times each injected factor in [1, alpha]. Far instances whose
// separation delta*W > alpha*(n-1) holds must be classified Far for every
// factor; connected instances must be classified Connected for factor <= alpha.
SoundnessReport end_to_end_soundness(const Graph& host, const EdgeMask& m, double W,
                                     double alpha,
                                     const std::vector<double>& factors);

}  // namespace lbw
