#include "lbw/reductions.hpp"

#include <algorithm>
#include <numeric>

namespace lbw {

double WeightedGraph::aspect_ratio() const {
  if (weights.empty()) return 1.0;
  auto [mn, mx] = std::minmax_element(weights.begin(), weights.end());
  return *mx / *mn;
}

void WeightedGraph::validate() const {
  require(weights.size() == graph.edges().size(), Err::ShapeMismatch,
          "one weight per edge required");
  for (double w : weights) require(w > 0, Err::BadW, "weights must be positive");
}

bool st_from_ham(const Graph& host, const EdgeMask& m) {
  Graph sub = subgraph_from_mask(host, m);
  for (NodeId v = 0; v < sub.node_count(); ++v)
    if (sub.degree(v) != 2) return false;
  if (sub.node_count() < 3) return false;
  // All degrees are two, so M is a disjoint union of cycles; removing one
  // edge leaves a spanning tree exactly when there was a single cycle.
  Edge smallest = *std::min_element(sub.edges().begin(), sub.edges().end());
  Graph cut(sub.node_count());
  for (const auto& e : sub.edges())
    if (e != smallest) cut.add_edge(e.first, e.second);
  return is_spanning_tree(cut);
}

MstWeighting mst_weighting(const Graph& host, const EdgeMask& m, double W) {
  require(W > 1.0, Err::BadW, "aspect ratio W must exceed 1");
  require(m.size() == host.edges().size(), Err::ShapeMismatch, "mask/host mismatch");
  MstWeighting out;
  out.weighted.graph = host;
  out.weighted.weights.reserve(m.size());
  size_t in_m = 0;
  for (uint8_t bit : m) {
    out.weighted.weights.push_back(bit ? 1.0 : W);
    in_m += bit != 0;
  }
  out.uniform = in_m == 0 || in_m == m.size();
  return out;
}

double exact_mst(const WeightedGraph& g) {
  g.validate();
  const Graph& h = g.graph;
  require(is_connected(h), Err::Disconnected, "MST of a disconnected graph");
  if (h.node_count() <= 1) return 0.0;

  std::vector<size_t> order(g.weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return g.weights[a] < g.weights[b]; });

  std::vector<NodeId> parent(h.node_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  double total = 0.0;
  size_t picked = 0;
  for (size_t idx : order) {
    NodeId a = find(h.edges()[idx].first), b = find(h.edges()[idx].second);
    if (a == b) continue;
    parent[a] = b;
    total += g.weights[idx];
    if (++picked + 1 == h.node_count()) break;
  }
  return total;
}

const char* mst_verdict_name(MstVerdict v) {
  return v == MstVerdict::Connected ? "connected" : "far";
}

MstVerdict mst_threshold_decide(double tree_weight, double alpha, int n) {
  require(alpha >= 1.0, Err::BadInput, "alpha must be at least 1");
  require(n >= 2, Err::BadInput, "need at least two nodes");
  return tree_weight <= alpha * (n - 1) ? MstVerdict::Connected : MstVerdict::Far;
}

double weight_lower_bound(int n, int delta, double W) {
  require(0 <= delta && delta <= n - 1, Err::BadInput, "need 0 <= delta <= n-1");
  return (n - 1 - delta) + delta * W;
}

SoundnessReport end_to_end_soundness(const Graph& host, const EdgeMask& m, double W,
                                     double alpha,
                                     const std::vector<double>& factors) {
  require(alpha >= 1.0, Err::BadInput, "alpha must be at least 1");
  for (double f : factors)
    require(1.0 <= f && f <= alpha, Err::BadInput, "factors must lie in [1, alpha]");

  SoundnessReport rep;
  rep.n = static_cast<int>(host.node_count());
  rep.delta = conn_farness(subgraph_from_mask(host, m));
  rep.factors = factors;

  auto weighting = mst_weighting(host, m, W);
  rep.exact_weight = exact_mst(weighting.weighted);
  rep.bound = weight_lower_bound(rep.n, rep.delta, W);
  rep.separation = rep.delta * W > alpha * (rep.n - 1);

  rep.one_sided_ok = true;
  for (double f : factors) {
    MstVerdict v = mst_threshold_decide(rep.exact_weight * f, alpha, rep.n);
    rep.verdicts.push_back(v);
    if (rep.delta == 0 && v != MstVerdict::Connected) rep.one_sided_ok = false;
    if (rep.delta > 0 && rep.separation && v != MstVerdict::Far) rep.one_sided_ok = false;
  }
  return rep;
}

}  // namespace lbw
