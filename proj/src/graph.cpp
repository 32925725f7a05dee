#include "lbw/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <numeric>

namespace lbw {

Graph::Graph(NodeId node_count, const std::vector<Edge>& edges)
    : n_(node_count), adj_(node_count) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(NodeId u, NodeId v) {
  require(u < n_ && v < n_, Err::IndexOutOfRange, "edge endpoint out of range");
  require(u != v, Err::BadInput, "self-loop");
  if (u > v) std::swap(u, v);
  require(!has_edge(u, v), Err::BadInput, "duplicate edge");
  edges_.emplace_back(u, v);
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= n_ || v >= n_) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  NodeId other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

int Graph::edge_index(NodeId u, NodeId v) const {
  if (u > v) std::swap(u, v);
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].first == u && edges_[i].second == v) return static_cast<int>(i);
  return -1;
}

Graph subgraph_from_mask(const Graph& host, const EdgeMask& mask) {
  require(mask.size() == host.edges().size(), Err::ShapeMismatch,
          "mask size does not match host edge count");
  Graph g(host.node_count());
  for (size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) g.add_edge(host.edges()[i].first, host.edges()[i].second);
  return g;
}

Graph PartitionedGraph::union_graph() const {
  Graph g(node_count);
  for (const auto& [u, v] : carol_edges) g.add_edge(u, v);
  for (const auto& [u, v] : david_edges) g.add_edge(u, v);
  return g;
}

void PartitionedGraph::validate() const {
  Graph g = union_graph();  // catches range errors, self-loops and duplicates
  if (!matching_required) return;
  std::vector<int> dc(node_count, 0), dd(node_count, 0);
  for (const auto& [u, v] : carol_edges) {
    dc[u]++;
    dc[v]++;
  }
  for (const auto& [u, v] : david_edges) {
    dd[u]++;
    dd[v]++;
  }
  for (NodeId v = 0; v < node_count; ++v)
    require(dc[v] == 1 && dd[v] == 1, Err::NotPerfectMatching,
            "share is not a perfect matching at node " + std::to_string(v));
}

int CycleDecomposition::cycle_count() const {
  int c = 0;
  for (const auto& comp : components) c += comp.kind == Component::Kind::Cycle;
  return c;
}
int CycleDecomposition::path_count() const {
  int c = 0;
  for (const auto& comp : components) c += comp.kind == Component::Kind::Path;
  return c;
}
int CycleDecomposition::isolated_count() const {
  int c = 0;
  for (const auto& comp : components) c += comp.kind == Component::Kind::Isolated;
  return c;
}

CycleDecomposition cycle_decomposition(const Graph& g) {
  const NodeId n = g.node_count();
  for (NodeId v = 0; v < n; ++v)
    require(g.degree(v) <= 2, Err::DegreeTooHigh,
            "node " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));

  CycleDecomposition out;
  std::vector<uint8_t> seen(n, 0);

  auto walk = [&](NodeId start) {
    std::vector<NodeId> seq{start};
    seen[start] = 1;
    NodeId prev = start, cur = start;
    while (true) {
      NodeId next = n;
      for (NodeId w : g.neighbors(cur))
        if (w != prev && !seen[w]) {
          next = std::min(next, w);
        }
      if (next == n) break;
      seq.push_back(next);
      seen[next] = 1;
      prev = cur;
      cur = next;
    }
    return seq;
  };

  // Isolated nodes and paths first (paths start at a degree-1 endpoint).
  for (NodeId v = 0; v < n; ++v) {
    if (seen[v]) continue;
    if (g.degree(v) == 0) {
      seen[v] = 1;
      out.components.push_back({Component::Kind::Isolated, {v}});
    } else if (g.degree(v) == 1) {
      out.components.push_back({Component::Kind::Path, walk(v)});
    }
  }
  // Remaining unseen nodes have degree 2 and lie on cycles.
  for (NodeId v = 0; v < n; ++v) {
    if (seen[v]) continue;
    out.components.push_back({Component::Kind::Cycle, walk(v)});
  }
  return out;
}

bool is_hamiltonian_cycle(const Graph& g) {
  const NodeId n = g.node_count();
  if (n < 3) return false;
  for (NodeId v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  auto dec = cycle_decomposition(g);
  return dec.components.size() == 1 && dec.components[0].kind == Component::Kind::Cycle;
}

namespace {

// Held-Karp reachability: dp[mask] = bitmask of endpoints v such that a simple
// path from node 0 ending at v covers exactly `mask`.
bool has_ham_cycle_dp(const Graph& g) {
  const int n = static_cast<int>(g.node_count());
  if (n < 3) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(static_cast<NodeId>(v)) < 2) return false;

  std::vector<uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (NodeId w : g.neighbors(static_cast<NodeId>(v))) nbr[v] |= uint32_t{1} << w;

  const uint32_t full = (n == 32) ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
  std::vector<uint32_t> dp(full + 1, 0);
  dp[1] = 1;  // path {0} ending at 0
  for (uint32_t mask = 1; mask <= full; ++mask) {
    uint32_t ends = dp[mask];
    if (!ends || !(mask & 1)) continue;
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      uint32_t ext = nbr[v] & ~mask;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        dp[mask | (uint32_t{1} << w)] |= uint32_t{1} << w;
      }
    }
  }
  return (dp[full] & nbr[0]) != 0;
}

// Max number of `preferred` edges over Hamiltonian cycles of `universe`.
// Returns -1 if universe has no Hamiltonian cycle. n <= 12.
int max_overlap_ham_cycle(int n, const std::vector<uint32_t>& universe_nbr,
                          const std::vector<uint32_t>& preferred_nbr) {
  if (n < 3) return -1;
  const uint32_t full = (uint32_t{1} << n) - 1;
  constexpr int8_t kNone = -1;
  std::vector<std::array<int8_t, 12>> dp(full + 1);
  for (auto& row : dp) row.fill(kNone);
  dp[1][0] = 0;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    if (!(mask & 1)) continue;
    for (int v = 0; v < n; ++v) {
      int8_t cur = dp[mask][v];
      if (cur == kNone || !(mask & (uint32_t{1} << v))) continue;
      uint32_t ext = universe_nbr[v] & ~mask;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        int8_t cand = static_cast<int8_t>(cur + ((preferred_nbr[v] >> w) & 1));
        auto& slot = dp[mask | (uint32_t{1} << w)][w];
        if (cand > slot) slot = cand;
      }
    }
  }
  int best = -1;
  for (int v = 1; v < n; ++v) {
    if (dp[full][v] == kNone) continue;
    if (!((universe_nbr[v] >> 0) & 1)) continue;
    int total = dp[full][v] + ((preferred_nbr[v] >> 0) & 1);
    best = std::max(best, total);
  }
  return best;
}

std::vector<uint32_t> adjacency_bits(const Graph& g) {
  std::vector<uint32_t> nbr(g.node_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    nbr[u] |= uint32_t{1} << v;
    nbr[v] |= uint32_t{1} << u;
  }
  return nbr;
}

int ham_farness_impl(const Graph& g, const Graph* host) {
  const int n = static_cast<int>(g.node_count());
  if (n == 0) return 0;
  require(n >= 3, Err::Unachievable, "no Hamiltonian augmentation exists below 3 nodes");

  if (host == nullptr) {
    bool two_regular = true;
    for (NodeId v = 0; v < g.node_count(); ++v)
      if (g.degree(v) != 2) {
        two_regular = false;
        break;
      }
    if (two_regular) {
      int c = cycle_decomposition(g).cycle_count();
      return c >= 2 ? c : 0;
    }
  }

  require(n <= 12, Err::TooLarge, "general farness search limited to 12 nodes");

  std::vector<uint32_t> universe(n, 0);
  if (host == nullptr) {
    const uint32_t full = (uint32_t{1} << n) - 1;
    for (int v = 0; v < n; ++v) universe[v] = full & ~(uint32_t{1} << v);
  } else {
    require(host->node_count() == g.node_count(), Err::ShapeMismatch,
            "host node count differs");
    universe = adjacency_bits(*host);
    auto gbits = adjacency_bits(g);
    for (int v = 0; v < n; ++v)
      require((gbits[v] & ~universe[v]) == 0, Err::BadInput, "g is not a subgraph of host");
  }
  int overlap = max_overlap_ham_cycle(n, universe, adjacency_bits(g));
  require(overlap >= 0, Err::Unachievable, "no Hamiltonian cycle exists in the host");
  return n - overlap;
}

}  // namespace

bool backtracking_hamiltonicity(const Graph& g) {
  require(g.node_count() <= 20, Err::TooLarge, "exhaustive oracle limited to 20 nodes");
  return has_ham_cycle_dp(g);
}

int ham_farness(const Graph& g) { return ham_farness_impl(g, nullptr); }

int ham_farness_within(const Graph& g, const Graph& host) {
  return ham_farness_impl(g, &host);
}

std::vector<int> bfs_distances(const Graph& g, NodeId src) {
  require(src < g.node_count(), Err::IndexOutOfRange, "bfs source out of range");
  return multi_source_bfs(g, {src});
}

std::vector<int> multi_source_bfs(const Graph& g, const std::vector<NodeId>& sources) {
  std::vector<int> dist(g.node_count(), -1);
  std::deque<NodeId> q;
  for (NodeId s : sources) {
    require(s < g.node_count(), Err::IndexOutOfRange, "bfs source out of range");
    if (dist[s] != 0) {
      dist[s] = 0;
      q.push_back(s);
    }
  }
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop_front();
    for (NodeId w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

int count_components(const Graph& g) {
  std::vector<uint8_t> seen(g.node_count(), 0);
  int comps = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (seen[v]) continue;
    ++comps;
    std::deque<NodeId> q{v};
    seen[v] = 1;
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop_front();
      for (NodeId w : g.neighbors(x))
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    }
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.node_count() <= 1 || count_components(g) == 1;
}

bool is_spanning_tree(const Graph& g) {
  if (g.node_count() == 0) return false;
  return g.edges().size() == g.node_count() - 1 && is_connected(g);
}

bool contains_cycle(const Graph& g) {
  // Union-find: an edge closing within a component closes a cycle.
  std::vector<NodeId> parent(g.node_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : g.edges()) {
    NodeId a = find(u), b = find(v);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

bool contains_cycle_through_edge(const Graph& g, NodeId u, NodeId v) {
  require(u < g.node_count() && v < g.node_count(), Err::IndexOutOfRange,
          "edge endpoint out of range");
  int idx = g.edge_index(u, v);
  if (idx < 0) return false;
  EdgeMask keep(g.edges().size(), 1);
  keep[idx] = 0;
  return st_connected(subgraph_from_mask(g, keep), u, v);
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.node_count(), -1);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (color[v] >= 0) continue;
    color[v] = 0;
    std::deque<NodeId> q{v};
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop_front();
      for (NodeId w : g.neighbors(x)) {
        if (color[w] < 0) {
          color[w] = 1 - color[x];
          q.push_back(w);
        } else if (color[w] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool st_connected(const Graph& g, NodeId s, NodeId t) {
  require(s < g.node_count() && t < g.node_count(), Err::IndexOutOfRange,
          "s/t out of range");
  return bfs_distances(g, s)[t] >= 0;
}

bool is_cut(const Graph& host, const EdgeMask& m) {
  require(m.size() == host.edges().size(), Err::ShapeMismatch, "mask/host mismatch");
  EdgeMask rest(m.size());
  for (size_t i = 0; i < m.size(); ++i) rest[i] = !m[i];
  return !is_connected(subgraph_from_mask(host, rest));
}

bool is_st_cut(const Graph& host, const EdgeMask& m, NodeId s, NodeId t) {
  require(m.size() == host.edges().size(), Err::ShapeMismatch, "mask/host mismatch");
  EdgeMask rest(m.size());
  for (size_t i = 0; i < m.size(); ++i) rest[i] = !m[i];
  return !st_connected(subgraph_from_mask(host, rest), s, t);
}

int conn_farness(const Graph& g) {
  if (g.node_count() == 0) return 0;
  return count_components(g) - 1;
}

DiameterResult graph_diameter(const Graph& g) {
  DiameterResult r;
  const NodeId n = g.node_count();
  if (n == 0) return r;
  if (!is_connected(g)) fail(Err::Disconnected, "diameter of a disconnected graph");

  auto ecc = [&](NodeId v, NodeId* far) {
    auto d = bfs_distances(g, v);
    int best = 0;
    NodeId arg = v;
    for (NodeId w = 0; w < n; ++w)
      if (d[w] > best) {
        best = d[w];
        arg = w;
      }
    if (far) *far = arg;
    return best;
  };

  if (n <= 5000) {
    int best = 0;
    for (NodeId v = 0; v < n; ++v) best = std::max(best, ecc(v, nullptr));
    r.diameter = r.lower = best;
    r.exact = true;
    return r;
  }
  // Double sweep: lower bound from two BFS passes, upper bound 2*ecc.
  NodeId a = 0, b = 0;
  ecc(0, &a);
  int lower = ecc(a, &b);
  r.lower = lower;
  r.diameter = 2 * ecc(b, nullptr);
  r.exact = false;
  return r;
}

const char* err_name(Err code) {
  switch (code) {
    case Err::DegreeTooHigh: return "DegreeTooHigh";
    case Err::TooLarge: return "TooLarge";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::EmptyInput: return "EmptyInput";
    case Err::BadL: return "BadL";
    case Err::OddUniverse: return "OddUniverse";
    case Err::NotPerfectMatching: return "NotPerfectMatching";
    case Err::RoundOutOfRange: return "RoundOutOfRange";
    case Err::MessageTooLong: return "MessageTooLong";
    case Err::SendCapExceeded: return "SendCapExceeded";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::BadNormalForm: return "BadNormalForm";
    case Err::OneSidedViolation: return "OneSidedViolation";
    case Err::ContractViolation: return "ContractViolation";
    case Err::PromiseClash: return "PromiseClash";
    case Err::PromiseViolated: return "PromiseViolated";
    case Err::BadW: return "BadW";
    case Err::Disconnected: return "Disconnected";
    case Err::DegenerateParams: return "DegenerateParams";
    case Err::AlphaNotBelowW: return "AlphaNotBelowW";
    case Err::Unachievable: return "Unachievable";
    case Err::Sizing: return "Sizing";
    case Err::BadInput: return "BadInput";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace lbw
