#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lbw/error.hpp"

namespace lbw {

using NodeId = uint32_t;
using Edge = std::pair<NodeId, NodeId>;  // stored with first < second

// Simple undirected graph on dense node indices 0..n-1. No self-loops, no
// duplicate edges. Labels are advisory metadata and do not affect identity.
class Graph {
 public:
  Graph() = default;
  explicit Graph(NodeId node_count) : n_(node_count), adj_(node_count) {}
  Graph(NodeId node_count, const std::vector<Edge>& edges);

  NodeId node_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }

  void add_edge(NodeId u, NodeId v);
  bool has_edge(NodeId u, NodeId v) const;
  // Index of edge (u,v) in edges(), or -1.
  int edge_index(NodeId u, NodeId v) const;
  int degree(NodeId v) const { return static_cast<int>(adj_[v].size()); }

  std::map<NodeId, std::string> labels;

 private:
  NodeId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adj_;
};

// Edge subset of a host graph, indexed parallel to host.edges().
using EdgeMask = std::vector<uint8_t>;

Graph subgraph_from_mask(const Graph& host, const EdgeMask& mask);

// Server-model graph input: the edge set is split into Carol's and David's
// shares over a common node universe.
struct PartitionedGraph {
  NodeId node_count = 0;
  std::vector<Edge> carol_edges;
  std::vector<Edge> david_edges;
  bool matching_required = false;
  std::map<std::string, std::string> meta;

  Graph union_graph() const;
  // Throws on overlap/self-loop/range problems; checks the per-share perfect
  // matching property when matching_required is set.
  void validate() const;
};

struct Component {
  enum class Kind { Path, Cycle, Isolated };
  Kind kind;
  std::vector<NodeId> nodes;  // paths list endpoints first/last
};

struct CycleDecomposition {
  std::vector<Component> components;
  int cycle_count() const;
  int path_count() const;
  int isolated_count() const;
};

// Unique partition of a max-degree-<=2 graph into paths, cycles and isolated
// nodes. Throws DegreeTooHigh otherwise.
CycleDecomposition cycle_decomposition(const Graph& g);

// True iff g is exactly one spanning cycle (every degree 2, one component).
bool is_hamiltonian_cycle(const Graph& g);

// Exhaustive oracle: does g contain a spanning Hamiltonian cycle?
// node_count <= 20, else TooLarge.
bool backtracking_hamiltonicity(const Graph& g);

// Centralized property oracles (Appendix-style verification predicates).
bool is_connected(const Graph& g);
bool is_spanning_tree(const Graph& g);
bool contains_cycle(const Graph& g);
bool contains_cycle_through_edge(const Graph& g, NodeId u, NodeId v);
bool is_bipartite(const Graph& g);
bool st_connected(const Graph& g, NodeId s, NodeId t);
bool is_cut(const Graph& host, const EdgeMask& m);
bool is_st_cut(const Graph& host, const EdgeMask& m, NodeId s, NodeId t);

// Minimum number of edges (between arbitrary node pairs) that must be added so
// that some subgraph of the augmented graph containing all added edges is a
// spanning Hamiltonian cycle; 0 iff g already contains one. Fast path for
// spanning 2-regular graphs (cycle-component count); general case by Held-Karp
// search for node_count <= 12 (TooLarge above that).
int ham_farness(const Graph& g);

// Distributed-notion variant: added edges must come from the host graph.
// Exhaustive, host node_count <= 12.
int ham_farness_within(const Graph& g, const Graph& host);

// (number of connected components) - 1.
int conn_farness(const Graph& g);

int count_components(const Graph& g);

// Exact BFS distances from src (-1 for unreachable).
std::vector<int> bfs_distances(const Graph& g, NodeId src);
std::vector<int> multi_source_bfs(const Graph& g, const std::vector<NodeId>& sources);

struct DiameterResult {
  int diameter = 0;   // exact when exact==true, else an upper bound
  int lower = 0;      // double-sweep lower bound
  bool exact = true;
};

// All-pairs BFS up to node_count <= 5000; double-sweep bounds above.
DiameterResult graph_diameter(const Graph& g);

}  // namespace lbw
