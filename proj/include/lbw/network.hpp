#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lbw/graph.hpp"

namespace lbw {

// Matching over the endpoint universe U = {0..Gamma+k-1}.
using Matching = std::vector<Edge>;

struct NetworkParams {
  int gamma = 0;      // path count
  int L = 0;          // nodes per path, must be 2^i + 1
  int bandwidth = 0;  // B, bits per edge per direction per round
  int k = 0;          // highway count = log2(L-1)
  int universe() const { return gamma + k; }
};

enum class EdgeCat : uint8_t {
  Path,
  Highway,
  Vertical,       // (h^1_j, v^i_j)
  InterHighway,   // (h^{i-1}_j, h^i_j)
  CliqueLeft,
  CliqueRight,
};
const char* edge_cat_name(EdgeCat c);

struct NodeRole {
  enum class Kind : uint8_t { Path, Highway };
  Kind kind = Kind::Path;
  int line = 0;      // path index 1..Gamma or highway index 1..k
  int position = 0;  // 1..L
};

// The hard family: Gamma paths of length L, k = log2(L-1) highways over
// positions {1 + m*2^i}, vertical connectors, and complete graphs over the
// Gamma+k leftmost and rightmost endpoints. Endpoint u_i of the universe is
// the pair (v^i_1, v^i_L), with highways identified as v^{Gamma+j} = h^j.
class HardNetwork {
 public:
  const NetworkParams& params() const { return params_; }
  const Graph& graph() const { return graph_; }
  const std::vector<NodeRole>& roles() const { return roles_; }
  const std::vector<EdgeCat>& edge_categories() const { return cats_; }

  NodeId path_node(int line, int position) const;     // line 1..Gamma
  NodeId highway_node(int line, int position) const;  // line 1..k, valid positions
  bool has_highway_node(int line, int position) const;

  // Universe endpoints: u in 0..Gamma+k-1.
  NodeId left_endpoint(int u) const;
  NodeId right_endpoint(int u) const;

  friend HardNetwork build_network(int gamma, int L, int bandwidth);

 private:
  NetworkParams params_;
  Graph graph_;
  std::vector<NodeRole> roles_;
  std::vector<EdgeCat> cats_;
  std::vector<std::vector<int>> highway_index_;  // [line-1][position-1] -> node or -1
};

// Errors: BadL when L != 2^i + 1 (message suggests normalize_L), OddUniverse
// when Gamma + k is odd (perfect matchings over U would not exist).
HardNetwork build_network(int gamma, int L, int bandwidth);

// Smallest 2^i + 1 >= max(request, 3).
int normalize_L(int L_request);

int highway_count_for(int L);  // log2(L-1), BadL if L is not 2^i+1

struct NetworkStats {
  int node_count = 0;
  int diameter = 0;
  bool diameter_exact = true;
};
NetworkStats network_stats(const HardNetwork& net);

// Marks all path and highway edges plus the clique edges selected by the two
// perfect matchings. Cycle count of the masked subnetwork equals the cycle
// count of (U, E_C u E_D).
EdgeMask embed_matchings(const HardNetwork& net, const Matching& carol,
                         const Matching& david);

void validate_perfect_matching(const Matching& m, int universe);

// Cycles of the union multigraph (U, E_C u E_D) by alternating partner walks;
// a pair shared by both matchings counts as a 2-cycle. This equals the cycle
// count of the embedded subnetwork M.
int matching_union_cycles(int universe, const Matching& carol, const Matching& david);

enum class Party : uint8_t { Carol, David, Server };
const char* party_name(Party p);

struct OwnershipPartition {
  int t = 0;
  std::vector<Party> owner;  // per node

  std::vector<NodeId> members(Party p) const;
};

// Position-window partition: Carol owns positions 1..t+1, David owns
// positions L-t..L, the server owns the rest. Valid for t <= L/2 - 2.
OwnershipPartition ownership_partition(const HardNetwork& net, int t);

// Largest admissible round index/count under the Theorem hypothesis
// t <= L/2 - 2 (integer arithmetic, L odd).
int max_admissible_round(int L);

// Uniform random perfect matching over {0..universe-1} (universe even).
Matching random_perfect_matching(int universe, uint64_t seed);

// Requested path counts with Gamma+k odd cannot carry perfect matchings; the
// driver-level fix is to bump Gamma by one (the module-level builder rejects).
int normalize_gamma(int gamma, int L);

}  // namespace lbw
