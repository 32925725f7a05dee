#pragma once

#include <string>
#include <vector>

#include "lbw/congest.hpp"
#include "lbw/network.hpp"

namespace lbw {

// A node-program family bound to a concrete network: the factory plus the
// per-node input blobs it expects. The same workload object drives both the
// direct simulator and the three-party simulation.
struct Workload {
  std::string name;
  ProgramFactory factory;
  std::vector<Bytes> node_inputs;
};

// Round 0: every node pushes its id (truncated to B bits) to all neighbors.
Workload make_echo(const Graph& net);

// Each node outputs whether its M-degree is exactly 2. One round, no traffic.
Workload make_degree_check();

// Min-id propagation along M edges. Ids wider than B are sent in fixed-width
// frames over ceil(width/B) consecutive rounds; after T rounds the output is
// the minimum over the radius-floor(T/frame_rounds) M-ball.
Workload make_flood_min_id(const Graph& net);

// Same machinery with per-node 64-bit values from the input blob and a choice
// of flooding along M or along the whole network.
Workload make_flood_min_value(const Graph& net, const std::vector<uint64_t>& values,
                              bool over_m);

// BFS distance/parent relaxation over N from a root.
Workload make_bfs_tree(const Graph& net, NodeId root);

// Phase 1 (rounds < phase1): min-id flood along M. Phase 2: leaders are
// compared along N edges and disagreement is OR-flooded. Output per node:
// (leader: u32, all_same: u8). Correct once phase1 covers the largest
// M-component and phase 2 covers the network diameter.
Workload make_component_count_probe(const Graph& net, int phase1);

// degree_check plus the component probe's connectivity vote: output is one
// byte, 1 iff every node saw M-degree 2 everywhere and a single M-leader.
// Not round-optimal; correct when phase1 >= frame_rounds * n and
// T - phase1 >= frame_rounds * diameter.
Workload make_ham_verify(const Graph& net, int phase1);

// Frame length in rounds for the id-flood family at bandwidth B.
int flood_frame_rounds(const Graph& net, int bandwidth_bits);

// Hamiltonicity verdict within the Theorem's round budget, for subnetworks in
// the embed_matchings format (M contains every path and highway edge, so the
// verdict is a function of the two end-clique matchings). The endpoints ship
// their matched partner to the top-highway endpoints, the two gatherers swap
// tables over the single top-highway edge, chase the union cycles, and flood
// the verdict. Every node outputs the verdict byte.
struct EndpointWorkload {
  Workload workload;
  int suggested_rounds = 0;  // rounds needed for every node to output
};
EndpointWorkload make_ham_verify_endpoint(const HardNetwork& net, int bandwidth_bits);

// Grid-style lookup used by the CLI and the acceptance suite.
Workload make_named_workload(const std::string& name, const HardNetwork& net,
                             int bandwidth_bits);

uint64_t output_to_u64(const Bytes& b);

}  // namespace lbw
