#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lbw/congest.hpp"
#include "lbw/network.hpp"
#include "lbw/workloads.hpp"

namespace lbw {

// Per-round charged-bit accounting. Only Carol's and David's sent bits are
// charged; the buckets follow the per-recipient maintenance breakdown, so
// to_carol counts charged bits moved into Carol's custody, and so on.
// Server sends are free (server_sent is informational; node-state transfers
// from the server are unmetered).
struct RoundCharge {
  int64_t to_carol = 0;
  int64_t to_david = 0;
  int64_t to_server = 0;
  int64_t carol_sent = 0;
  int64_t david_sent = 0;
  int64_t server_sent = 0;
  int64_t charged() const { return to_carol + to_david + to_server; }
};

struct CostLedger {
  int k = 0;
  int bandwidth = 0;
  std::vector<RoundCharge> rounds;

  int64_t total_charged() const;
  int64_t max_round_charge() const;
  int64_t round_budget() const { return 6ll * k * bandwidth; }     // 6kB
  int64_t player_budget() const { return 2ll * bandwidth * k; }    // 2Bk per side
  int64_t server_budget() const { return 2ll * k * bandwidth; }    // 2kB into server
  bool within_budgets() const;
};

int64_t cost_bound(int k, int bandwidth);  // 6kB

struct ThreePartyResult {
  std::vector<std::optional<Bytes>> outputs;
  CostLedger ledger;
};

// Replays the workload on the hard network through Carol, David and the free
// server. Each round every party steps the node programs it owns per the
// ownership schedule; the transfer engine then derives the required state and
// message moves from the partition delta and message custody, charging only
// player-sent bits. Outputs are bit-identical to the direct simulator.
// Preconditions: rounds <= L/2 - 2; both matchings perfect over U.
ThreePartyResult simulate_via_server_model(const HardNetwork& net,
                                           const Matching& carol,
                                           const Matching& david,
                                           const Workload& workload, int rounds,
                                           uint64_t seed);

struct Equivalence {
  bool equal = false;
  std::string detail;  // first difference, empty when equal
};

Equivalence check_equivalence(const std::vector<std::optional<Bytes>>& a,
                              const std::vector<std::optional<Bytes>>& b);

}  // namespace lbw
