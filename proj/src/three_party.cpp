#include "lbw/three_party.hpp"

#include <algorithm>

namespace lbw {

int64_t CostLedger::total_charged() const {
  int64_t s = 0;
  for (const auto& r : rounds) s += r.charged();
  return s;
}

int64_t CostLedger::max_round_charge() const {
  int64_t m = 0;
  for (const auto& r : rounds) m = std::max(m, r.charged());
  return m;
}

bool CostLedger::within_budgets() const {
  for (const auto& r : rounds) {
    if (r.to_carol > player_budget()) return false;
    if (r.to_david > player_budget()) return false;
    if (r.to_server > server_budget()) return false;
    if (r.charged() > round_budget()) return false;
  }
  return true;
}

int64_t cost_bound(int k, int bandwidth) { return 6ll * k * bandwidth; }

namespace {

struct Custody {
  std::optional<BitVec> msg;
  Party holder = Party::Server;
};

void charge(RoundCharge& rc, Party from, Party to, int bits) {
  switch (from) {
    case Party::Carol: rc.carol_sent += bits; break;
    case Party::David: rc.david_sent += bits; break;
    case Party::Server: rc.server_sent += bits; return;  // free
  }
  switch (to) {
    case Party::Carol: rc.to_carol += bits; break;
    case Party::David: rc.to_david += bits; break;
    case Party::Server: rc.to_server += bits; break;
  }
}

}  // namespace

ThreePartyResult simulate_via_server_model(const HardNetwork& net,
                                           const Matching& carol,
                                           const Matching& david,
                                           const Workload& workload, int rounds,
                                           uint64_t seed) {
  const auto& params = net.params();
  require(rounds >= 0, Err::RoundOutOfRange, "negative round count");
  require(rounds <= max_admissible_round(params.L), Err::RoundOutOfRange,
          "T = " + std::to_string(rounds) + " exceeds L/2 - 2 for L = " +
              std::to_string(params.L));

  EdgeMask mask = embed_matchings(net, carol, david);  // validates matchings
  const Graph& g = net.graph();
  const NodeId n = g.node_count();
  const int B = params.bandwidth;

  // Ownership schedule; partition(t) owns round t's step, partition(rounds)
  // owns the final compute-only pass.
  std::vector<OwnershipPartition> schedule;
  schedule.reserve(rounds + 1);
  for (int t = 0; t <= rounds; ++t) schedule.push_back(ownership_partition(net, t));

  const std::vector<Bytes>* inputs =
      workload.node_inputs.empty() ? nullptr : &workload.node_inputs;

  // Each party initializes the programs of the nodes it owns at t = 0. The
  // construction of node inputs is party-local by the schedule: non-static
  // M edges touch only position-1/position-L nodes, owned by the matching's
  // holder at t = 0.
  std::vector<std::unique_ptr<NodeProgram>> progs(n);
  std::vector<Party> prog_holder(n);
  std::vector<std::vector<NodeId>> nbrs(n);
  for (Party p : {Party::Carol, Party::David, Party::Server}) {
    for (NodeId v = 0; v < n; ++v) {
      if (schedule[0].owner[v] != p) continue;
      auto ctx = make_node_context(g, &mask, v, B, inputs);
      nbrs[v] = ctx.neighbors;
      progs[v] = workload.factory(ctx);
      prog_holder[v] = p;
    }
  }
  auto slot_of = [&](NodeId u, NodeId v) {
    const auto& a = nbrs[u];
    return static_cast<int>(std::lower_bound(a.begin(), a.end(), v) - a.begin());
  };

  ThreePartyResult result;
  result.outputs.assign(n, std::nullopt);
  result.ledger.k = params.k;
  result.ledger.bandwidth = B;

  std::vector<std::vector<Custody>> inbox(n), next_inbox(n);
  for (NodeId v = 0; v < n; ++v) inbox[v].assign(nbrs[v].size(), Custody{});

  for (int t = 0; t <= rounds; ++t) {
    const auto& owner = schedule[t].owner;
    const bool finalize = t == rounds;

    // Custody invariant: the stepping party must hold the node's program and
    // every message in its inbox.
    for (NodeId v = 0; v < n; ++v) {
      require(prog_holder[v] == owner[v], Err::Internal,
              "custody violation: program of node " + std::to_string(v) +
                  " not with its owner");
      for (const auto& c : inbox[v])
        if (c.msg)
          require(c.holder == owner[v], Err::Internal,
                  "custody violation: inbound message not with the owner");
    }

    for (NodeId v = 0; v < n; ++v) next_inbox[v].assign(nbrs[v].size(), Custody{});

    // Parties step the nodes they own (order is irrelevant: steps are pure).
    for (Party p : {Party::Carol, Party::David, Party::Server}) {
      for (NodeId v = 0; v < n; ++v) {
        if (owner[v] != p) continue;
        Inbox plain(nbrs[v].size());
        for (size_t i = 0; i < inbox[v].size(); ++i) plain[i] = inbox[v][i].msg;
        StepResult sr = progs[v]->step(t, plain, Randomness(seed, v, t));
        if (sr.output) result.outputs[v] = std::move(sr.output);
        if (finalize || sr.outbox.empty()) continue;
        require(sr.outbox.size() == nbrs[v].size(), Err::ShapeMismatch,
                "outbox size does not match neighbor count");
        for (size_t i = 0; i < sr.outbox.size(); ++i) {
          if (!sr.outbox[i]) continue;
          require(sr.outbox[i]->len <= B, Err::MessageTooLong,
                  "program exceeded the bandwidth cap");
          NodeId u = nbrs[v][i];
          auto& c = next_inbox[u][slot_of(u, v)];
          c.msg = *sr.outbox[i];
          c.holder = p;  // the sender's owner stepped v and holds the payload
        }
      }
    }
    if (finalize) break;

    // Transfer phase t -> t+1: derive moves from the partition delta and the
    // custody map, then assert the Appendix-style budgets.
    const auto& next_owner = schedule[t + 1].owner;
    RoundCharge rc;
    for (NodeId v = 0; v < n; ++v) {
      if (next_owner[v] != prog_holder[v]) {
        // Player-to-player and player-to-server state moves never occur under
        // this schedule; node states only leave the server.
        require(prog_holder[v] == Party::Server, Err::Internal,
                "schedule would move node state out of a player");
        prog_holder[v] = next_owner[v];
      }
      for (auto& c : next_inbox[v]) {
        if (!c.msg || c.holder == next_owner[v]) continue;
        charge(rc, c.holder, next_owner[v], c.msg->len);
        c.holder = next_owner[v];
      }
    }
    require(rc.to_carol <= result.ledger.player_budget(), Err::Internal,
            "per-round Carol maintenance exceeded 2Bk");
    require(rc.to_david <= result.ledger.player_budget(), Err::Internal,
            "per-round David maintenance exceeded 2Bk");
    require(rc.to_server <= result.ledger.server_budget(), Err::Internal,
            "per-round server inbound exceeded 2kB");
    require(rc.charged() <= result.ledger.round_budget(), Err::Internal,
            "per-round charge exceeded 6kB");
    result.ledger.rounds.push_back(rc);

    inbox.swap(next_inbox);
  }
  return result;
}

Equivalence check_equivalence(const std::vector<std::optional<Bytes>>& a,
                              const std::vector<std::optional<Bytes>>& b) {
  Equivalence e;
  if (a.size() != b.size())
    fail(Err::ShapeMismatch, "output vectors differ in length: " +
                                 std::to_string(a.size()) + " vs " +
                                 std::to_string(b.size()));
  for (size_t v = 0; v < a.size(); ++v) {
    if (a[v] == b[v]) continue;
    e.equal = false;
    e.detail = "first difference at node " + std::to_string(v);
    if (a[v] && b[v]) e.detail += " (both present, payloads differ)";
    else e.detail += a[v] ? " (second missing)" : " (first missing)";
    return e;
  }
  e.equal = true;
  return e;
}

}  // namespace lbw
