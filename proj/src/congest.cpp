#include "lbw/congest.hpp"

#include <algorithm>

namespace lbw {

uint64_t Transcript::hash() const {
  Fnv1a h;
  h.add(static_cast<uint64_t>(rounds));
  for (const auto& row : sent)
    for (const auto& m : row) {
      if (m) {
        h.add(1);
        h.add(m->bits);
        h.add(m->len);
      } else {
        h.add(0);
      }
    }
  return h.h;
}

NodeContext make_node_context(const Graph& net, const EdgeMask* mask, NodeId v,
                              int bandwidth_bits, const std::vector<Bytes>* inputs) {
  NodeContext ctx;
  ctx.id = v;
  ctx.bandwidth_bits = bandwidth_bits;
  ctx.neighbors = net.neighbors(v);
  std::sort(ctx.neighbors.begin(), ctx.neighbors.end());
  ctx.m_incident.resize(ctx.neighbors.size(), 0);
  if (mask) {
    require(mask->size() == net.edges().size(), Err::ShapeMismatch,
            "mask does not match network");
    for (size_t i = 0; i < ctx.neighbors.size(); ++i) {
      int e = net.edge_index(v, ctx.neighbors[i]);
      ctx.m_incident[i] = (*mask)[e];
    }
  }
  if (inputs && !inputs->empty()) {
    require(inputs->size() == net.node_count(), Err::ShapeMismatch,
            "node input count does not match network");
    ctx.input = (*inputs)[v];
  }
  return ctx;
}

RunResult run(const RunSpec& spec, const ProgramFactory& factory) {
  require(spec.net != nullptr, Err::BadInput, "no network");
  require(spec.rounds >= 0, Err::BadInput, "negative round count");
  require(spec.bandwidth_bits >= 1 && spec.bandwidth_bits <= 64, Err::BadInput,
          "B must be in 1..64");
  const Graph& g = *spec.net;
  const NodeId n = g.node_count();

  std::vector<std::unique_ptr<NodeProgram>> progs(n);
  std::vector<std::vector<NodeId>> nbrs(n);
  for (NodeId v = 0; v < n; ++v) {
    auto ctx = make_node_context(g, spec.mask, v, spec.bandwidth_bits, spec.node_inputs);
    nbrs[v] = ctx.neighbors;
    progs[v] = factory(ctx);
  }
  // neighbor slot of v in u's list, per directed pair, via sorted lookup
  auto slot_of = [&](NodeId u, NodeId v) {
    const auto& a = nbrs[u];
    return static_cast<int>(std::lower_bound(a.begin(), a.end(), v) - a.begin());
  };

  RunResult result;
  result.outputs.assign(n, std::nullopt);
  if (spec.record_transcript) result.transcript.rounds = spec.rounds;

  std::vector<Inbox> inbox(n), next_inbox(n);
  for (NodeId v = 0; v < n; ++v) inbox[v].assign(nbrs[v].size(), std::nullopt);

  for (int t = 0; t < spec.rounds; ++t) {
    for (NodeId v = 0; v < n; ++v) next_inbox[v].assign(nbrs[v].size(), std::nullopt);
    std::vector<std::optional<BitVec>> row;
    if (spec.record_transcript) row.assign(2 * g.edges().size(), std::nullopt);

    for (NodeId v = 0; v < n; ++v) {
      StepResult sr = progs[v]->step(t, inbox[v], Randomness(spec.seed, v, t));
      if (sr.output) result.outputs[v] = std::move(sr.output);
      if (sr.outbox.empty()) continue;
      require(sr.outbox.size() == nbrs[v].size(), Err::ShapeMismatch,
              "outbox size does not match neighbor count");
      for (size_t i = 0; i < sr.outbox.size(); ++i) {
        const auto& msg = sr.outbox[i];
        if (!msg) continue;
        require(msg->len <= spec.bandwidth_bits, Err::MessageTooLong,
                "node " + std::to_string(v) + " emitted " + std::to_string(msg->len) +
                    " bits > B = " + std::to_string(spec.bandwidth_bits));
        NodeId u = nbrs[v][i];
        next_inbox[u][slot_of(u, v)] = *msg;
        if (spec.record_transcript) {
          int e = g.edge_index(v, u);
          int dir = v < u ? 0 : 1;
          row[2 * e + dir] = *msg;
        }
      }
    }
    inbox.swap(next_inbox);
    if (spec.record_transcript) result.transcript.sent.push_back(std::move(row));
  }

  // Compute-only pass: nodes absorb the final round's messages and settle
  // their outputs. Nothing is sent, so it costs no communication round.
  for (NodeId v = 0; v < n; ++v) {
    StepResult sr = progs[v]->step(spec.rounds, inbox[v], Randomness(spec.seed, v, spec.rounds));
    if (sr.output) result.outputs[v] = std::move(sr.output);
  }
  return result;
}

}  // namespace lbw
