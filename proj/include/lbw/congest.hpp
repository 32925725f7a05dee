#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "lbw/bits.hpp"
#include "lbw/graph.hpp"
#include "lbw/rng.hpp"

namespace lbw {

// What a node knows at start: its id, its neighbors (sorted by id), which of
// its incident edges participate in the subnetwork M, a workload-specific
// input blob, and the bandwidth.
struct NodeContext {
  NodeId id = 0;
  std::vector<NodeId> neighbors;
  std::vector<uint8_t> m_incident;  // parallel to neighbors
  Bytes input;
  int bandwidth_bits = 0;
};

// inbox[i]: message received from neighbors[i] this round, if any.
using Inbox = std::vector<std::optional<BitVec>>;

struct StepResult {
  // outbox[i]: message to neighbors[i]; lengths are capped at B by the engine.
  std::vector<std::optional<BitVec>> outbox;
  std::optional<Bytes> output;
};

// Node programs hold per-node state between rounds. step() must be a pure
// function of (state, round, inbox, randomness); all nondeterminism flows
// through the seeded streams.
class NodeProgram {
 public:
  virtual ~NodeProgram() = default;
  virtual StepResult step(int round, const Inbox& inbox, const Randomness& rnd) = 0;
};

using ProgramFactory =
    std::function<std::unique_ptr<NodeProgram>(const NodeContext&)>;

struct Transcript {
  int rounds = 0;
  // sent[t][2*e], sent[t][2*e+1]: payloads over edge e, low->high / high->low.
  std::vector<std::vector<std::optional<BitVec>>> sent;
  uint64_t hash() const;
};

struct RunResult {
  std::vector<std::optional<Bytes>> outputs;  // last output per node
  Transcript transcript;                      // empty unless requested
};

struct RunSpec {
  const Graph* net = nullptr;
  const EdgeMask* mask = nullptr;  // null = empty subnetwork
  int bandwidth_bits = 0;
  int rounds = 0;
  uint64_t seed = 0;
  const std::vector<Bytes>* node_inputs = nullptr;  // null or size n
  bool record_transcript = false;
};

// Synchronous lockstep execution: messages emitted in round t are delivered
// into round t+1. After the last communication round the programs take one
// compute-only step (round index = rounds) whose outbox is discarded, so that
// outputs reflect everything within radius `rounds`. Throws MessageTooLong
// when a program exceeds B bits.
RunResult run(const RunSpec& spec, const ProgramFactory& factory);

NodeContext make_node_context(const Graph& net, const EdgeMask* mask, NodeId v,
                              int bandwidth_bits, const std::vector<Bytes>* inputs);

}  // namespace lbw
