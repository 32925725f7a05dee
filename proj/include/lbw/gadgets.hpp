#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lbw/graph.hpp"

namespace lbw {

struct BitstringPair {
  std::vector<uint8_t> x;
  std::vector<uint8_t> y;

  size_t n() const { return x.size(); }
  void validate() const;
};

BitstringPair make_bit_pair(const std::string& x_bits, const std::string& y_bits);

int hamming_distance(const BitstringPair& p);

// 1 iff sum x_i*y_i == 0 (mod 3). Note the polarity: the gadget chain is
// Hamiltonian exactly when this is 0.
int expected_ipmod3(const BitstringPair& p);

// 12n-node chain; per-gadget boundary permutation is the identity when
// x_i*y_i = 0 and a fixed 3-cycle when x_i*y_i = 1, so the whole graph is
// Hamiltonian iff sum x_i*y_i mod 3 != 0. Both shares are perfect matchings.
PartitionedGraph build_ipmod3_instance(const BitstringPair& p);

// 6n-node chain; x = y gives a single spanning cycle, Hamming distance
// delta >= 2 gives exactly delta spanning cycles. Wraparound identifies the
// two boundary tracks crosswise so each share stays a perfect matching.
PartitionedGraph build_gapeq_instance(const BitstringPair& p);

enum class GapPromise { Equal, Far, Violated };
GapPromise gap_promise_check(const BitstringPair& p, int delta);
const char* gap_promise_name(GapPromise v);

// Declarative one-gadget description: edge templates per input-bit value, used
// by the contract verifier. Node slots are numbered
//   left boundary, then internal layers in order, then right boundary.
struct GadgetLayout {
  std::string name;
  int boundary_size = 0;                // nodes shared between adjacent gadgets
  int internal_size = 0;                // nodes private to one gadget
  // carol_edges[b] / david_edges[b]: edge template when the player's bit is b.
  // Slot numbering: 0..boundary_size-1 = left boundary, then internals, then
  // boundary_size+internal_size.. = right boundary.
  std::array<std::vector<Edge>, 2> carol_edges;
  std::array<std::vector<Edge>, 2> david_edges;

  // declared_behavior(x,y): expected pairing of boundary tracks.
  //  - permutation semantics (IPmod3): through-path left j -> right perm[j]
  //  - through/closed semantics (Gap-Eq): through = identity pairing,
  //    closed = boundary-to-same-side paths; encoded below.
  enum class Pairing { Permutation, ThroughOrClosed };
  Pairing pairing = Pairing::Permutation;
  // For Permutation: perm[x][y] maps left track j to a right track.
  std::array<std::array<std::vector<int>, 2>, 2> boundary_perm;
  // For ThroughOrClosed: closed[x][y] = true when the gadget closes both sides.
  std::array<std::array<bool, 2>, 2> closed{};

  int total_slots() const { return 2 * boundary_size + internal_size; }
};

GadgetLayout ipmod3_layout();
GadgetLayout gapeq_layout();

struct GadgetCase {
  int x = 0;
  int y = 0;
  bool ok = false;
  std::string detail;
};

struct GadgetReport {
  bool ok = false;
  std::vector<GadgetCase> cases;
};

// Checks, for every (x_i, y_i) in {0,1}^2: matching/coverage invariants,
// that the in-gadget union is a disjoint set of boundary-to-boundary paths
// with no internal cycle, and that the induced boundary pairing matches the
// declared behavior. Throws ContractViolation naming the failing case.
GadgetReport verify_gadget_contract(const GadgetLayout& layout);

}  // namespace lbw
