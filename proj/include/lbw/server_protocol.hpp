#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lbw/bits.hpp"
#include "lbw/rng.hpp"
#include "lbw/three_party.hpp"

namespace lbw {

using BitString = std::vector<uint8_t>;

// Three-party protocol in the Server model: Carol and David hold the inputs,
// the server holds none and sends for free. Player messages route through the
// server (which can relay to the peer at no charge, so direct player links
// add no power). The server's round-t message is a function of the bits it
// received in rounds < t; one trailing free server message closes the run.
//
// Under `normal_form`, each player sends exactly two logical bits per charged
// round and the runtime XORs them with fresh shared-random pad bits before
// they hit the wire, making every wire bit uniformly distributed. The game
// lift relies on both properties.
struct ServerProtocol {
  std::string name;
  int rounds = 0;           // charged rounds c
  int player_cap_bits = 2;  // per-round cap on each player's send
  double eps0 = 0.0;        // error on 0-inputs
  double eps1 = 0.0;        // error on 1-inputs
  bool normal_form = false;

  // (round, own input, scratch state, server messages received so far, rng)
  // -> logical bits to send this round.
  using PlayerFn = std::function<BitVec(int, const BitString&, Bytes&,
                                        const std::vector<Bytes>&, const Randomness&)>;
  // (round, Carol's logical bits per round so far, David's) -> messages.
  using ServerFn = std::function<std::pair<Bytes, Bytes>(
      int, const std::vector<BitVec>&, const std::vector<BitVec>&)>;
  // (own input, final state, all server messages) -> output bit.
  using OutputFn =
      std::function<int(const BitString&, const Bytes&, const std::vector<Bytes>&)>;

  PlayerFn carol;
  PlayerFn david;
  ServerFn server;
  OutputFn carol_output;
  OutputFn david_output;  // optional
  std::function<int(const BitString&, const BitString&)> truth;
};

struct ProtocolRun {
  std::optional<int> carol_output;
  std::optional<int> david_output;
  CostLedger ledger;
  // Wire transcript: per round, the padded bits each player sent.
  std::vector<BitVec> carol_wire;
  std::vector<BitVec> david_wire;
  std::vector<size_t> server_message_bytes;  // per delivery, combined size
};

// Pad bits applied by the runtime in normal form; shared setup known to the
// players and the server alike.
BitVec wire_pad(uint64_t seed, bool for_david, int round, int len);

ProtocolRun run_server_protocol(const ServerProtocol& proto, const BitString& x,
                                const BitString& y, uint64_t seed);

// Shipped protocols -----------------------------------------------------------

// rounds = 0; both players output the constant.
ServerProtocol const_protocol(int bit);

// Equality via the server in normal form: each player streams its input two
// bits per round (c = ceil(nbits/2) charged rounds); the server's relay lets
// both sides reconstruct the other input, so the protocol is exact
// (eps0 = eps1 = 0) and one-sided in particular.
ServerProtocol eq_xfer(int nbits);

// Equality with a result-confirmation round: the data rounds of eq_xfer plus
// one round in which both players send their computed answer to the server.
ServerProtocol eq_xfer_confirm(int nbits);

// One player ships its input verbatim in a single round at cap = nbits; the
// server relays for free and the other player outputs. Cost accounting demo.
ServerProtocol verbatim_relay(int nbits);

}  // namespace lbw
