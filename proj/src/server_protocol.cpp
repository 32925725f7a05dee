#include "lbw/server_protocol.hpp"

namespace lbw {

namespace {
constexpr uint64_t kPadCarol = 0x70616443;  // stream tags
constexpr uint64_t kPadDavid = 0x70616444;

Bytes pack_bits(const std::vector<BitVec>& rounds_bits) {
  Bytes out;
  int used = 0;
  for (const auto& b : rounds_bits)
    for (int i = 0; i < b.len; ++i) {
      if (used % 8 == 0) out.push_back(0);
      if (b.bit(i)) out.back() |= uint8_t{1} << (used % 8);
      ++used;
    }
  out.push_back(static_cast<uint8_t>(used));  // trailer: bit count
  return out;
}
}  // namespace

BitVec wire_pad(uint64_t seed, bool for_david, int round, int len) {
  uint64_t v = rng::keyed(seed, for_david ? kPadDavid : kPadCarol, round, 0);
  return BitVec(v, len);
}

ProtocolRun run_server_protocol(const ServerProtocol& proto, const BitString& x,
                                const BitString& y, uint64_t seed) {
  require(proto.rounds >= 0, Err::BadInput, "negative round cap");
  ProtocolRun run;
  run.ledger.k = 0;
  run.ledger.bandwidth = 0;

  Bytes state_c, state_d;
  std::vector<Bytes> msgs_c, msgs_d;        // server messages received
  std::vector<BitVec> logical_c, logical_d; // what the server decoded

  for (int t = 0; t < proto.rounds; ++t) {
    // Server's round-t message depends on bits from rounds < t.
    if (proto.server) {
      auto [mc, md] = proto.server(t, logical_c, logical_d);
      run.server_message_bytes.push_back(mc.size() + md.size());
      msgs_c.push_back(std::move(mc));
      msgs_d.push_back(std::move(md));
    } else {
      msgs_c.emplace_back();
      msgs_d.emplace_back();
    }

    BitVec bc = proto.carol(t, x, state_c, msgs_c, Randomness(seed, 0, t));
    BitVec bd = proto.david(t, y, state_d, msgs_d, Randomness(seed, 1, t));
    require(bc.len <= proto.player_cap_bits && bd.len <= proto.player_cap_bits,
            Err::SendCapExceeded, "player message exceeds the per-round cap");
    if (proto.normal_form)
      require(bc.len == 2 && bd.len == 2, Err::BadNormalForm,
              "normal form requires exactly 2 bits per player per round");

    BitVec wire_c = bc, wire_d = bd;
    if (proto.normal_form) {
      wire_c.bits ^= wire_pad(seed, false, t, 2).bits;
      wire_d.bits ^= wire_pad(seed, true, t, 2).bits;
    }
    run.carol_wire.push_back(wire_c);
    run.david_wire.push_back(wire_d);

    RoundCharge rc;
    rc.carol_sent = wire_c.len;
    rc.david_sent = wire_d.len;
    rc.to_server = wire_c.len + wire_d.len;
    run.ledger.rounds.push_back(rc);

    // The server unpads with the shared setup and records the logical bits.
    logical_c.push_back(bc);
    logical_d.push_back(bd);
  }

  // Trailing free delivery from the full history.
  if (proto.server) {
    auto [mc, md] = proto.server(proto.rounds, logical_c, logical_d);
    run.server_message_bytes.push_back(mc.size() + md.size());
    msgs_c.push_back(std::move(mc));
    msgs_d.push_back(std::move(md));
  }

  if (proto.carol_output) run.carol_output = proto.carol_output(x, state_c, msgs_c);
  if (proto.david_output) run.david_output = proto.david_output(y, state_d, msgs_d);
  return run;
}

ServerProtocol const_protocol(int bit) {
  ServerProtocol p;
  p.name = "const";
  p.rounds = 0;
  p.normal_form = true;
  p.carol = p.david = [](int, const BitString&, Bytes&, const std::vector<Bytes>&,
                         const Randomness&) { return BitVec(0, 2); };
  p.server = [](int, const std::vector<BitVec>&, const std::vector<BitVec>&) {
    return std::pair<Bytes, Bytes>{};
  };
  p.carol_output = [bit](const BitString&, const Bytes&, const std::vector<Bytes>&) {
    return bit;
  };
  p.david_output = p.carol_output;
  p.truth = [bit](const BitString&, const BitString&) { return bit; };
  return p;
}

namespace {

std::vector<uint8_t> unpack_input_bits(const Bytes& msg, int nbits) {
  // Inverse of pack_bits, truncated to nbits.
  std::vector<uint8_t> out;
  for (int i = 0; i < nbits; ++i)
    out.push_back((msg[i / 8] >> (i % 8)) & 1);
  return out;
}

ServerProtocol::PlayerFn stream_input_bits() {
  return [](int t, const BitString& in, Bytes&, const std::vector<Bytes>&,
            const Randomness&) {
    auto bit_at = [&](size_t i) { return i < in.size() ? in[i] : uint8_t{0}; };
    return BitVec(bit_at(2 * t) | (bit_at(2 * t + 1) << 1), 2);
  };
}

ServerProtocol::ServerFn relay_history() {
  return [](int, const std::vector<BitVec>& from_c, const std::vector<BitVec>& from_d) {
    return std::make_pair(pack_bits(from_d), pack_bits(from_c));
  };
}

ServerProtocol::OutputFn compare_with_relayed(int nbits) {
  return [nbits](const BitString& in, const Bytes&, const std::vector<Bytes>& msgs) {
    auto other = unpack_input_bits(msgs.back(), nbits);
    for (int i = 0; i < nbits; ++i)
      if (other[i] != (i < static_cast<int>(in.size()) ? in[i] : 0)) return 0;
    return 1;
  };
}

}  // namespace

ServerProtocol eq_xfer(int nbits) {
  require(nbits >= 1, Err::BadInput, "need at least one input bit");
  ServerProtocol p;
  p.name = "eq_xfer";
  p.rounds = (nbits + 1) / 2;
  p.normal_form = true;
  p.carol = p.david = stream_input_bits();
  p.server = relay_history();
  p.carol_output = p.david_output = compare_with_relayed(nbits);
  p.truth = [](const BitString& a, const BitString& b) { return a == b ? 1 : 0; };
  return p;
}

ServerProtocol eq_xfer_confirm(int nbits) {
  ServerProtocol p = eq_xfer(nbits);
  p.name = "eq_xfer_confirm";
  const int data_rounds = p.rounds;
  p.rounds = data_rounds + 1;
  auto decide = compare_with_relayed(nbits);
  p.carol = p.david = [data_rounds, decide](int t, const BitString& in, Bytes& st,
                                            const std::vector<Bytes>& msgs,
                                            const Randomness& rnd) {
    if (t < data_rounds) return stream_input_bits()(t, in, st, msgs, rnd);
    return BitVec(static_cast<uint64_t>(decide(in, st, msgs)), 2);
  };
  return p;
}

ServerProtocol verbatim_relay(int nbits) {
  require(nbits >= 1 && nbits <= 64, Err::BadInput, "1..64 bits");
  ServerProtocol p;
  p.name = "verbatim_relay";
  p.rounds = 1;
  p.player_cap_bits = nbits;
  p.carol = [nbits](int, const BitString& in, Bytes&, const std::vector<Bytes>&,
                    const Randomness&) {
    uint64_t v = 0;
    for (int i = 0; i < nbits && i < static_cast<int>(in.size()); ++i)
      v |= static_cast<uint64_t>(in[i]) << i;
    return BitVec(v, nbits);
  };
  p.david = [](int, const BitString&, Bytes&, const std::vector<Bytes>&,
               const Randomness&) { return BitVec(0, 0); };
  p.server = relay_history();
  p.david_output = [](const BitString&, const Bytes&, const std::vector<Bytes>& msgs) {
    return msgs.back().empty() ? 0 : msgs.back()[0] & 1;
  };
  p.truth = [](const BitString& a, const BitString&) {
    return a.empty() ? 0 : a[0] & 1;
  };
  return p;
}

}  // namespace lbw
