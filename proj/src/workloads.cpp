#include "lbw/workloads.hpp"

#include <algorithm>

namespace lbw {

namespace {

Bytes u64_bytes(uint64_t v, int nbytes = 8) {
  Bytes b(nbytes);
  for (int i = 0; i < nbytes; ++i) b[i] = static_cast<uint8_t>((v >> (8 * i)) & 0xff);
  return b;
}

uint64_t read_u64(const Bytes& b, size_t off, int nbytes) {
  uint64_t v = 0;
  for (int i = 0; i < nbytes; ++i) v |= static_cast<uint64_t>(b[off + i]) << (8 * i);
  return v;
}

// Fixed-width frames sent as consecutive <=B-bit chunks. Both ends derive the
// chunk index from the round number, so no headers are needed.
struct Framing {
  int width = 1;
  int chunk = 1;
  int rounds_per_frame() const { return (width + chunk - 1) / chunk; }
  int chunk_len(int q) const { return std::min(chunk, width - q * chunk); }
  BitVec make_chunk(uint64_t frame, int q) const {
    return BitVec(frame >> (q * chunk), chunk_len(q));
  }
  void absorb(uint64_t& acc, const BitVec& msg, int q) const {
    acc |= msg.bits << (q * chunk);
  }
};

class EchoProgram : public NodeProgram {
 public:
  EchoProgram(const NodeContext& ctx) : ctx_(ctx) {}
  StepResult step(int round, const Inbox&, const Randomness&) override {
    StepResult r;
    if (round == 0) {
      int len = std::min(ctx_.bandwidth_bits, 16);
      r.outbox.assign(ctx_.neighbors.size(), BitVec(ctx_.id, len));
    }
    return r;
  }

 private:
  NodeContext ctx_;
};

class DegreeCheckProgram : public NodeProgram {
 public:
  DegreeCheckProgram(const NodeContext& ctx) {
    int d = 0;
    for (uint8_t m : ctx.m_incident) d += m;
    ok_ = d == 2;
  }
  StepResult step(int round, const Inbox&, const Randomness&) override {
    StepResult r;
    if (round == 0) r.output = Bytes{static_cast<uint8_t>(ok_)};
    return r;
  }

 private:
  bool ok_;
};

class FloodMinProgram : public NodeProgram {
 public:
  FloodMinProgram(const NodeContext& ctx, int value_bits, uint64_t value, bool over_m)
      : frame_{value_bits, ctx.bandwidth_bits}, cur_(value) {
    active_.resize(ctx.neighbors.size());
    for (size_t i = 0; i < ctx.neighbors.size(); ++i)
      active_[i] = over_m ? ctx.m_incident[i] : 1;
    acc_.assign(ctx.neighbors.size(), 0);
  }

  StepResult step(int round, const Inbox& inbox, const Randomness&) override {
    const int R = frame_.rounds_per_frame();
    StepResult r;
    // Inbox carries chunk (round-1) % R of the neighbors' frames.
    if (round > 0) {
      int q = (round - 1) % R;
      for (size_t i = 0; i < inbox.size(); ++i) {
        if (!active_[i] || !inbox[i]) continue;
        frame_.absorb(acc_[i], *inbox[i], q);
        if (q == R - 1) {
          cur_ = std::min(cur_, acc_[i]);
          acc_[i] = 0;
        }
      }
    }
    int q = round % R;
    if (q == 0) latched_ = cur_;
    r.outbox.assign(active_.size(), std::nullopt);
    for (size_t i = 0; i < active_.size(); ++i)
      if (active_[i]) r.outbox[i] = frame_.make_chunk(latched_, q);
    r.output = u64_bytes(cur_);
    return r;
  }

 private:
  Framing frame_;
  uint64_t cur_;
  uint64_t latched_ = 0;
  std::vector<uint8_t> active_;
  std::vector<uint64_t> acc_;
};

class BfsTreeProgram : public NodeProgram {
 public:
  BfsTreeProgram(const NodeContext& ctx, int dist_bits, bool is_root)
      : ctx_(ctx), frame_{dist_bits, ctx.bandwidth_bits} {
    inf_ = (uint64_t{1} << dist_bits) - 1;
    dist_ = is_root ? 0 : inf_;
    parent_ = ctx.id;
    acc_.assign(ctx.neighbors.size(), 0);
  }

  StepResult step(int round, const Inbox& inbox, const Randomness&) override {
    const int R = frame_.rounds_per_frame();
    StepResult r;
    if (round > 0) {
      int q = (round - 1) % R;
      for (size_t i = 0; i < inbox.size(); ++i) {
        if (!inbox[i]) continue;
        frame_.absorb(acc_[i], *inbox[i], q);
        if (q == R - 1) {
          uint64_t d = acc_[i];
          acc_[i] = 0;
          if (d != inf_ && d + 1 < dist_) {
            dist_ = d + 1;
            parent_ = ctx_.neighbors[i];
          }
        }
      }
    }
    int q = round % R;
    if (q == 0) latched_ = dist_;
    r.outbox.assign(ctx_.neighbors.size(), std::nullopt);
    for (size_t i = 0; i < ctx_.neighbors.size(); ++i)
      r.outbox[i] = frame_.make_chunk(latched_, q);
    Bytes out = u64_bytes(dist_ == inf_ ? ~uint64_t{0} : dist_, 8);
    Bytes par = u64_bytes(parent_, 4);
    out.insert(out.end(), par.begin(), par.end());
    r.output = std::move(out);
    return r;
  }

 private:
  NodeContext ctx_;
  Framing frame_;
  uint64_t inf_;
  uint64_t dist_;
  uint64_t latched_ = 0;
  NodeId parent_;
  std::vector<uint64_t> acc_;
};

// Shared by the component probe and ham_verify. Frame layout (LSB first):
// [leader: id_bits][deg_ok: 1][conflict: 1].
class LeaderVoteProgram : public NodeProgram {
 public:
  LeaderVoteProgram(const NodeContext& ctx, int id_bits, int phase1, bool with_degree)
      : ctx_(ctx),
        frame_{id_bits + 2, ctx.bandwidth_bits},
        id_bits_(id_bits),
        phase1_(phase1),
        with_degree_(with_degree) {
    leader_ = ctx.id;
    int d = 0;
    for (uint8_t m : ctx.m_incident) d += m;
    deg_ok_ = !with_degree || d == 2;
    acc_.assign(ctx.neighbors.size(), 0);
  }

  StepResult step(int round, const Inbox& inbox, const Randomness&) override {
    const int R = frame_.rounds_per_frame();
    StepResult r;
    if (round > 0) {
      int q = (round - 1) % R;
      bool phase2 = round - 1 >= phase1_;
      for (size_t i = 0; i < inbox.size(); ++i) {
        if (!inbox[i]) continue;
        frame_.absorb(acc_[i], *inbox[i], q);
        if (q == R - 1) {
          uint64_t f = acc_[i];
          acc_[i] = 0;
          uint64_t their_leader = f & ((uint64_t{1} << id_bits_) - 1);
          bool their_deg = (f >> id_bits_) & 1;
          bool their_conflict = (f >> (id_bits_ + 1)) & 1;
          deg_ok_ = deg_ok_ && their_deg;
          if (!phase2) {
            if (ctx_.m_incident[i]) leader_ = std::min(leader_, their_leader);
          } else {
            conflict_ = conflict_ || their_conflict || their_leader != leader_;
          }
        }
      }
    }
    int q = round % R;
    if (q == 0)
      latched_ = leader_ | (uint64_t{deg_ok_} << id_bits_)
                 | (uint64_t{conflict_} << (id_bits_ + 1));
    r.outbox.assign(ctx_.neighbors.size(), std::nullopt);
    for (size_t i = 0; i < ctx_.neighbors.size(); ++i)
      r.outbox[i] = frame_.make_chunk(latched_, q);
    if (with_degree_) {
      r.output = Bytes{static_cast<uint8_t>(deg_ok_ && !conflict_)};
    } else {
      Bytes out = u64_bytes(leader_, 4);
      out.push_back(static_cast<uint8_t>(!conflict_));
      r.output = std::move(out);
    }
    return r;
  }

 private:
  NodeContext ctx_;
  Framing frame_;
  int id_bits_;
  int phase1_;
  bool with_degree_;
  uint64_t leader_;
  uint64_t latched_ = 0;
  bool deg_ok_;
  bool conflict_ = false;
  std::vector<uint64_t> acc_;
};

// ---- endpoint gather/decide/flood verifier ---------------------------------

constexpr uint8_t kRoleOther = 0;
constexpr uint8_t kRoleLeftEndpoint = 1;
constexpr uint8_t kRoleRightEndpoint = 2;
constexpr uint8_t kRoleLeftGatherer = 3;
constexpr uint8_t kRoleRightGatherer = 4;

struct EndpointBlob {
  uint8_t role = kRoleOther;
  uint16_t u_index = 0xffff;
  uint16_t universe = 0;
  uint8_t u_bits = 0;
  uint32_t phase_a = 0;  // rounds in the endpoint->gatherer stage
  uint32_t phase_b = 0;  // rounds in the gatherer exchange stage
  uint32_t left_gatherer = 0;
  uint32_t right_gatherer = 0;
  std::vector<uint32_t> left_nodes;   // universe entries
  std::vector<uint32_t> right_nodes;

  Bytes encode() const {
    Bytes b;
    b.push_back(role);
    auto push16 = [&](uint16_t v) {
      b.push_back(v & 0xff);
      b.push_back(v >> 8);
    };
    auto push32 = [&](uint32_t v) {
      for (int i = 0; i < 4; ++i) b.push_back((v >> (8 * i)) & 0xff);
    };
    push16(u_index);
    push16(universe);
    b.push_back(u_bits);
    push32(phase_a);
    push32(phase_b);
    push32(left_gatherer);
    push32(right_gatherer);
    for (uint32_t v : left_nodes) push32(v);
    for (uint32_t v : right_nodes) push32(v);
    return b;
  }

  static EndpointBlob decode(const Bytes& b) {
    EndpointBlob e;
    size_t off = 0;
    e.role = b[off++];
    e.u_index = static_cast<uint16_t>(read_u64(b, off, 2));
    off += 2;
    e.universe = static_cast<uint16_t>(read_u64(b, off, 2));
    off += 2;
    e.u_bits = b[off++];
    e.phase_a = static_cast<uint32_t>(read_u64(b, off, 4));
    off += 4;
    e.phase_b = static_cast<uint32_t>(read_u64(b, off, 4));
    off += 4;
    e.left_gatherer = static_cast<uint32_t>(read_u64(b, off, 4));
    off += 4;
    e.right_gatherer = static_cast<uint32_t>(read_u64(b, off, 4));
    off += 4;
    for (int i = 0; i < e.universe; ++i) {
      e.left_nodes.push_back(static_cast<uint32_t>(read_u64(b, off, 4)));
      off += 4;
    }
    for (int i = 0; i < e.universe; ++i) {
      e.right_nodes.push_back(static_cast<uint32_t>(read_u64(b, off, 4)));
      off += 4;
    }
    return e;
  }
};

// Counts cycles in the union of two perfect matchings over 0..U-1 by
// alternating partner steps; Hamiltonian iff a single cycle covers U.
bool union_is_single_cycle(const std::vector<uint16_t>& carol,
                           const std::vector<uint16_t>& david) {
  const size_t U = carol.size();
  std::vector<uint8_t> seen(U, 0);
  size_t covered = 0;
  int cycles = 0;
  for (size_t s = 0; s < U; ++s) {
    if (seen[s]) continue;
    ++cycles;
    size_t cur = s;
    bool use_carol = true;
    while (!seen[cur]) {
      seen[cur] = 1;
      ++covered;
      cur = use_carol ? carol[cur] : david[cur];
      use_carol = !use_carol;
    }
  }
  return cycles == 1 && covered == U;
}

class EndpointVerifyProgram : public NodeProgram {
 public:
  EndpointVerifyProgram(const NodeContext& ctx) : ctx_(ctx) {
    blob_ = EndpointBlob::decode(ctx.input);
    send_frame_ = Framing{blob_.u_bits, ctx.bandwidth_bits};
    verdict_frame_ = Framing{2, ctx.bandwidth_bits};

    int d = 0;
    for (uint8_t m : ctx.m_incident) d += m;
    local_ok_ = d == 2;

    const bool endpoint = blob_.role != kRoleOther;
    if (endpoint) {
      const auto& side =
          (blob_.role == kRoleLeftEndpoint || blob_.role == kRoleLeftGatherer)
              ? blob_.left_nodes
              : blob_.right_nodes;
      for (size_t i = 0; i < ctx.neighbors.size(); ++i) {
        if (!ctx.m_incident[i]) continue;
        for (size_t u = 0; u < side.size(); ++u)
          if (side[u] == ctx.neighbors[i]) partner_ = static_cast<uint16_t>(u);
      }
      if (blob_.role == kRoleLeftEndpoint)
        gatherer_slot_ = slot_of(blob_.left_gatherer);
      else if (blob_.role == kRoleRightEndpoint)
        gatherer_slot_ = slot_of(blob_.right_gatherer);
    }
    if (blob_.role == kRoleLeftGatherer || blob_.role == kRoleRightGatherer) {
      table_.assign(blob_.universe, 0);
      other_table_.assign(blob_.universe, 0);
      table_[blob_.u_index] = partner_;
      peer_slot_ = slot_of(blob_.role == kRoleLeftGatherer ? blob_.right_gatherer
                                                           : blob_.left_gatherer);
      const auto& side = blob_.role == kRoleLeftGatherer ? blob_.left_nodes
                                                         : blob_.right_nodes;
      sender_u_.assign(ctx.neighbors.size(), -1);
      for (size_t i = 0; i < ctx.neighbors.size(); ++i)
        for (size_t u = 0; u < side.size(); ++u)
          if (side[u] == ctx.neighbors[i]) sender_u_[i] = static_cast<int>(u);
      acc_.assign(ctx.neighbors.size(), 0);
      peer_bits_.assign((blob_.universe * blob_.u_bits + 7) / 8, 0);
    }
    vacc_.assign(ctx.neighbors.size(), 0);
  }

  StepResult step(int round, const Inbox& inbox, const Randomness&) override {
    StepResult r;
    r.outbox.assign(ctx_.neighbors.size(), std::nullopt);
    const int Ra = static_cast<int>(blob_.phase_a);
    const int Rb = static_cast<int>(blob_.phase_b);
    const int Rsend = send_frame_.rounds_per_frame();
    const bool gatherer =
        blob_.role == kRoleLeftGatherer || blob_.role == kRoleRightGatherer;

    // Receive side first: messages in the inbox were sent in round-1.
    if (round > 0) {
      int prev = round - 1;
      if (gatherer && prev < Ra) {
        int q = prev % Rsend;
        for (size_t i = 0; i < inbox.size(); ++i) {
          if (!inbox[i] || sender_u_[i] < 0) continue;
          send_frame_.absorb(acc_[i], *inbox[i], q);
          if (q == Rsend - 1) {
            table_[sender_u_[i]] = static_cast<uint16_t>(acc_[i]);
            acc_[i] = 0;
          }
        }
      } else if (gatherer && prev < Ra + Rb) {
        if (inbox[peer_slot_]) {
          const BitVec& m = *inbox[peer_slot_];
          for (int b = 0; b < m.len; ++b) {
            int pos = peer_got_ + b;
            if (m.bit(b)) peer_bits_[pos / 8] |= uint8_t{1} << (pos % 8);
          }
          peer_got_ += m.len;
        }
        if (prev == Ra + Rb - 1) {
          for (int u = 0; u < blob_.universe; ++u) {
            uint16_t val = 0;
            for (int b = 0; b < blob_.u_bits; ++b) {
              int pos = u * blob_.u_bits + b;
              val |= static_cast<uint16_t>((peer_bits_[pos / 8] >> (pos % 8)) & 1) << b;
            }
            other_table_[u] = val;
          }
          decide();
        }
      } else if (prev >= Ra + Rb) {
        // Verdict flood: (valid, verdict) frames.
        int q = (prev - Ra - Rb) % verdict_frame_.rounds_per_frame();
        for (size_t i = 0; i < inbox.size(); ++i) {
          if (!inbox[i]) continue;
          verdict_frame_.absorb(vacc_[i], *inbox[i], q);
          if (q == verdict_frame_.rounds_per_frame() - 1) {
            uint64_t f = vacc_[i];
            vacc_[i] = 0;
            if ((f & 1) && !have_verdict_) {
              have_verdict_ = true;
              verdict_ = (f >> 1) & 1;
            }
          }
        }
      }
    }

    // Send side.
    if (round < Ra) {
      if ((blob_.role == kRoleLeftEndpoint || blob_.role == kRoleRightEndpoint)) {
        int q = round % Rsend;
        r.outbox[gatherer_slot_] = send_frame_.make_chunk(partner_, q);
      }
    } else if (round < Ra + Rb) {
      if (gatherer) {
        // Stream the whole table as one long bit string.
        int offset = (round - Ra) * ctx_.bandwidth_bits;
        int total = blob_.universe * blob_.u_bits;
        int len = std::min(ctx_.bandwidth_bits, total - offset);
        if (len > 0) {
          uint64_t bits = 0;
          for (int b = 0; b < len; ++b) {
            int pos = offset + b;
            int u = pos / blob_.u_bits;
            int inner = pos % blob_.u_bits;
            bits |= static_cast<uint64_t>((table_[u] >> inner) & 1) << b;
          }
          r.outbox[peer_slot_] = BitVec(bits, len);
        }
      }
    } else {
      int q = (round - Ra - Rb) % verdict_frame_.rounds_per_frame();
      if (q == 0) latched_verdict_ = have_verdict_ ? (1u | (verdict_ << 1)) : 0;
      if (latched_verdict_ & 1) {
        for (size_t i = 0; i < ctx_.neighbors.size(); ++i)
          r.outbox[i] = verdict_frame_.make_chunk(latched_verdict_, q);
      }
    }

    if (have_verdict_)
      r.output = Bytes{static_cast<uint8_t>(verdict_ && local_ok_)};
    return r;
  }

 private:
  int slot_of(NodeId v) const {
    for (size_t i = 0; i < ctx_.neighbors.size(); ++i)
      if (ctx_.neighbors[i] == v) return static_cast<int>(i);
    fail(Err::IndexOutOfRange, "expected neighbor missing");
  }

  void decide() {
    const auto& carol = blob_.role == kRoleLeftGatherer ? table_ : other_table_;
    const auto& david = blob_.role == kRoleLeftGatherer ? other_table_ : table_;
    verdict_ = union_is_single_cycle(carol, david);
    have_verdict_ = true;
  }

  NodeContext ctx_;
  EndpointBlob blob_;
  Framing send_frame_;
  Framing verdict_frame_;
  bool local_ok_ = false;
  uint16_t partner_ = 0;
  int gatherer_slot_ = 0;
  int peer_slot_ = 0;
  std::vector<uint16_t> table_, other_table_;
  std::vector<int> sender_u_;
  std::vector<uint64_t> acc_;
  std::vector<uint64_t> vacc_;
  std::vector<uint8_t> peer_bits_;
  int peer_got_ = 0;
  bool have_verdict_ = false;
  bool verdict_ = false;
  uint64_t latched_verdict_ = 0;
};

}  // namespace

int flood_frame_rounds(const Graph& net, int bandwidth_bits) {
  int id_bits = bit_width_for(net.node_count() == 0 ? 1 : net.node_count() - 1);
  return (id_bits + bandwidth_bits - 1) / bandwidth_bits;
}

Workload make_echo(const Graph&) {
  Workload w;
  w.name = "echo";
  w.factory = [](const NodeContext& ctx) { return std::make_unique<EchoProgram>(ctx); };
  return w;
}

Workload make_degree_check() {
  Workload w;
  w.name = "degree_check";
  w.factory = [](const NodeContext& ctx) {
    return std::make_unique<DegreeCheckProgram>(ctx);
  };
  return w;
}

Workload make_flood_min_id(const Graph& net) {
  Workload w;
  w.name = "flood_min_id";
  int id_bits = bit_width_for(net.node_count() == 0 ? 1 : net.node_count() - 1);
  w.factory = [id_bits](const NodeContext& ctx) {
    return std::make_unique<FloodMinProgram>(ctx, id_bits, ctx.id, true);
  };
  return w;
}

Workload make_flood_min_value(const Graph& net, const std::vector<uint64_t>& values,
                              bool over_m) {
  require(values.size() == net.node_count(), Err::ShapeMismatch,
          "one value per node required");
  Workload w;
  w.name = "flood_min_value";
  uint64_t maxv = 1;
  for (uint64_t v : values) maxv = std::max(maxv, v);
  int bits = bit_width_for(maxv);
  w.node_inputs.reserve(values.size());
  for (uint64_t v : values) w.node_inputs.push_back(u64_bytes(v));
  w.factory = [bits, over_m](const NodeContext& ctx) {
    uint64_t v = read_u64(ctx.input, 0, 8);
    return std::make_unique<FloodMinProgram>(ctx, bits, v, over_m);
  };
  return w;
}

Workload make_bfs_tree(const Graph& net, NodeId root) {
  require(root < net.node_count(), Err::IndexOutOfRange, "root out of range");
  Workload w;
  w.name = "bfs_tree";
  int dist_bits = bit_width_for(net.node_count()) + 1;
  w.factory = [dist_bits, root](const NodeContext& ctx) {
    return std::make_unique<BfsTreeProgram>(ctx, dist_bits, ctx.id == root);
  };
  return w;
}

Workload make_component_count_probe(const Graph& net, int phase1) {
  Workload w;
  w.name = "component_count_probe";
  int id_bits = bit_width_for(net.node_count() == 0 ? 1 : net.node_count() - 1);
  w.factory = [id_bits, phase1](const NodeContext& ctx) {
    return std::make_unique<LeaderVoteProgram>(ctx, id_bits, phase1, false);
  };
  return w;
}

Workload make_ham_verify(const Graph& net, int phase1) {
  Workload w;
  w.name = "ham_verify";
  int id_bits = bit_width_for(net.node_count() == 0 ? 1 : net.node_count() - 1);
  w.factory = [id_bits, phase1](const NodeContext& ctx) {
    return std::make_unique<LeaderVoteProgram>(ctx, id_bits, phase1, true);
  };
  return w;
}

EndpointWorkload make_ham_verify_endpoint(const HardNetwork& net, int bandwidth_bits) {
  const auto& p = net.params();
  const int U = p.universe();
  EndpointBlob base;
  base.universe = static_cast<uint16_t>(U);
  base.u_bits = static_cast<uint8_t>(bit_width_for(U - 1));
  base.phase_a = (base.u_bits + bandwidth_bits - 1) / bandwidth_bits;
  base.phase_b =
      (U * base.u_bits + bandwidth_bits - 1) / bandwidth_bits;
  base.left_gatherer = net.highway_node(p.k, 1);
  base.right_gatherer = net.highway_node(p.k, p.L);
  for (int u = 0; u < U; ++u) {
    base.left_nodes.push_back(net.left_endpoint(u));
    base.right_nodes.push_back(net.right_endpoint(u));
  }

  EndpointWorkload out;
  out.workload.name = "ham_verify_endpoint";
  out.workload.node_inputs.resize(net.graph().node_count());
  for (NodeId v = 0; v < net.graph().node_count(); ++v) {
    EndpointBlob b = base;
    for (int u = 0; u < U; ++u) {
      if (base.left_nodes[u] == v) {
        b.role = (u == U - 1) ? kRoleLeftGatherer : kRoleLeftEndpoint;
        b.u_index = static_cast<uint16_t>(u);
      }
      if (base.right_nodes[u] == v) {
        b.role = (u == U - 1) ? kRoleRightGatherer : kRoleRightEndpoint;
        b.u_index = static_cast<uint16_t>(u);
      }
    }
    out.workload.node_inputs[v] = b.encode();
  }
  out.workload.factory = [](const NodeContext& ctx) {
    return std::make_unique<EndpointVerifyProgram>(ctx);
  };

  // Rounds for every node to hold the verdict: gather + exchange + flood.
  auto dist = multi_source_bfs(
      net.graph(), {base.left_gatherer, base.right_gatherer});
  int ecc = 0;
  for (int d : dist) ecc = std::max(ecc, d);
  int rc = (2 + bandwidth_bits - 1) / bandwidth_bits;
  out.suggested_rounds = static_cast<int>(base.phase_a + base.phase_b) +
                         rc * (ecc + 2);
  return out;
}

Workload make_named_workload(const std::string& name, const HardNetwork& net,
                             int bandwidth_bits) {
  if (name == "flood_min_id") return make_flood_min_id(net.graph());
  if (name == "degree_check") return make_degree_check();
  if (name == "echo") return make_echo(net.graph());
  if (name == "ham_verify") {
    int R = flood_frame_rounds(net.graph(), bandwidth_bits);
    return make_ham_verify(net.graph(), R * static_cast<int>(net.graph().node_count()));
  }
  if (name == "component_count_probe") {
    int R = flood_frame_rounds(net.graph(), bandwidth_bits);
    return make_component_count_probe(net.graph(),
                                      R * static_cast<int>(net.graph().node_count()));
  }
  if (name == "ham_verify_endpoint")
    return make_ham_verify_endpoint(net, bandwidth_bits).workload;
  fail(Err::BadInput, "unknown workload: " + name);
}

uint64_t output_to_u64(const Bytes& b) {
  return read_u64(b, 0, static_cast<int>(std::min<size_t>(8, b.size())));
}

}  // namespace lbw
