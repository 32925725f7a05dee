#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lbw/server_protocol.hpp"
#include "lbw/three_party.hpp"
#include "lbw/workloads.hpp"
#include "support.hpp"

using namespace lbw;
using namespace lbw::test;

TEST_CASE("cost bound formula") {
  CHECK(cost_bound(0, 5) == 0);
  CHECK(cost_bound(3, 4) == 72);
  CHECK(cost_bound(10, 1) == 60);
}

TEST_CASE("verbatim relay: only the sender's bits are charged") {
  auto proto = verbatim_relay(5);
  BitString x{1, 0, 1, 1, 0}, y{};
  auto r = run_server_protocol(proto, x, y, 12);
  CHECK(r.ledger.total_charged() == 5);
  REQUIRE(r.ledger.rounds.size() == 1);
  CHECK(r.ledger.rounds[0].carol_sent == 5);
  CHECK(r.ledger.rounds[0].david_sent == 0);
  REQUIRE(r.david_output.has_value());
  CHECK(*r.david_output == 1);  // x[0]
  // Server deliveries happened but cost nothing.
  CHECK(r.server_message_bytes.size() == 2);
}

TEST_CASE("zero-communication protocol charges nothing") {
  auto proto = const_protocol(1);
  auto r = run_server_protocol(proto, {0, 1}, {1, 1}, 5);
  CHECK(r.ledger.total_charged() == 0);
  CHECK(*r.carol_output == 1);
}

TEST_CASE("three-round Eq-via-server hand trace on 4-bit inputs") {
  auto proto = eq_xfer_confirm(4);
  CHECK(proto.rounds == 3);
  BitString x{1, 0, 1, 0}, y{1, 0, 1, 0};
  const uint64_t seed = 2024;
  auto r = run_server_protocol(proto, x, y, seed);

  // Hand trace of the logical bits: rounds 0 and 1 stream (x0,x1), (x2,x3);
  // round 2 confirms the computed answer (1, then a zero filler bit).
  std::vector<uint64_t> logical = {1, 1, 1};
  REQUIRE(r.carol_wire.size() == 3);
  for (int t = 0; t < 3; ++t) {
    CHECK(r.carol_wire[t].bits == (logical[t] ^ wire_pad(seed, false, t, 2).bits));
    CHECK(r.david_wire[t].bits == (logical[t] ^ wire_pad(seed, true, t, 2).bits));
  }
  CHECK(r.ledger.total_charged() == 12);  // 2 bits x 2 players x 3 rounds
  CHECK(*r.carol_output == 1);
  CHECK(*r.david_output == 1);

  auto r2 = run_server_protocol(proto, x, BitString{1, 0, 1, 1}, seed);
  CHECK(*r2.carol_output == 0);
}

TEST_CASE("send cap is enforced") {
  auto proto = verbatim_relay(4);
  proto.player_cap_bits = 3;
  CHECK_THROWS_AS(run_server_protocol(proto, {1, 1, 1, 1}, {}, 1), DomainError);
}

TEST_CASE("simulation equivalence and cost on the module example") {
  // The module example asks for (Gamma=4, L=9, B=4); 4+3 is an odd universe,
  // so the parity-normalized Gamma=5 instance carries the same k and budget.
  auto net = build_network(5, 9, 4);
  const int U = net.params().universe();
  const int k = net.params().k;
  CHECK(k == 3);
  auto wl = make_flood_min_id(net.graph());

  Stream s(71);
  for (int it = 0; it < 20; ++it) {
    auto ec = random_perfect_matching(U, s.next());
    auto ed = random_perfect_matching(U, s.next());
    uint64_t seed = s.next();

    auto tp = simulate_via_server_model(net, ec, ed, wl, 2, seed);
    auto mask = embed_matchings(net, ec, ed);
    RunSpec spec;
    spec.net = &net.graph();
    spec.mask = &mask;
    spec.bandwidth_bits = 4;
    spec.rounds = 2;
    spec.seed = seed;
    auto direct = run(spec, wl.factory);

    auto eq = check_equivalence(direct.outputs, tp.outputs);
    CHECK(eq.equal);
    CHECK(tp.ledger.max_round_charge() <= 6 * k * 4);  // 72 bits
    CHECK(tp.ledger.within_budgets());
  }
}

TEST_CASE("zero rounds charge zero bits") {
  auto net = build_network(5, 9, 4);
  const int U = net.params().universe();
  auto wl = make_degree_check();
  auto tp = simulate_via_server_model(net, chain_matching_a(U), chain_matching_b(U),
                                      wl, 0, 3);
  CHECK(tp.ledger.total_charged() == 0);
  CHECK(tp.ledger.rounds.empty());
  // degree_check still reports at the compute-only pass.
  for (const auto& o : tp.outputs) CHECK(o.has_value());
}

TEST_CASE("round budget hypothesis is enforced") {
  auto net = build_network(5, 9, 4);
  const int U = net.params().universe();
  auto wl = make_degree_check();
  CHECK(max_admissible_round(9) == 2);
  CHECK_THROWS_AS(simulate_via_server_model(net, chain_matching_a(U),
                                            chain_matching_b(U), wl, 3, 3),
                  DomainError);
}

TEST_CASE("check_equivalence") {
  auto net = build_network(5, 9, 4);
  const int U = net.params().universe();
  auto wl = make_flood_min_id(net.graph());
  auto ec = chain_matching_a(U);
  auto ed = chain_matching_b(U);
  auto a = simulate_via_server_model(net, ec, ed, wl, 2, 5);
  auto b = simulate_via_server_model(net, ec, ed, wl, 2, 5);
  CHECK(check_equivalence(a.outputs, b.outputs).equal);

  // flood_min_id is deterministic, so shake the comparison by hand instead.
  auto c = a.outputs;
  (*c[0])[0] ^= 1;
  auto diff = check_equivalence(a.outputs, c);
  CHECK_FALSE(diff.equal);
  CHECK(diff.detail.find("node 0") != std::string::npos);

  std::vector<std::optional<Bytes>> shorter(a.outputs.begin(), a.outputs.end() - 1);
  CHECK_THROWS_AS(check_equivalence(a.outputs, shorter), DomainError);
}

TEST_CASE("equivalence holds across workloads, rounds and bandwidths") {
  Stream s(72);
  for (int B : {1, 4}) {
    auto net = build_network(5, 9, B);
    const int U = net.params().universe();
    for (const char* name : {"flood_min_id", "degree_check", "ham_verify"}) {
      auto wl = make_named_workload(name, net, B);
      for (int T : {0, 1, 2}) {
        auto ec = random_perfect_matching(U, s.next());
        auto ed = random_perfect_matching(U, s.next());
        uint64_t seed = s.next();
        auto tp = simulate_via_server_model(net, ec, ed, wl, T, seed);
        auto mask = embed_matchings(net, ec, ed);
        RunSpec spec;
        spec.net = &net.graph();
        spec.mask = &mask;
        spec.bandwidth_bits = B;
        spec.rounds = T;
        spec.seed = seed;
        spec.node_inputs = wl.node_inputs.empty() ? nullptr : &wl.node_inputs;
        auto direct = run(spec, wl.factory);
        CHECK(check_equivalence(direct.outputs, tp.outputs).equal);
        CHECK(tp.ledger.within_budgets());
      }
    }
  }
}
