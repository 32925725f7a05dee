#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace lbw;
using namespace lbw::test;

TEST_CASE("normalize L") {
  CHECK(normalize_L(3) == 3);
  CHECK(normalize_L(4) == 5);
  CHECK(normalize_L(5) == 5);
  CHECK(normalize_L(1000) == 1025);
  CHECK_THROWS_AS(normalize_L(2), DomainError);
}

TEST_CASE("build network shapes") {
  auto net = build_network(4, 5, 8);
  CHECK(net.params().k == 2);
  CHECK(net.graph().node_count() == 25);  // 20 + 3 + 2
  // H^1 sits on positions 1,3,5; H^2 on 1,5.
  CHECK(net.has_highway_node(1, 1));
  CHECK(net.has_highway_node(1, 3));
  CHECK(net.has_highway_node(1, 5));
  CHECK_FALSE(net.has_highway_node(1, 2));
  CHECK(net.has_highway_node(2, 1));
  CHECK_FALSE(net.has_highway_node(2, 3));
  CHECK(net.has_highway_node(2, 5));

  auto tiny = build_network(3, 3, 1);
  CHECK(tiny.params().k == 1);
  CHECK(tiny.graph().node_count() == 11);  // 9 + 1 + 1

  CHECK_THROWS_AS(build_network(4, 4, 1), DomainError);   // BadL
  CHECK_THROWS_AS(build_network(4, 9, 1), DomainError);   // OddUniverse: 4+3
  CHECK(normalize_gamma(4, 9) == 5);
  CHECK(normalize_gamma(6, 17) == 6);
}

TEST_CASE("node count matches the closed formula on a grid") {
  for (int L : {5, 9, 17, 33}) {
    int k = highway_count_for(L);
    for (int gamma : {1, 4, 7, 12}) {
      int g = normalize_gamma(gamma, L);
      auto net = build_network(g, L, 4);
      CHECK(net.graph().node_count() ==
            static_cast<NodeId>(g * L + (L - 2) + k));
    }
  }
}

TEST_CASE("bad L error suggests normalization") {
  try {
    build_network(4, 12, 1);
    FAIL("expected BadL");
  } catch (const DomainError& e) {
    CHECK(e.code() == Err::BadL);
    CHECK(std::string(e.what()).find("17") != std::string::npos);
  }
}

TEST_CASE("diameter stays logarithmic") {
  std::vector<int> diameters;
  for (int L : {5, 9, 17, 33, 65}) {
    int k = highway_count_for(L);
    int gamma = normalize_gamma(4, L);
    auto net = build_network(gamma, L, 4);
    auto stats = network_stats(net);
    CHECK(stats.diameter_exact);
    CHECK(stats.diameter <= 2 * k + 6);
    diameters.push_back(stats.diameter);
  }
  // Doubling L grows the measured diameter by at most 2 + o(1).
  for (size_t i = 1; i < diameters.size(); ++i)
    CHECK(diameters[i] - diameters[i - 1] <= 3);
}

TEST_CASE("embed matchings") {
  auto net = build_network(4, 5, 8);
  const int U = net.params().universe();  // 6

  SUBCASE("chained matchings give a hamiltonian subnetwork") {
    auto mask = embed_matchings(net, chain_matching_a(U), chain_matching_b(U));
    Graph m = subgraph_from_mask(net.graph(), mask);
    CHECK(is_hamiltonian_cycle(m));
    CHECK(matching_union_cycles(U, chain_matching_a(U), chain_matching_b(U)) == 1);
  }

  SUBCASE("identical matchings give U/2 cycles on both sides") {
    auto mask = embed_matchings(net, chain_matching_a(U), chain_matching_a(U));
    Graph m = subgraph_from_mask(net.graph(), mask);
    auto dec = cycle_decomposition(m);
    CHECK(dec.cycle_count() == U / 2);
    CHECK(matching_union_cycles(U, chain_matching_a(U), chain_matching_a(U)) == U / 2);
  }

  SUBCASE("cycle counts agree for random matchings") {
    Stream s(77);
    for (int it = 0; it < 25; ++it) {
      auto ec = random_perfect_matching(U, s.next());
      auto ed = random_perfect_matching(U, s.next());
      auto mask = embed_matchings(net, ec, ed);
      auto dec = cycle_decomposition(subgraph_from_mask(net.graph(), mask));
      CHECK(dec.cycle_count() == matching_union_cycles(U, ec, ed));
      CHECK(dec.path_count() == 0);
      CHECK(dec.isolated_count() == 0);
    }
  }

  SUBCASE("imperfect matchings are rejected") {
    Matching missing = chain_matching_a(U);
    missing.pop_back();
    CHECK_THROWS_AS(embed_matchings(net, missing, chain_matching_b(U)), DomainError);
    Matching doubled = chain_matching_a(U);
    doubled.emplace_back(0, 2);
    CHECK_THROWS_AS(embed_matchings(net, doubled, chain_matching_b(U)), DomainError);
  }
}

TEST_CASE("ownership partition") {
  // 4+3 would be an odd universe, so use 5 paths for L = 9.
  auto net5 = build_network(5, 9, 4);

  auto p0 = ownership_partition(net5, 0);
  for (NodeId v = 0; v < net5.graph().node_count(); ++v) {
    int pos = net5.roles()[v].position;
    if (pos == 1) CHECK(p0.owner[v] == Party::Carol);
    else if (pos == 9) CHECK(p0.owner[v] == Party::David);
    else CHECK(p0.owner[v] == Party::Server);
  }

  auto p1 = ownership_partition(net5, 1);
  for (NodeId v = 0; v < net5.graph().node_count(); ++v) {
    int pos = net5.roles()[v].position;
    CHECK((p1.owner[v] == Party::Carol) == (pos <= 2));
    CHECK((p1.owner[v] == Party::David) == (pos >= 8));
  }

  CHECK(max_admissible_round(9) == 2);
  CHECK_THROWS_AS(ownership_partition(net5, 3), DomainError);

  // Monotone growth: players never lose nodes.
  for (int t = 0; t < 2; ++t) {
    auto a = ownership_partition(net5, t);
    auto b = ownership_partition(net5, t + 1);
    for (NodeId v = 0; v < net5.graph().node_count(); ++v) {
      if (a.owner[v] == Party::Carol) CHECK(b.owner[v] == Party::Carol);
      if (a.owner[v] == Party::David) CHECK(b.owner[v] == Party::David);
    }
  }
}

TEST_CASE("ownership partition is rejected for oversized t") {
  CHECK(max_admissible_round(5) == 0);
  CHECK(max_admissible_round(17) == 6);
  CHECK(max_admissible_round(33) == 14);
}
