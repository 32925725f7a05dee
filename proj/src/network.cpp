#include "lbw/network.hpp"

#include <algorithm>

#include "lbw/rng.hpp"

namespace lbw {

const char* edge_cat_name(EdgeCat c) {
  switch (c) {
    case EdgeCat::Path: return "path";
    case EdgeCat::Highway: return "highway";
    case EdgeCat::Vertical: return "vertical";
    case EdgeCat::InterHighway: return "inter_highway";
    case EdgeCat::CliqueLeft: return "clique_left";
    case EdgeCat::CliqueRight: return "clique_right";
  }
  return "?";
}

const char* party_name(Party p) {
  switch (p) {
    case Party::Carol: return "carol";
    case Party::David: return "david";
    case Party::Server: return "server";
  }
  return "?";
}

int normalize_L(int L_request) {
  require(L_request >= 3, Err::BadInput, "L must be at least 3");
  int L = 3;
  while (L < L_request) L = 2 * (L - 1) + 1;
  return L;
}

int highway_count_for(int L) {
  require(L >= 3, Err::BadL, "L must be at least 3; try normalize_L");
  int m = L - 1;
  int k = 0;
  while (m > 1) {
    require(m % 2 == 0, Err::BadL,
            "L = " + std::to_string(L) + " is not 2^i + 1; nearest valid L is " +
                std::to_string(normalize_L(L)));
    m /= 2;
    ++k;
  }
  return k;
}

int normalize_gamma(int gamma, int L) {
  int k = highway_count_for(L);
  return (gamma + k) % 2 == 0 ? gamma : gamma + 1;
}

NodeId HardNetwork::path_node(int line, int position) const {
  require(1 <= line && line <= params_.gamma && 1 <= position && position <= params_.L,
          Err::IndexOutOfRange, "path node out of range");
  return static_cast<NodeId>((line - 1) * params_.L + (position - 1));
}

bool HardNetwork::has_highway_node(int line, int position) const {
  if (line < 1 || line > params_.k || position < 1 || position > params_.L) return false;
  return highway_index_[line - 1][position - 1] >= 0;
}

NodeId HardNetwork::highway_node(int line, int position) const {
  require(has_highway_node(line, position), Err::IndexOutOfRange,
          "no highway node at that position");
  return static_cast<NodeId>(highway_index_[line - 1][position - 1]);
}

NodeId HardNetwork::left_endpoint(int u) const {
  require(0 <= u && u < params_.universe(), Err::IndexOutOfRange, "endpoint out of range");
  return u < params_.gamma ? path_node(u + 1, 1) : highway_node(u - params_.gamma + 1, 1);
}

NodeId HardNetwork::right_endpoint(int u) const {
  require(0 <= u && u < params_.universe(), Err::IndexOutOfRange, "endpoint out of range");
  return u < params_.gamma ? path_node(u + 1, params_.L)
                           : highway_node(u - params_.gamma + 1, params_.L);
}

HardNetwork build_network(int gamma, int L, int bandwidth) {
  require(gamma >= 1, Err::BadInput, "Gamma must be at least 1");
  require(bandwidth >= 1 && bandwidth <= 64, Err::BadInput, "B must be in 1..64");
  const int k = highway_count_for(L);
  require((gamma + k) % 2 == 0, Err::OddUniverse,
          "Gamma + k = " + std::to_string(gamma + k) +
              " is odd; no perfect matchings over U exist");

  HardNetwork net;
  net.params_ = NetworkParams{gamma, L, bandwidth, k};

  const int path_nodes = gamma * L;
  int total = path_nodes;
  net.highway_index_.assign(k, std::vector<int>(L, -1));
  std::vector<NodeRole> roles(path_nodes);
  for (int i = 1; i <= gamma; ++i)
    for (int j = 1; j <= L; ++j)
      roles[(i - 1) * L + (j - 1)] = {NodeRole::Kind::Path, i, j};
  for (int i = 1; i <= k; ++i) {
    const int step = 1 << i;
    for (int j = 1; j <= L; j += step) {
      net.highway_index_[i - 1][j - 1] = total++;
      roles.push_back({NodeRole::Kind::Highway, i, j});
    }
  }
  net.roles_ = std::move(roles);
  net.graph_ = Graph(static_cast<NodeId>(total));
  auto add = [&](NodeId u, NodeId v, EdgeCat cat) {
    net.graph_.add_edge(u, v);
    net.cats_.push_back(cat);
  };

  for (int i = 1; i <= gamma; ++i)
    for (int j = 1; j < L; ++j)
      add(net.path_node(i, j), net.path_node(i, j + 1), EdgeCat::Path);

  for (int i = 1; i <= k; ++i) {
    const int step = 1 << i;
    for (int j = 1; j + step <= L; j += step)
      add(net.highway_node(i, j), net.highway_node(i, j + step), EdgeCat::Highway);
  }

  // Verticals: every H^1 position connects to all paths; higher highways hook
  // into the one below at shared positions.
  for (int j = 1; j <= L; j += 2)
    for (int i = 1; i <= gamma; ++i)
      add(net.highway_node(1, j), net.path_node(i, j), EdgeCat::Vertical);
  for (int i = 2; i <= k; ++i)
    for (int j = 1; j <= L; ++j)
      if (net.has_highway_node(i, j))
        add(net.highway_node(i - 1, j), net.highway_node(i, j), EdgeCat::InterHighway);

  // End cliques. Vertical and inter-highway connectors already join some
  // endpoint pairs at positions 1 and L; those edges keep their structural
  // category and simply double as clique edges.
  const int U = gamma + k;
  for (int a = 0; a < U; ++a)
    for (int b = a + 1; b < U; ++b) {
      NodeId x = net.left_endpoint(a), y = net.left_endpoint(b);
      if (!net.graph_.has_edge(x, y)) add(x, y, EdgeCat::CliqueLeft);
    }
  for (int a = 0; a < U; ++a)
    for (int b = a + 1; b < U; ++b) {
      NodeId x = net.right_endpoint(a), y = net.right_endpoint(b);
      if (!net.graph_.has_edge(x, y)) add(x, y, EdgeCat::CliqueRight);
    }

  return net;
}

NetworkStats network_stats(const HardNetwork& net) {
  NetworkStats s;
  s.node_count = static_cast<int>(net.graph().node_count());
  auto d = graph_diameter(net.graph());
  s.diameter = d.diameter;
  s.diameter_exact = d.exact;
  return s;
}

void validate_perfect_matching(const Matching& m, int universe) {
  std::vector<int> deg(universe, 0);
  for (const auto& [u, v] : m) {
    require(u < static_cast<NodeId>(universe) && v < static_cast<NodeId>(universe) && u != v,
            Err::NotPerfectMatching, "matching edge out of range");
    deg[u]++;
    deg[v]++;
  }
  for (int u = 0; u < universe; ++u)
    require(deg[u] == 1, Err::NotPerfectMatching,
            "endpoint u" + std::to_string(u) + " is matched " + std::to_string(deg[u]) +
                " times");
}

EdgeMask embed_matchings(const HardNetwork& net, const Matching& carol,
                         const Matching& david) {
  const int U = net.params().universe();
  validate_perfect_matching(carol, U);
  validate_perfect_matching(david, U);

  const auto& g = net.graph();
  EdgeMask mask(g.edges().size(), 0);
  const auto& cats = net.edge_categories();
  for (size_t e = 0; e < mask.size(); ++e)
    if (cats[e] == EdgeCat::Path || cats[e] == EdgeCat::Highway) mask[e] = 1;

  auto mark = [&](NodeId a, NodeId b) {
    int idx = g.edge_index(a, b);
    require(idx >= 0, Err::IndexOutOfRange, "clique edge missing");
    mask[idx] = 1;
  };
  for (const auto& [a, b] : carol) mark(net.left_endpoint(a), net.left_endpoint(b));
  for (const auto& [a, b] : david) mark(net.right_endpoint(a), net.right_endpoint(b));
  return mask;
}

int matching_union_cycles(int universe, const Matching& carol, const Matching& david) {
  validate_perfect_matching(carol, universe);
  validate_perfect_matching(david, universe);
  std::vector<int> pc(universe), pd(universe);
  for (const auto& [u, v] : carol) {
    pc[u] = v;
    pc[v] = u;
  }
  for (const auto& [u, v] : david) {
    pd[u] = v;
    pd[v] = u;
  }
  std::vector<uint8_t> seen(universe, 0);
  int cycles = 0;
  for (int s = 0; s < universe; ++s) {
    if (seen[s]) continue;
    ++cycles;
    int cur = s;
    bool use_carol = true;
    while (!seen[cur]) {
      seen[cur] = 1;
      cur = use_carol ? pc[cur] : pd[cur];
      use_carol = !use_carol;
    }
  }
  return cycles;
}

int max_admissible_round(int L) {
  // t <= L/2 - 2 over the rationals; integer t (floor, negative when L = 3).
  return L >= 4 ? (L - 4) / 2 : -1;
}

OwnershipPartition ownership_partition(const HardNetwork& net, int t) {
  const int L = net.params().L;
  require(t >= 0, Err::RoundOutOfRange, "t must be nonnegative");
  require(t <= max_admissible_round(L),
          Err::RoundOutOfRange,
          "t = " + std::to_string(t) + " exceeds L/2 - 2 for L = " + std::to_string(L));
  OwnershipPartition p;
  p.t = t;
  p.owner.resize(net.graph().node_count());
  for (NodeId v = 0; v < net.graph().node_count(); ++v) {
    int pos = net.roles()[v].position;
    if (pos <= t + 1)
      p.owner[v] = Party::Carol;
    else if (pos >= L - t)
      p.owner[v] = Party::David;
    else
      p.owner[v] = Party::Server;
  }
  return p;
}

std::vector<NodeId> OwnershipPartition::members(Party p) const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < owner.size(); ++v)
    if (owner[v] == p) out.push_back(v);
  return out;
}

Matching random_perfect_matching(int universe, uint64_t seed) {
  require(universe >= 2 && universe % 2 == 0, Err::OddUniverse,
          "universe must be even and positive");
  std::vector<NodeId> ids(universe);
  for (int i = 0; i < universe; ++i) ids[i] = static_cast<NodeId>(i);
  Stream s(seed);
  for (int i = universe - 1; i > 0; --i)
    std::swap(ids[i], ids[s.below(static_cast<uint64_t>(i) + 1)]);
  Matching m;
  for (int i = 0; i < universe; i += 2) {
    NodeId a = ids[i], b = ids[i + 1];
    m.emplace_back(std::min(a, b), std::max(a, b));
  }
  return m;
}

}  // namespace lbw
