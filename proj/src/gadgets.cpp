#include "lbw/gadgets.hpp"

#include <algorithm>

namespace lbw {

void BitstringPair::validate() const {
  require(x.size() == y.size(), Err::ShapeMismatch, "|x| != |y|");
  require(!x.empty(), Err::EmptyInput, "empty bitstring pair");
  for (uint8_t b : x) require(b <= 1, Err::BadInput, "x is not a bit vector");
  for (uint8_t b : y) require(b <= 1, Err::BadInput, "y is not a bit vector");
}

BitstringPair make_bit_pair(const std::string& x_bits, const std::string& y_bits) {
  BitstringPair p;
  for (char c : x_bits) {
    require(c == '0' || c == '1', Err::BadInput, "x must be a 0/1 string");
    p.x.push_back(c == '1');
  }
  for (char c : y_bits) {
    require(c == '0' || c == '1', Err::BadInput, "y must be a 0/1 string");
    p.y.push_back(c == '1');
  }
  return p;
}

int hamming_distance(const BitstringPair& p) {
  p.validate();
  int d = 0;
  for (size_t i = 0; i < p.n(); ++i) d += p.x[i] != p.y[i];
  return d;
}

int expected_ipmod3(const BitstringPair& p) {
  require(p.x.size() == p.y.size(), Err::ShapeMismatch, "|x| != |y|");
  int s = 0;
  for (size_t i = 0; i < p.n(); ++i) s = (s + p.x[i] * p.y[i]) % 3;
  return s == 0 ? 1 : 0;
}

namespace {

// sigma: Carol's layer permutation, identity or the transposition (0 1).
inline int sigma(int j, int x) { return x ? (j == 0 ? 1 : (j == 1 ? 0 : 2)) : j; }
// rho: David's layer permutation, identity or the transposition (0 2).
inline int rho(int j, int y) { return y ? (j == 0 ? 2 : (j == 2 ? 0 : j)) : j; }

}  // namespace

PartitionedGraph build_ipmod3_instance(const BitstringPair& p) {
  p.validate();
  const int n = static_cast<int>(p.n());
  PartitionedGraph g;
  g.node_count = static_cast<NodeId>(12 * n);
  g.matching_required = true;
  g.meta["kind"] = "ipmod3";
  g.meta["n_bits"] = std::to_string(n);

  // Block i holds boundary set i (the right boundary of gadget i) plus the
  // three internal layers of gadget i. Gadget i's left boundary is boundary
  // set i-1; gadget 0 wraps to boundary set n-1.
  auto boundary = [&](int i, int j) { return static_cast<NodeId>(12 * i + j); };
  auto layer_a = [&](int i, int j) { return static_cast<NodeId>(12 * i + 3 + j); };
  auto layer_b = [&](int i, int j) { return static_cast<NodeId>(12 * i + 6 + j); };
  auto layer_c = [&](int i, int j) { return static_cast<NodeId>(12 * i + 9 + j); };

  for (int i = 0; i < n; ++i) {
    const int left = (i + n - 1) % n;
    const int xi = p.x[i], yi = p.y[i];
    for (int j = 0; j < 3; ++j) {
      g.carol_edges.emplace_back(boundary(left, j), layer_a(i, sigma(j, xi)));
      g.carol_edges.emplace_back(layer_b(i, j), layer_c(i, sigma(j, xi)));
      g.david_edges.emplace_back(layer_a(i, j), layer_b(i, rho(j, yi)));
      g.david_edges.emplace_back(layer_c(i, j), boundary(i, rho(j, yi)));
    }
  }
  return g;
}

PartitionedGraph build_gapeq_instance(const BitstringPair& p) {
  p.validate();
  const int n = static_cast<int>(p.n());
  PartitionedGraph g;
  g.node_count = static_cast<NodeId>(6 * n);
  g.matching_required = true;
  g.meta["kind"] = "gapeq";
  g.meta["n_bits"] = std::to_string(n);

  auto boundary = [&](int i, int j) { return static_cast<NodeId>(6 * i + j); };
  auto internal = [&](int i, int j) { return static_cast<NodeId>(6 * i + 2 + j); };

  for (int i = 0; i < n; ++i) {
    // Left boundary tracks. Gadget 0 wraps to boundary set n-1 crosswise
    // (track 0 meets track 1) so that each share stays a perfect matching.
    NodeId L0, L1;
    if (i == 0) {
      L0 = boundary(n - 1, 1);
      L1 = boundary(n - 1, 0);
    } else {
      L0 = boundary(i - 1, 0);
      L1 = boundary(i - 1, 1);
    }
    const NodeId R0 = boundary(i, 0), R1 = boundary(i, 1);
    const NodeId a0 = internal(i, 0), a1 = internal(i, 1);
    const NodeId b0 = internal(i, 2), b1 = internal(i, 3);

    if (p.x[i] == 0) {
      g.carol_edges.emplace_back(L0, a0);
      g.carol_edges.emplace_back(L1, a1);
      g.carol_edges.emplace_back(b0, b1);
    } else {
      g.carol_edges.emplace_back(L0, a1);
      g.carol_edges.emplace_back(L1, b0);
      g.carol_edges.emplace_back(a0, b1);
    }
    if (p.y[i] == 0) {
      g.david_edges.emplace_back(R0, a0);
      g.david_edges.emplace_back(R1, b1);
      g.david_edges.emplace_back(a1, b0);
    } else {
      g.david_edges.emplace_back(R0, b1);
      g.david_edges.emplace_back(R1, b0);
      g.david_edges.emplace_back(a0, a1);
    }
  }
  return g;
}

GapPromise gap_promise_check(const BitstringPair& p, int delta) {
  require(delta >= 0, Err::BadInput, "delta must be nonnegative");
  int d = hamming_distance(p);
  if (d == 0) return GapPromise::Equal;
  if (d > delta) return GapPromise::Far;
  return GapPromise::Violated;
}

const char* gap_promise_name(GapPromise v) {
  switch (v) {
    case GapPromise::Equal: return "equal";
    case GapPromise::Far: return "far";
    case GapPromise::Violated: return "violated";
  }
  return "?";
}

GadgetLayout ipmod3_layout() {
  GadgetLayout l;
  l.name = "ipmod3";
  l.boundary_size = 3;
  l.internal_size = 9;
  l.pairing = GadgetLayout::Pairing::Permutation;
  // Slots: 0..2 left boundary, 3..5 layer a, 6..8 layer b, 9..11 layer c,
  // 12..14 right boundary.
  for (int x = 0; x < 2; ++x)
    for (int j = 0; j < 3; ++j) {
      l.carol_edges[x].emplace_back(j, 3 + sigma(j, x));
      l.carol_edges[x].emplace_back(6 + j, 9 + sigma(j, x));
    }
  for (int y = 0; y < 2; ++y)
    for (int j = 0; j < 3; ++j) {
      l.david_edges[y].emplace_back(3 + j, 6 + rho(j, y));
      l.david_edges[y].emplace_back(9 + j, 12 + rho(j, y));
    }
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      l.boundary_perm[x][y] = (x && y) ? std::vector<int>{2, 0, 1}
                                       : std::vector<int>{0, 1, 2};
  return l;
}

GadgetLayout gapeq_layout() {
  GadgetLayout l;
  l.name = "gapeq";
  l.boundary_size = 2;
  l.internal_size = 4;
  l.pairing = GadgetLayout::Pairing::ThroughOrClosed;
  // Slots: 0,1 left boundary; 2=a0, 3=a1, 4=b0, 5=b1; 6,7 right boundary.
  l.carol_edges[0] = {{0, 2}, {1, 3}, {4, 5}};
  l.carol_edges[1] = {{0, 3}, {1, 4}, {2, 5}};
  l.david_edges[0] = {{6, 2}, {7, 5}, {3, 4}};
  l.david_edges[1] = {{6, 5}, {7, 4}, {2, 3}};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) l.closed[x][y] = x != y;
  return l;
}

GadgetReport verify_gadget_contract(const GadgetLayout& layout) {
  const int nb = layout.boundary_size;
  const int ni = layout.internal_size;
  const int total = layout.total_slots();
  require(nb >= 1 && ni >= 0, Err::BadInput, "degenerate layout");

  auto is_left = [&](int s) { return s < nb; };
  auto is_right = [&](int s) { return s >= nb + ni; };
  auto is_internal = [&](int s) { return s >= nb && s < nb + ni; };

  GadgetReport report;
  report.ok = true;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const std::string tag = "(x=" + std::to_string(x) + ", y=" + std::to_string(y) + ")";
      auto violation = [&](const std::string& why) {
        fail(Err::ContractViolation, "gadget " + layout.name + " case " + tag + ": " + why);
      };

      // Coverage: Carol matches left+internals, never the right boundary;
      // David symmetric.
      std::vector<int> dc(total, 0), dd(total, 0);
      for (const auto& [u, v] : layout.carol_edges[x]) {
        if (u >= static_cast<NodeId>(total) || v >= static_cast<NodeId>(total))
          violation("carol edge slot out of range");
        if (is_right(static_cast<int>(u)) || is_right(static_cast<int>(v)))
          violation("carol edge touches the right boundary");
        dc[u]++;
        dc[v]++;
      }
      for (const auto& [u, v] : layout.david_edges[y]) {
        if (u >= static_cast<NodeId>(total) || v >= static_cast<NodeId>(total))
          violation("david edge slot out of range");
        if (is_left(static_cast<int>(u)) || is_left(static_cast<int>(v)))
          violation("david edge touches the left boundary");
        dd[u]++;
        dd[v]++;
      }
      for (int s = 0; s < total; ++s) {
        if (!is_right(s) && dc[s] != 1)
          violation("carol template is not a perfect matching on left+internals");
        if (!is_left(s) && dd[s] != 1)
          violation("david template is not a perfect matching on internals+right");
      }

      Graph g(static_cast<NodeId>(total));
      for (const auto& e : layout.carol_edges[x]) g.add_edge(e.first, e.second);
      for (const auto& e : layout.david_edges[y]) {
        if (g.has_edge(e.first, e.second)) violation("shares overlap on an edge");
        g.add_edge(e.first, e.second);
      }

      auto dec = cycle_decomposition(g);
      if (dec.cycle_count() != 0) violation("in-gadget union contains a cycle");
      std::vector<int> right_end_of(nb, -1);  // per left track: reached slot
      std::vector<uint8_t> used(total, 0);
      for (const auto& comp : dec.components) {
        if (comp.kind == Component::Kind::Isolated)
          violation("isolated node inside gadget");
        int a = static_cast<int>(comp.nodes.front());
        int b = static_cast<int>(comp.nodes.back());
        if (is_internal(a) || is_internal(b))
          violation("path ends at an internal node");
        for (NodeId v : comp.nodes) used[v] = 1;
        if (is_left(a) && !is_left(b)) right_end_of[a] = b;
        if (is_left(b) && !is_left(a)) right_end_of[b] = a;
        if (is_left(a) && is_left(b)) {
          right_end_of[a] = b;
          right_end_of[b] = a;
        }
      }
      for (int s = 0; s < total; ++s)
        if (!used[s]) violation("node not covered by any path");

      GadgetCase c;
      c.x = x;
      c.y = y;
      c.ok = true;

      if (layout.pairing == GadgetLayout::Pairing::Permutation) {
        std::vector<int> perm(nb, -1);
        for (int j = 0; j < nb; ++j) {
          int end = right_end_of[j];
          if (end < nb + ni) violation("left track does not reach the right boundary");
          perm[j] = end - (nb + ni);
        }
        if (perm != layout.boundary_perm[x][y])
          violation("boundary permutation differs from the declared one");
        c.detail = "perm=";
        for (int v : perm) c.detail += std::to_string(v);
      } else {
        bool closed = false, through = true;
        for (int j = 0; j < nb; ++j) {
          if (is_left(right_end_of[j])) {
            closed = true;
            through = false;
          } else if (right_end_of[j] != nb + ni + j) {
            through = false;
          }
        }
        if (layout.closed[x][y]) {
          if (!closed) violation("expected closed pairing, got through-paths");
        } else {
          if (!through) violation("expected identity through-paths");
        }
        c.detail = layout.closed[x][y] ? "closed" : "through";
      }
      report.cases.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace lbw
