#include "lbw/bounds.hpp"

#include <cmath>
#include <sstream>

#include "lbw/congest.hpp"
#include "lbw/three_party.hpp"
#include "lbw/workloads.hpp"

namespace lbw {

namespace {

void fill_common(BoundReport& r, double n) {
  r.k = highway_count_for(r.L);
  if ((r.gamma + r.k) % 2 != 0) {
    r.gamma += 1;
    r.gamma_bumped = true;
  }
  r.t_budget = max_admissible_round(r.L);
  double size = static_cast<double>(r.gamma) * r.L;
  r.size_consistent = size >= n / 4.0 && size <= n * 4.0;
}

}  // namespace

BoundReport verification_params(double n, double bandwidth, double c, double cprime) {
  require(n >= 16, Err::BadInput, "n must be at least 16");
  require(bandwidth >= 1, Err::BadInput, "B must be at least 1");
  require(c > 0 && cprime > 0, Err::BadInput, "constants must be positive");

  BoundReport r;
  r.kind = "verification";
  r.n = n;
  r.bandwidth = bandwidth;
  r.c = c;
  r.cprime = cprime;

  const double lg = std::log2(n);
  const double root = std::sqrt(n / (bandwidth * lg));
  r.raw_L = static_cast<int>(std::floor((cprime / c) * root));
  require(r.raw_L >= 3, Err::DegenerateParams,
          "computed L = " + std::to_string(r.raw_L) + " is below 3");
  r.L = normalize_L(r.raw_L);
  r.gamma = static_cast<long long>(std::ceil(std::sqrt(bandwidth * n * lg)));
  r.bound_value = (cprime / (4 * c)) * root;
  r.contradiction_threshold = r.raw_L / 2.0;
  fill_common(r, n);
  return r;
}

BoundReport optimization_params(double n, double bandwidth, double aspect,
                                double alpha, double c, double cprime, double beta) {
  require(n >= 16, Err::BadInput, "n must be at least 16");
  require(bandwidth >= 1, Err::BadInput, "B must be at least 1");
  require(alpha >= 1, Err::BadInput, "alpha must be at least 1");
  require(alpha < aspect, Err::AlphaNotBelowW, "the hypothesis needs alpha < W");
  require(c > 0 && cprime > 0 && beta > 0, Err::BadInput,
          "constants must be positive");

  BoundReport r;
  r.kind = "optimization";
  r.n = n;
  r.bandwidth = bandwidth;
  r.aspect = aspect;
  r.alpha = alpha;
  r.c = c;
  r.cprime = cprime;
  r.beta = beta;

  const double lg = std::log2(n);
  const double sqrt_blog = std::sqrt(bandwidth * lg);
  const double wa = aspect / alpha;
  const double sn = std::sqrt(n);
  r.min_branch = wa <= sn ? "W/alpha" : "sqrt(n)";
  r.raw_L = static_cast<int>(std::floor((cprime / (c * sqrt_blog)) * std::min(wa, sn)));
  require(r.raw_L >= 3, Err::DegenerateParams,
          "computed L = " + std::to_string(r.raw_L) + " is below 3");
  r.L = normalize_L(r.raw_L);
  r.gamma = static_cast<long long>(std::ceil(sqrt_blog * std::max(n * alpha / aspect, sn)));
  r.bound_value = (cprime / (4 * c)) * std::min(wa, std::sqrt(n / (bandwidth * lg)));
  r.contradiction_threshold = r.raw_L / 2.0;
  fill_common(r, n);
  r.critical_beta = alpha * n / (static_cast<double>(r.gamma) * aspect);
  r.far_weight_ok = beta * static_cast<double>(r.gamma) * aspect > alpha * n;
  return r;
}

namespace {

struct PipelineGeometry {
  int L = 0;
  int k = 0;
  int gamma = 0;
  int universe = 0;
  int rounds = 0;  // verifier rounds needed
};

int gadget_nodes(PipelineProblem problem, int n_bits) {
  return problem == PipelineProblem::IPmod3 ? 12 * n_bits : 6 * n_bits;
}

// Geometry for a candidate L; returns false when Gamma would be nonpositive
// or the verifier cannot finish within the Theorem budget.
bool try_geometry(PipelineProblem problem, int n_bits, int L, int bandwidth,
                  PipelineGeometry& out) {
  int k = highway_count_for(L);
  int universe = gadget_nodes(problem, n_bits);
  int gamma = universe - k;
  if (gamma < 1) return false;
  HardNetwork net = build_network(gamma, L, bandwidth);
  auto ew = make_ham_verify_endpoint(net, bandwidth);
  if (ew.suggested_rounds > max_admissible_round(L)) return false;
  out = {L, k, gamma, universe, ew.suggested_rounds};
  return true;
}

}  // namespace

int pipeline_min_L(PipelineProblem problem, int n_bits, int bandwidth) {
  PipelineGeometry geo;
  for (int L = 5; L <= (1 << 14) + 1; L = 2 * (L - 1) + 1)
    if (try_geometry(problem, n_bits, L, bandwidth, geo)) return L;
  fail(Err::Sizing, "no workable L up to 2^14 + 1 for this input size");
}

PipelineReport pipeline(const BitstringPair& input, PipelineProblem problem,
                        int L_request, int bandwidth, uint64_t seed,
                        int delta_target) {
  input.validate();
  BitstringPair padded = input;
  PipelineReport rep;
  rep.problem = problem == PipelineProblem::IPmod3 ? "ipmod3" : "gapeq";
  rep.n_bits = static_cast<int>(input.n());
  rep.bandwidth = bandwidth;

  bool expected;
  if (problem == PipelineProblem::IPmod3) {
    expected = expected_ipmod3(input) == 0;  // Hamiltonian iff sum mod 3 != 0
  } else {
    int delta = hamming_distance(input);
    require(!(delta >= 1 && delta <= std::max(1, delta_target)), Err::PromiseViolated,
            "Hamming distance " + std::to_string(delta) +
                " violates the gap promise (delta in [1, " +
                std::to_string(std::max(1, delta_target)) + "])");
    expected = delta == 0;
  }
  rep.expected = expected;

  const int L = normalize_L(L_request);
  const int k = highway_count_for(L);

  // Padding with (0,0) bit pairs changes neither sum x_i y_i mod 3 nor the
  // Hamming distance; it only grows the gadget until Gamma is positive.
  while (gadget_nodes(problem, static_cast<int>(padded.n())) - k < 1) {
    padded.x.push_back(0);
    padded.y.push_back(0);
    rep.padded_bits += 1;
  }

  PipelineGeometry geo;
  if (!try_geometry(problem, static_cast<int>(padded.n()), L, bandwidth, geo)) {
    int suggestion = pipeline_min_L(problem, static_cast<int>(padded.n()), bandwidth);
    int sgamma = gadget_nodes(problem, static_cast<int>(padded.n())) -
                 highway_count_for(suggestion);
    fail(Err::Sizing, "L = " + std::to_string(L) +
                          " cannot host the verifier within L/2 - 2 rounds; "
                          "suggested (Gamma, L) = (" + std::to_string(sgamma) + ", " +
                          std::to_string(suggestion) + ")");
  }
  rep.L = geo.L;
  rep.k = geo.k;
  rep.gamma = geo.gamma;
  rep.universe = geo.universe;
  rep.rounds = geo.rounds;

  PartitionedGraph gadget = problem == PipelineProblem::IPmod3
                                ? build_ipmod3_instance(padded)
                                : build_gapeq_instance(padded);
  gadget.validate();

  HardNetwork net = build_network(geo.gamma, geo.L, bandwidth);
  auto ew = make_ham_verify_endpoint(net, bandwidth);
  EdgeMask mask = embed_matchings(net, gadget.carol_edges, gadget.david_edges);

  RunSpec spec;
  spec.net = &net.graph();
  spec.mask = &mask;
  spec.bandwidth_bits = bandwidth;
  spec.rounds = geo.rounds;
  spec.seed = seed;
  spec.node_inputs = &ew.workload.node_inputs;
  RunResult direct = run(spec, ew.workload.factory);

  ThreePartyResult tp = simulate_via_server_model(net, gadget.carol_edges,
                                                  gadget.david_edges, ew.workload,
                                                  geo.rounds, seed);

  auto digest = [](const std::vector<std::optional<Bytes>>& outs, bool& verdict) {
    bool all = true, first = true;
    for (const auto& o : outs) {
      if (!o || o->empty()) return false;
      bool v = (*o)[0] != 0;
      if (first) {
        verdict = v;
        first = false;
      } else if (v != verdict) {
        all = false;
      }
    }
    return all && !first;
  };
  bool dv = false, tv = false;
  bool du = digest(direct.outputs, dv);
  bool tu = digest(tp.outputs, tv);
  rep.unanimous = du && tu;
  rep.direct_verdict = dv;
  rep.three_party_verdict = tv;
  rep.charged_total = tp.ledger.total_charged();
  rep.max_round_charge = tp.ledger.max_round_charge();
  rep.round_budget = tp.ledger.round_budget();
  rep.cost_ok = tp.ledger.within_budgets();
  rep.ok = rep.unanimous && rep.cost_ok && dv == expected && tv == expected &&
           check_equivalence(direct.outputs, tp.outputs).equal;
  return rep;
}

std::string bound_report_markdown(const BoundReport& r) {
  std::ostringstream os;
  os << "| kind | n | B | W | alpha | L | Gamma | k | bound (up to constants) | T budget |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|\n";
  os << "| " << r.kind << " | " << r.n << " | " << r.bandwidth << " | "
     << (r.aspect > 0 ? std::to_string(r.aspect) : std::string("-")) << " | "
     << (r.alpha > 0 ? std::to_string(r.alpha) : std::string("-")) << " | " << r.L
     << " | " << r.gamma << " | " << r.k << " | " << r.bound_value << " | "
     << r.t_budget << " |\n";
  return os.str();
}

std::string bound_report_csv(const BoundReport& r) {
  std::ostringstream os;
  os << "kind,n,B,W,alpha,c,cprime,raw_L,L,Gamma,k,bound,threshold,t_budget,"
        "size_consistent\n";
  os << r.kind << ',' << r.n << ',' << r.bandwidth << ',' << r.aspect << ','
     << r.alpha << ',' << r.c << ',' << r.cprime << ',' << r.raw_L << ',' << r.L
     << ',' << r.gamma << ',' << r.k << ',' << r.bound_value << ','
     << r.contradiction_threshold << ',' << r.t_budget << ','
     << (r.size_consistent ? 1 : 0) << "\n";
  return os.str();
}

}  // namespace lbw
