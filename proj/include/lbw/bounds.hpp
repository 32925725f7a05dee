#pragma once

#include <cstdint>
#include <string>

#include "lbw/gadgets.hpp"
#include "lbw/network.hpp"

namespace lbw {

// Parameter instantiation of the lower-bound proofs. All derived values are
// pure functions of the inputs; the unnamed proof constants c and c' are
// explicit inputs defaulting to 1, so bound values are "up to the paper's
// constants". beta and eps have no pinned numeric value in the source
// material; beta enters only the far-weight check below.
struct BoundReport {
  std::string kind;  // "verification" or "optimization"
  double n = 0, bandwidth = 0, aspect = 0, alpha = 0;
  double c = 1, cprime = 1, beta = 1;

  int raw_L = 0;  // before rounding up to 2^i + 1
  int L = 0;
  int k = 0;
  long long gamma = 0;
  bool gamma_bumped = false;  // parity fix Gamma+k even

  double bound_value = 0;             // the Omega(...) instantiation
  double contradiction_threshold = 0; // raw L / 2
  int t_budget = 0;                   // admissible simulation rounds for L

  bool size_consistent = false;  // Gamma * L within a factor 4 of n

  // optimization-only extras
  std::string min_branch;     // which arm of min(W/alpha, sqrt(n)) was active
  double critical_beta = 0;   // alpha*n / (Gamma*W)
  bool far_weight_ok = false; // beta*Gamma*W > alpha*n at the given beta
};

// L = floor((c'/c) sqrt(n/(B log n))), Gamma = ceil(sqrt(B n log n)).
// DegenerateParams when the computed L lands below 3.
BoundReport verification_params(double n, double bandwidth, double c = 1,
                                double cprime = 1);

// L = floor((c'/(c sqrt(B log n))) min(W/alpha, sqrt(n))),
// Gamma = ceil(sqrt(B log n) max(n alpha / W, sqrt(n))). Requires alpha < W.
BoundReport optimization_params(double n, double bandwidth, double aspect,
                                double alpha, double c = 1, double cprime = 1,
                                double beta = 1);

enum class PipelineProblem { IPmod3, GapEq };

struct PipelineReport {
  std::string problem;
  int n_bits = 0;
  int padded_bits = 0;  // (0,0) pairs appended to satisfy sizing
  int L = 0;
  int k = 0;
  int gamma = 0;
  int universe = 0;
  int bandwidth = 0;
  int rounds = 0;
  bool expected = false;
  bool direct_verdict = false;
  bool three_party_verdict = false;
  bool unanimous = false;  // every node reported the same verdict, both runs
  int64_t charged_total = 0;
  int64_t max_round_charge = 0;
  int64_t round_budget = 0;
  bool cost_ok = false;
  bool ok = false;
};

// Gadget -> network -> simulation driver: builds the instance, uses its two
// shares as (E_C, E_D), embeds them into N(Gamma, L, B), runs the promise
// Hamiltonicity verifier directly and through the Server-model simulation
// within the Theorem round budget, and checks verdicts and costs.
// GapEq inputs with Hamming distance in [1, delta_target] are rejected
// (PromiseViolated); undersized L raises Sizing with a suggestion.
PipelineReport pipeline(const BitstringPair& input, PipelineProblem problem,
                        int L_request, int bandwidth, uint64_t seed,
                        int delta_target = 1);

// Smallest normalized L whose round budget fits the pipeline verifier.
int pipeline_min_L(PipelineProblem problem, int n_bits, int bandwidth);

std::string bound_report_markdown(const BoundReport& r);
std::string bound_report_csv(const BoundReport& r);

}  // namespace lbw
