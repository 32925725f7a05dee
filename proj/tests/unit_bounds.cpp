#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lbw/bounds.hpp"
#include "support.hpp"

using namespace lbw;
using namespace lbw::test;

TEST_CASE("verification parameters on the worked example") {
  auto r = verification_params(1024, 1);
  CHECK(r.raw_L == 10);  // floor(sqrt(1024/10))
  CHECK(r.L == 17);
  CHECK(r.k == 4);
  CHECK(r.gamma == 102);  // ceil(sqrt(10240))
  CHECK_FALSE(r.gamma_bumped);  // 102 + 4 is even
  CHECK(r.bound_value == doctest::Approx(std::sqrt(1024.0 / 10.0) / 4.0));
  CHECK(r.contradiction_threshold == doctest::Approx(5.0));
  CHECK(r.t_budget == max_admissible_round(17));
}

TEST_CASE("degenerate parameters are rejected") {
  CHECK_THROWS_AS(verification_params(64, 64), DomainError);
}

TEST_CASE("bound scales like sqrt(n) up to log drift") {
  auto a = verification_params(1024, 1);
  auto b = verification_params(4096, 1);
  double ratio = b.bound_value / a.bound_value;
  CHECK(ratio > 1.7);
  CHECK(ratio < 2.0);
}

TEST_CASE("optimization parameters") {
  auto r = optimization_params(10000, 1, 100, 2);
  CHECK(r.min_branch == "W/alpha");  // min(50, 100) = 50
  double lg = std::log2(10000.0);
  CHECK(r.raw_L == static_cast<int>(std::floor(50.0 / std::sqrt(lg))));
  CHECK(r.gamma >= static_cast<long long>(std::ceil(std::sqrt(lg) * 200)));
  CHECK(r.critical_beta == doctest::Approx(2.0 * 10000 / (r.gamma * 100.0)));

  CHECK_THROWS_AS(optimization_params(10000, 1, 2, 2), DomainError);
  CHECK_THROWS_AS(optimization_params(10000, 1, 1.5, 2), DomainError);

  // W/alpha >= sqrt(n): the bound reduces to the verification shape.
  auto w = optimization_params(10000, 1, 1000, 2);
  CHECK(w.min_branch == "sqrt(n)");
  CHECK(w.bound_value ==
        doctest::Approx(std::sqrt(10000.0 / lg) / 4.0));
}

TEST_CASE("reports are deterministic and recomputable") {
  auto a = verification_params(2048, 4, 1.5, 2.5);
  auto b = verification_params(2048, 4, 1.5, 2.5);
  CHECK(a.raw_L == b.raw_L);
  CHECK(a.gamma == b.gamma);
  CHECK(a.bound_value == b.bound_value);
  CHECK(bound_report_csv(a) == bound_report_csv(b));
  CHECK(bound_report_markdown(a).find("verification") != std::string::npos);
}

TEST_CASE("pipeline on the unit ipmod3 instance") {
  auto pair = make_bit_pair("1", "1");
  int L = pipeline_min_L(PipelineProblem::IPmod3, 1, 8);
  auto rep = pipeline(pair, PipelineProblem::IPmod3, L, 8, 42);
  CHECK(rep.ok);
  CHECK(rep.expected);  // sum = 1, not divisible by 3: Hamiltonian
  CHECK(rep.direct_verdict);
  CHECK(rep.three_party_verdict);
  CHECK(rep.unanimous);
  CHECK(rep.cost_ok);
  CHECK(rep.universe == 12);
  CHECK(rep.gamma == 12 - rep.k);
  CHECK(rep.max_round_charge <= rep.round_budget);
}

TEST_CASE("pipeline on gap inputs") {
  auto eq = make_bit_pair("0110", "0110");
  int L = pipeline_min_L(PipelineProblem::GapEq, 4, 8);
  auto rep = pipeline(eq, PipelineProblem::GapEq, L, 8, 7);
  CHECK(rep.ok);
  CHECK(rep.expected);

  auto far = make_bit_pair("0110", "1001");
  auto rep2 = pipeline(far, PipelineProblem::GapEq, L, 8, 7);
  CHECK(rep2.ok);
  CHECK_FALSE(rep2.expected);

  CHECK_THROWS_AS(pipeline(make_bit_pair("0110", "0111"), PipelineProblem::GapEq, L,
                           8, 7),
                  DomainError);  // delta = 1 violates the promise
}

TEST_CASE("pipeline sizing error suggests workable parameters") {
  auto pair = make_bit_pair("11", "11");
  try {
    pipeline(pair, PipelineProblem::IPmod3, 5, 8, 1);
    FAIL("expected a sizing error");
  } catch (const DomainError& e) {
    CHECK(e.code() == Err::Sizing);
    CHECK(std::string(e.what()).find("suggested") != std::string::npos);
  }
}

TEST_CASE("pipeline pads tiny gapeq inputs") {
  // 6*1 - k < 1 for L = 65 (k = 6), so one (0,0) pair is appended.
  auto pair = make_bit_pair("1", "1");
  int L = 65;
  auto rep = pipeline(pair, PipelineProblem::GapEq, L, 8, 9);
  CHECK(rep.padded_bits >= 1);
  CHECK(rep.ok);
  CHECK(rep.expected);  // x == y
}
