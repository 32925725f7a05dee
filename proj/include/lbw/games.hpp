#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lbw/server_protocol.hpp"

namespace lbw {

// Referee-free two-player strategy built from a normal-form Server-model
// protocol: the players guess the charged transcript from shared randomness,
// derive the server's (input-independent) messages from the guess as shared
// setup, and abort on the first mismatch between their own wire bits and the
// guess. The non-abort probability is exactly 4^(-2c).
struct GameStrategy {
  enum class Kind { XOR, AND };
  Kind kind = Kind::XOR;
  ServerProtocol proto;

  int charged_rounds() const { return proto.rounds; }
  double non_abort_probability() const;
};

GameStrategy lift_to_game(const ServerProtocol& proto, GameStrategy::Kind kind);

struct PlayDetail {
  int output = 0;
  bool aborted = false;
  bool sim_output_correct = false;  // meaningful when !aborted
};

PlayDetail play_game_detail(const GameStrategy& s, const BitString& x,
                            const BitString& y, uint64_t seed);
int play_game(const GameStrategy& s, const BitString& x, const BitString& y,
              uint64_t seed);

struct GameStats {
  int64_t trials = 0;
  int64_t non_aborts = 0;
  int64_t accepts = 0;  // output == 1
  int64_t correct_given_no_abort = 0;
  double non_abort_rate = 0.0;
  double correct_rate_given_no_abort = 0.0;
};

GameStats estimate_stats(const GameStrategy& s, const BitString& x,
                         const BitString& y, int64_t trials, uint64_t seed,
                         int threads = 1);

// Binary entropy, H(0) = H(1) = 0, logs base 2.
double binary_entropy(double p);

struct Code {
  int n = 0;
  int d = 0;  // designed minimum distance
  std::vector<uint32_t> words;
};

// Greedy over lexicographic order of all 2^n words; the result has minimum
// distance >= d and at least ceil(2^((1-H(d/n))n)) words when d/n <= 1/2.
Code gv_greedy_code(int n, int d);

// ceil(2^((1-H(d/n))n)) for d/n <= 1/2; 1 otherwise (the bound form used
// here is vacuous past rate 1/2).
int64_t gv_size_bound(int n, int d);

// Exhaustively recomputed minimum pairwise distance (n for |C| < 2).
int code_min_distance(const Code& c);

struct FoolingSet {
  int n = 0;
  int delta = 0;  // gap parameter of the target (delta-Eq)
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
};

// F = {(w, w) | w in C} for delta-Eq; requires code distance >= 2*delta + 1.
FoolingSet build_fooling_set_eq(const Code& c, int delta);

// Checks both fooling clauses under the gap-Eq promise semantics; throws
// PromiseClash when an off-diagonal pair lands inside the forbidden gap.
bool verify_fooling_set(const FoolingSet& f);

enum class FoolingBoundVariant { MainText, Appendix };

// MainText: log2(size)/4 - 1/2.  Appendix: (log2(size) - 1)/2.  Clamped at 0.
double fooling_lower_bound(int64_t size, FoolingBoundVariant v = FoolingBoundVariant::MainText);

struct FoolingCheckReport {
  int64_t diagonal_trials = 0;
  int64_t diagonal_accepts = 0;
  int64_t mixed_trials = 0;
  int64_t mixed_accepts = 0;  // OneSidedViolation if ever > 0
  double expected_diag_accept = 0.0;
  bool ok = false;
};

// Empirically verifies the AND-game fooling argument: zero acceptances on
// mixed pairs (f = 0), diagonal acceptance within 4 standard errors of
// (1-eps1) * 4^(-2c). Requires an AND lift of a one-sided (eps0 = 0) protocol.
FoolingCheckReport and_game_fooling_check(const GameStrategy& s, const FoolingSet& f,
                                          int64_t trials, uint64_t seed,
                                          int threads = 1);

std::vector<uint8_t> word_bits(uint32_t w, int n);

}  // namespace lbw
