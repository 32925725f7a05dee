#include "lbw/games.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>

namespace lbw {

double GameStrategy::non_abort_probability() const {
  return std::pow(4.0, -2.0 * proto.rounds);
}

GameStrategy lift_to_game(const ServerProtocol& proto, GameStrategy::Kind kind) {
  require(proto.normal_form, Err::BadNormalForm,
          "the lift needs the 2-bits-per-round normal form");
  require(static_cast<bool>(proto.carol_output), Err::BadNormalForm,
          "the lift reads Carol's output");
  GameStrategy s;
  s.kind = kind;
  s.proto = proto;
  return s;
}

PlayDetail play_game_detail(const GameStrategy& s, const BitString& x,
                            const BitString& y, uint64_t seed) {
  const ServerProtocol& p = s.proto;
  const int c = p.rounds;
  Stream shared(seed);

  // Guessed wire transcripts, two bits per player per round.
  std::vector<BitVec> guess_c(c), guess_d(c);
  for (int t = 0; t < c; ++t) guess_c[t] = BitVec(shared.next(), 2);
  for (int t = 0; t < c; ++t) guess_d[t] = BitVec(shared.next(), 2);

  // Shared setup: the server's messages depend only on the unpadded guesses,
  // so they are generated before any input arrives.
  std::vector<BitVec> logical_c(c), logical_d(c);
  for (int t = 0; t < c; ++t) {
    logical_c[t] = BitVec(guess_c[t].bits ^ wire_pad(seed, false, t, 2).bits, 2);
    logical_d[t] = BitVec(guess_d[t].bits ^ wire_pad(seed, true, t, 2).bits, 2);
  }
  std::vector<Bytes> setup_msgs_c, setup_msgs_d;
  for (int t = 0; t <= c; ++t) {
    std::vector<BitVec> hc(logical_c.begin(), logical_c.begin() + std::min(t, c));
    std::vector<BitVec> hd(logical_d.begin(), logical_d.begin() + std::min(t, c));
    if (p.server) {
      auto [mc, md] = p.server(t, hc, hd);
      setup_msgs_c.push_back(std::move(mc));
      setup_msgs_d.push_back(std::move(md));
    } else {
      setup_msgs_c.emplace_back();
      setup_msgs_d.emplace_back();
    }
  }

  // Each player privately replays its protocol side against the setup and
  // aborts on the first wire bit that contradicts the guess.
  bool abort = false;
  Bytes state_c, state_d;
  std::vector<Bytes> seen_c, seen_d;
  for (int t = 0; t < c && !abort; ++t) {
    seen_c.push_back(setup_msgs_c[t]);
    seen_d.push_back(setup_msgs_d[t]);
    BitVec bc = p.carol(t, x, state_c, seen_c, Randomness(seed, 0, t));
    BitVec bd = p.david(t, y, state_d, seen_d, Randomness(seed, 1, t));
    require(bc.len == 2 && bd.len == 2, Err::BadNormalForm,
            "normal form requires exactly 2 bits per player per round");
    BitVec wire_c(bc.bits ^ wire_pad(seed, false, t, 2).bits, 2);
    BitVec wire_d(bd.bits ^ wire_pad(seed, true, t, 2).bits, 2);
    if (wire_c != guess_c[t] || wire_d != guess_d[t]) abort = true;
  }

  PlayDetail out;
  if (abort) {
    out.aborted = true;
    out.output = s.kind == GameStrategy::Kind::XOR ? shared.bit() : 0;
    return out;
  }
  seen_c.push_back(setup_msgs_c[c]);
  int sim = p.carol_output(x, state_c, seen_c);
  out.output = sim;  // XOR: sim ^ 0; AND: sim & 1
  out.aborted = false;
  out.sim_output_correct = !p.truth || sim == p.truth(x, y);
  return out;
}

int play_game(const GameStrategy& s, const BitString& x, const BitString& y,
              uint64_t seed) {
  return play_game_detail(s, x, y, seed).output;
}

namespace {

// Four independent counters accumulated over per-trial derived seeds; chunks
// may run in parallel, the merge is associative so results are independent of
// the thread count.
struct Tally {
  int64_t c[4] = {0, 0, 0, 0};
  void merge(const Tally& o) {
    for (int i = 0; i < 4; ++i) c[i] += o.c[i];
  }
};

template <typename Fn>
Tally accumulate_trials(int64_t trials, uint64_t seed, int threads, Fn&& body) {
  threads = std::max(1, threads);
  auto chunk = [&](int64_t lo, int64_t hi) {
    Tally t;
    for (int64_t i = lo; i < hi; ++i) body(t, rng::keyed(seed, 2, 0, i));
    return t;
  };
  if (threads == 1) return chunk(0, trials);
  std::vector<std::future<Tally>> parts;
  int64_t per = (trials + threads - 1) / threads;
  for (int64_t lo = 0; lo < trials; lo += per)
    parts.push_back(std::async(std::launch::async, chunk, lo, std::min(trials, lo + per)));
  Tally total;
  for (auto& f : parts) total.merge(f.get());
  return total;
}

}  // namespace

GameStats estimate_stats(const GameStrategy& s, const BitString& x,
                         const BitString& y, int64_t trials, uint64_t seed,
                         int threads) {
  require(trials >= 1, Err::BadInput, "need at least one trial");
  Tally t = accumulate_trials(trials, seed, threads,
                              [&](Tally& acc, uint64_t trial_seed) {
                                PlayDetail d = play_game_detail(s, x, y, trial_seed);
                                acc.c[0] += d.output == 1;
                                if (!d.aborted) {
                                  acc.c[1]++;
                                  acc.c[2] += d.sim_output_correct;
                                }
                              });
  GameStats g;
  g.trials = trials;
  g.accepts = t.c[0];
  g.non_aborts = t.c[1];
  g.correct_given_no_abort = t.c[2];
  g.non_abort_rate = static_cast<double>(g.non_aborts) / static_cast<double>(g.trials);
  g.correct_rate_given_no_abort =
      g.non_aborts == 0
          ? 0.0
          : static_cast<double>(g.correct_given_no_abort) / static_cast<double>(g.non_aborts);
  return g;
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

int64_t gv_size_bound(int n, int d) {
  require(n >= 1 && d >= 1 && d <= n, Err::BadInput, "need 1 <= d <= n");
  double rate = static_cast<double>(d) / n;
  if (rate > 0.5) return 1;
  double exponent = (1.0 - binary_entropy(rate)) * n;
  return static_cast<int64_t>(std::ceil(std::exp2(exponent) - 1e-9));
}

Code gv_greedy_code(int n, int d) {
  require(n >= 1 && n <= 20, Err::BadInput, "word length limited to 20 here");
  require(d >= 1 && d <= n, Err::BadInput, "need 1 <= d <= n");
  Code c;
  c.n = n;
  c.d = d;
  const uint32_t total = uint32_t{1} << n;

  if (d == 1) {
    c.words.resize(total);
    for (uint32_t w = 0; w < total; ++w) c.words[w] = w;
    return c;
  }

  // Ball of radius d-1 around each candidate, precomputed as XOR offsets.
  // Small balls probe a membership bitset; otherwise scan the code directly.
  std::vector<uint32_t> ball;
  uint64_t ball_size = 0;
  for (int r = 0; r <= d - 1 && ball_size <= 4096; ++r) {
    uint64_t binom = 1;
    for (int i = 0; i < r; ++i) binom = binom * (n - i) / (i + 1);
    ball_size += binom;
  }
  const bool use_ball = ball_size <= 4096;
  std::vector<uint8_t> member;
  if (use_ball) {
    for (uint32_t off = 0; off < total; ++off)
      if (std::popcount(off) <= d - 1) ball.push_back(off);
    member.assign(total, 0);
  }

  for (uint32_t w = 0; w < total; ++w) {
    bool ok = true;
    if (use_ball) {
      for (uint32_t off : ball)
        if (member[w ^ off]) {
          ok = false;
          break;
        }
    } else {
      for (uint32_t cw : c.words)
        if (std::popcount(cw ^ w) < d) {
          ok = false;
          break;
        }
    }
    if (ok) {
      c.words.push_back(w);
      if (use_ball) member[w] = 1;
    }
  }
  return c;
}

int code_min_distance(const Code& c) {
  if (c.words.size() < 2) return c.n;
  // Same adaptive trick as construction: per-word ball probe when cheap.
  uint64_t pairs = static_cast<uint64_t>(c.words.size()) * c.words.size();
  if (pairs <= 64ull * 1024 * 1024) {
    int best = c.n;
    for (size_t i = 0; i < c.words.size(); ++i)
      for (size_t j = i + 1; j < c.words.size(); ++j)
        best = std::min(best, std::popcount(c.words[i] ^ c.words[j]));
    return best;
  }
  std::vector<uint8_t> member(uint32_t{1} << c.n, 0);
  for (uint32_t w : c.words) member[w] = 1;
  for (int r = 1; r < c.n; ++r) {
    for (uint32_t w : c.words)
      for (uint32_t off = 1; off < (uint32_t{1} << c.n); ++off)
        if (std::popcount(off) == r && member[w ^ off]) return r;
  }
  return c.n;
}

std::vector<uint8_t> word_bits(uint32_t w, int n) {
  std::vector<uint8_t> out(n);
  for (int i = 0; i < n; ++i) out[i] = (w >> i) & 1;
  return out;
}

FoolingSet build_fooling_set_eq(const Code& c, int delta) {
  require(delta >= 0, Err::BadInput, "delta must be nonnegative");
  int dist = code_min_distance(c);
  require(dist >= 2 * delta + 1, Err::BadInput,
          "code distance " + std::to_string(dist) +
              " too small for the gap parameter " + std::to_string(delta));
  FoolingSet f;
  f.n = c.n;
  f.delta = delta;
  for (uint32_t w : c.words) f.pairs.emplace_back(w, w);
  return f;
}

bool verify_fooling_set(const FoolingSet& f) {
  enum class Cls { Equal, Far, Violated };
  auto classify = [&](uint32_t a, uint32_t b) {
    int dist = std::popcount(a ^ b);
    if (dist == 0) return Cls::Equal;
    if (dist > f.delta) return Cls::Far;
    return Cls::Violated;
  };
  for (const auto& [x, y] : f.pairs)
    if (x != y) return false;  // clause 1: f(x, y) must be 1
  for (size_t i = 0; i < f.pairs.size(); ++i)
    for (size_t j = i + 1; j < f.pairs.size(); ++j) {
      Cls g1 = classify(f.pairs[i].first, f.pairs[j].second);
      Cls g2 = classify(f.pairs[j].first, f.pairs[i].second);
      if (g1 == Cls::Violated || g2 == Cls::Violated)
        fail(Err::PromiseClash, "off-diagonal pair lands inside the gap promise");
      if (g1 != Cls::Far && g2 != Cls::Far) return false;  // clause 2 needs a 0 side
    }
  return true;
}

double fooling_lower_bound(int64_t size, FoolingBoundVariant v) {
  require(size >= 1, Err::BadInput, "fooling-set size must be positive");
  double lg = std::log2(static_cast<double>(size));
  double value = v == FoolingBoundVariant::MainText ? lg / 4.0 - 0.5 : (lg - 1.0) / 2.0;
  return std::max(0.0, value);
}

FoolingCheckReport and_game_fooling_check(const GameStrategy& s, const FoolingSet& f,
                                          int64_t trials, uint64_t seed, int threads) {
  require(s.kind == GameStrategy::Kind::AND, Err::BadNormalForm,
          "the fooling check needs an AND lift");
  require(s.proto.eps0 == 0.0, Err::BadNormalForm,
          "the fooling check needs a one-sided (eps0 = 0) protocol");
  require(!f.pairs.empty(), Err::EmptyInput, "empty fooling set");

  FoolingCheckReport rep;
  Tally t = accumulate_trials(
      trials, seed, threads, [&](Tally& acc, uint64_t trial_seed) {
        Stream pick(trial_seed);
        size_t i = pick.below(f.pairs.size());
        size_t j = pick.below(f.pairs.size());
        BitString x = word_bits(f.pairs[i].first, f.n);
        BitString y = word_bits(f.pairs[j].second, f.n);
        int out = play_game(s, x, y, pick.next());
        if (i == j) {
          acc.c[0]++;             // diagonal trials
          acc.c[1] += out == 1;   // diagonal accepts
        } else {
          acc.c[2]++;             // mixed trials
          acc.c[3] += out == 1;   // mixed accepts
        }
      });
  rep.diagonal_trials = t.c[0];
  rep.diagonal_accepts = t.c[1];
  rep.mixed_trials = t.c[2];
  rep.mixed_accepts = t.c[3];
  rep.expected_diag_accept =
      (1.0 - s.proto.eps1) * s.non_abort_probability();
  if (rep.mixed_accepts > 0)
    fail(Err::OneSidedViolation, "AND lift accepted a 0-input");
  double p = rep.expected_diag_accept;
  double se = std::sqrt(p * (1 - p) / std::max<int64_t>(1, rep.diagonal_trials));
  double rate = rep.diagonal_trials == 0
                    ? 0.0
                    : static_cast<double>(rep.diagonal_accepts) / rep.diagonal_trials;
  rep.ok = rep.mixed_accepts == 0 && std::abs(rate - p) <= 4 * se + 1e-12;
  return rep;
}

}  // namespace lbw
