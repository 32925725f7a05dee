#pragma once

#include <cstdint>

namespace lbw {

// Counter-based generator: every draw is a pure function of its key, so node
// steps can run in any order (or in parallel) without changing results.
namespace rng {

inline uint64_t mix(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t keyed(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
  return mix(mix(mix(mix(seed) ^ a) ^ b) ^ c);
}

}  // namespace rng

// Per-node, per-round randomness handed to node programs. Draws are keyed by
// counter; the shared stream ignores the node id, modeling shared randomness.
class Randomness {
 public:
  Randomness(uint64_t seed, uint64_t node, uint64_t round)
      : seed_(seed), node_(node), round_(round) {}

  uint64_t local(uint64_t counter) const {
    return rng::keyed(seed_, node_ + 1, round_, counter);
  }
  uint64_t shared(uint64_t counter) const {
    return rng::keyed(seed_, 0, round_, counter);
  }

 private:
  uint64_t seed_;
  uint64_t node_;
  uint64_t round_;
};

// Sequential convenience stream for generators and Monte Carlo drivers.
class Stream {
 public:
  explicit Stream(uint64_t seed) : seed_(seed) {}

  uint64_t next() { return rng::keyed(seed_, 0, 0, counter_++); }

  // Uniform in [0, n)
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

  int bit() { return static_cast<int>(next() & 1); }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  Stream fork(uint64_t tag) { return Stream(rng::keyed(seed_, 1, tag, 0)); }

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

}  // namespace lbw
