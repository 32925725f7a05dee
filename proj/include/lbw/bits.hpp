#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lbw/error.hpp"

namespace lbw {

using Bytes = std::vector<uint8_t>;

// A message payload of up to 64 bits. CONGEST bandwidths in this artifact are
// small (B <= 64), so one word plus a length is enough and keeps the
// simulators allocation-free on the hot path.
struct BitVec {
  uint64_t bits = 0;
  uint8_t len = 0;

  BitVec() = default;
  BitVec(uint64_t value, int nbits) : bits(0), len(static_cast<uint8_t>(nbits)) {
    require(nbits >= 0 && nbits <= 64, Err::BadInput, "BitVec length out of range");
    bits = nbits == 64 ? value : (value & ((uint64_t{1} << nbits) - 1));
  }

  bool empty() const { return len == 0; }
  int size() const { return len; }

  int bit(int i) const { return static_cast<int>((bits >> i) & 1); }

  // Bits [lo, hi) as a new BitVec.
  BitVec slice(int lo, int hi) const {
    require(0 <= lo && lo <= hi && hi <= len, Err::BadInput, "BitVec slice out of range");
    return BitVec(bits >> lo, hi - lo);
  }

  BitVec concat(const BitVec& other) const {
    require(len + other.len <= 64, Err::BadInput, "BitVec concat overflow");
    BitVec out;
    out.bits = bits | (other.bits << len);
    out.len = static_cast<uint8_t>(len + other.len);
    return out;
  }

  bool operator==(const BitVec& other) const {
    return len == other.len && bits == other.bits;
  }
  bool operator!=(const BitVec& other) const { return !(*this == other); }

  // LSB-first, e.g. value 0b011 with len 3 -> "110".
  std::string to_string() const {
    std::string s;
    s.reserve(len);
    for (int i = 0; i < len; ++i) s.push_back(bit(i) ? '1' : '0');
    return s;
  }
};

inline int bit_width_for(uint64_t max_value) {
  int w = 1;
  while ((uint64_t{1} << w) <= max_value && w < 63) ++w;
  return w;
}

// FNV-1a, used for transcript hashing.
struct Fnv1a {
  uint64_t h = 1469598103934665603ull;
  void add(uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  void add_bytes(const Bytes& b) {
    add(b.size());
    for (uint8_t c : b) {
      h ^= c;
      h *= 1099511628211ull;
    }
  }
};

}  // namespace lbw
