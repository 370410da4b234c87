#pragma once

#include <cstdint>

namespace tricode {

// Deterministic splittable random stream: a xoshiro256++ engine whose state
// is expanded from (seed, stream ids) with SplitMix64. Streams derived from
// distinct ids are statistically independent, so trajectories can be assigned
// fixed streams regardless of which worker thread runs them.
class RngStream {
 public:
  RngStream() : RngStream(0, 0, 0) {}

  explicit RngStream(std::uint64_t seed, std::uint64_t stream_hi = 0,
                     std::uint64_t stream_lo = 0) {
    std::uint64_t x = seed;
    x = splitmix(x ^ (0x9e3779b97f4a7c15ULL * (stream_hi + 1)));
    x = splitmix(x ^ (0xbf58476d1ce4e5b9ULL * (stream_lo + 1)));
    for (auto& s : state_) {
      x += 0x9e3779b97f4a7c15ULL;
      s = mix(x);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
      state_[0] = 1;  // all-zero state is a fixed point of xoshiro
    }
  }

  static RngStream derive(std::uint64_t seed, std::uint64_t cell_id,
                          std::uint64_t trajectory_id) {
    return RngStream(seed, cell_id, trajectory_id);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound). Unbiased (rejection on the top slice).
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  bool next_bool() { return next_u64() >> 63; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t splitmix(std::uint64_t x) {
    return mix(x + 0x9e3779b97f4a7c15ULL);
  }

  std::uint64_t state_[4];
};

}  // namespace tricode
