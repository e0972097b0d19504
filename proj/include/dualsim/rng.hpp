// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

namespace dualsim {

// Portable, fixed random generator used for all sampling so that outcome
// records are bit-identical across platforms and runs.
//
// Algorithms (public domain, Blackman & Vigna, https://prng.di.unimi.it/):
//   - splitmix64 expands a 64-bit seed into generator state,
//   - xoshiro256** produces the output stream,
//   - jump() advances 2^128 steps; substream k of a seed is obtained by
//     applying jump() k times to the freshly seeded generator.
//
// Doubles are drawn as (next() >> 11) * 2^-53, uniform on [0, 1).

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64_next(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Advance 2^128 steps; disjoint substreams for concurrent consumers.
  void jump() {
    static constexpr std::array<std::uint64_t, 4> kJump = {
        0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL, 0xa9582618e03fc9aaULL,
        0x39abdc4529b1661cULL};
    std::array<std::uint64_t, 4> acc = {0, 0, 0, 0};
    for (std::uint64_t mask : kJump) {
      for (int bit = 0; bit < 64; ++bit) {
        if (mask & (1ULL << bit)) {
          for (int i = 0; i < 4; ++i) acc[i] ^= state_[i];
        }
        next();
      }
    }
    state_ = acc;
  }

  // Substream k: seed, then jump k times.
  static Xoshiro256StarStar substream(std::uint64_t seed, unsigned k) {
    Xoshiro256StarStar gen(seed);
    for (unsigned i = 0; i < k; ++i) gen.jump();
    return gen;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
};

}  // namespace dualsim
