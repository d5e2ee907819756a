// Copyright 2026 The pafind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>

namespace pafind {

// SplitMix64 (Steele, Lea, Flood). Used to expand seeds and derive streams.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

  constexpr std::uint64_t operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Finalizer of SplitMix64 applied to a single word.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// xoshiro256** with portable conversions to integers and reals, so that every
// draw is bit-identical across standard libraries. Satisfies
// UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on the open interval (0, 1), 53 bits of resolution.
  double uniform_open() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform on [0, 1).
  double uniform01() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  // Uniform integer on [0, bound); bound must be positive. Lemire's
  // nearly-divisionless rejection method.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Mean-one exponential, strictly positive.
  double exponential();

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

// Independent substreams. Every random quantity in the library is drawn from
// a stream named by (base seed, domain, index), so results never depend on
// iteration order or on how work is split across threads.
//
//   kSequentialVertex  one stream per vertex t of the sequential construction
//   kXi                one stream per vertex j for xi_{(j-1)m+1..jm};
//                      index n+1 carries xi_{mn+1}
//   kLeftPoint         one stream per edge i for the left endpoint l_i
//   kHandles           index 0: the handle permutation of an oracle
//   kTrial             per-trial seeds, index = (n, trial) packed by caller
//   kGraph, kHandleSeed, kSearch
//                      sub-seeds of a trial seed
enum class StreamDomain : std::uint64_t {
  kSequentialVertex = 1,
  kXi = 2,
  kLeftPoint = 3,
  kHandles = 4,
  kTrial = 5,
  kGraph = 6,
  kHandleSeed = 7,
  kSearch = 8,
  kUniformControl = 9,
  kCompare = 10,
  kBootstrap = 11,
  kTailBound = 12,
  kEdgeProbability = 13,
};

constexpr std::uint64_t derive_seed(std::uint64_t base, StreamDomain domain,
                                    std::uint64_t index) {
  std::uint64_t h = mix64(base ^ 0x6A09E667F3BCC909ULL);
  h = mix64(h ^ (static_cast<std::uint64_t>(domain) * 0x9E3779B97F4A7C15ULL));
  h = mix64(h + index * 0xD1B54A32D192ED03ULL + 0x3C6EF372FE94F82BULL);
  return h;
}

inline Rng make_stream(std::uint64_t base, StreamDomain domain,
                       std::uint64_t index) {
  return Rng(derive_seed(base, domain, index));
}

}  // namespace pafind
