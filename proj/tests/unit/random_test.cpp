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

#include <cmath>
#include <set>

#include "doctest.h"

#include "pafind/random.hpp"

using namespace pafind;

TEST_CASE("xoshiro256** reference output") {
  // SplitMix64 seeded with 0 starts 0xE220A8397B1DCDAF.
  SplitMix64 sm(0);
  CHECK(sm() == 0xE220A8397B1DCDAFULL);
  Rng a(123);
  Rng b(123);
  for (int k = 0; k < 100; ++k) CHECK(a() == b());
}

TEST_CASE("derived seeds are distinct across domains and indices") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t d = 1; d <= 13; ++d) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      seen.insert(derive_seed(7, static_cast<StreamDomain>(d), i));
    }
  }
  CHECK(seen.size() == 13 * 200);
  CHECK(derive_seed(1, StreamDomain::kTrial, 0) != derive_seed(2, StreamDomain::kTrial, 0));
}

TEST_CASE("uniform and exponential draws") {
  Rng rng(9);
  const int draws = 200000;
  double sum = 0.0;
  double exp_sum = 0.0;
  std::uint64_t counts[7] = {};
  for (int k = 0; k < draws; ++k) {
    const double u = rng.uniform_open();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    exp_sum += rng.exponential();
    const auto r = rng.uniform_below(7);
    REQUIRE(r < 7);
    ++counts[r];
  }
  CHECK(std::abs(sum / draws - 0.5) < 4 * std::sqrt(1.0 / 12 / draws));
  CHECK(std::abs(exp_sum / draws - 1.0) < 4 * std::sqrt(1.0 / draws));
  const double p = 1.0 / 7;
  for (auto c : counts) {
    CHECK(std::abs(static_cast<double>(c) / draws - p) < 4 * std::sqrt(p * (1 - p) / draws));
  }
  CHECK(rng.uniform_below(1) == 0);
}
