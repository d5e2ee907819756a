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
#include <span>
#include <utility>

#include "pafind/graph.hpp"
#include "pafind/random.hpp"

namespace pafind {

// Sequential degree-proportional process in its linearized chord diagram
// form. Edge k of vertex t draws r uniformly from {1, ..., 2(m(t-1)+k) - 1};
// positions 1..2(m(t-1)+k-1) index the endpoints of the edges laid down so
// far (owner, then left choice, per edge) and the last position is a
// self-loop at t. Vertex t reads its draws from stream
// (seed, kSequentialVertex, t).
PAGraph generate_sequential(std::uint32_t n, std::uint32_t m,
                            std::uint64_t seed);

struct ContinuousSample {
  PAGraph graph;
  ContinuousRealization realization;
};

// Interval construction: xi_1..xi_{mn+1} ~ Exp(1), R_i = sqrt(Y_i / Y_{mn+1}),
// W_j = R_{mj}. Edge i belongs to vertex y = ceil(i/m); its left endpoint is
// uniform on (0, R_i) and lands in the interval I_x = (W_{x-1}, W_x] of its
// left choice x.
ContinuousSample generate_continuous(std::uint32_t n, std::uint32_t m,
                                     std::uint64_t seed);

// Each of vertex t's m left choices uniform on {1..t}. Only used as a
// negative control for the equivalence tests.
PAGraph generate_uniform_attachment(std::uint32_t n, std::uint32_t m,
                                    std::uint64_t seed);

// Sum of m independent mean-one exponentials (Erlang-m).
double sample_exponential_sum(std::uint32_t m, Rng& rng);

// The unique j with W[j-1] < p <= W[j], where W holds W_0..W_n. Throws
// RangeError unless 0 < p <= W_n.
std::uint32_t interval_lookup(std::span<const double> W, double p);

}  // namespace pafind
