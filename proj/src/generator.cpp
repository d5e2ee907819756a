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

#include "pafind/generator.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "pafind/errors.hpp"

namespace pafind {
namespace {

void check_parameters(std::uint32_t n, std::uint32_t m) {
  if (n == 0 || m == 0) {
    throw ParameterError("need n >= 1 and m >= 1 (got n=" + std::to_string(n) +
                         ", m=" + std::to_string(m) + ")");
  }
  if (static_cast<std::uint64_t>(n) * m > (std::uint64_t{1} << 40)) {
    throw ParameterError("n*m too large");
  }
}

}  // namespace

PAGraph generate_sequential(std::uint32_t n, std::uint32_t m,
                            std::uint64_t seed) {
  check_parameters(n, m);
  const std::uint64_t edges = static_cast<std::uint64_t>(n) * m;
  std::vector<VertexId> left(edges);

  // Endpoint array A is implicit: A[2q-1] is the owner of edge q and A[2q]
  // its left choice, so neither needs to be stored twice.
  std::vector<std::uint64_t> draws(m);
  for (VertexId t = 1; t <= n; ++t) {
    Rng rng = make_stream(seed, StreamDomain::kSequentialVertex, t);
    const std::uint64_t first = static_cast<std::uint64_t>(t - 1) * m + 1;
    for (std::uint32_t k = 0; k < m; ++k) {
      const std::uint64_t e = first + k;
      draws[k] = rng.uniform_below(2 * e - 1) + 1;
      const std::uint64_t q = (draws[k] + 1) / 2;
      if ((draws[k] & 1) == 0 && q < first) {
        __builtin_prefetch(&left[q - 1]);
      }
    }
    for (std::uint32_t k = 0; k < m; ++k) {
      const std::uint64_t e = first + k;
      const std::uint64_t r = draws[k];
      VertexId choice = t;
      if (r <= 2 * (e - 1)) {
        const std::uint64_t q = (r + 1) / 2;
        choice = (r & 1) ? static_cast<VertexId>((q - 1) / m + 1) : left[q - 1];
      }
      left[e - 1] = choice;
    }
  }
  return PAGraph::from_left_choices(n, m, std::move(left), seed,
                                    Construction::kSequential);
}

ContinuousSample generate_continuous(std::uint32_t n, std::uint32_t m,
                                     std::uint64_t seed) {
  check_parameters(n, m);
  const std::uint64_t edges = static_cast<std::uint64_t>(n) * m;

  std::vector<double> xi(edges + 1);
  for (std::uint32_t j = 1; j <= n; ++j) {
    Rng rng = make_stream(seed, StreamDomain::kXi, j);
    for (std::uint32_t k = 0; k < m; ++k) {
      xi[static_cast<std::uint64_t>(j - 1) * m + k] = rng.exponential();
    }
  }
  {
    Rng rng = make_stream(seed, StreamDomain::kXi,
                          static_cast<std::uint64_t>(n) + 1);
    xi[edges] = rng.exponential();
  }

  ContinuousRealization realization =
      ContinuousRealization::from_xi(n, m, seed, std::move(xi));

  std::vector<double> points(edges);
  std::vector<VertexId> left(edges);
  const auto W = realization.interval_endpoints();
  for (std::uint64_t i = 1; i <= edges; ++i) {
    Rng rng = make_stream(seed, StreamDomain::kLeftPoint, i);
    const double point = rng.uniform_open() * realization.R(i);
    points[i - 1] = point;
    left[i - 1] = interval_lookup(W, point);
  }
  ContinuousBuilder::set_left_points(realization, std::move(points));

  return {PAGraph::from_left_choices(n, m, std::move(left), seed,
                                     Construction::kContinuous),
          std::move(realization)};
}

PAGraph generate_uniform_attachment(std::uint32_t n, std::uint32_t m,
                                    std::uint64_t seed) {
  check_parameters(n, m);
  std::vector<VertexId> left(static_cast<std::uint64_t>(n) * m);
  for (VertexId t = 1; t <= n; ++t) {
    Rng rng = make_stream(seed, StreamDomain::kUniformControl, t);
    for (std::uint32_t k = 0; k < m; ++k) {
      left[static_cast<std::uint64_t>(t - 1) * m + k] =
          static_cast<VertexId>(rng.uniform_below(t) + 1);
    }
  }
  return PAGraph::from_left_choices(n, m, std::move(left), seed,
                                    Construction::kUniformControl);
}

double sample_exponential_sum(std::uint32_t m, Rng& rng) {
  double sum = 0.0;
  for (std::uint32_t k = 0; k < m; ++k) sum += rng.exponential();
  return sum;
}

std::uint32_t interval_lookup(std::span<const double> W, double p) {
  if (W.size() < 2 || !(p > W.front()) || !(p <= W.back())) {
    throw RangeError("point " + std::to_string(p) +
                     " outside (W_0, W_n]");
  }
  const auto it = std::lower_bound(W.begin() + 1, W.end(), p);
  return static_cast<std::uint32_t>(it - W.begin());
}

}  // namespace pafind
