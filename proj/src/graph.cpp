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

#include "pafind/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "pafind/errors.hpp"

namespace pafind {

std::string_view to_string(Construction construction) {
  switch (construction) {
    case Construction::kSequential:
      return "sequential";
    case Construction::kContinuous:
      return "continuous";
    case Construction::kUniformControl:
      return "uniform";
  }
  return "unknown";
}

Construction construction_from_string(std::string_view name) {
  if (name == "sequential") return Construction::kSequential;
  if (name == "continuous") return Construction::kContinuous;
  if (name == "uniform") return Construction::kUniformControl;
  throw ParameterError("unknown construction '" + std::string(name) + "'");
}

PAGraph PAGraph::from_left_choices(std::uint32_t n, std::uint32_t m,
                                   std::vector<VertexId> left_choices,
                                   std::uint64_t seed,
                                   Construction construction) {
  if (n == 0 || m == 0) {
    throw ParameterError("graph needs n >= 1 and m >= 1");
  }
  const std::uint64_t edges = static_cast<std::uint64_t>(n) * m;
  if (left_choices.size() != edges) {
    throw ParameterError("left-choice array has " +
                         std::to_string(left_choices.size()) +
                         " entries, expected n*m = " + std::to_string(edges));
  }

  PAGraph g;
  g.n_ = n;
  g.m_ = m;
  g.seed_ = seed;
  g.construction_ = construction;
  g.left_ = std::move(left_choices);
  g.degree_.assign(n, m);
  g.right_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);

  for (std::uint64_t e = 0; e < edges; ++e) {
    const auto t = static_cast<VertexId>(e / m + 1);
    const VertexId u = g.left_[e];
    if (u < 1 || u > t) {
      throw ParameterError("left choice " + std::to_string(u) + " of vertex " +
                           std::to_string(t) + " is out of range");
    }
    g.degree_[u - 1] += 1;
    if (u < t) g.right_offsets_[u] += 1;
  }
  for (std::size_t v = 1; v <= n; ++v) {
    g.right_offsets_[v] += g.right_offsets_[v - 1];
  }

  g.right_.resize(g.right_offsets_[n]);
  std::vector<std::uint64_t> cursor(g.right_offsets_.begin(),
                                    g.right_offsets_.end() - 1);
  for (std::uint64_t e = 0; e < edges; ++e) {
    const auto t = static_cast<VertexId>(e / m + 1);
    const VertexId u = g.left_[e];
    if (u < t) g.right_[cursor[u - 1]++] = t;
  }
  return g;
}

std::uint32_t PAGraph::self_loops(VertexId v) const {
  const auto own = left_choices(v);
  return static_cast<std::uint32_t>(std::count(own.begin(), own.end(), v));
}

VertexId PAGraph::endpoint(VertexId v, std::uint64_t slot) const {
  if (slot < m_) return left_choices(v)[slot];
  slot -= m_;
  const auto right = right_neighbors(v);
  if (slot < right.size()) return right[slot];
  return v;
}

std::uint32_t PAGraph::max_degree() const {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

bool PAGraph::operator==(const PAGraph& other) const {
  return n_ == other.n_ && m_ == other.m_ && seed_ == other.seed_ &&
         construction_ == other.construction_ && left_ == other.left_;
}

double ContinuousRealization::R(std::uint64_t i) const {
  if (i == 0) return 0.0;
  return std::sqrt(upsilon_[i - 1] / upsilon_.back());
}

ContinuousRealization ContinuousRealization::from_xi(std::uint32_t n,
                                                     std::uint32_t m,
                                                     std::uint64_t seed,
                                                     std::vector<double> xi) {
  if (n == 0 || m == 0) {
    throw ParameterError("realization needs n >= 1 and m >= 1");
  }
  const std::uint64_t mn = static_cast<std::uint64_t>(n) * m;
  if (xi.size() != mn + 1) {
    throw ParameterError("expected mn+1 = " + std::to_string(mn + 1) +
                         " exponential draws, got " +
                         std::to_string(xi.size()));
  }

  ContinuousRealization r;
  r.n_ = n;
  r.m_ = m;
  r.seed_ = seed;
  r.xi_ = std::move(xi);

  // Neumaier-compensated running sum: each stored partial sum is within a few
  // ulps of the exact value for any mn.
  r.upsilon_.resize(mn + 1);
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint64_t k = 0; k <= mn; ++k) {
    const double x = r.xi_[k];
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
    r.upsilon_[k] = sum + carry;
  }

  r.eta_.resize(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    double eta = 0.0;
    for (std::uint32_t k = 0; k < m; ++k) {
      eta += r.xi_[static_cast<std::uint64_t>(j) * m + k];
    }
    r.eta_[j] = eta;
  }

  const double total = r.upsilon_.back();
  r.W_.resize(static_cast<std::size_t>(n) + 1);
  r.W_[0] = 0.0;
  for (std::uint32_t j = 1; j <= n; ++j) {
    r.W_[j] = std::sqrt(r.upsilon_[static_cast<std::uint64_t>(j) * m - 1] /
                        total);
  }
  return r;
}

}  // namespace pafind
