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
#include <string_view>
#include <vector>

namespace pafind {

// Vertices are labelled 1..n.
using VertexId = std::uint32_t;

enum class Construction : std::uint8_t {
  kSequential = 0,
  kContinuous = 1,
  // Uniform attachment; a negative control, not a preferential attachment
  // graph.
  kUniformControl = 2,
};

std::string_view to_string(Construction construction);
Construction construction_from_string(std::string_view name);

// A realized preferential attachment multigraph G_n. Vertex t owns exactly m
// edges, recorded as its ordered left choices u_1..u_m with u_k <= t (u_k == t
// is a self-loop). Self-loops and parallel edges are kept; a self-loop
// contributes 2 to the degree. Immutable once built.
class PAGraph {
 public:
  PAGraph() = default;

  // Builds the transpose and degrees from a flat left-choice array of n*m
  // entries (vertex t's choices at [(t-1)m, tm)). Throws ParameterError if the
  // array is malformed.
  static PAGraph from_left_choices(std::uint32_t n, std::uint32_t m,
                                   std::vector<VertexId> left_choices,
                                   std::uint64_t seed = 0,
                                   Construction construction =
                                       Construction::kSequential);

  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t seed() const { return seed_; }
  Construction construction() const { return construction_; }
  std::uint64_t edge_count() const { return left_.size(); }

  std::span<const VertexId> left_choices(VertexId t) const {
    return {left_.data() + static_cast<std::size_t>(t - 1) * m_, m_};
  }
  std::span<const VertexId> flat_left_choices() const { return left_; }

  // Vertices t > v with v among their left choices, ascending, one entry per
  // choosing slot.
  std::span<const VertexId> right_neighbors(VertexId v) const {
    return {right_.data() + right_offsets_[v - 1],
            right_.data() + right_offsets_[v]};
  }

  std::uint32_t degree(VertexId v) const { return degree_[v - 1]; }
  std::span<const std::uint32_t> degrees() const { return degree_; }

  // Number of v's own slots that point back at v.
  std::uint32_t self_loops(VertexId v) const;

  // The endpoint seen through edge slot `slot` of v, slot in [0, degree(v)).
  // Slots are: the m left choices, then the right neighbors, then one extra
  // slot per self-loop (its second end).
  VertexId endpoint(VertexId v, std::uint64_t slot) const;

  std::uint32_t max_degree() const;

  bool operator==(const PAGraph& other) const;

 private:
  std::uint32_t n_ = 0;
  std::uint32_t m_ = 0;
  std::uint64_t seed_ = 0;
  Construction construction_ = Construction::kSequential;
  std::vector<VertexId> left_;
  std::vector<std::uint64_t> right_offsets_;
  std::vector<VertexId> right_;
  std::vector<std::uint32_t> degree_;
};

// Latent variables of the continuous (interval) construction. All accessors
// take the 1-based indices used in the model: xi(N) and upsilon(N) for
// N = 1..mn+1, R(i) for i = 0..mn, W(j) for j = 0..n, w(j) and eta(j) for
// j = 1..n, left_point(i) for i = 1..mn.
class ContinuousRealization {
 public:
  ContinuousRealization() = default;

  // Rebuilds every derived field from the exponential draws. Left points are
  // left empty.
  static ContinuousRealization from_xi(std::uint32_t n, std::uint32_t m,
                                       std::uint64_t seed,
                                       std::vector<double> xi);

  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t seed() const { return seed_; }

  double xi(std::uint64_t N) const { return xi_[N - 1]; }
  double upsilon(std::uint64_t N) const { return upsilon_[N - 1]; }
  double R(std::uint64_t i) const;
  double W(std::uint64_t j) const { return W_[j]; }
  double w(std::uint64_t j) const { return W_[j] - W_[j - 1]; }
  double eta(std::uint64_t j) const { return eta_[j - 1]; }
  double left_point(std::uint64_t i) const { return left_points_[i - 1]; }
  bool has_left_points() const { return !left_points_.empty(); }

  std::span<const double> xi_values() const { return xi_; }
  std::span<const double> upsilon_values() const { return upsilon_; }
  // W_0..W_n.
  std::span<const double> interval_endpoints() const { return W_; }
  std::span<const double> eta_values() const { return eta_; }
  std::span<const double> left_points() const { return left_points_; }

 private:
  friend class ContinuousBuilder;

  std::uint32_t n_ = 0;
  std::uint32_t m_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<double> xi_;
  std::vector<double> upsilon_;
  std::vector<double> W_;
  std::vector<double> eta_;
  std::vector<double> left_points_;
};

// Grants the generator write access to a realization under construction.
class ContinuousBuilder {
 public:
  static ContinuousRealization& set_left_points(ContinuousRealization& r,
                                                std::vector<double> points) {
    r.left_points_ = std::move(points);
    return r;
  }
};

}  // namespace pafind
