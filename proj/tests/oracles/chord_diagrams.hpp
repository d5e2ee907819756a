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

// Exact distribution of the preferential attachment graph by brute force over
// linearized chord diagrams. Every perfect matching of 2mn points on a line is
// equally likely. Reading left to right, each right endpoint closes a
// mini-vertex; the chord closing mini-vertex k joins it to the mini-vertex
// holding its left endpoint. Mini-vertices m(t-1)+1..mt form vertex t.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Outcome = std::vector<std::uint32_t>;  // flat left choices, vertex-major

// Calls visit(partner) for every perfect matching of `points` points.
template <typename Visit>
void for_each_matching(int points, Visit&& visit) {
  std::vector<int> partner(points, -1);
  std::function<void()> recurse = [&] {
    int i = 0;
    while (i < points && partner[i] != -1) ++i;
    if (i == points) {
      visit(partner);
      return;
    }
    for (int j = i + 1; j < points; ++j) {
      if (partner[j] != -1) continue;
      partner[i] = j;
      partner[j] = i;
      recurse();
      partner[i] = partner[j] = -1;
    }
  };
  recurse();
}

inline Outcome matching_to_left_choices(const std::vector<int>& partner,
                                        std::uint32_t m) {
  const int points = static_cast<int>(partner.size());
  // mini-vertex index (0-based) of each point
  std::vector<std::uint32_t> owner(points);
  std::uint32_t current = 0;
  std::vector<std::uint32_t> closing_chord_left;
  for (int p = 0; p < points; ++p) {
    owner[p] = current;
    if (partner[p] < p) {
      closing_chord_left.push_back(static_cast<std::uint32_t>(partner[p]));
      ++current;
    }
  }
  Outcome left;
  for (std::uint32_t k = 0; k < closing_chord_left.size(); ++k) {
    const std::uint32_t mini = owner[closing_chord_left[k]];
    left.push_back(mini / m + 1);
  }
  return left;
}

// Probability of every left-choice outcome for (n, m).
inline std::map<Outcome, double> exact_distribution(std::uint32_t n,
                                                    std::uint32_t m) {
  std::map<Outcome, std::uint64_t> counts;
  std::uint64_t total = 0;
  for_each_matching(static_cast<int>(2 * n * m),
                    [&](const std::vector<int>& partner) {
                      ++counts[matching_to_left_choices(partner, m)];
                      ++total;
                    });
  std::map<Outcome, double> probability;
  for (const auto& [outcome, c] : counts) {
    probability[outcome] = static_cast<double>(c) / static_cast<double>(total);
  }
  return probability;
}

inline std::uint64_t matching_count(std::uint32_t n, std::uint32_t m) {
  std::uint64_t total = 0;
  for_each_matching(static_cast<int>(2 * n * m),
                    [&](const std::vector<int>&) { ++total; });
  return total;
}

}  // namespace oracle
