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
#include <vector>

namespace pafind::stats {

double mean(std::span<const double> values);
// Linear-interpolated quantile, q in [0, 1]. Throws InsufficientDataError on
// empty input.
double quantile(std::vector<double> values, double q);
double median(std::vector<double> values);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  // 1 when the data are constant and fitted exactly.
  double r_squared = 0.0;
};

// Ordinary least squares of y on x. Needs at least two points.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

// Kolmogorov survival function Q(lambda) = 2 sum (-1)^{k-1} exp(-2 k^2
// lambda^2).
double kolmogorov_q(double lambda);

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  double degrees_of_freedom = 0.0;
};

// Two-sample Kolmogorov-Smirnov with the asymptotic p-value
// Q((sqrt(ne) + 0.12 + 0.11/sqrt(ne)) D), ne = n1 n2 / (n1 + n2).
TestResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// Chi-square test of homogeneity for two count vectors over the same bins.
// Adjacent bins are pooled left to right until every expected count is at
// least 5.
TestResult chi_square_homogeneity(std::span<const std::uint64_t> a,
                                  std::span<const std::uint64_t> b);

// Upper tail of the chi-square distribution.
double chi_square_sf(double statistic, double degrees_of_freedom);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

// Percentile bootstrap interval for the mean.
Interval bootstrap_mean_ci(std::span<const double> values, double level,
                           std::uint32_t resamples, std::uint64_t seed);

}  // namespace pafind::stats
