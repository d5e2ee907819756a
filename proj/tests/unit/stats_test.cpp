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
#include <vector>

#include "doctest.h"

#include "pafind/errors.hpp"
#include "pafind/random.hpp"
#include "pafind/stats.hpp"

using namespace pafind;

TEST_CASE("quantiles") {
  const std::vector<double> v = {4, 1, 3, 2};
  CHECK(stats::quantile(v, 0.0) == 1.0);
  CHECK(stats::quantile(v, 1.0) == 4.0);
  CHECK(stats::median(v) == 2.5);
  CHECK(stats::quantile(v, 1.0 / 3.0) == doctest::Approx(2.0));
  CHECK(stats::mean(v) == 2.5);
  CHECK_THROWS_AS(stats::quantile({}, 0.5), InsufficientDataError);
}

TEST_CASE("least squares") {
  const std::vector<double> x = {1, 2, 3, 4};
  const std::vector<double> y = {3, 5, 7, 9};
  const auto fit = stats::least_squares(x, y);
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
  CHECK(fit.r_squared == doctest::Approx(1.0));

  const std::vector<double> flat = {2, 2, 2, 2};
  const auto c = stats::least_squares(x, flat);
  CHECK(c.slope == doctest::Approx(0.0));
  CHECK(c.intercept == doctest::Approx(2.0));
  CHECK(c.r_squared == 1.0);

  const std::vector<double> noisy = {1, 3, 2, 4};
  const auto n = stats::least_squares(x, noisy);
  CHECK(n.slope == doctest::Approx(0.8));
  CHECK(n.r_squared == doctest::Approx(0.64));

  CHECK_THROWS_AS(stats::least_squares(std::vector<double>{1}, std::vector<double>{1}),
                  InsufficientDataError);
  CHECK_THROWS_AS(stats::least_squares(std::vector<double>{1, 1}, std::vector<double>{1, 2}),
                  InsufficientDataError);
}

TEST_CASE("Kolmogorov distribution") {
  CHECK(stats::kolmogorov_q(1.0) == doctest::Approx(0.2699996717).epsilon(1e-9));
  CHECK(stats::kolmogorov_q(0.5) == doctest::Approx(0.9639452437).epsilon(1e-9));
  CHECK(stats::kolmogorov_q(0.0) == 1.0);
  CHECK(stats::kolmogorov_q(5.0) < 1e-20);
}

TEST_CASE("chi-square survival") {
  for (double x : {0.1, 1.0, 3.84, 10.0}) {
    CHECK(stats::chi_square_sf(x, 1) == doctest::Approx(std::erfc(std::sqrt(x / 2))));
    CHECK(stats::chi_square_sf(x, 2) == doctest::Approx(std::exp(-x / 2)));
  }
  CHECK(stats::chi_square_sf(3.841458820694124, 1) == doctest::Approx(0.05));
}

TEST_CASE("two-sample KS") {
  Rng rng(1);
  std::vector<double> a, b, shifted;
  for (int k = 0; k < 3000; ++k) {
    a.push_back(rng.uniform01());
    b.push_back(rng.uniform01());
    shifted.push_back(rng.uniform01() + 0.2);
  }
  const auto same = stats::ks_two_sample(a, a);
  CHECK(same.statistic == 0.0);
  CHECK(same.p_value == doctest::Approx(1.0));
  CHECK(stats::ks_two_sample(a, b).p_value > 0.001);
  const auto apart = stats::ks_two_sample(a, shifted);
  CHECK(apart.statistic == doctest::Approx(0.2).epsilon(0.2));
  CHECK(apart.p_value < 1e-20);
  CHECK(stats::ks_two_sample({0.0}, {1.0}).statistic == 1.0);
}

TEST_CASE("chi-square homogeneity") {
  const std::vector<std::uint64_t> a = {100, 200, 300, 50, 1, 1};
  const auto same = stats::chi_square_homogeneity(a, a);
  CHECK(same.statistic == doctest::Approx(0.0));
  CHECK(same.p_value == doctest::Approx(1.0));
  // The last two bins are pooled into the one before them.
  CHECK(same.degrees_of_freedom == 3);

  const std::vector<std::uint64_t> b = {300, 200, 100, 50, 1, 1};
  const auto diff = stats::chi_square_homogeneity(a, b);
  CHECK(diff.p_value < 1e-10);

  // Hand computation for a 2x2 table.
  const std::vector<std::uint64_t> c = {30, 70};
  const std::vector<std::uint64_t> d = {50, 50};
  const auto t = stats::chi_square_homogeneity(c, d);
  // Expected 40/60 in each row.
  const double expected = 2 * (100.0 / 40 + 100.0 / 60);
  CHECK(t.statistic == doctest::Approx(expected));
  CHECK(t.degrees_of_freedom == 1);
}

TEST_CASE("bootstrap interval") {
  const std::vector<double> constant(50, 0.5);
  const auto c = stats::bootstrap_mean_ci(constant, 0.95, 500, 1);
  CHECK(c.lower == doctest::Approx(0.5));
  CHECK(c.upper == doctest::Approx(0.5));

  Rng rng(2);
  std::vector<double> v;
  for (int k = 0; k < 400; ++k) v.push_back(rng.uniform01());
  const auto ci = stats::bootstrap_mean_ci(v, 0.95, 2000, 3);
  const double m = stats::mean(v);
  CHECK(ci.lower < m);
  CHECK(ci.upper > m);
  // Half-width near 1.96 * sqrt(1/12) / 20.
  CHECK((ci.upper - ci.lower) / 2 == doctest::Approx(1.96 * std::sqrt(1.0 / 12) / 20).epsilon(0.15));
  const auto again = stats::bootstrap_mean_ci(v, 0.95, 2000, 3);
  CHECK(again.lower == ci.lower);
  CHECK(again.upper == ci.upper);
}
