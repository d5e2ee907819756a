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

#include "pafind/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>

#include "pafind/errors.hpp"
#include "pafind/random.hpp"

namespace pafind::stats {

double mean(std::span<const double> values) {
  if (values.empty()) throw InsufficientDataError("mean of empty sample");
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw InsufficientDataError("quantile of empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

double median(std::vector<double> values) {
  return quantile(std::move(values), 0.5);
}

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InsufficientDataError("least squares needs >= 2 paired points");
  }
  const double mx = mean(x);
  const double my = mean(y);
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw InsufficientDataError("predictor has zero spread");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  const double scale = std::max(1.0, my * my) * static_cast<double>(x.size());
  if (syy <= 1e-24 * scale) {
    fit.r_squared = ss_res <= 1e-24 * scale ? 1.0 : 0.0;
  } else {
    fit.r_squared = 1.0 - ss_res / syy;
  }
  return fit;
}

double kolmogorov_q(double lambda) {
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < 1e-300 || term < 1e-17 * std::abs(sum)) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

TestResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) {
    throw InsufficientDataError("KS test needs two non-empty samples");
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  const double ne = na * nb / (na + nb);
  const double root = std::sqrt(ne);
  TestResult result;
  result.statistic = d;
  result.p_value = kolmogorov_q((root + 0.12 + 0.11 / root) * d);
  return result;
}

double chi_square_sf(double statistic, double degrees_of_freedom) {
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(degrees_of_freedom / 2.0, statistic / 2.0);
}

TestResult chi_square_homogeneity(std::span<const std::uint64_t> a,
                                  std::span<const std::uint64_t> b) {
  if (a.size() != b.size() || a.empty()) {
    throw InsufficientDataError("chi-square needs matching non-empty bins");
  }
  const double total_a = std::accumulate(a.begin(), a.end(), 0.0);
  const double total_b = std::accumulate(b.begin(), b.end(), 0.0);
  const double total = total_a + total_b;
  if (total_a == 0.0 || total_b == 0.0) {
    throw InsufficientDataError("chi-square needs counts in both samples");
  }
  const double fa = total_a / total;
  const double fb = total_b / total;

  // Pool bins left to right until each pooled bin has expected >= 5 in both
  // rows; a short remainder joins the last pooled bin.
  std::vector<std::pair<double, double>> pooled;
  double ca = 0.0;
  double cb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    ca += static_cast<double>(a[k]);
    cb += static_cast<double>(b[k]);
    const double col = ca + cb;
    if (col * fa >= 5.0 && col * fb >= 5.0) {
      pooled.emplace_back(ca, cb);
      ca = cb = 0.0;
    }
  }
  if (ca + cb > 0.0) {
    if (pooled.empty()) {
      pooled.emplace_back(ca, cb);
    } else {
      pooled.back().first += ca;
      pooled.back().second += cb;
    }
  }

  TestResult result;
  result.degrees_of_freedom = static_cast<double>(pooled.size()) - 1.0;
  if (pooled.size() < 2) return result;
  double stat = 0.0;
  for (const auto& [oa, ob] : pooled) {
    const double col = oa + ob;
    const double ea = col * fa;
    const double eb = col * fb;
    stat += (oa - ea) * (oa - ea) / ea + (ob - eb) * (ob - eb) / eb;
  }
  result.statistic = stat;
  result.p_value = chi_square_sf(stat, result.degrees_of_freedom);
  return result;
}

Interval bootstrap_mean_ci(std::span<const double> values, double level,
                           std::uint32_t resamples, std::uint64_t seed) {
  if (values.empty()) throw InsufficientDataError("bootstrap of empty sample");
  Rng rng = make_stream(seed, StreamDomain::kBootstrap, values.size());
  std::vector<double> means(resamples);
  for (auto& m : means) {
    double sum = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
      sum += values[rng.uniform_below(values.size())];
    }
    m = sum / static_cast<double>(values.size());
  }
  const double tail = (1.0 - level) / 2.0;
  return {quantile(means, tail), quantile(means, 1.0 - tail)};
}

}  // namespace pafind::stats
