// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>

namespace skellam::oracle {

long double poisson_pmf(long double mean, long long k) {
  if (k < 0) return 0.0L;
  if (mean == 0.0L) return k == 0 ? 1.0L : 0.0L;
  return std::exp(k * std::log(mean) - mean - std::lgamma(static_cast<long double>(k) + 1.0L));
}

double poisson_difference_pmf(double mean_a, double mean_b, int n) {
  long double total = 0.0L;
  const long long start = n < 0 ? -n : 0;
  for (long long k = start; k < start + 400; ++k) {
    total += poisson_pmf(mean_a, n + k) * poisson_pmf(mean_b, k);
  }
  return static_cast<double>(total);
}

double scaled_erfc(double x) {
  boost::math::quadrature::exp_sinh<double> rule;
  const double integral = rule.integrate([x](double v) { return std::exp(-v * v - 2.0 * x * v); });
  return 2.0 / std::sqrt(std::numbers::pi) * integral;
}

}  // namespace skellam::oracle
