// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace skellam::oracle {

/// Poisson(mean) probability at k, from log-space factorials.
long double poisson_pmf(long double mean, long long k);

/// P(A - B = n) for independent A ~ Poisson(mean_a), B ~ Poisson(mean_b),
/// summed directly over B until the terms are exhausted.
double poisson_difference_pmf(double mean_a, double mean_b, int n);

/// e^{x^2} erfc(x) for x >= 0 as (2/sqrt(pi)) times the integral of
/// exp(-v^2 - 2 x v) over v >= 0, by exp-sinh quadrature.
double scaled_erfc(double x);

}  // namespace skellam::oracle
