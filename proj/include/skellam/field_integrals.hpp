// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <json.hpp>

#include "skellam/fractional_field.hpp"
#include "skellam/rng.hpp"
#include "skellam/sampling.hpp"
#include "skellam/skellam_field.hpp"

namespace skellam::integrals {

using Complex = std::complex<double>;
using frac::MeanVar;

/// Kernel exponents of the Riemann-Liouville field integral. (1, 1) is the
/// plain Riemann integral of the count surface.
struct IntegralOrders {
  double nu1 = 1.0;
  double nu2 = 1.0;

  void validate() const;
};

struct CfGrid {
  std::vector<double> xi_values;

  void validate() const;
  /// -2, -1.5, ..., 2.
  static CfGrid standard();
};

/// (1/(G(nu1) G(nu2))) times the integral of (s-x)^(nu1-1) (t-y)^(nu2-1) N(x, y)
/// over [0,s] x [0,t], done in closed form per point of `scatter`.
double rl_integral_value(const sampling::PointProcessSample& scatter, IntegralOrders orders,
                         double s, double t);

double rl_integral_sample(double lambda, IntegralOrders orders, double s, double t,
                          RngStream& rng);

MeanVar rl_integral_moments(double lambda, IntegralOrders orders, double s, double t);

/// Log characteristic function of the unit-box increment, xi -> log E exp(i xi X).
using LogCf = std::function<Complex(double)>;

/// lambda (e^{i xi} - 1).
LogCf prf_log_cf(double lambda);
/// sum_j rate_j (e^{i xi j} - 1).
LogCf gsrf_log_cf(const field::GsrfParams& params);

/// exp(s t * integral over the unit square of log_cf(xi s t x y)), by tensor
/// Gauss-Legendre on 64 and 128 nodes per axis. Throws quadrature when the two
/// disagree beyond 1e-10.
Complex levy_integral_cf(const LogCf& log_cf, double s, double t, double xi);

/// Characteristic function of the Riemann integral of a Poisson field.
Complex prf_integral_cf(double lambda, double s, double t, double xi);

/// sum_j j * sum_i (s - x_i)(t - y_i) over one scatter per jump.
double gsrf_integral_sample(const field::GsrfParams& params, double s, double t, RngStream& rng);

MeanVar gsrf_integral_moments(const field::GsrfParams& params, double s, double t);

using JumpLaw = std::function<double(RngStream&)>;

/// s t * sum_{r <= N} X_r U_r with N ~ Poisson(lambda s t) and U_r the product
/// of the coordinates of a uniform point of the unit square.
double scaled_compound_sample(double lambda, const JumpLaw& jump_law, double s, double t,
                              RngStream& rng);

struct CfRow {
  double xi = 0.0;
  Complex analytic;
  Complex empirical;
  [[nodiscard]] double abs_error() const { return std::abs(analytic - empirical); }
};

struct CfReport {
  std::vector<CfRow> rows;

  [[nodiscard]] double sup_error() const;
};

CfReport make_cf_report(const CfGrid& grid, const std::vector<Complex>& empirical,
                        const std::function<Complex(double)>& analytic);

/// {"rows": [{xi, analytic_re, analytic_im, empirical_re, empirical_im, abs_error}], "sup_error"}.
nlohmann::json to_json(const CfReport& report);

}  // namespace skellam::integrals
