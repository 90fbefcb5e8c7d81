// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#include "skellam/specfun.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <string>

#include "detail/series.hpp"
#include "skellam/error.hpp"

namespace skellam {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain error";
    case ErrorKind::range: return "range error";
    case ErrorKind::pole: return "pole error";
    case ErrorKind::non_convergence: return "non-convergence";
    case ErrorKind::precision: return "precision loss";
    case ErrorKind::quadrature: return "quadrature error";
    case ErrorKind::singular: return "singularity error";
    case ErrorKind::invalid_spec: return "invalid spec";
    case ErrorKind::validation: return "validation error";
    case ErrorKind::window_mismatch: return "window mismatch";
    case ErrorKind::empty_sample: return "empty sample";
  }
  return "error";
}

namespace specfun {

using detail::lgamma_pos;

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0)) throw Error(ErrorKind::validation, "rel_tol: must be > 0");
  if (max_terms < 1) throw Error(ErrorKind::validation, "max_terms: must be >= 1");
  if (consecutive_small < 1) {
    throw Error(ErrorKind::validation, "consecutive_small: must be >= 1");
  }
}

bool quad_precision_available() noexcept {
#if defined(SKELLAM_HAVE_QUADMATH)
  return true;
#else
  return false;
#endif
}

double SeriesResult::relative_error_estimate() const noexcept {
  // Each term carries a few hundred ulps from its exp(sum of log-Gammas).
  const double rounding = 128.0 * unit_roundoff * abs_sum;
  if (value == 0.0) return rounding == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return rounding / std::fabs(value) + 0.5 * DBL_EPSILON;
}

namespace {

void require_precise(const SeriesResult& r, const char* what) {
  if (r.relative_error_estimate() > kMaxRelativeCancellation) {
    throw Error(ErrorKind::precision,
                std::string(what) + ": cancellation leaves relative error ~" +
                    std::to_string(r.relative_error_estimate()));
  }
}

void require_range(double x, double bound, const char* what) {
  if (!std::isfinite(x)) throw Error(ErrorKind::domain, std::string(what) + ": non-finite argument");
  if (std::fabs(x) > bound) {
    throw Error(ErrorKind::range, std::string(what) + ": |x| = " + std::to_string(std::fabs(x)) +
                                      " exceeds safe range " + std::to_string(bound));
  }
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::domain, "log_gamma: argument must be positive");
  if (std::isinf(x)) return x;
  return static_cast<double>(lgamma_pos(static_cast<long double>(x)));
}

double bessel_i(int n, double x, const SeriesControl& ctrl) {
  ctrl.validate();
  require_range(x, kBesselRange, "bessel_i");
  const int order = n < 0 ? -n : n;
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;

  const long double half = static_cast<long double>(x) / 2.0L;
  const long double half_sq = half * half;
  long double term =
      std::exp(order * std::log(std::fabs(half)) - lgamma_pos(static_cast<long double>(order) + 1));
  if (half < 0 && order % 2 == 1) term = -term;

  // term_{k+1} = term_k (x/2)^2 / ((k+1)(order+k+1))
  auto next = [&](int k) {
    if (k > 0) term *= half_sq / (static_cast<long double>(k) * (order + k));
    return term;
  };
  return detail::sum_series(next, ctrl, "bessel_i").value;
}

namespace {

template <class Real>
SeriesResult mittag_leffler3_impl(double alpha, double beta, double gamma, double x,
                                  const SeriesControl& ctrl) {
  using detail::xexp;
  using detail::xlog;
  const Real a = alpha, b = beta, g = gamma;
  const Real log_abs_x = x == 0.0 ? Real(0) : xlog(static_cast<Real>(std::fabs(x)));
  const Real lg_gamma = detail::signed_lgamma(g).log_abs;
  const Real lg_beta = detail::signed_lgamma(b).log_abs;
  auto term = [&](int r) -> Real {
    if (r == 0) return xexp(-lg_beta);
    if (x == 0.0) return Real(0);
    const Real rr = r;
    const Real log_mag = detail::signed_lgamma(g + rr).log_abs - lg_gamma -
                         detail::signed_lgamma(a * rr + b).log_abs -
                         detail::signed_lgamma(rr + 1).log_abs + rr * log_abs_x;
    const Real mag = xexp(log_mag);
    return (x < 0 && (r % 2 == 1)) ? -mag : mag;
  };
  return detail::sum_series_as<Real>(term, ctrl, "mittag_leffler3");
}

}  // namespace

SeriesResult mittag_leffler3_series(double alpha, double beta, double gamma, double x,
                                    const SeriesControl& ctrl, Precision precision) {
  ctrl.validate();
  if (!(alpha > 0.0) || !(beta > 0.0) || !(gamma > 0.0)) {
    throw Error(ErrorKind::domain, "mittag_leffler3: alpha, beta, gamma must be positive");
  }
  require_range(x, kMittagLefflerRange, "mittag_leffler3");
  if (precision == Precision::quad) {
    return mittag_leffler3_impl<detail::Quad>(alpha, beta, gamma, x, ctrl);
  }
  return mittag_leffler3_impl<long double>(alpha, beta, gamma, x, ctrl);
}

double mittag_leffler3(double alpha, double beta, double gamma, double x,
                       const SeriesControl& ctrl) {
  const auto r = mittag_leffler3_series(alpha, beta, gamma, x, ctrl);
  require_precise(r, "mittag_leffler3");
  return r.value;
}

double mittag_leffler2(double alpha, double x, const SeriesControl& ctrl) {
  return mittag_leffler3(alpha, 1.0, 1.0, x, ctrl);
}

void WrightSpec::validate() const {
  for (const auto& p : upper) {
    if (p.scale == 0.0 || !std::isfinite(p.scale) || !std::isfinite(p.shift)) {
      throw Error(ErrorKind::domain, "wright: upper-row scales must be finite and nonzero");
    }
  }
  for (const auto& p : lower) {
    if (p.scale == 0.0 || !std::isfinite(p.scale) || !std::isfinite(p.shift)) {
      throw Error(ErrorKind::domain, "wright: lower-row scales must be finite and nonzero");
    }
  }
}

double WrightSpec::convergence_margin() const noexcept {
  double margin = 1.0;
  for (const auto& p : lower) margin += p.scale;
  for (const auto& p : upper) margin -= p.scale;
  return margin;
}

namespace {

template <class Real>
SeriesResult wright_impl(const WrightSpec& spec, double x, const SeriesControl& ctrl) {
  using detail::xexp;
  using detail::xlog;
  const Real log_abs_x = x == 0.0 ? Real(0) : xlog(static_cast<Real>(std::fabs(x)));
  auto term = [&](int n) -> Real {
    if (n > 0 && x == 0.0) return Real(0);
    const Real nn = n;
    Real log_mag = 0;
    int sign = 1;
    for (const auto& p : spec.upper) {
      const Real arg = static_cast<Real>(p.shift) + nn * static_cast<Real>(p.scale);
      if (detail::is_gamma_pole(arg)) {
        throw Error(ErrorKind::pole, "wright: upper Gamma argument " +
                                         std::to_string(static_cast<double>(arg)) + " at n = " +
                                         std::to_string(n));
      }
      const auto g = detail::signed_lgamma(arg);
      log_mag += g.log_abs;
      sign *= g.sign;
    }
    for (const auto& p : spec.lower) {
      const Real arg = static_cast<Real>(p.shift) + nn * static_cast<Real>(p.scale);
      if (detail::is_gamma_pole(arg)) return Real(0);
      const auto g = detail::signed_lgamma(arg);
      log_mag -= g.log_abs;
      sign *= g.sign;
    }
    log_mag -= detail::signed_lgamma(nn + 1).log_abs;
    if (n > 0) {
      log_mag += nn * log_abs_x;
      if (x < 0 && n % 2 == 1) sign = -sign;
    }
    const Real mag = xexp(log_mag);
    return sign < 0 ? -mag : mag;
  };
  return detail::sum_series_as<Real>(term, ctrl, "wright");
}

}  // namespace

SeriesResult wright_series(const WrightSpec& spec, double x, const SeriesControl& ctrl,
                           Precision precision) {
  ctrl.validate();
  spec.validate();
  if (!(spec.convergence_margin() > 0.0)) {
    throw Error(ErrorKind::domain,
                "wright: sum(lower scales) - sum(upper scales) + 1 must be positive, got " +
                    std::to_string(spec.convergence_margin()));
  }
  require_range(x, kWrightRange, "wright");
  if (precision == Precision::quad) return wright_impl<detail::Quad>(spec, x, ctrl);
  return wright_impl<long double>(spec, x, ctrl);
}

double wright(const WrightSpec& spec, double x, const SeriesControl& ctrl) {
  const auto r = wright_series(spec, x, ctrl);
  require_precise(r, "wright");
  return r.value;
}

}  // namespace specfun
}  // namespace skellam
