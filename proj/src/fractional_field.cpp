// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#include "skellam/fractional_field.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "detail/series.hpp"
#include "skellam/error.hpp"
#include "skellam/sampling.hpp"

namespace skellam::frac {

using detail::lgamma_pos;
using specfun::SeriesControl;
using specfun::WrightPair;
using specfun::WrightSpec;

namespace {

void check_order(double order, const char* name) {
  if (!(order > 0.0 && order <= 1.0)) {
    throw Error(ErrorKind::validation, std::string(name) + ": order must lie in (0,1]");
  }
}

void check_point(double s, double t) { GridPoint{s, t}.validate(); }

double gamma_ratio_mean(double order) { return std::exp(-lgamma_pos(order + 1.0)); }

/// E E(a), E E(a)^2 for the inverse subordinator of the given order.
double first_moment(double order, double a) { return std::pow(a, order) * gamma_ratio_mean(order); }
double second_moment(double order, double a) {
  return 2.0 * std::pow(a, 2.0 * order) * std::exp(-lgamma_pos(2.0 * order + 1.0));
}

/// Probabilities are refused only when the rounding estimate is large both
/// relative to the value and on the absolute probability scale.
constexpr long double kAbsoluteProbabilityError = 1e-15L;

void check_precision(long double value, long double error, const char* what) {
  if (error > kAbsoluteProbabilityError &&
      error > specfun::kMaxRelativeCancellation * std::fabs(value)) {
    throw Error(ErrorKind::precision, std::string(what) + ": cancellation leaves relative error ~" +
                                          std::to_string(static_cast<double>(error / std::fabs(value))));
  }
}

/// Rounding estimate of weight * series, matching SeriesResult's per-term bound.
long double rounding(long double weight, const specfun::SeriesResult& r) {
  return weight * (128.0L * r.unit_roundoff * r.abs_sum + 0.5L * DBL_EPSILON * std::fabs(r.value));
}

template <int Nodes>
double kernel_integral_nodes(double alpha, double a, double b) {
  const double m = std::min(a, b);
  if (m == 0.0) return 0.0;
  const double c = 0.5 * m;
  // Left half: x = c v^q makes x^(alpha-1) dx a smooth weight.
  const double q = std::ceil(4.0 / alpha);
  auto left = [&](double v) {
    const double x = c * std::pow(v, q);
    return (std::pow(a - x, alpha) + std::pow(b - x, alpha)) * std::pow(v, q * alpha - 1.0);
  };
  // Right half: m - x = c w^3 flattens (m - x)^alpha at the upper end.
  constexpr double p = 3.0;
  auto right = [&](double w) {
    const double gap = c * w * w * w;
    const double x = m - gap;
    return (std::pow((a - m) + gap, alpha) + std::pow((b - m) + gap, alpha)) *
           std::pow(x, alpha - 1.0) * p * w * w;
  };
  using rule = boost::math::quadrature::gauss<double, Nodes>;
  return std::pow(c, alpha) * q * rule::integrate(left, 0.0, 1.0) +
         c * rule::integrate(right, 0.0, 1.0);
}

void check_kernel_args(double alpha, double a, double b) {
  check_order(alpha, "alpha");
  if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::domain, "covariance kernel: endpoints must be finite and nonnegative");
  }
}

}  // namespace

void FracOrders::validate() const {
  check_order(alpha, "alpha");
  check_order(beta, "beta");
  if (alpha2.has_value() != beta2.has_value()) {
    throw Error(ErrorKind::validation, "alpha2/beta2: must be given together");
  }
  if (alpha2) check_order(*alpha2, "alpha2");
  if (beta2) check_order(*beta2, "beta2");
}

void FsrfModel::validate() const {
  params.validate();
  orders.validate();
  if (kind == FsrfKind::three && !orders.alpha2) {
    throw Error(ErrorKind::validation, "alpha2: type three model needs alpha2 and beta2");
  }
  if (kind != FsrfKind::three && orders.alpha2) {
    throw Error(ErrorKind::validation, "alpha2: only the type three model takes a second order pair");
  }
}

double covariance_kernel_doubling_change(double alpha, double a, double b) {
  check_kernel_args(alpha, a, b);
  const double coarse = kernel_integral_nodes<64>(alpha, a, b);
  const double fine = kernel_integral_nodes<128>(alpha, a, b);
  if (fine == 0.0) return coarse == 0.0 ? 0.0 : 1.0;
  return std::fabs(coarse - fine) / std::fabs(fine);
}

double covariance_kernel_integral(double alpha, double a, double b, double tol) {
  check_kernel_args(alpha, a, b);
  const double coarse = kernel_integral_nodes<64>(alpha, a, b);
  const double fine = kernel_integral_nodes<128>(alpha, a, b);
  const double change = fine == 0.0 ? std::fabs(coarse) : std::fabs(coarse - fine) / std::fabs(fine);
  if (!(change <= tol)) {
    throw Error(ErrorKind::quadrature, "covariance kernel: node doubling changed the value by " +
                                           std::to_string(change) + " relative");
  }
  return fine;
}

double inverse_product_moment(double alpha, double a, double b) {
  check_kernel_args(alpha, a, b);
  if (alpha == 1.0) return a * b;
  return covariance_kernel_integral(alpha, a, b) *
         std::exp(-lgamma_pos(alpha + 1.0) - lgamma_pos(alpha));
}

// ---------------------------------------------------------------------------
// Fractional Poisson field

double fprf_pmf(double lambda, double alpha, double beta, double s, double t, int n,
                const SeriesControl& ctrl) {
  if (!(lambda > 0.0)) throw Error(ErrorKind::validation, "lambda: must be positive");
  check_order(alpha, "alpha");
  check_order(beta, "beta");
  check_point(s, t);
  if (n < 0) return 0.0;
  if (s == 0.0 || t == 0.0) return n == 0 ? 1.0 : 0.0;
  const double x = lambda * std::pow(s, alpha) * std::pow(t, beta);
  const double shift = n + 1.0;
  const WrightSpec spec{{{shift, 1.0}, {shift, 1.0}}, {{n * alpha + 1.0, alpha}, {n * beta + 1.0, beta}}};
  const auto psi = specfun::wright_series(spec, -x, ctrl, specfun::Precision::quad);
  const long double weight = std::exp(n * std::log(static_cast<long double>(x)) - lgamma_pos(n + 1.0L));
  check_precision(weight * psi.value, rounding(weight, psi), "fprf_pmf");
  return static_cast<double>(weight * psi.value);
}

PmfTable fprf_pmf_table(double lambda, double alpha, double beta, double s, double t, int n_max,
                        const SeriesControl& ctrl) {
  if (n_max < 0) throw Error(ErrorKind::validation, "window: n_max must be >= 0");
  std::vector<double> probs;
  for (int n = 0; n <= n_max; ++n) probs.push_back(fprf_pmf(lambda, alpha, beta, s, t, n, ctrl));
  return PmfTable::from_probs(0, std::move(probs));
}

Moments fprf_moments(double lambda, double alpha, double beta, GridPoint p1, GridPoint p2) {
  if (!(lambda > 0.0)) throw Error(ErrorKind::validation, "lambda: must be positive");
  check_order(alpha, "alpha");
  check_order(beta, "beta");
  p1.validate();
  p2.validate();
  const double a1 = first_moment(alpha, p1.s) * first_moment(beta, p1.t);
  const double a2 = first_moment(alpha, p2.s) * first_moment(beta, p2.t);
  const double a_min =
      first_moment(alpha, std::min(p1.s, p2.s)) * first_moment(beta, std::min(p1.t, p2.t));
  Moments out;
  out.mean = lambda * a1;
  out.var = lambda * a1 +
            lambda * lambda * (second_moment(alpha, p1.s) * second_moment(beta, p1.t) - a1 * a1);
  out.cov = lambda * a_min + lambda * lambda *
                                 (inverse_product_moment(alpha, p1.s, p2.s) *
                                      inverse_product_moment(beta, p1.t, p2.t) -
                                  a1 * a2);
  return out;
}

std::uint64_t fprf_sample(double lambda, double alpha, double beta, double s, double t,
                          RngStream& rng) {
  if (!(lambda > 0.0)) throw Error(ErrorKind::validation, "lambda: must be positive");
  const double area = sampling::sample_inverse_subordinator(alpha, s, rng) *
                      sampling::sample_inverse_subordinator(beta, t, rng);
  return sampling::sample_poisson(lambda * area, rng);
}

namespace {

/// Joint inverse-subordinator values at a and b.
std::pair<double, double> inverse_pair(double order, double a, double b, RngStream& rng) {
  if (a == b) {
    const double e = sampling::sample_inverse_subordinator(order, a, rng);
    return {e, e};
  }
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  std::vector<double> grid;
  if (lo > 0.0) grid.push_back(lo);
  grid.push_back(hi);
  const auto path = sampling::sample_inverse_subordinator_path(
      order, grid, sampling::default_path_step(order, hi), rng);
  const double e_lo = lo > 0.0 ? path.front() : 0.0;
  const double e_hi = path.back();
  return a < b ? std::pair{e_lo, e_hi} : std::pair{e_hi, e_lo};
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> fprf_sample_pair(double lambda, double alpha, double beta,
                                                         GridPoint p1, GridPoint p2,
                                                         RngStream& rng) {
  if (!(lambda > 0.0)) throw Error(ErrorKind::validation, "lambda: must be positive");
  check_order(alpha, "alpha");
  check_order(beta, "beta");
  p1.validate();
  p2.validate();
  const auto [x1, x2] = inverse_pair(alpha, p1.s, p2.s, rng);
  const auto [y1, y2] = inverse_pair(beta, p1.t, p2.t, rng);
  const double overlap = std::min(x1, x2) * std::min(y1, y2);
  const auto shared = sampling::sample_poisson(lambda * overlap, rng);
  const auto only1 = sampling::sample_poisson(lambda * std::max(0.0, x1 * y1 - overlap), rng);
  const auto only2 = sampling::sample_poisson(lambda * std::max(0.0, x2 * y2 - overlap), rng);
  return {shared + only1, shared + only2};
}

// ---------------------------------------------------------------------------
// Type one

namespace {

void require_kind(const FsrfModel& model, FsrfKind kind, const char* what) {
  model.validate();
  if (model.kind != kind) throw Error(ErrorKind::validation, std::string(what) + ": wrong model kind");
}

std::int64_t skellam_draw(const SkellamParams& p, double area, RngStream& rng) {
  const auto up = sampling::sample_poisson(p.lambda1 * area, rng);
  const auto down = sampling::sample_poisson(p.lambda2 * area, rng);
  return static_cast<std::int64_t>(up) - static_cast<std::int64_t>(down);
}

double skellam_pgf_exponent(const SkellamParams& p, double u) {
  return p.lambda1 * (u - 1.0) + p.lambda2 * (1.0 / u - 1.0);
}

}  // namespace

std::int64_t fsrf1_sample(const FsrfModel& model, double s, double t, RngStream& rng) {
  require_kind(model, FsrfKind::one, "fsrf1_sample");
  check_point(s, t);
  const double area = sampling::sample_inverse_subordinator(model.orders.alpha, s, rng) *
                      sampling::sample_inverse_subordinator(model.orders.beta, t, rng);
  return skellam_draw(model.params, area, rng);
}

double fsrf1_pmf(const FsrfModel& model, double s, double t, int n, const SeriesControl& ctrl) {
  require_kind(model, FsrfKind::one, "fsrf1_pmf");
  check_point(s, t);
  ctrl.validate();
  if (s == 0.0 || t == 0.0) return n == 0 ? 1.0 : 0.0;
  const double l1 = model.params.lambda1;
  const double l2 = model.params.lambda2;
  const double a = model.orders.alpha;
  const double b = model.orders.beta;
  const double scale = std::pow(s, a) * std::pow(t, b);
  const double x = -(l1 + l2) * scale;
  const long double log_y = std::log(std::sqrt(l1 * l2) * scale);
  const int abs_n = n < 0 ? -n : n;

  long double error = 0.0L;
  auto term = [&](int k) -> long double {
    const int m = abs_n + 2 * k;
    const WrightSpec spec{{{m + 1.0, 1.0}, {m + 1.0, 1.0}}, {{m * a + 1.0, a}, {m * b + 1.0, b}}};
    const auto psi = specfun::wright_series(spec, x, ctrl, specfun::Precision::quad);
    const long double weight =
        std::exp(m * log_y - lgamma_pos(abs_n + k + 1.0L) - lgamma_pos(k + 1.0L));
    error += rounding(weight, psi);
    return weight * psi.value;
  };
  const auto sum = detail::sum_series(term, ctrl, "fsrf1_pmf");
  check_precision(sum.value, error, "fsrf1_pmf");
  return sum.value * std::exp(0.5 * n * std::log(l1 / l2));
}

Moments fsrf1_moments(const FsrfModel& model, GridPoint p1, GridPoint p2) {
  require_kind(model, FsrfKind::one, "fsrf1_moments");
  p1.validate();
  p2.validate();
  const double a = model.orders.alpha;
  const double b = model.orders.beta;
  const double sum_rate = model.params.lambda1 + model.params.lambda2;
  const double drift = model.params.lambda1 - model.params.lambda2;
  const double m1 = first_moment(a, p1.s) * first_moment(b, p1.t);
  const double m2 = first_moment(a, p2.s) * first_moment(b, p2.t);
  const double m_min = first_moment(a, std::min(p1.s, p2.s)) * first_moment(b, std::min(p1.t, p2.t));
  Moments out;
  out.mean = drift * m1;
  out.var = sum_rate * m1 + drift * drift * (second_moment(a, p1.s) * second_moment(b, p1.t) - m1 * m1);
  out.cov = sum_rate * m_min +
            drift * drift *
                (inverse_product_moment(a, p1.s, p2.s) * inverse_product_moment(b, p1.t, p2.t) -
                 m1 * m2);
  return out;
}

double fsrf1_pgf(const FsrfModel& model, double u, double s, double t, const SeriesControl& ctrl) {
  require_kind(model, FsrfKind::one, "fsrf1_pgf");
  check_point(s, t);
  if (!(u > 0.0 && u <= 1.0)) throw Error(ErrorKind::domain, "fsrf1_pgf: u must lie in (0,1]");
  const double a = model.orders.alpha;
  const double b = model.orders.beta;
  const double x = skellam_pgf_exponent(model.params, u) * std::pow(s, a) * std::pow(t, b);
  if (x == 0.0) return 1.0;
  const WrightSpec spec{{{1.0, 1.0}, {1.0, 1.0}}, {{1.0, a}, {1.0, b}}};
  return specfun::wright(spec, x, ctrl);
}

PgfConsistency fsrf1_pgf_pde_residual(const FsrfModel& model, double u, double s, double t,
                                      double h, std::uint64_t replicates, RngStream& rng) {
  require_kind(model, FsrfKind::one, "fsrf1_pgf_pde_residual");
  if (replicates < 2) throw Error(ErrorKind::validation, "replicates: need at least 2");
  PgfConsistency out;
  out.integer_order = field::srf_pde_residual(model.params, u, s, t, h);
  out.series_pgf = fsrf1_pgf(model, u, s, t);
  long double sum = 0.0L;
  long double sum_sq = 0.0L;
  for (std::uint64_t i = 0; i < replicates; ++i) {
    const double e1 = sampling::sample_inverse_subordinator(model.orders.alpha, s, rng);
    const double e2 = sampling::sample_inverse_subordinator(model.orders.beta, t, rng);
    const double g = field::srf_pgf(model.params, u, e1, e2);
    sum += g;
    sum_sq += static_cast<long double>(g) * g;
  }
  const long double n = static_cast<long double>(replicates);
  const long double mean = sum / n;
  const long double var = std::max(0.0L, (sum_sq - n * mean * mean) / (n - 1.0L));
  out.mc_pgf = static_cast<double>(mean);
  out.mc_stderr = static_cast<double>(std::sqrt(var / n));
  out.z = out.mc_stderr > 0.0 ? std::fabs(out.series_pgf - out.mc_pgf) / out.mc_stderr : 0.0;
  return out;
}

// ---------------------------------------------------------------------------
// Type two

std::int64_t fsrf2_sample(const FsrfModel& model, double s, double t, RngStream& rng) {
  require_kind(model, FsrfKind::two, "fsrf2_sample");
  check_point(s, t);
  const double area = sampling::sample_inverse_subordinator(model.orders.alpha, s, rng) * t;
  return skellam_draw(model.params, area, rng);
}

double fsrf2_pmf(const FsrfModel& model, double s, double t, int n, const SeriesControl& ctrl) {
  require_kind(model, FsrfKind::two, "fsrf2_pmf");
  check_point(s, t);
  ctrl.validate();
  if (s == 0.0 || t == 0.0) return n == 0 ? 1.0 : 0.0;
  const double l1 = model.params.lambda1;
  const double l2 = model.params.lambda2;
  const double a = model.orders.alpha;
  const double scale = std::pow(s, a) * t;
  const double x = -(l1 + l2) * scale;
  const long double log_y = std::log(std::sqrt(l1 * l2) * scale);
  const int abs_n = n < 0 ? -n : n;

  long double error = 0.0L;
  auto term = [&](int k) -> long double {
    const int m = abs_n + 2 * k;
    const auto ml =
        specfun::mittag_leffler3_series(a, a * m + 1.0, m + 1.0, x, ctrl, specfun::Precision::quad);
    const long double weight = std::exp(lgamma_pos(m + 1.0L) + m * log_y -
                                        lgamma_pos(abs_n + k + 1.0L) - lgamma_pos(k + 1.0L));
    error += rounding(weight, ml);
    return weight * ml.value;
  };
  const auto sum = detail::sum_series(term, ctrl, "fsrf2_pmf");
  check_precision(sum.value, error, "fsrf2_pmf");
  return sum.value * std::exp(0.5 * n * std::log(l1 / l2));
}

double fsrf2_pgf(const FsrfModel& model, double u, double s, double t, const SeriesControl& ctrl) {
  require_kind(model, FsrfKind::two, "fsrf2_pgf");
  check_point(s, t);
  if (!(u > 0.0 && u <= 1.0)) throw Error(ErrorKind::domain, "fsrf2_pgf: u must lie in (0,1]");
  const double x = skellam_pgf_exponent(model.params, u) * std::pow(s, model.orders.alpha) * t;
  return specfun::mittag_leffler2(model.orders.alpha, x, ctrl);
}

MeanVar fsrf2_moments(const FsrfModel& model, double s, double t) {
  require_kind(model, FsrfKind::two, "fsrf2_moments");
  check_point(s, t);
  const double a = model.orders.alpha;
  const double drift = model.params.lambda1 - model.params.lambda2;
  const double m = first_moment(a, s) * t;
  return {drift * m, (model.params.lambda1 + model.params.lambda2) * m +
                         drift * drift * (second_moment(a, s) * t * t - m * m)};
}

namespace {

Moments fsrf2_moments_pair(const FsrfModel& model, GridPoint p1, GridPoint p2) {
  require_kind(model, FsrfKind::two, "fsrf2_moments");
  p1.validate();
  p2.validate();
  const double a = model.orders.alpha;
  const double drift = model.params.lambda1 - model.params.lambda2;
  const auto single = fsrf2_moments(model, p1.s, p1.t);
  const double e1 = first_moment(a, p1.s);
  const double e2 = first_moment(a, p2.s);
  Moments out{single.mean, single.var, 0.0};
  out.cov = (model.params.lambda1 + model.params.lambda2) * first_moment(a, std::min(p1.s, p2.s)) *
                std::min(p1.t, p2.t) +
            drift * drift * p1.t * p2.t * (inverse_product_moment(a, p1.s, p2.s) - e1 * e2);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Type three

std::int64_t fsrf3_sample(const FsrfModel& model, double s, double t, RngStream& rng) {
  require_kind(model, FsrfKind::three, "fsrf3_sample");
  check_point(s, t);
  const auto& o = model.orders;
  const double area1 = sampling::sample_inverse_subordinator(o.alpha, s, rng) *
                       sampling::sample_inverse_subordinator(o.beta, t, rng);
  const double area2 = sampling::sample_inverse_subordinator(*o.alpha2, s, rng) *
                       sampling::sample_inverse_subordinator(*o.beta2, t, rng);
  const auto up = sampling::sample_poisson(model.params.lambda1 * area1, rng);
  const auto down = sampling::sample_poisson(model.params.lambda2 * area2, rng);
  return static_cast<std::int64_t>(up) - static_cast<std::int64_t>(down);
}

double fsrf3_pmf(const FsrfModel& model, double s, double t, int n, const SeriesControl& ctrl) {
  require_kind(model, FsrfKind::three, "fsrf3_pmf");
  check_point(s, t);
  ctrl.validate();
  if (n > kFsrf3MaxAbsN || n < -kFsrf3MaxAbsN) {
    throw Error(ErrorKind::range, "fsrf3_pmf: |n| exceeds the series cap " +
                                      std::to_string(kFsrf3MaxAbsN));
  }
  if (s == 0.0 || t == 0.0) return n == 0 ? 1.0 : 0.0;

  // The component carrying the sign of n indexes r; the other indexes l.
  const auto& o = model.orders;
  double rate_r = model.params.lambda1, ar = o.alpha, br = o.beta;
  double rate_l = model.params.lambda2, al = *o.alpha2, bl = *o.beta2;
  if (n < 0) {
    std::swap(rate_r, rate_l);
    std::swap(ar, al);
    std::swap(br, bl);
  }
  const int abs_n = n < 0 ? -n : n;
  const long double log_xr = std::log(rate_r * std::pow(s, ar) * std::pow(t, br));
  const long double log_xl = std::log(rate_l * std::pow(s, al) * std::pow(t, bl));
  const double z = std::exp(static_cast<double>(log_xr + log_xl));

  auto inner = [&](int r) -> long double {
    auto term = [&](int l) -> long double {
      const double shift = r + abs_n + 1.0;
      const WrightSpec spec{
          {{shift, 1.0}, {shift, 1.0}, {l + 1.0, 1.0}, {l + 1.0, 1.0}},
          {{abs_n + 1.0, 1.0},
           {(r + abs_n) * ar + 1.0, ar},
           {(r + abs_n) * br + 1.0, br},
           {l * al + 1.0, al},
           {l * bl + 1.0, bl}}};
      const auto psi = specfun::wright_series(spec, z, ctrl);
      const long double weight = std::exp((r + abs_n) * log_xr + l * log_xl -
                                          lgamma_pos(r + 1.0L) - lgamma_pos(l + 1.0L));
      return (l % 2 == 0 ? weight : -weight) * psi.value;
    };
    const long double row = detail::sum_series(term, ctrl, "fsrf3_pmf inner").value;
    return r % 2 == 0 ? row : -row;
  };
  return detail::sum_series(inner, ctrl, "fsrf3_pmf").value;
}

Moments fsrf3_moments(const FsrfModel& model, GridPoint p1, GridPoint p2) {
  require_kind(model, FsrfKind::three, "fsrf3_moments");
  const auto& o = model.orders;
  const auto up = fprf_moments(model.params.lambda1, o.alpha, o.beta, p1, p2);
  const auto down = fprf_moments(model.params.lambda2, *o.alpha2, *o.beta2, p1, p2);
  return {up.mean - down.mean, up.var + down.var, up.cov + down.cov};
}

// ---------------------------------------------------------------------------
// Dispatch

std::int64_t fsrf_sample(const FsrfModel& model, double s, double t, RngStream& rng) {
  switch (model.kind) {
    case FsrfKind::one: return fsrf1_sample(model, s, t, rng);
    case FsrfKind::two: return fsrf2_sample(model, s, t, rng);
    case FsrfKind::three: return fsrf3_sample(model, s, t, rng);
  }
  throw Error(ErrorKind::validation, "fsrf_sample: unknown kind");
}

double fsrf_pmf(const FsrfModel& model, double s, double t, int n, const SeriesControl& ctrl) {
  switch (model.kind) {
    case FsrfKind::one: return fsrf1_pmf(model, s, t, n, ctrl);
    case FsrfKind::two: return fsrf2_pmf(model, s, t, n, ctrl);
    case FsrfKind::three: return fsrf3_pmf(model, s, t, n, ctrl);
  }
  throw Error(ErrorKind::validation, "fsrf_pmf: unknown kind");
}

PmfTable fsrf_pmf_table(const FsrfModel& model, double s, double t, int n_min, int n_max,
                        const SeriesControl& ctrl) {
  if (n_min > n_max) throw Error(ErrorKind::validation, "window: n_min must not exceed n_max");
  std::vector<double> probs;
  for (int n = n_min; n <= n_max; ++n) {
    const double p = fsrf_pmf(model, s, t, n, ctrl);
    if (p < -1e-14) {
      throw Error(ErrorKind::precision, "fsrf_pmf_table: negative probability at n = " + std::to_string(n));
    }
    probs.push_back(std::max(0.0, p));
  }
  return PmfTable::from_probs(n_min, std::move(probs));
}

Moments fsrf_moments(const FsrfModel& model, GridPoint p1, GridPoint p2) {
  switch (model.kind) {
    case FsrfKind::one: return fsrf1_moments(model, p1, p2);
    case FsrfKind::two: return fsrf2_moments_pair(model, p1, p2);
    case FsrfKind::three: return fsrf3_moments(model, p1, p2);
  }
  throw Error(ErrorKind::validation, "fsrf_moments: unknown kind");
}

}  // namespace skellam::frac
