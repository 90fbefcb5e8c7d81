// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#include "skellam/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "detail/series.hpp"
#include "skellam/error.hpp"

namespace skellam::sampling {

using detail::lgamma_pos;

BoxRegion BoxRegion::from_origin(std::span<const double> extent) {
  BoxRegion box;
  box.lower.assign(extent.size(), 0.0);
  box.upper.assign(extent.begin(), extent.end());
  box.validate();
  return box;
}

BoxRegion BoxRegion::rectangle(double s, double t) {
  const double extent[] = {s, t};
  return from_origin(extent);
}

double BoxRegion::measure() const noexcept {
  double m = 1.0;
  for (std::size_t i = 0; i < lower.size(); ++i) m *= upper[i] - lower[i];
  return m;
}

bool BoxRegion::contains(std::span<const double> point) const noexcept {
  if (point.size() != dims()) return false;
  for (std::size_t i = 0; i < dims(); ++i) {
    if (point[i] < lower[i] || point[i] > upper[i]) return false;
  }
  return true;
}

void BoxRegion::validate() const {
  if (lower.empty()) throw Error(ErrorKind::validation, "region: dims must be positive");
  if (lower.size() != upper.size()) {
    throw Error(ErrorKind::validation, "region: lower and upper differ in length");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!std::isfinite(lower[i]) || !std::isfinite(upper[i]) || lower[i] > upper[i]) {
      throw Error(ErrorKind::validation,
                  "region: need finite lower[i] <= upper[i] at axis " + std::to_string(i));
    }
  }
}

double intersection_measure(const BoxRegion& a, const BoxRegion& b) {
  if (a.dims() != b.dims()) throw Error(ErrorKind::validation, "intersection: dimension mismatch");
  double m = 1.0;
  for (std::size_t i = 0; i < a.dims(); ++i) {
    const double lo = std::max(a.lower[i], b.lower[i]);
    const double hi = std::min(a.upper[i], b.upper[i]);
    if (hi <= lo) return 0.0;
    m *= hi - lo;
  }
  return m;
}

void SubordinatorPath::validate() const {
  if (time_grid.empty() || time_grid.front() != 0.0) {
    throw Error(ErrorKind::validation, "subordinator path: grid must start at 0");
  }
  if (values.size() != time_grid.size() || values.front() != 0.0) {
    throw Error(ErrorKind::validation, "subordinator path: values must start at 0");
  }
  for (std::size_t i = 1; i < time_grid.size(); ++i) {
    if (!(time_grid[i] > time_grid[i - 1]) || values[i] < values[i - 1]) {
      throw Error(ErrorKind::validation, "subordinator path: grid must increase, values not decrease");
    }
  }
}

namespace {

// Hormann's PTRS transformed rejection, valid for mean >= 10.
std::uint64_t poisson_ptrs(double mean, RngStream& rng) {
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    const double lhs = std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b);
    const double rhs = -mean + k * loglam - static_cast<double>(lgamma_pos(k + 1.0));
    if (lhs <= rhs) return static_cast<std::uint64_t>(k);
  }
}

std::uint64_t binomial_inversion(std::uint64_t n, double p, RngStream& rng) {
  const double q = 1.0 - p;
  const double ratio = p / q;
  const double a = (static_cast<double>(n) + 1.0) * ratio;
  const double r0 = std::pow(q, static_cast<double>(n));
  for (;;) {
    double u = rng.uniform();
    double r = r0;
    std::uint64_t x = 0;
    while (u > r && x <= n) {
      u -= r;
      ++x;
      r *= a / static_cast<double>(x) - ratio;
    }
    if (x <= n) return x;
  }
}

// Hormann's BTRS with the exact pmf-ratio acceptance test (p <= 0.5, np >= 10).
std::uint64_t binomial_btrs(std::uint64_t n, double p, RngStream& rng) {
  const double nd = static_cast<double>(n);
  const double q = 1.0 - p;
  const double spq = std::sqrt(nd * p * q);
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = nd * p + 0.5;
  const double vr = 0.92 - 4.2 / b;
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double m = std::floor((nd + 1.0) * p);
  const double log_ratio = std::log(p / q);
  const double lg_mode = static_cast<double>(lgamma_pos(m + 1.0) + lgamma_pos(nd - m + 1.0));
  for (;;) {
    const double u = rng.uniform() - 0.5;
    double v = rng.uniform();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + c);
    if (k < 0.0 || k > nd) continue;
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
    v = std::log(v * alpha / (a / (us * us) + b));
    const double log_f_ratio =
        lg_mode - static_cast<double>(lgamma_pos(k + 1.0) + lgamma_pos(nd - k + 1.0)) +
        (k - m) * log_ratio;
    if (v <= log_f_ratio) return static_cast<std::uint64_t>(k);
  }
}

}  // namespace

std::uint64_t sample_poisson(double mean, RngStream& rng) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw Error(ErrorKind::domain, "sample_poisson: mean must be finite and >= 0");
  }
  if (mean == 0.0) return 0;
  if (mean >= 10.0) return poisson_ptrs(mean, rng);
  const double limit = std::exp(-mean);
  std::uint64_t k = 0;
  double prod = rng.uniform();
  while (prod > limit) {
    ++k;
    prod *= rng.uniform();
  }
  return k;
}

std::uint64_t sample_binomial(std::uint64_t trials, double p, RngStream& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::domain, "sample_binomial: p outside [0,1]");
  if (trials == 0 || p == 0.0) return 0;
  if (p == 1.0) return trials;
  if (p > 0.5) return trials - sample_binomial(trials, 1.0 - p, rng);
  if (static_cast<double>(trials) * p < 10.0) return binomial_inversion(trials, p, rng);
  return binomial_btrs(trials, p, rng);
}

PointProcessSample sample_point_field(double rate, const BoxRegion& region, RngStream& rng) {
  region.validate();
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw Error(ErrorKind::domain, "sample_point_field: rate must be positive");
  }
  PointProcessSample sample{region, {}, rate};
  const double measure = region.measure();
  if (measure == 0.0) return sample;
  const auto count = sample_poisson(rate * measure, rng);
  const std::size_t dims = region.dims();
  sample.coords.resize(count * dims);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t d = 0; d < dims; ++d) {
      const double lo = region.lower[d];
      sample.coords[i * dims + d] = lo + (region.upper[d] - lo) * rng.uniform();
    }
  }
  return sample;
}

std::uint64_t count_at(const PointProcessSample& sample, std::span<const double> corner) {
  if (corner.size() != sample.region.dims()) {
    throw Error(ErrorKind::validation, "count_at: corner dimension mismatch");
  }
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto p = sample.point(i);
    bool inside = true;
    for (std::size_t d = 0; d < p.size() && inside; ++d) inside = p[d] <= corner[d];
    count += inside ? 1 : 0;
  }
  return count;
}

double sample_stable_unit(double alpha, RngStream& rng) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorKind::domain, "sample_stable_unit: alpha must lie in (0,1)");
  }
  // Kanter's representation with U ~ Uniform(0, pi), W ~ Exp(1).
  const double u = std::numbers::pi * rng.uniform();
  const double w = rng.exponential();
  const double log_h = std::log(std::sin(alpha * u)) - std::log(std::sin(u)) / alpha +
                       (1.0 - alpha) / alpha * (std::log(std::sin((1.0 - alpha) * u)) - std::log(w));
  return std::exp(log_h);
}

SubordinatorPath sample_stable_subordinator_path(double alpha, std::span<const double> time_grid,
                                                 RngStream& rng) {
  SubordinatorPath path{alpha, {time_grid.begin(), time_grid.end()}, {}};
  if (path.time_grid.empty() || path.time_grid.front() != 0.0) {
    throw Error(ErrorKind::validation, "subordinator path: grid must start at 0");
  }
  path.values.reserve(path.time_grid.size());
  path.values.push_back(0.0);
  for (std::size_t i = 1; i < path.time_grid.size(); ++i) {
    const double dt = path.time_grid[i] - path.time_grid[i - 1];
    if (!(dt > 0.0)) throw Error(ErrorKind::validation, "subordinator path: grid must increase");
    path.values.push_back(path.values.back() +
                          std::pow(dt, 1.0 / alpha) * sample_stable_unit(alpha, rng));
  }
  return path;
}

double sample_inverse_subordinator(double alpha, double t, RngStream& rng) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::domain, "sample_inverse_subordinator: alpha must lie in (0,1]");
  }
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "sample_inverse_subordinator: t must be >= 0");
  if (alpha == 1.0) return t;
  const double h = sample_stable_unit(alpha, rng);
  if (t == 0.0) return 0.0;
  return std::pow(t / h, alpha);
}

std::vector<double> sample_inverse_subordinator_path(double alpha,
                                                     std::span<const double> time_grid,
                                                     double step, RngStream& rng) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::domain, "sample_inverse_subordinator_path: alpha must lie in (0,1]");
  }
  if (!(step > 0.0)) throw Error(ErrorKind::domain, "sample_inverse_subordinator_path: step must be > 0");
  for (std::size_t i = 0; i < time_grid.size(); ++i) {
    if (!(time_grid[i] >= 0.0) || (i > 0 && !(time_grid[i] > time_grid[i - 1]))) {
      throw Error(ErrorKind::validation,
                  "sample_inverse_subordinator_path: grid must be nonnegative and increasing");
    }
  }
  std::vector<double> out(time_grid.begin(), time_grid.end());
  if (alpha == 1.0 || time_grid.empty()) return out;

  const double scale = std::pow(step, 1.0 / alpha);
  double tau = 0.0;
  double h_prev = 0.0;
  double h_next = scale * sample_stable_unit(alpha, rng);
  for (std::size_t i = 0; i < time_grid.size(); ++i) {
    const double level = time_grid[i];
    while (!(h_next > level)) {
      tau += step;
      h_prev = h_next;
      h_next += scale * sample_stable_unit(alpha, rng);
    }
    out[i] = tau + step * std::clamp((level - h_prev) / (h_next - h_prev), 0.0, 1.0);
  }
  return out;
}

double default_path_step(double alpha, double t_max) {
  if (!(t_max > 0.0)) return 1e-3;
  const double mean = std::pow(t_max, alpha) / std::tgamma(alpha + 1.0);
  return mean / 512.0;
}

}  // namespace skellam::sampling
