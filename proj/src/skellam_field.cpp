// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#include "skellam/skellam_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skellam/error.hpp"

namespace skellam::field {

using sampling::BoxRegion;

void GsrfParams::validate() const {
  if (jumps.empty()) throw Error(ErrorKind::validation, "jumps: jump set must be nonempty");
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    const auto& j = jumps[i];
    if (j.size == 0.0 || !std::isfinite(j.size)) {
      throw Error(ErrorKind::validation, "jumps: jump sizes must be finite and nonzero");
    }
    if (!(j.rate > 0.0) || !std::isfinite(j.rate)) {
      throw Error(ErrorKind::validation,
                  "jumps: rate for jump " + std::to_string(j.size) + " must be positive");
    }
    for (std::size_t m = 0; m < i; ++m) {
      if (jumps[m].size == j.size) {
        throw Error(ErrorKind::validation, "jumps: duplicate jump " + std::to_string(j.size));
      }
    }
  }
}

double GsrfParams::total_rate() const noexcept {
  double r = 0.0;
  for (const auto& j : jumps) r += j.rate;
  return r;
}

double GsrfParams::drift() const noexcept {
  double r = 0.0;
  for (const auto& j : jumps) r += j.size * j.rate;
  return r;
}

double GsrfParams::second_moment_rate() const noexcept {
  double r = 0.0;
  for (const auto& j : jumps) r += j.size * j.size * j.rate;
  return r;
}

void SkellamParams::validate() const {
  if (!(lambda1 > 0.0) || !std::isfinite(lambda1)) {
    throw Error(ErrorKind::validation, "lambda1: must be positive");
  }
  if (!(lambda2 > 0.0) || !std::isfinite(lambda2)) {
    throw Error(ErrorKind::validation, "lambda2: must be positive");
  }
}

GsrfParams SkellamParams::as_gsrf() const { return {{{1.0, lambda1}, {-1.0, lambda2}}}; }

std::optional<SkellamParams> as_skellam(const GsrfParams& params) {
  if (params.jumps.size() != 2) return std::nullopt;
  const auto& a = params.jumps[0];
  const auto& b = params.jumps[1];
  if (a.size == 1.0 && b.size == -1.0) return SkellamParams{a.rate, b.rate};
  if (a.size == -1.0 && b.size == 1.0) return SkellamParams{b.rate, a.rate};
  return std::nullopt;
}

void GridPoint::validate() const {
  if (!(s >= 0.0) || !(t >= 0.0) || !std::isfinite(s) || !std::isfinite(t)) {
    throw Error(ErrorKind::validation, "grid point: s and t must be finite and nonnegative");
  }
}

double gsrf_count(const GsrfParams& params, const BoxRegion& region, RngStream& rng) {
  params.validate();
  region.validate();
  const double measure = region.measure();
  double value = 0.0;
  for (const auto& j : params.jumps) {
    value += j.size * static_cast<double>(sampling::sample_poisson(j.rate * measure, rng));
  }
  return value;
}

Moments gsrf_moments(const GsrfParams& params, const BoxRegion& first, const BoxRegion& second) {
  params.validate();
  first.validate();
  second.validate();
  const double measure = first.measure();
  return {params.drift() * measure, params.second_moment_rate() * measure,
          params.second_moment_rate() * sampling::intersection_measure(first, second)};
}

GsrfParams gsrf_superpose(const GsrfParams& p1, const GsrfParams& p2) {
  p1.validate();
  p2.validate();
  GsrfParams out = p1;
  for (const auto& j : p2.jumps) {
    auto it = std::find_if(out.jumps.begin(), out.jumps.end(),
                           [&](const Jump& x) { return x.size == j.size; });
    if (it == out.jumps.end()) {
      out.jumps.push_back(j);
    } else {
      it->rate += j.rate;
    }
  }
  std::sort(out.jumps.begin(), out.jumps.end(),
            [](const Jump& a, const Jump& b) { return a.size < b.size; });
  return out;
}

double sample_jump(const GsrfParams& params, RngStream& rng) {
  const double target = rng.uniform() * params.total_rate();
  double cumulative = 0.0;
  for (const auto& j : params.jumps) {
    cumulative += j.rate;
    if (target < cumulative) return j.size;
  }
  return params.jumps.back().size;
}

double gsrf_compound_sample(const GsrfParams& params, const BoxRegion& region, RngStream& rng) {
  params.validate();
  region.validate();
  const auto count = sampling::sample_poisson(params.total_rate() * region.measure(), rng);
  double value = 0.0;
  for (std::uint64_t i = 0; i < count; ++i) value += sample_jump(params, rng);
  return value;
}

double PlanarGsrfSample::at(GridPoint corner) const {
  const double c[] = {corner.s, corner.t};
  double value = 0.0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    value += params.jumps[i].size * static_cast<double>(sampling::count_at(components[i], c));
  }
  return value;
}

double PlanarGsrfSample::increment(GridPoint lo, GridPoint hi) const {
  return at(hi) - at({lo.s, hi.t}) - at({hi.s, lo.t}) + at(lo);
}

PlanarGsrfSample sample_planar_gsrf(const GsrfParams& params, GridPoint extent, RngStream& rng) {
  params.validate();
  extent.validate();
  PlanarGsrfSample out{params, {}};
  const auto region = BoxRegion::rectangle(extent.s, extent.t);
  out.components.reserve(params.jumps.size());
  for (const auto& j : params.jumps) {
    out.components.push_back(sampling::sample_point_field(j.rate, region, rng));
  }
  return out;
}

double srf_pmf(const SkellamParams& params, double s, double t, int n,
               const specfun::SeriesControl& ctrl) {
  params.validate();
  GridPoint{s, t}.validate();
  const double area = s * t;
  if (area == 0.0) return n == 0 ? 1.0 : 0.0;
  const double x = 2.0 * std::sqrt(params.lambda1 * params.lambda2) * area;
  const double bessel = specfun::bessel_i(n, x, ctrl);
  return bessel * std::exp(-(params.lambda1 + params.lambda2) * area +
                           0.5 * n * std::log(params.lambda1 / params.lambda2));
}

PmfTable srf_pmf_table(const SkellamParams& params, double s, double t, int n_min, int n_max,
                       const specfun::SeriesControl& ctrl) {
  if (n_min > n_max) throw Error(ErrorKind::validation, "window: n_min must not exceed n_max");
  std::vector<double> probs;
  probs.reserve(static_cast<std::size_t>(n_max - n_min) + 1);
  for (int n = n_min; n <= n_max; ++n) probs.push_back(srf_pmf(params, s, t, n, ctrl));
  return PmfTable::from_probs(n_min, std::move(probs));
}

double srf_pgf(const SkellamParams& params, double u, double s, double t) {
  params.validate();
  if (!(u > 0.0)) throw Error(ErrorKind::domain, "srf_pgf: u must be positive");
  const double area = s * t;
  return std::exp(params.lambda1 * area * (u - 1.0) + params.lambda2 * area * (1.0 / u - 1.0));
}

PdeResidual srf_pde_residual(const SkellamParams& params, double u, double s, double t, double h,
                             int n) {
  params.validate();
  if (!(h > 0.0)) throw Error(ErrorKind::domain, "srf_pde_residual: h must be positive");
  if (!(u > 0.0 && u <= 1.0)) throw Error(ErrorKind::domain, "srf_pde_residual: u must lie in (0,1]");
  if (!(s > h) || !(t > h) || !(u > h)) {
    throw Error(ErrorKind::domain, "srf_pde_residual: stencil leaves the domain");
  }
  const double l1 = params.lambda1;
  const double l2 = params.lambda2;
  if (std::fabs(u - std::sqrt(l2 / l1)) < kPgfSingularGuard) {
    throw Error(ErrorKind::singular,
                "srf_pde_residual: u within 1e-3 of sqrt(lambda2/lambda1)");
  }

  auto G = [&](double uu, double ss, double tt) { return srf_pgf(params, uu, ss, tt); };
  const double g_st = (G(u, s + h, t + h) - G(u, s + h, t - h) - G(u, s - h, t + h) +
                       G(u, s - h, t - h)) /
                      (4.0 * h * h);
  const double g_u = (G(u + h, s, t) - G(u - h, s, t)) / (2.0 * h);
  const double c = l1 * (u - 1.0) + l2 * (1.0 / u - 1.0);
  const double num = l1 * (u - 1.0) * u + l2 * (1.0 - u);
  const double coeff = num * num / (l1 * u * u - l2);
  PdeResidual out;
  out.pgf = g_st - c * G(u, s, t) - coeff * g_u;

  auto p = [&](int m, double ss) { return srf_pmf(params, ss, t, m); };
  const double p_s = (p(n, s + h) - p(n, s - h)) / (2.0 * h);
  out.pmf = p_s - (-(l1 + l2) * t * p(n, s) + l1 * t * p(n - 1, s) + l2 * t * p(n + 1, s));
  return out;
}

LatticeSpec LatticeSpec::default_rule(int k, const GsrfParams& params) {
  params.validate();
  if (k < 1) throw Error(ErrorKind::validation, "k: refinement level must be >= 1");
  std::vector<double> probs;
  for (const auto& j : params.jumps) probs.push_back(j.rate / (static_cast<double>(k) * k));
  LatticeSpec spec;
  spec.k = k;
  spec.homogeneous = true;
  spec.rule = [probs](int, int, std::size_t j) { return probs[j]; };
  return spec;
}

namespace {

int cell_count(int k, double extent) {
  return static_cast<int>(std::floor(static_cast<double>(k) * extent));
}

void check_cell(const LatticeSpec& spec, const GsrfParams& params, int l, int l2) {
  double total = 0.0;
  for (std::size_t j = 0; j < params.jumps.size(); ++j) {
    const double p = spec.rule(l, l2, j);
    if (!(p > 0.0 && p < 1.0)) {
      throw Error(ErrorKind::invalid_spec, "lattice: cell (" + std::to_string(l) + "," +
                                               std::to_string(l2) + ") probability " +
                                               std::to_string(p) + " outside (0,1)");
    }
    total += p;
  }
  if (!(total < 1.0)) {
    throw Error(ErrorKind::invalid_spec, "lattice: cell (" + std::to_string(l) + "," +
                                             std::to_string(l2) + ") probabilities sum to " +
                                             std::to_string(total) + " >= 1; increase k");
  }
}

}  // namespace

void validate_lattice(const LatticeSpec& spec, const GsrfParams& params, double s, double t) {
  params.validate();
  GridPoint{s, t}.validate();
  if (spec.k < 1 || !spec.rule) throw Error(ErrorKind::invalid_spec, "lattice: need k >= 1 and a rule");
  const int rows = cell_count(spec.k, s);
  const int cols = cell_count(spec.k, t);
  if (rows == 0 || cols == 0) return;
  if (spec.homogeneous) {
    check_cell(spec, params, 1, 1);
    return;
  }
  for (int l = 1; l <= rows; ++l) {
    for (int l2 = 1; l2 <= cols; ++l2) check_cell(spec, params, l, l2);
  }
}

double lattice_sample(const LatticeSpec& spec, const GsrfParams& params, double s, double t,
                      RngStream& rng) {
  validate_lattice(spec, params, s, t);
  const int rows = cell_count(spec.k, s);
  const int cols = cell_count(spec.k, t);
  if (rows == 0 || cols == 0) return 0.0;

  double value = 0.0;
  if (spec.homogeneous) {
    // Cell outcomes are iid categorical, so jump counts are multinomial.
    std::uint64_t remaining = static_cast<std::uint64_t>(rows) * static_cast<std::uint64_t>(cols);
    double remaining_prob = 1.0;
    for (std::size_t j = 0; j < params.jumps.size() && remaining > 0; ++j) {
      const double p = spec.rule(1, 1, j);
      const auto hits = sampling::sample_binomial(remaining, std::min(1.0, p / remaining_prob), rng);
      value += params.jumps[j].size * static_cast<double>(hits);
      remaining -= hits;
      remaining_prob -= p;
    }
    return value;
  }
  for (int l = 1; l <= rows; ++l) {
    for (int l2 = 1; l2 <= cols; ++l2) {
      const double u = rng.uniform();
      double cumulative = 0.0;
      for (std::size_t j = 0; j < params.jumps.size(); ++j) {
        cumulative += spec.rule(l, l2, j);
        if (u < cumulative) {
          value += params.jumps[j].size;
          break;
        }
      }
    }
  }
  return value;
}

InfinitesimalReport srf_infinitesimal_check(const SkellamParams& params, double area) {
  params.validate();
  if (!(area > 0.0)) throw Error(ErrorKind::domain, "srf_infinitesimal_check: area must be positive");
  const double l1 = params.lambda1;
  const double l2 = params.lambda2;
  InfinitesimalReport r;
  r.area = area;
  r.plus_one = std::fabs(srf_pmf(params, area, 1.0, 1) - l1 * area) / area;
  r.minus_one = std::fabs(srf_pmf(params, area, 1.0, -1) - l2 * area) / area;
  r.zero = std::fabs(srf_pmf(params, area, 1.0, 0) - (1.0 - (l1 + l2) * area)) / area;
  double large = 0.0;
  for (int n = 2; n <= 30; ++n) {
    large += srf_pmf(params, area, 1.0, n) + srf_pmf(params, area, 1.0, -n);
  }
  r.large = large / area;
  return r;
}

}  // namespace skellam::field
