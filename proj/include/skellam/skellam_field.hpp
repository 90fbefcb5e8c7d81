// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "skellam/pmf_table.hpp"
#include "skellam/rng.hpp"
#include "skellam/sampling.hpp"
#include "skellam/specfun.hpp"

namespace skellam::field {

struct Jump {
  double size;  // nonzero jump value j
  double rate;  // intensity of the component field carrying j
};

/// Finite jump set with one independent Poisson field per jump.
struct GsrfParams {
  std::vector<Jump> jumps;

  void validate() const;
  [[nodiscard]] double total_rate() const noexcept;
  /// sum_j j * rate_j
  [[nodiscard]] double drift() const noexcept;
  /// sum_j j^2 * rate_j
  [[nodiscard]] double second_moment_rate() const noexcept;
};

/// Difference of two independent Poisson fields with rates lambda1, lambda2.
struct SkellamParams {
  double lambda1 = 1.0;
  double lambda2 = 1.0;

  void validate() const;
  [[nodiscard]] GsrfParams as_gsrf() const;
};

/// Recovers (lambda1, lambda2) when the jump set is exactly {+1, -1}.
std::optional<SkellamParams> as_skellam(const GsrfParams& params);

struct GridPoint {
  double s = 0.0;
  double t = 0.0;

  void validate() const;
};

struct Moments {
  double mean = 0.0;
  double var = 0.0;
  double cov = 0.0;
};

double gsrf_count(const GsrfParams& params, const sampling::BoxRegion& region, RngStream& rng);

/// Mean and variance on `first`, covariance between the two regions.
Moments gsrf_moments(const GsrfParams& params, const sampling::BoxRegion& first,
                     const sampling::BoxRegion& second);

/// Union of the jump sets, adding rates on shared jumps. Result sorted by jump.
GsrfParams gsrf_superpose(const GsrfParams& p1, const GsrfParams& p2);

/// One jump drawn with probabilities rate_j / total_rate.
double sample_jump(const GsrfParams& params, RngStream& rng);

/// Sum of Poisson(total_rate |B|) iid jumps.
double gsrf_compound_sample(const GsrfParams& params, const sampling::BoxRegion& region,
                            RngStream& rng);

/// One point scatter per component over [0, extent.s] x [0, extent.t]; the
/// field and its rectangular increments are read off exactly.
struct PlanarGsrfSample {
  GsrfParams params;
  std::vector<sampling::PointProcessSample> components;

  [[nodiscard]] double at(GridPoint corner) const;
  /// F(hi) - F(lo.s, hi.t) - F(hi.s, lo.t) + F(lo), the value on (lo.s, hi.s] x (lo.t, hi.t].
  [[nodiscard]] double increment(GridPoint lo, GridPoint hi) const;
};

PlanarGsrfSample sample_planar_gsrf(const GsrfParams& params, GridPoint extent, RngStream& rng);

/// Point probability of S(s, t) = n via the Bessel form.
double srf_pmf(const SkellamParams& params, double s, double t, int n,
               const specfun::SeriesControl& ctrl = {});

PmfTable srf_pmf_table(const SkellamParams& params, double s, double t, int n_min, int n_max,
                       const specfun::SeriesControl& ctrl = {});

/// E u^{S(s,t)} for 0 < u <= 1.
double srf_pgf(const SkellamParams& params, double u, double s, double t);

/// Distance from sqrt(lambda2 / lambda1) inside which the pgf equation is refused.
inline constexpr double kPgfSingularGuard = 1e-3;

struct PdeResidual {
  double pgf = 0.0;
  double pmf = 0.0;
};

/// Central-difference residuals, with step h, of the second-order pgf
/// equation at (u, s, t) and of the first-order pmf system at (n, s, t).
PdeResidual srf_pde_residual(const SkellamParams& params, double u, double s, double t, double h,
                             int n = 0);

/// Probability rule for the lattice approximation: rule(l, l2, jump_index)
/// gives the chance that cell (l, l2) carries that jump.
struct LatticeSpec {
  int k = 1;
  std::function<double(int, int, std::size_t)> rule;
  /// True when the rule ignores the cell, enabling a multinomial draw.
  bool homogeneous = false;

  /// rate_j / k^2 in every cell.
  static LatticeSpec default_rule(int k, const GsrfParams& params);
};

/// Sum of independent cell values over cells l <= floor(k s), l2 <= floor(k t).
double lattice_sample(const LatticeSpec& spec, const GsrfParams& params, double s, double t,
                      RngStream& rng);

/// Throws invalid_spec unless every cell has probabilities in (0, 1) summing below 1.
void validate_lattice(const LatticeSpec& spec, const GsrfParams& params, double s, double t);

/// Normalized small-area deviations of the exact pmf from its first-order expansion.
struct InfinitesimalReport {
  double area = 0.0;
  double plus_one = 0.0;   // |P(S=1) - lambda1 area| / area
  double minus_one = 0.0;  // |P(S=-1) - lambda2 area| / area
  double zero = 0.0;       // |P(S=0) - (1 - (lambda1+lambda2) area)| / area
  double large = 0.0;      // P(|S| >= 2) / area
};

InfinitesimalReport srf_infinitesimal_check(const SkellamParams& params, double area);

}  // namespace skellam::field
