// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "skellam/rng.hpp"

namespace skellam::sampling {

/// Axis-aligned box [lower, upper] in R^M.
struct BoxRegion {
  std::vector<double> lower;
  std::vector<double> upper;

  /// [0, extent[0]] x ... x [0, extent[M-1]].
  static BoxRegion from_origin(std::span<const double> extent);
  /// [0, s] x [0, t].
  static BoxRegion rectangle(double s, double t);

  [[nodiscard]] std::size_t dims() const noexcept { return lower.size(); }
  /// Lebesgue measure.
  [[nodiscard]] double measure() const noexcept;
  [[nodiscard]] bool contains(std::span<const double> point) const noexcept;
  void validate() const;
};

/// Measure of the intersection of two boxes of equal dimension.
double intersection_measure(const BoxRegion& a, const BoxRegion& b);

/// Realized Poisson scatter. Coordinates are stored point-major in `coords`.
struct PointProcessSample {
  BoxRegion region;
  std::vector<double> coords;
  double rate = 0.0;

  [[nodiscard]] std::size_t size() const noexcept {
    return region.dims() == 0 ? 0 : coords.size() / region.dims();
  }
  [[nodiscard]] std::span<const double> point(std::size_t i) const noexcept {
    return {coords.data() + i * region.dims(), region.dims()};
  }
};

/// Stable subordinator values H(t_i) on a time grid starting at 0.
struct SubordinatorPath {
  double alpha = 0.5;
  std::vector<double> time_grid;
  std::vector<double> values;

  void validate() const;
};

std::uint64_t sample_poisson(double mean, RngStream& rng);
std::uint64_t sample_binomial(std::uint64_t trials, double p, RngStream& rng);

PointProcessSample sample_point_field(double rate, const BoxRegion& region, RngStream& rng);

/// Number of points x with x <= corner coordinatewise.
std::uint64_t count_at(const PointProcessSample& sample, std::span<const double> corner);

/// One draw of H(1) for the alpha-stable subordinator, E exp(-u H(1)) = exp(-u^alpha).
double sample_stable_unit(double alpha, RngStream& rng);

/// H on `time_grid` from independent stable increments.
SubordinatorPath sample_stable_subordinator_path(double alpha, std::span<const double> time_grid,
                                                 RngStream& rng);

/// E(t) = inf{tau : H(tau) > t}, exact via E(t) =d (t / H(1))^alpha; alpha = 1 gives t.
double sample_inverse_subordinator(double alpha, double t, RngStream& rng);

/// Joint draw of E(t_i) over an increasing grid by first passage of H
/// simulated on a tau-grid of spacing `step`; the crossing is located by
/// linear interpolation of H inside the crossing step.
std::vector<double> sample_inverse_subordinator_path(double alpha,
                                                     std::span<const double> time_grid,
                                                     double step, RngStream& rng);

/// Step giving roughly 512 tau-steps up to the mean of E(t_max).
double default_path_step(double alpha, double t_max);

}  // namespace skellam::sampling
