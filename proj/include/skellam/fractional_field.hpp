// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "skellam/pmf_table.hpp"
#include "skellam/rng.hpp"
#include "skellam/skellam_field.hpp"
#include "skellam/specfun.hpp"

namespace skellam::frac {

using field::GridPoint;
using field::Moments;
using field::SkellamParams;

/// Fractional orders in (0, 1]. The second pair drives the negative
/// component of the type III field.
struct FracOrders {
  double alpha = 1.0;
  double beta = 1.0;
  std::optional<double> alpha2;
  std::optional<double> beta2;

  void validate() const;
};

enum class FsrfKind { one, two, three };

/// Type one: both axes time-changed. Type two: first axis only, order alpha.
/// Type three: difference of two independent fractional Poisson fields with
/// orders (alpha, beta) and (alpha2, beta2).
struct FsrfModel {
  FsrfKind kind = FsrfKind::one;
  SkellamParams params;
  FracOrders orders;

  void validate() const;
};

struct MeanVar {
  double mean = 0.0;
  double var = 0.0;
};

/// Largest |n| evaluated by the type III series.
inline constexpr int kFsrf3MaxAbsN = 12;

/// E[E(a) E(b)] for the inverse alpha-stable subordinator.
double inverse_product_moment(double alpha, double a, double b);

/// Integral of ((a-x)^alpha + (b-x)^alpha) x^(alpha-1) over [0, min(a,b)],
/// by 64-node Gauss-Legendre after power substitutions that remove the endpoint
/// singularities. Throws quadrature when the 128-node value differs by more than
/// `tol` relative; returns the 128-node value.
double covariance_kernel_integral(double alpha, double a, double b, double tol = 1e-9);

/// Relative change between the 64- and 128-node evaluations of the kernel integral.
double covariance_kernel_doubling_change(double alpha, double a, double b);

// Fractional Poisson field N(E1(s), E2(t)).
double fprf_pmf(double lambda, double alpha, double beta, double s, double t, int n,
                const specfun::SeriesControl& ctrl = {});
PmfTable fprf_pmf_table(double lambda, double alpha, double beta, double s, double t, int n_max,
                        const specfun::SeriesControl& ctrl = {});
Moments fprf_moments(double lambda, double alpha, double beta, GridPoint p1, GridPoint p2);
std::uint64_t fprf_sample(double lambda, double alpha, double beta, double s, double t,
                          RngStream& rng);
/// Joint draw at two points from one field: path-sampled time changes and an
/// exact split of the Poisson counts over the overlap of the two rectangles.
std::pair<std::uint64_t, std::uint64_t> fprf_sample_pair(double lambda, double alpha, double beta,
                                                         GridPoint p1, GridPoint p2,
                                                         RngStream& rng);

// Type one.
std::int64_t fsrf1_sample(const FsrfModel& model, double s, double t, RngStream& rng);
double fsrf1_pmf(const FsrfModel& model, double s, double t, int n,
                 const specfun::SeriesControl& ctrl = {});
Moments fsrf1_moments(const FsrfModel& model, GridPoint p1, GridPoint p2);
/// E u^S via the Wright series in c(u) s^alpha t^beta.
double fsrf1_pgf(const FsrfModel& model, double u, double s, double t,
                 const specfun::SeriesControl& ctrl = {});

struct PgfConsistency {
  field::PdeResidual integer_order;  // residuals of the order-one equation
  double series_pgf = 0.0;
  double mc_pgf = 0.0;     // mean of G(u, E1(s), E2(t)) over draws
  double mc_stderr = 0.0;
  double z = 0.0;          // |series - mc| / stderr, 0 when stderr is 0
};

/// Order-one residuals plus a Monte Carlo check of the fractional pgf against
/// the classical pgf averaged over sampled time changes.
PgfConsistency fsrf1_pgf_pde_residual(const FsrfModel& model, double u, double s, double t,
                                      double h, std::uint64_t replicates, RngStream& rng);

// Type two.
std::int64_t fsrf2_sample(const FsrfModel& model, double s, double t, RngStream& rng);
double fsrf2_pmf(const FsrfModel& model, double s, double t, int n,
                 const specfun::SeriesControl& ctrl = {});
double fsrf2_pgf(const FsrfModel& model, double u, double s, double t,
                 const specfun::SeriesControl& ctrl = {});
MeanVar fsrf2_moments(const FsrfModel& model, double s, double t);

// Type three.
std::int64_t fsrf3_sample(const FsrfModel& model, double s, double t, RngStream& rng);
double fsrf3_pmf(const FsrfModel& model, double s, double t, int n,
                 const specfun::SeriesControl& ctrl = {});
Moments fsrf3_moments(const FsrfModel& model, GridPoint p1, GridPoint p2);

/// Dispatch on model kind.
std::int64_t fsrf_sample(const FsrfModel& model, double s, double t, RngStream& rng);
double fsrf_pmf(const FsrfModel& model, double s, double t, int n,
                const specfun::SeriesControl& ctrl = {});
PmfTable fsrf_pmf_table(const FsrfModel& model, double s, double t, int n_min, int n_max,
                        const specfun::SeriesControl& ctrl = {});
Moments fsrf_moments(const FsrfModel& model, GridPoint p1, GridPoint p2);

}  // namespace skellam::frac
