// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace skellam::specfun {

/// Truncation rule shared by every series evaluator in the library.
///
/// Summation stops once `consecutive_small` successive terms satisfy
/// |term| <= rel_tol * |partial sum|. Reaching `max_terms` first is a
/// non-convergence error.
struct SeriesControl {
  double rel_tol = 1e-15;
  int max_terms = 500;
  int consecutive_small = 3;

  void validate() const;
};

/// Outcome of a series evaluation. `abs_sum` is the sum of term magnitudes,
/// so abs_sum / |value| is the cancellation condition number.
struct SeriesResult {
  double value = 0.0;
  double abs_sum = 0.0;
  int terms = 0;
  /// Unit roundoff of the arithmetic the terms were summed in.
  double unit_roundoff = 0.0;

  /// Estimated relative rounding error of `value` due to cancellation.
  [[nodiscard]] double relative_error_estimate() const noexcept;
};

/// Working precision of a series. `quad` uses 113-bit arithmetic where the
/// toolchain provides it and falls back to `extended` otherwise.
enum class Precision { extended, quad };

/// True when Precision::quad is genuinely wider than long double.
bool quad_precision_available() noexcept;

inline constexpr double kBesselRange = 50.0;
inline constexpr double kMittagLefflerRange = 50.0;
inline constexpr double kWrightRange = 20.0;

/// Public scalar evaluators refuse results whose cancellation estimate
/// exceeds this relative error.
inline constexpr double kMaxRelativeCancellation = 1e-6;

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Modified Bessel function of the first kind, integer order.
double bessel_i(int n, double x, const SeriesControl& ctrl = {});

/// Three-parameter Mittag-Leffler function E^gamma_{alpha,beta}(x).
double mittag_leffler3(double alpha, double beta, double gamma, double x,
                       const SeriesControl& ctrl = {});
SeriesResult mittag_leffler3_series(double alpha, double beta, double gamma, double x,
                                    const SeriesControl& ctrl = {},
                                    Precision precision = Precision::extended);

/// E_{alpha,1}(x).
double mittag_leffler2(double alpha, double x, const SeriesControl& ctrl = {});

struct WrightPair {
  double shift;  // a_i or b_j
  double scale;  // alpha_i or beta_j, nonzero
};

/// Parameter rows of the generalized Wright function pPsi_q.
struct WrightSpec {
  std::vector<WrightPair> upper;
  std::vector<WrightPair> lower;

  void validate() const;
  /// sum(lower scales) - sum(upper scales) + 1; the series is entire when positive.
  [[nodiscard]] double convergence_margin() const noexcept;
};

/// Generalized Wright function
///   sum_n prod_i Gamma(a_i + n alpha_i) x^n / (prod_j Gamma(b_j + n beta_j) n!).
/// A lower-row Gamma pole contributes a zero term (1/Gamma vanishes there);
/// an upper-row pole is an error.
double wright(const WrightSpec& spec, double x, const SeriesControl& ctrl = {});
SeriesResult wright_series(const WrightSpec& spec, double x, const SeriesControl& ctrl = {},
                           Precision precision = Precision::extended);

}  // namespace skellam::specfun
