// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cfloat>
#include <cmath>
#include <math.h>
#include <string>
#include <type_traits>
#include <utility>

#if defined(SKELLAM_HAVE_QUADMATH)
#include <quadmath.h>
#endif

#include "skellam/error.hpp"
#include "skellam/specfun.hpp"

namespace skellam::detail {

#if defined(SKELLAM_HAVE_QUADMATH)
using Quad = __float128;
#else
using Quad = long double;
#endif

inline long double xabs(long double x) noexcept { return std::fabs(x); }
inline long double xexp(long double x) noexcept { return std::exp(x); }
inline long double xlog(long double x) noexcept { return std::log(x); }
inline long double xfloor(long double x) noexcept { return std::floor(x); }

#if defined(SKELLAM_HAVE_QUADMATH)
inline Quad xabs(Quad x) noexcept { return fabsq(x); }
inline Quad xexp(Quad x) noexcept { return expq(x); }
inline Quad xlog(Quad x) noexcept { return logq(x); }
inline Quad xfloor(Quad x) noexcept { return floorq(x); }
#endif

template <class Real>
constexpr double unit_roundoff() noexcept {
#if defined(SKELLAM_HAVE_QUADMATH)
  if constexpr (std::is_same_v<Real, __float128>) return 0x1p-113;
#endif
  return LDBL_EPSILON / 2.0;
}

/// Neumaier-compensated accumulator.
template <class Real = long double>
class CompensatedSum {
 public:
  void add(Real x) noexcept {
    const Real t = sum_ + x;
    if (xabs(sum_) >= xabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    abs_ += xabs(x);
  }
  [[nodiscard]] Real value() const noexcept { return sum_ + comp_; }
  [[nodiscard]] Real abs_total() const noexcept { return abs_; }

 private:
  Real sum_ = 0;
  Real comp_ = 0;
  Real abs_ = 0;
};

/// Sums term(0), term(1), ... under the SeriesControl stopping rule, in `Real`.
/// `what` names the series in error messages.
template <class Real, class TermFn>
specfun::SeriesResult sum_series_as(TermFn&& term, const specfun::SeriesControl& ctrl,
                                    const char* what) {
  CompensatedSum<Real> acc;
  int small = 0;
  const Real tol = static_cast<Real>(ctrl.rel_tol);
  for (int n = 0; n < ctrl.max_terms; ++n) {
    const Real t = term(n);
    if (!std::isfinite(static_cast<double>(t))) {
      throw Error(ErrorKind::range, std::string(what) + ": non-finite term at index " +
                                        std::to_string(n));
    }
    acc.add(t);
    if (xabs(t) <= tol * xabs(acc.value())) {
      if (++small >= ctrl.consecutive_small) {
        specfun::SeriesResult r;
        r.value = static_cast<double>(acc.value());
        r.abs_sum = static_cast<double>(acc.abs_total());
        r.terms = n + 1;
        r.unit_roundoff = unit_roundoff<Real>();
        return r;
      }
    } else {
      small = 0;
    }
  }
  throw Error(ErrorKind::non_convergence,
              std::string(what) + ": no convergence within " + std::to_string(ctrl.max_terms) +
                  " terms");
}

template <class TermFn>
specfun::SeriesResult sum_series(TermFn&& term, const specfun::SeriesControl& ctrl,
                                 const char* what) {
  return sum_series_as<long double>(std::forward<TermFn>(term), ctrl, what);
}

/// log|Gamma(x)| and its sign, for x not a nonpositive integer.
template <class Real = long double>
struct SignedLogGamma {
  Real log_abs;
  int sign;
};

template <class Real>
inline bool is_gamma_pole(Real x) noexcept {
  return x <= 0 && x == xfloor(x);
}

inline SignedLogGamma<long double> signed_lgamma(long double x) noexcept {
#if defined(__GLIBC__)
  int sign = 1;
  const long double value = ::lgammal_r(x, &sign);
  return {value, sign};
#else
  int sign = 1;
  if (x < 0) {
    // Gamma alternates sign between consecutive negative integers.
    const long double k = std::ceil(-x);
    sign = (static_cast<long long>(k) % 2 == 0) ? 1 : -1;
  }
  return {std::lgamma(x), sign};
#endif
}

#if defined(SKELLAM_HAVE_QUADMATH)
inline SignedLogGamma<Quad> signed_lgamma(Quad x) noexcept {
  int sign = 1;
  if (x < 0) {
    const long long k = static_cast<long long>(ceilq(-x));
    sign = (k % 2 == 0) ? 1 : -1;
  }
  return {lgammaq(x), sign};
}
#endif

/// Reentrant ln Gamma for positive arguments.
inline long double lgamma_pos(long double x) noexcept { return signed_lgamma(x).log_abs; }

}  // namespace skellam::detail
