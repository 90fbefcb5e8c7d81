// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#include "skellam/field_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "detail/series.hpp"
#include "skellam/error.hpp"

namespace skellam::integrals {

using detail::lgamma_pos;

namespace {

constexpr double kCfQuadratureTol = 1e-10;

void check_extent(double s, double t) {
  if (!(s >= 0.0) || !(t >= 0.0) || !std::isfinite(s) || !std::isfinite(t)) {
    throw Error(ErrorKind::validation, "s, t: must be finite and >= 0");
  }
}

void check_rate(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorKind::validation, "lambda: must be finite and > 0");
  }
}

template <int Nodes>
Complex unit_square(const std::function<Complex(double)>& f) {
  using Rule = boost::math::quadrature::gauss<double, Nodes>;
  // f depends on the product x y only.
  auto inner = [&](double y) {
    return Rule::integrate([&](double x) { return f(x * y); }, 0.0, 1.0);
  };
  return Rule::integrate(inner, 0.0, 1.0);
}

}  // namespace

void IntegralOrders::validate() const {
  if (!(nu1 > 0.0) || !std::isfinite(nu1)) throw Error(ErrorKind::validation, "nu1: must be > 0");
  if (!(nu2 > 0.0) || !std::isfinite(nu2)) throw Error(ErrorKind::validation, "nu2: must be > 0");
}

void CfGrid::validate() const {
  if (xi_values.empty()) throw Error(ErrorKind::validation, "xi_values: must be nonempty");
  if (std::find(xi_values.begin(), xi_values.end(), 0.0) == xi_values.end()) {
    throw Error(ErrorKind::validation, "xi_values: must include 0");
  }
  for (double xi : xi_values) {
    if (!std::isfinite(xi)) throw Error(ErrorKind::validation, "xi_values: must be finite");
  }
}

CfGrid CfGrid::standard() {
  CfGrid grid;
  for (int i = -4; i <= 4; ++i) grid.xi_values.push_back(0.5 * i);
  return grid;
}

double rl_integral_value(const sampling::PointProcessSample& scatter, IntegralOrders orders,
                         double s, double t) {
  orders.validate();
  check_extent(s, t);
  if (scatter.region.dims() != 2) throw Error(ErrorKind::validation, "scatter: must be planar");
  const double norm = std::exp(-lgamma_pos(orders.nu1 + 1.0) - lgamma_pos(orders.nu2 + 1.0));
  double total = 0.0;
  for (std::size_t i = 0; i < scatter.size(); ++i) {
    const auto p = scatter.point(i);
    if (p[0] > s || p[1] > t) continue;
    total += std::pow(s - p[0], orders.nu1) * std::pow(t - p[1], orders.nu2);
  }
  return total * norm;
}

double rl_integral_sample(double lambda, IntegralOrders orders, double s, double t,
                          RngStream& rng) {
  check_rate(lambda);
  orders.validate();
  check_extent(s, t);
  const auto scatter = sampling::sample_point_field(lambda, sampling::BoxRegion::rectangle(s, t), rng);
  return rl_integral_value(scatter, orders, s, t);
}

MeanVar rl_integral_moments(double lambda, IntegralOrders orders, double s, double t) {
  check_rate(lambda);
  orders.validate();
  check_extent(s, t);
  const double n1 = orders.nu1, n2 = orders.nu2;
  MeanVar mv;
  mv.mean = lambda * std::pow(s, n1 + 1.0) * std::pow(t, n2 + 1.0) *
            std::exp(-lgamma_pos(n1 + 2.0) - lgamma_pos(n2 + 2.0));
  mv.var = lambda * std::pow(s, 2.0 * n1 + 1.0) * std::pow(t, 2.0 * n2 + 1.0) /
           ((2.0 * n1 + 1.0) * (2.0 * n2 + 1.0)) *
           std::exp(-2.0 * lgamma_pos(n1 + 1.0) - 2.0 * lgamma_pos(n2 + 1.0));
  return mv;
}

LogCf prf_log_cf(double lambda) {
  check_rate(lambda);
  return [lambda](double xi) { return lambda * (std::polar(1.0, xi) - 1.0); };
}

LogCf gsrf_log_cf(const field::GsrfParams& params) {
  params.validate();
  return [jumps = params.jumps](double xi) {
    Complex acc = 0.0;
    for (const auto& j : jumps) acc += j.rate * (std::polar(1.0, xi * j.size) - 1.0);
    return acc;
  };
}

Complex levy_integral_cf(const LogCf& log_cf, double s, double t, double xi) {
  check_extent(s, t);
  if (!std::isfinite(xi)) throw Error(ErrorKind::domain, "xi: must be finite");
  const double area = s * t;
  if (xi == 0.0 || area == 0.0) return 1.0;
  const std::function<Complex(double)> f = [&](double z) { return log_cf(xi * area * z); };
  const Complex coarse = unit_square<64>(f);
  const Complex fine = unit_square<128>(f);
  if (std::abs(fine - coarse) > kCfQuadratureTol * std::max(1.0, std::abs(fine))) {
    throw Error(ErrorKind::quadrature, "levy_integral_cf: node doubling changed the integral by " +
                                           std::to_string(std::abs(fine - coarse)));
  }
  return std::exp(area * fine);
}

Complex prf_integral_cf(double lambda, double s, double t, double xi) {
  return levy_integral_cf(prf_log_cf(lambda), s, t, xi);
}

double gsrf_integral_sample(const field::GsrfParams& params, double s, double t, RngStream& rng) {
  params.validate();
  check_extent(s, t);
  const auto region = sampling::BoxRegion::rectangle(s, t);
  double total = 0.0;
  for (const auto& j : params.jumps) {
    const auto scatter = sampling::sample_point_field(j.rate, region, rng);
    total += j.size * rl_integral_value(scatter, IntegralOrders{}, s, t);
  }
  return total;
}

MeanVar gsrf_integral_moments(const field::GsrfParams& params, double s, double t) {
  params.validate();
  check_extent(s, t);
  const double area = s * t;
  return {params.drift() * area * area / 4.0, params.second_moment_rate() * area * area * area / 9.0};
}

double scaled_compound_sample(double lambda, const JumpLaw& jump_law, double s, double t,
                              RngStream& rng) {
  check_rate(lambda);
  check_extent(s, t);
  const double area = s * t;
  const std::uint64_t count = sampling::sample_poisson(lambda * area, rng);
  double total = 0.0;
  for (std::uint64_t r = 0; r < count; ++r) {
    const double x = jump_law(rng);
    const double u = rng.uniform() * rng.uniform();
    total += x * u;
  }
  return area * total;
}

double CfReport::sup_error() const {
  double sup = 0.0;
  for (const auto& row : rows) sup = std::max(sup, row.abs_error());
  return sup;
}

CfReport make_cf_report(const CfGrid& grid, const std::vector<Complex>& empirical,
                        const std::function<Complex(double)>& analytic) {
  grid.validate();
  if (empirical.size() != grid.xi_values.size()) {
    throw Error(ErrorKind::validation, "empirical: one value per grid point required");
  }
  CfReport report;
  for (std::size_t i = 0; i < empirical.size(); ++i) {
    const double xi = grid.xi_values[i];
    report.rows.push_back({xi, analytic(xi), empirical[i]});
  }
  return report;
}

nlohmann::json to_json(const CfReport& report) {
  auto rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"xi", r.xi},
                    {"analytic_re", r.analytic.real()},
                    {"analytic_im", r.analytic.imag()},
                    {"empirical_re", r.empirical.real()},
                    {"empirical_im", r.empirical.imag()},
                    {"abs_error", r.abs_error()}});
  }
  return {{"rows", rows}, {"sup_error", report.sup_error()}};
}

}  // namespace skellam::integrals
