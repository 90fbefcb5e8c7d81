// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>

#include "oracles.hpp"
#include "skellam/error.hpp"
#include "skellam/field_integrals.hpp"
#include "skellam/fractional_field.hpp"
#include "skellam/sampling.hpp"
#include "skellam/skellam_field.hpp"
#include "skellam/specfun.hpp"

namespace skellam::suites {

using verify::ComparisonReport;
using verify::McConfig;
using verify::Metric;

namespace {

struct Builder {
  SuiteResult result;

  void add(std::string name, ComparisonReport report) {
    result.gates.push_back({std::move(name), std::move(report)});
  }
  void abs_error(std::string name, double value, double tol, nlohmann::json meta = {}) {
    if (meta.is_null()) meta = nlohmann::json::object();
    add(std::move(name), ComparisonReport::make(Metric::abs_error, value, tol, std::move(meta)));
  }
};

/// Each sub-experiment of a suite owns a disjoint block of stream ids.
McConfig mc(const SuiteOptions& o, std::uint64_t block) {
  McConfig cfg;
  cfg.replicates = o.replicates;
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  cfg.stream_offset = block << 40;
  return cfg;
}

std::vector<double> to_double(const std::vector<std::int64_t>& xs) {
  return {xs.begin(), xs.end()};
}

template <class F>
double max_over(int lo, int hi, F f) {
  double worst = 0.0;
  for (int n = lo; n <= hi; ++n) worst = std::max(worst, f(n));
  return worst;
}

double inv_gamma(double x) { return std::exp(-specfun::log_gamma(x)); }

frac::FsrfModel model(frac::FsrfKind kind, double l1, double l2, double a, double b) {
  frac::FsrfModel m;
  m.kind = kind;
  m.params = {l1, l2};
  m.orders.alpha = a;
  m.orders.beta = b;
  return m;
}

frac::FsrfModel model3(double l1, double l2, double a, double b, double a2, double b2) {
  auto m = model(frac::FsrfKind::three, l1, l2, a, b);
  m.orders.alpha2 = a2;
  m.orders.beta2 = b2;
  return m;
}

// ---------------------------------------------------------------------------

void srf_oracle(Builder& b, const SuiteOptions&) {
  const field::SkellamParams p{2.0, 1.0};
  const double err = max_over(-20, 20, [&](int n) {
    return std::fabs(field::srf_pmf(p, 1.0, 1.0, n) - oracle::poisson_difference_pmf(2.0, 1.0, n));
  });
  b.abs_error("pmf vs Poisson convolution, |n| <= 20", err, 1e-12);
}

void srf_mc(Builder& b, const SuiteOptions& o) {
  const field::SkellamParams p{2.0, 1.0};
  const auto gsrf = p.as_gsrf();
  const auto region = sampling::BoxRegion::rectangle(1.0, 1.0);
  const auto draws = verify::run_replicates<std::int64_t>(mc(o, 1), [&](RngStream& rng) {
    return static_cast<std::int64_t>(field::gsrf_count(gsrf, region, rng));
  });
  const auto table = field::srf_pmf_table(p, 1.0, 1.0, -30, 30);
  b.add("TV to exact pmf on [-30, 30]",
        ComparisonReport::make(Metric::tv,
                               verify::tv_distance(verify::empirical_pmf(draws, -30, 30), table),
                               0.01));
  const auto xs = to_double(draws);
  b.add("mean", verify::moment_z_check(xs, 1.0, 3.0));
  b.add("variance", verify::variance_z_check(xs, 3.0));
}

void compound(Builder& b, const SuiteOptions& o) {
  const field::GsrfParams p{{{1.0, 2.0}, {-1.0, 1.0}, {2.0, 0.5}}};
  const auto region = sampling::BoxRegion::rectangle(1.0, 1.0);
  const auto direct = verify::run_replicates<std::int64_t>(mc(o, 1), [&](RngStream& rng) {
    return std::llround(field::gsrf_count(p, region, rng));
  });
  const auto comp = verify::run_replicates<std::int64_t>(mc(o, 2), [&](RngStream& rng) {
    return std::llround(field::gsrf_compound_sample(p, region, rng));
  });
  const double tv = verify::tv_distance(verify::empirical_pmf(direct, -15, 15),
                                        verify::empirical_pmf(comp, -15, 15));
  b.add("TV compound vs direct on [-15, 15]", ComparisonReport::make(Metric::tv, tv, 0.015));
}

void inverse_subordinator(Builder& b, const SuiteOptions& o) {
  std::uint64_t block = 1;
  for (double alpha : {0.5, 0.8}) {
    const auto draws = verify::run_replicates<double>(mc(o, block++), [&](RngStream& rng) {
      return sampling::sample_inverse_subordinator(alpha, 1.0, rng);
    });
    const std::string tag = "alpha=" + std::to_string(alpha).substr(0, 3);
    for (double u : {0.5, 1.0, 2.0}) {
      std::vector<double> lt(draws.size());
      std::transform(draws.begin(), draws.end(), lt.begin(),
                     [u](double e) { return std::exp(-u * e); });
      const double m1 = specfun::mittag_leffler2(alpha, -u);
      const double m2 = specfun::mittag_leffler2(alpha, -2.0 * u);
      b.add(tag + " Laplace u=" + std::to_string(u).substr(0, 3),
            verify::moment_z_check(lt, m1, m2 - m1 * m1));
    }
    const double mean = inv_gamma(alpha + 1.0);
    const double var = 2.0 * inv_gamma(2.0 * alpha + 1.0) - mean * mean;
    b.add(tag + " mean", verify::moment_z_check(draws, mean, var));
  }
}

/// Series table vs sampler on [lo, hi], then mean and variance z-gates.
void series_vs_sampler(Builder& b, const SuiteOptions& o, std::uint64_t block,
                       const frac::FsrfModel& m, int lo, int hi, double tv_threshold) {
  const auto draws = verify::run_replicates<std::int64_t>(
      mc(o, block), [&](RngStream& rng) { return frac::fsrf_sample(m, 1.0, 1.0, rng); });
  const auto table = frac::fsrf_pmf_table(m, 1.0, 1.0, lo, hi);
  const double tv = verify::tv_distance(verify::empirical_pmf(draws, lo, hi), table);
  b.add("TV series vs sampler on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
        ComparisonReport::make(Metric::tv, tv, tv_threshold));
  const auto mom = frac::fsrf_moments(m, {1.0, 1.0}, {1.0, 1.0});
  const auto xs = to_double(draws);
  b.add("mean", verify::moment_z_check(xs, mom.mean, mom.var));
  b.add("variance", verify::variance_z_check(xs, mom.var));
}

void fsrf1(Builder& b, const SuiteOptions& o) {
  const auto unit = model(frac::FsrfKind::one, 2.0, 1.0, 1.0, 1.0);
  b.abs_error("order-one pmf vs Skellam pmf, |n| <= 15", max_over(-15, 15, [&](int n) {
                return std::fabs(frac::fsrf1_pmf(unit, 1.0, 1.0, n) -
                                 field::srf_pmf(unit.params, 1.0, 1.0, n));
              }),
              1e-10);
  series_vs_sampler(b, o, 1, model(frac::FsrfKind::one, 1.0, 0.5, 0.7, 0.7), -8, 8, 0.02);
  const auto half = model(frac::FsrfKind::one, 2.0, 1.0, 0.5, 0.5);
  b.abs_error("mean at alpha=beta=0.5 vs 4/pi",
              std::fabs(frac::fsrf1_moments(half, {1.0, 1.0}, {1.0, 1.0}).mean - 4.0 / std::numbers::pi),
              1e-12);
}

void fsrf2(Builder& b, const SuiteOptions& o) {
  const auto unit = model(frac::FsrfKind::two, 2.0, 1.0, 1.0, 1.0);
  b.abs_error("order-one pmf vs Skellam pmf, |n| <= 15", max_over(-15, 15, [&](int n) {
                return std::fabs(frac::fsrf2_pmf(unit, 1.0, 1.0, n) -
                                 field::srf_pmf(unit.params, 1.0, 1.0, n));
              }),
              1e-10);
  const auto m = model(frac::FsrfKind::two, 1.0, 0.5, 0.7, 1.0);
  series_vs_sampler(b, o, 1, m, -8, 8, 0.02);
  const double u = 0.8;
  long double sum = 0.0L;
  for (int n = -25; n <= 25; ++n) sum += frac::fsrf2_pmf(m, 1.0, 1.0, n) * std::pow(u, n);
  b.abs_error("pgf vs pmf sum at u=0.8, |n| <= 25",
              std::fabs(static_cast<double>(sum) - frac::fsrf2_pgf(m, u, 1.0, 1.0)), 1e-6);
}

void fsrf3(Builder& b, const SuiteOptions& o) {
  const auto unit = model3(2.0, 1.0, 1.0, 1.0, 1.0, 1.0);
  b.abs_error("all-orders-one pmf vs Skellam pmf, |n| <= 5", max_over(-5, 5, [&](int n) {
                return std::fabs(frac::fsrf3_pmf(unit, 1.0, 1.0, n) -
                                 field::srf_pmf(unit.params, 1.0, 1.0, n));
              }),
              1e-8);
  const auto sym = model3(1.0, 1.0, 0.7, 0.8, 0.7, 0.8);
  b.abs_error("symmetric case pmf(n) - pmf(-n), |n| <= 5", max_over(1, 5, [&](int n) {
                return std::fabs(frac::fsrf3_pmf(sym, 1.0, 1.0, n) - frac::fsrf3_pmf(sym, 1.0, 1.0, -n));
              }),
              0.0);
  series_vs_sampler(b, o, 1, model3(1.0, 0.5, 0.7, 0.7, 0.9, 0.9), -5, 5, 0.03);
}

void lattice_convergence(Builder& b, const SuiteOptions& o) {
  const field::GsrfParams p{{{1.0, 2.0}, {-1.0, 1.0}}};
  const auto reports = verify::convergence_study(p, 1.0, 1.0, {16, 32, 64}, mc(o, 1));
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const double rise = reports[i].value - reports[i - 1].value;
    b.add("TV k=" + reports[i].metadata["k"].dump() + " minus TV k=" +
              reports[i - 1].metadata["k"].dump(),
          ComparisonReport::make(Metric::abs_error, std::max(0.0, rise), 0.005,
                                 {{"tv_coarse", reports[i - 1].value}, {"tv_fine", reports[i].value}}));
  }
  auto last = reports.back();
  b.add("TV at k=64", last);
}

void pde(Builder& b, const SuiteOptions&) {
  const field::SkellamParams p{2.0, 1.0};
  struct Point { double u, s, t; };
  for (const Point pt : {Point{0.25, 1.0, 1.0}, Point{0.4, 0.7, 1.2}, Point{0.3, 1.3, 0.8}}) {
    const auto coarse = field::srf_pde_residual(p, pt.u, pt.s, pt.t, 1e-3, 1);
    const auto fine = field::srf_pde_residual(p, pt.u, pt.s, pt.t, 5e-4, 1);
    const std::string at = " at (u,s,t)=(" + std::to_string(pt.u).substr(0, 4) + "," +
                           std::to_string(pt.s).substr(0, 3) + "," + std::to_string(pt.t).substr(0, 3) + ")";
    const double r_pgf = coarse.pgf / fine.pgf;
    const double r_pmf = coarse.pmf / fine.pmf;
    b.abs_error("pgf Richardson ratio - 4" + at, std::fabs(r_pgf - 4.0), 0.5,
                {{"ratio", r_pgf}, {"residual_h", coarse.pgf}, {"residual_h2", fine.pgf}});
    b.abs_error("pmf Richardson ratio - 4" + at, std::fabs(r_pmf - 4.0), 0.5,
                {{"ratio", r_pmf}, {"residual_h", coarse.pmf}, {"residual_h2", fine.pmf}});
  }
}

ComparisonReport cf_gate(const integrals::CfGrid& grid, const std::vector<double>& xs,
                         const std::function<integrals::Complex(double)>& analytic) {
  const auto report = integrals::make_cf_report(grid, verify::empirical_cf(xs, grid), analytic);
  return ComparisonReport::make(Metric::cf_sup, report.sup_error(), 0.02, integrals::to_json(report));
}

void integral_suite(Builder& b, const SuiteOptions& o) {
  const auto grid = integrals::CfGrid::standard();
  const integrals::IntegralOrders riemann{1.0, 1.0};
  const auto field_draws = verify::run_replicates<double>(mc(o, 1), [&](RngStream& rng) {
    return integrals::rl_integral_sample(1.0, riemann, 1.0, 1.0, rng);
  });
  b.add("PRF integral empirical CF vs analytic", cf_gate(grid, field_draws, [](double xi) {
          return integrals::prf_integral_cf(1.0, 1.0, 1.0, xi);
        }));

  const auto compound_draws = verify::run_replicates<double>(mc(o, 2), [&](RngStream& rng) {
    return integrals::scaled_compound_sample(1.0, [](RngStream&) { return 1.0; }, 1.0, 1.0, rng);
  });
  const auto cf_field = verify::empirical_cf(field_draws, grid);
  const auto cf_compound = verify::empirical_cf(compound_draws, grid);
  {
    integrals::CfReport two;
    for (std::size_t i = 0; i < grid.xi_values.size(); ++i) {
      two.rows.push_back({grid.xi_values[i], cf_field[i], cf_compound[i]});
    }
    b.add("scaled compound vs pathwise integral CF",
          ComparisonReport::make(Metric::cf_sup, two.sup_error(), 0.02, integrals::to_json(two)));
  }

  std::uint64_t block = 3;
  for (const integrals::IntegralOrders ord : {riemann, integrals::IntegralOrders{0.5, 1.5}}) {
    const auto draws = verify::run_replicates<double>(mc(o, block++), [&](RngStream& rng) {
      return integrals::rl_integral_sample(1.0, ord, 1.0, 1.0, rng);
    });
    const auto mv = integrals::rl_integral_moments(1.0, ord, 1.0, 1.0);
    const std::string tag = "RL nu=(" + std::to_string(ord.nu1).substr(0, 3) + "," +
                            std::to_string(ord.nu2).substr(0, 3) + ") ";
    b.add(tag + "mean", verify::moment_z_check(draws, mv.mean, mv.var));
    b.add(tag + "variance", verify::variance_z_check(draws, mv.var));
  }

  const field::GsrfParams gp{{{1.0, 2.0}, {-1.0, 1.0}}};
  const auto log_cf = integrals::gsrf_log_cf(gp);
  auto gsrf_cf = [&](double xi) { return integrals::levy_integral_cf(log_cf, 1.0, 1.0, xi); };
  const auto gsrf_draws = verify::run_replicates<double>(mc(o, block++), [&](RngStream& rng) {
    return integrals::gsrf_integral_sample(gp, 1.0, 1.0, rng);
  });
  b.add("GSRF integral empirical CF vs analytic", cf_gate(grid, gsrf_draws, gsrf_cf));
  const auto jump_draws = verify::run_replicates<double>(mc(o, block++), [&](RngStream& rng) {
    return integrals::scaled_compound_sample(
        gp.total_rate(), [&](RngStream& r) { return field::sample_jump(gp, r); }, 1.0, 1.0, rng);
  });
  b.add("scaled compound GSRF jumps CF vs analytic", cf_gate(grid, jump_draws, gsrf_cf));
}

void fprf(Builder& b, const SuiteOptions& o) {
  const double lambda = 1.0, alpha = 0.7, beta = 0.7;
  const auto draws = verify::run_replicates<std::int64_t>(mc(o, 1), [&](RngStream& rng) {
    return static_cast<std::int64_t>(frac::fprf_sample(lambda, alpha, beta, 1.0, 1.0, rng));
  });
  const auto table = frac::fprf_pmf_table(lambda, alpha, beta, 1.0, 1.0, 10);
  b.add("TV series vs sampler on [0, 10]",
        ComparisonReport::make(Metric::tv,
                               verify::tv_distance(verify::empirical_pmf(draws, 0, 10), table), 0.02));

  const field::GridPoint p1{1.0, 1.0}, p2{1.5, 1.2};
  const auto m11 = frac::fprf_moments(lambda, alpha, beta, p1, p1);
  const auto m22 = frac::fprf_moments(lambda, alpha, beta, p2, p2);
  const auto m12 = frac::fprf_moments(lambda, alpha, beta, p1, p2);
  const auto xs = to_double(draws);
  b.add("mean at (1,1)", verify::moment_z_check(xs, m11.mean, m11.var));
  b.add("variance at (1,1)", verify::variance_z_check(xs, m11.var));

  const auto pairs = verify::run_replicates<std::pair<std::uint64_t, std::uint64_t>>(
      mc(o, 2), [&](RngStream& rng) { return frac::fprf_sample_pair(lambda, alpha, beta, p1, p2, rng); });
  std::vector<double> first(pairs.size()), second(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    first[i] = static_cast<double>(pairs[i].first);
    second[i] = static_cast<double>(pairs[i].second);
  }
  b.add("joint sampler mean at (1.5,1.2)", verify::moment_z_check(second, m22.mean, m22.var));
  b.add("covariance between (1,1) and (1.5,1.2)",
        verify::covariance_z_check(first, second, m11.mean, m22.mean, m12.cov));
  const double doubling = std::max(frac::covariance_kernel_doubling_change(alpha, p1.s, p2.s),
                                   frac::covariance_kernel_doubling_change(beta, p1.t, p2.t));
  b.abs_error("covariance kernel 64 vs 128 node relative change", doubling, 1e-9);
}

void specfun_suite(Builder& b, const SuiteOptions&) {
  double sym = 0.0;
  for (double x : {0.1, 1.0, 5.0}) {
    sym = std::max(sym, max_over(-10, 10, [&](int n) {
                     return std::fabs(specfun::bessel_i(n, x) - specfun::bessel_i(-n, x));
                   }));
  }
  b.abs_error("I_n(x) - I_{-n}(x)", sym, 0.0);

  double exp_err = 0.0, wright_err = 0.0;
  const specfun::WrightSpec same{{{1.0, 1.0}, {1.0, 1.0}}, {{1.0, 1.0}, {1.0, 1.0}}};
  for (int i = -30; i <= 30; ++i) {
    const double x = 0.1 * i;
    exp_err = std::max(exp_err, std::fabs(specfun::mittag_leffler3(1.0, 1.0, 1.0, x) - std::exp(x)));
    wright_err = std::max(wright_err, std::fabs(specfun::wright(same, x) - std::exp(x)));
  }
  b.abs_error("E^1_{1,1}(x) - e^x on [-3, 3]", exp_err, 1e-12);
  b.abs_error("Wright with equal rows - e^x on [-3, 3]", wright_err, 1e-12);

  double at_zero = 0.0;
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
    at_zero = std::max(at_zero, std::fabs(specfun::mittag_leffler2(a, 0.0) - 1.0));
  }
  b.abs_error("E_a(0) - 1", at_zero, 0.0);

  int outside = 0;
  for (double a : {0.4, 0.6, 0.8, 1.0}) {
    for (double x : {-0.1, -0.5, -1.0, -2.0, -3.0}) {
      const double v = specfun::mittag_leffler2(a, x);
      if (!(v > 0.0 && v <= 1.0)) ++outside;
    }
  }
  b.abs_error("count of E_a(x) outside (0, 1] for x < 0", outside, 0.0);

  b.abs_error("E_{1/2}(-1) vs e erfc(1) by quadrature",
              std::fabs(specfun::mittag_leffler2(0.5, -1.0) - oracle::scaled_erfc(1.0)), 1e-13);
  b.abs_error("E_{0.6}(-2) vs E^1_{0.6,1}(-2)",
              std::fabs(specfun::mittag_leffler2(0.6, -2.0) -
                        specfun::mittag_leffler3(0.6, 1.0, 1.0, -2.0)),
              1e-14);
  const double w1 = specfun::wright(same, -1.3), w2 = specfun::wright(same, -1.3);
  b.abs_error("repeat evaluation bit-identical", w1 == w2 ? 0.0 : 1.0, 0.0);
}

struct Entry {
  const char* name;
  const char* title;
  double budget_seconds;
  void (*run)(Builder&, const SuiteOptions&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"srf-oracle", "Skellam pmf vs Poisson convolution oracle", 1.0, srf_oracle},
      {"srf-mc", "Skellam field sampler vs exact pmf and moments", 30.0, srf_mc},
      {"compound", "compound Poisson representation", 60.0, compound},
      {"inverse-subordinator", "inverse stable subordinator Laplace pair and mean", 20.0,
       inverse_subordinator},
      {"fsrf1", "fractional Skellam field, type one", 120.0, fsrf1},
      {"fsrf2", "fractional Skellam field, type two", 90.0, fsrf2},
      {"fsrf3", "fractional Skellam field, type three", 180.0, fsrf3},
      {"theorem31", "lattice approximation convergence", 120.0, lattice_convergence},
      {"pde", "governing equations, second-order residuals", 1.0, pde},
      {"integrals", "field integrals: CF identities and moments", 120.0, integral_suite},
      {"fprf", "fractional Poisson field pmf, moments and covariance", 120.0, fprf},
      {"specfun", "special function identities", 1.0, specfun_suite},
  };
  return entries;
}

}  // namespace

bool SuiteResult::gates_pass() const {
  return !gates.empty() &&
         std::all_of(gates.begin(), gates.end(), [](const Gate& g) { return g.report.pass; });
}

nlohmann::json to_json(const SuiteResult& result) {
  auto gates = nlohmann::json::array();
  for (const auto& g : result.gates) {
    auto j = verify::to_json(g.report);
    j["name"] = g.name;
    gates.push_back(std::move(j));
  }
  return {{"suite", result.name},
          {"title", result.title},
          {"pass", result.pass()},
          {"seconds", result.seconds},
          {"budget_seconds", result.budget_seconds},
          {"gates", gates}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  const auto& entries = registry();
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const Entry& e) { return name == e.name; });
  if (it == entries.end()) {
    std::string list;
    for (const auto& n : suite_names()) list += (list.empty() ? "" : ", ") + n;
    throw Error(ErrorKind::validation,
                "suite: unknown name '" + std::string(name) + "'; available: " + list);
  }
  Builder b;
  b.result.name = it->name;
  b.result.title = it->title;
  b.result.budget_seconds = it->budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  it->run(b, options);
  b.result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return b.result;
}

}  // namespace skellam::suites
