// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <catch_amalgamated.hpp>

#include "skellam/error.hpp"
#include "skellam/fractional_field.hpp"
#include "skellam/verification.hpp"
#include "suites/oracles.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace skellam;
using namespace skellam::frac;

namespace {

// Reference values computed at 50 significant digits and frozen here.
constexpr double kFprf[] = {0.43473118819283154771, 0.2526757912591821095, 0.14586844349055464729,
                            0.08092826400429726777};
constexpr double kFsrf1N0 = 0.43428216337750480304;
constexpr double kFsrf1N3 = 0.052195586708512342114;
constexpr double kFsrf1Nm2 = 0.027106411441310074193;
constexpr double kFsrf1N8 = 0.00082456264209142374004;
constexpr double kFsrf2N0 = 0.39609765585489749426;
constexpr double kFsrf2N3 = 0.050548765592551524961;
constexpr double kFsrf2Nm2 = 0.030262431717868371063;
constexpr double kFsrf3N0 = 0.34840813638973097127;
constexpr double kFsrf3N2 = 0.11517146723655019523;
constexpr double kFsrf3Nm1 = 0.14991728604738488099;
constexpr double kFprfCov = 2.7657891259848353758;
constexpr double kKernel07 = 2.4521608673354682676;
constexpr double kKernel03 = 6.5629759589785651292;

FsrfModel model(FsrfKind kind, double l1, double l2, double a, double b) {
  FsrfModel m;
  m.kind = kind;
  m.params = {l1, l2};
  m.orders.alpha = a;
  m.orders.beta = b;
  if (kind == FsrfKind::three) {
    m.orders.alpha2 = a;
    m.orders.beta2 = b;
  }
  return m;
}

verify::McConfig mc(std::uint64_t seed, std::uint64_t reps = 100000) {
  verify::McConfig cfg;
  cfg.replicates = reps;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("order validation", "[fractional_field]") {
  CHECK_THROWS_AS((FracOrders{0.0, 0.5, {}, {}}).validate(), Error);
  CHECK_THROWS_AS((FracOrders{0.5, 1.2, {}, {}}).validate(), Error);
  CHECK_NOTHROW((FracOrders{1.0, 1.0, {}, {}}).validate());
  auto m = model(FsrfKind::three, 1, 1, 0.7, 0.7);
  m.orders.alpha2.reset();
  CHECK_THROWS_AS(m.validate(), Error);
}

TEST_CASE("fprf pmf matches the frozen reference", "[fractional_field]") {
  for (int n = 0; n < 4; ++n) CHECK_THAT(fprf_pmf(1.0, 0.7, 0.7, 1.0, 1.0, n), WithinRel(kFprf[n], 1e-13));
  const auto table = fprf_pmf_table(1.0, 0.7, 0.7, 1.0, 1.0, 60);
  CHECK(table.tail_mass < 1e-10);
  CHECK_NOTHROW(table.validate());
}

TEST_CASE("fsrf pmfs match the frozen references", "[fractional_field]") {
  const auto m1 = model(FsrfKind::one, 1.0, 0.5, 0.7, 0.7);
  CHECK_THAT(fsrf1_pmf(m1, 1, 1, 0), WithinRel(kFsrf1N0, 1e-13));
  CHECK_THAT(fsrf1_pmf(m1, 1, 1, 3), WithinRel(kFsrf1N3, 1e-13));
  CHECK_THAT(fsrf1_pmf(m1, 1, 1, -2), WithinRel(kFsrf1Nm2, 1e-13));
  CHECK_THAT(fsrf1_pmf(m1, 1, 1, 8), WithinRel(kFsrf1N8, 1e-12));

  const auto m2 = model(FsrfKind::two, 1.0, 0.5, 0.7, 1.0);
  CHECK_THAT(fsrf2_pmf(m2, 1, 1, 0), WithinRel(kFsrf2N0, 1e-13));
  CHECK_THAT(fsrf2_pmf(m2, 1, 1, 3), WithinRel(kFsrf2N3, 1e-13));
  CHECK_THAT(fsrf2_pmf(m2, 1, 1, -2), WithinRel(kFsrf2Nm2, 1e-13));

  auto m3 = model(FsrfKind::one, 1.0, 0.5, 0.7, 0.7);
  m3.kind = FsrfKind::three;
  m3.orders.alpha2 = 0.9;
  m3.orders.beta2 = 0.9;
  CHECK_THAT(fsrf3_pmf(m3, 1, 1, 0), WithinRel(kFsrf3N0, 1e-12));
  CHECK_THAT(fsrf3_pmf(m3, 1, 1, 2), WithinRel(kFsrf3N2, 1e-12));
  CHECK_THAT(fsrf3_pmf(m3, 1, 1, -1), WithinRel(kFsrf3Nm1, 1e-12));
  CHECK_THROWS_AS(fsrf3_pmf(m3, 1, 1, kFsrf3MaxAbsN + 1), Error);
}

TEST_CASE("order one recovers the integer-order fields", "[fractional_field]") {
  for (int n = 0; n < 10; ++n) {
    CHECK_THAT(fprf_pmf(1.3, 1.0, 1.0, 1.0, 1.5, n),
               WithinAbs(static_cast<double>(oracle::poisson_pmf(1.3L * 1.5L, n)), 1e-14));
  }
  const field::SkellamParams p{1.0, 0.5};
  for (int n = -8; n <= 8; ++n) {
    const double exact = field::srf_pmf(p, 1.2, 0.9, n);
    CHECK_THAT(fsrf1_pmf(model(FsrfKind::one, 1.0, 0.5, 1.0, 1.0), 1.2, 0.9, n), WithinAbs(exact, 1e-13));
    CHECK_THAT(fsrf2_pmf(model(FsrfKind::two, 1.0, 0.5, 1.0, 1.0), 1.2, 0.9, n), WithinAbs(exact, 1e-13));
    CHECK_THAT(fsrf3_pmf(model(FsrfKind::three, 1.0, 0.5, 1.0, 1.0), 1.2, 0.9, n), WithinAbs(exact, 1e-12));
  }
}

TEST_CASE("fsrf tables normalize and respect symmetry", "[fractional_field][property]") {
  for (auto kind : {FsrfKind::one, FsrfKind::two, FsrfKind::three}) {
    const auto sym = model(kind, 0.8, 0.8, 0.75, 0.85);
    const int w = kind == FsrfKind::three ? kFsrf3MaxAbsN : 30;
    const auto table = fsrf_pmf_table(sym, 1.0, 1.0, -w, w);
    CHECK(table.tail_mass < (kind == FsrfKind::three ? 1e-6 : 1e-10));
    for (int n = 1; n <= 8; ++n) CHECK_THAT(table.at(n), WithinRel(table.at(-n), 1e-12));

    const auto a = model(kind, 1.5, 0.4, 0.75, 0.85);
    const auto b = model(kind, 0.4, 1.5, 0.75, 0.85);
    for (int n = -6; n <= 6; ++n) {
      CHECK_THAT(fsrf_pmf(a, 0.9, 1.1, n), WithinRel(fsrf_pmf(b, 0.9, 1.1, -n), 1e-12));
    }
  }
}

TEST_CASE("moments agree with simulation", "[fractional_field]") {
  std::uint64_t seed = 100;
  for (auto [a, b] : {std::pair{0.6, 0.8}, std::pair{0.9, 0.5}}) {
    for (auto kind : {FsrfKind::one, FsrfKind::two, FsrfKind::three}) {
      const auto m = model(kind, 1.2, 0.7, a, b);
      const auto mom = fsrf_moments(m, {1.0, 1.3}, {1.0, 1.3});
      const auto draws = verify::run_replicates<double>(mc(++seed), [&](RngStream& r) {
        return static_cast<double>(fsrf_sample(m, 1.0, 1.3, r));
      });
      CHECK(verify::moment_z_check(draws, mom.mean, mom.var).pass);
      CHECK(verify::variance_z_check(draws, mom.var).pass);
    }
    const auto fm = fprf_moments(1.1, a, b, {1.0, 1.3}, {1.0, 1.3});
    const auto counts = verify::run_replicates<double>(mc(++seed), [&](RngStream& r) {
      return static_cast<double>(fprf_sample(1.1, a, b, 1.0, 1.3, r));
    });
    CHECK(verify::moment_z_check(counts, fm.mean, fm.var).pass);
  }
}

TEST_CASE("fprf covariance", "[fractional_field]") {
  CHECK_THAT(covariance_kernel_integral(0.7, 1.0, 1.5), WithinRel(kKernel07, 1e-12));
  CHECK_THAT(covariance_kernel_integral(0.3, 1.0, 1.5), WithinRel(kKernel03, 1e-12));
  CHECK(covariance_kernel_doubling_change(0.7, 1.0, 1.5) < 1e-9);
  CHECK(covariance_kernel_doubling_change(0.3, 2.0, 0.5) < 1e-9);

  const GridPoint p1{1.0, 1.0}, p2{1.5, 1.2};
  CHECK_THAT(fprf_moments(1.0, 0.7, 0.7, p1, p2).cov, WithinRel(kFprfCov, 1e-12));
  CHECK(fprf_moments(1.0, 0.7, 0.7, p1, p2).cov == fprf_moments(1.0, 0.7, 0.7, p2, p1).cov);

  const auto pairs = verify::run_replicates<std::pair<std::uint64_t, std::uint64_t>>(
      mc(200), [&](RngStream& r) { return fprf_sample_pair(1.0, 0.7, 0.7, p1, p2, r); });
  std::vector<double> x, y;
  for (const auto& [a, b] : pairs) {
    x.push_back(static_cast<double>(a));
    y.push_back(static_cast<double>(b));
  }
  const auto m1 = fprf_moments(1.0, 0.7, 0.7, p1, p1);
  const auto m2 = fprf_moments(1.0, 0.7, 0.7, p2, p2);
  CHECK(verify::covariance_z_check(x, y, m1.mean, m2.mean, kFprfCov).pass);
}

TEST_CASE("fprf mean grows with each coordinate", "[fractional_field][property]") {
  double prev = 0.0;
  for (double s = 0.25; s <= 3.0; s += 0.25) {
    const double m = fprf_moments(1.0, 0.6, 0.8, {s, 1.0}, {s, 1.0}).mean;
    CHECK(m > prev);
    prev = m;
  }
  prev = 0.0;
  for (double t = 0.25; t <= 3.0; t += 0.25) {
    const double m = fprf_moments(1.0, 0.6, 0.8, {1.0, t}, {1.0, t}).mean;
    CHECK(m > prev);
    prev = m;
  }
}

TEST_CASE("fsrf1 pgf", "[fractional_field]") {
  const auto m = model(FsrfKind::one, 1.0, 0.5, 0.7, 0.7);
  CHECK_THAT(fsrf1_pgf(m, 1.0, 1.0, 1.0), WithinAbs(1.0, 1e-15));
  const auto table = fsrf_pmf_table(m, 1.0, 1.0, -40, 40);
  for (double u : {0.5, 0.8}) {
    double sum = 0.0;
    for (int n = -40; n <= 40; ++n) sum += table.at(n) * std::pow(u, n);
    CHECK_THAT(fsrf1_pgf(m, u, 1.0, 1.0), WithinRel(sum, 1e-10));
  }
  RngStream rng(300, 0);
  const auto check = fsrf1_pgf_pde_residual(m, 0.6, 1.0, 1.0, 1e-3, 20000, rng);
  CHECK(std::fabs(check.integer_order.pgf) < 1e-4);
  CHECK(check.z < 4.0);
  CHECK(check.mc_stderr > 0.0);
}

TEST_CASE("fsrf2 pgf matches the pmf table", "[fractional_field]") {
  const auto m = model(FsrfKind::two, 1.0, 0.5, 0.7, 1.0);
  const auto table = fsrf_pmf_table(m, 1.0, 1.0, -40, 40);
  double sum = 0.0;
  for (int n = -40; n <= 40; ++n) sum += table.at(n) * std::pow(0.7, n);
  CHECK_THAT(fsrf2_pgf(m, 0.7, 1.0, 1.0), WithinRel(sum, 1e-10));
  const auto mv = fsrf2_moments(m, 1.0, 1.0);
  CHECK_THAT(mv.mean, WithinRel(0.5 / std::tgamma(1.7), 1e-14));
}

TEST_CASE("inverse product moment", "[fractional_field]") {
  // E[E(a)^2] = 2 a^(2 alpha) / Gamma(1 + 2 alpha)
  CHECK_THAT(inverse_product_moment(0.6, 1.5, 1.5), WithinRel(2.0 * std::pow(1.5, 1.2) / std::tgamma(2.2), 1e-10));
  CHECK_THAT(inverse_product_moment(1.0, 1.5, 2.0), WithinRel(3.0, 1e-12));
  CHECK(inverse_product_moment(0.6, 0.0, 2.0) == 0.0);
}

TEST_CASE("closed-form means at order one half", "[fractional_field]") {
  const double four_over_pi = 4.0 / std::numbers::pi;
  CHECK_THAT(fprf_moments(1.0, 0.5, 0.5, {1, 1}, {1, 1}).mean, WithinRel(four_over_pi, 1e-12));
  const auto m1 = fsrf_moments(model(FsrfKind::one, 2.0, 1.0, 0.5, 0.5), {1, 1}, {1, 1});
  CHECK_THAT(m1.mean, WithinRel(four_over_pi, 1e-12));
  CHECK_THAT(m1.var, WithinRel(3.0 * four_over_pi + (4.0 - four_over_pi * four_over_pi), 1e-12));
  const auto m2 = fsrf2_moments(model(FsrfKind::two, 2.0, 1.0, 0.5, 1.0), 1.0, 1.0);
  CHECK_THAT(m2.mean, WithinRel(2.0 / std::sqrt(std::numbers::pi), 1e-12));
  auto three = model(FsrfKind::three, 2.0, 1.0, 0.6, 0.6);
  three.orders.alpha2 = 0.8;
  three.orders.beta2 = 0.8;
  const double g16 = std::tgamma(1.6), g18 = std::tgamma(1.8);
  CHECK_THAT(fsrf_moments(three, {1, 1}, {1, 1}).mean, WithinRel(2.0 / (g16 * g16) - 1.0 / (g18 * g18), 1e-12));
}

TEST_CASE("order one moments reduce to the integer-order field", "[fractional_field]") {
  const GridPoint p1{1.2, 0.7}, p2{1.5, 1.1};
  for (auto kind : {FsrfKind::one, FsrfKind::three}) {
    const auto m = fsrf_moments(model(kind, 2.0, 1.0, 1.0, 1.0), p1, p2);
    CHECK_THAT(m.mean, WithinRel(1.2 * 0.7, 1e-12));
    CHECK_THAT(m.var, WithinRel(3.0 * 1.2 * 0.7, 1e-12));
    CHECK_THAT(m.cov, WithinRel(3.0 * 1.2 * 0.7, 1e-10));
  }
  const auto mv = fsrf2_moments(model(FsrfKind::two, 2.0, 1.0, 1.0, 1.0), 1.2, 0.7);
  CHECK_THAT(mv.mean, WithinRel(1.2 * 0.7, 1e-12));
  CHECK_THAT(mv.var, WithinRel(3.0 * 1.2 * 0.7, 1e-12));
  for (auto kind : {FsrfKind::one, FsrfKind::two, FsrfKind::three}) {
    CHECK(fsrf_moments(model(kind, 1.3, 1.3, 0.6, 0.8), p1, p1).mean == 0.0);
  }
}

TEST_CASE("covariance at coincident points equals the variance", "[fractional_field][property]") {
  for (auto [a, b] : {std::pair{0.5, 0.5}, std::pair{0.7, 0.9}, std::pair{0.3, 1.0}}) {
    const auto m = fprf_moments(1.4, a, b, {1.2, 0.8}, {1.2, 0.8});
    CHECK_THAT(m.cov, WithinRel(m.var, 1e-10));
    const auto f = fsrf_moments(model(FsrfKind::one, 1.4, 0.6, a, b), {1.2, 0.8}, {1.2, 0.8});
    CHECK_THAT(f.cov, WithinRel(f.var, 1e-10));
  }
}

TEST_CASE("fractional mean falls as the gamma product grows", "[fractional_field][property]") {
  std::vector<std::pair<double, double>> rows;
  for (double a = 0.3; a <= 1.0001; a += 0.1) {
    for (double b = 0.3; b <= 1.0001; b += 0.1) {
      const double g = std::tgamma(a + 1.0) * std::tgamma(b + 1.0);
      const double mean = fsrf_moments(model(FsrfKind::one, 2.0, 1.0, a, b), {1, 1}, {1, 1}).mean;
      CHECK_THAT(mean, WithinRel(1.0 / g, 1e-12));
      rows.emplace_back(g, mean);
    }
  }
  std::sort(rows.begin(), rows.end());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].first > rows[i - 1].first) CHECK(rows[i].second < rows[i - 1].second);
  }
}

TEST_CASE("samplers at the origin", "[fractional_field]") {
  RngStream rng(400, 0);
  for (int rep = 0; rep < 100; ++rep) {
    CHECK(fprf_sample(2.0, 0.7, 0.7, 0.0, 1.0, rng) == 0);
    CHECK(fsrf1_sample(model(FsrfKind::one, 2.0, 1.0, 0.7, 0.7), 0.0, 1.0, rng) == 0);
    CHECK(fsrf2_sample(model(FsrfKind::two, 2.0, 1.0, 0.7, 1.0), 1.0, 0.0, rng) == 0);
    CHECK(fsrf3_sample(model(FsrfKind::three, 2.0, 1.0, 0.7, 0.7), 0.0, 1.0, rng) == 0);
  }
  CHECK(fprf_pmf(1.0, 0.7, 0.7, 0.0, 1.0, 0) == 1.0);
  CHECK(fsrf2_pmf(model(FsrfKind::two, 2.0, 1.0, 0.7, 1.0), 0.0, 1.0, 0) == 1.0);
  CHECK(fsrf2_pmf(model(FsrfKind::two, 2.0, 1.0, 0.7, 1.0), 0.0, 1.0, 2) == 0.0);
}

TEST_CASE("fprf series against time-changed draws", "[fractional_field]") {
  const auto reference = fprf_pmf_table(1.0, 0.7, 0.7, 1.0, 1.0, 10);
  const auto draws = verify::run_replicates<std::int64_t>(mc(500), [](RngStream& r) {
    return static_cast<std::int64_t>(fprf_sample(1.0, 0.7, 0.7, 1.0, 1.0, r));
  });
  CHECK(verify::tv_distance(reference, verify::empirical_pmf(draws, 0, 10)) < 0.02);

  const auto m = model(FsrfKind::two, 2.0, 1.0, 1.0, 1.0);
  const auto srf = field::srf_pmf_table(m.params, 1.0, 1.0, -15, 15);
  const auto fsrf = verify::run_replicates<std::int64_t>(mc(501), [&](RngStream& r) { return fsrf2_sample(m, 1.0, 1.0, r); });
  CHECK(verify::tv_distance(srf, verify::empirical_pmf(fsrf, -15, 15)) < 0.01);
}

TEST_CASE("fsrf2 pgf reduces to the integer-order pgf", "[fractional_field]") {
  const auto m = model(FsrfKind::two, 2.0, 1.0, 1.0, 1.0);
  CHECK(fsrf2_pgf(model(FsrfKind::two, 2.0, 1.0, 0.6, 1.0), 1.0, 1.0, 1.0) == 1.0);
  for (double u : {0.3, 0.8}) CHECK_THAT(fsrf2_pgf(m, u, 1.2, 0.9), WithinRel(field::srf_pgf(m.params, u, 1.2, 0.9), 1e-12));
  const auto frac = model(FsrfKind::two, 1.0, 0.5, 0.7, 1.0);
  double sum = 0.0;
  for (int n = -25; n <= 25; ++n) sum += fsrf2_pmf(frac, 1.0, 1.0, n) * std::pow(0.8, n);
  CHECK_THAT(fsrf2_pgf(frac, 0.8, 1.0, 1.0), WithinAbs(sum, 1e-6));
}
