// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <vector>

#include <catch_amalgamated.hpp>

#include "skellam/error.hpp"
#include "skellam/rng.hpp"
#include "skellam/sampling.hpp"
#include "skellam/specfun.hpp"

using namespace skellam;
using namespace skellam::sampling;

namespace {

constexpr int kReps = 100000;

struct Moments2 {
  double mean;
  double var;
};

template <class F>
Moments2 moments_of(int n, F draw) {
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = draw();
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / n;
  return {mean, (sum2 - n * mean * mean) / (n - 1)};
}

double inv_gamma(double x) { return 1.0 / std::tgamma(x); }

}  // namespace

TEST_CASE("Philox matches the published known-answer vectors", "[rng]") {
  const auto zero = philox4x32_10({0, 0, 0, 0}, {0, 0});
  CHECK(zero == std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  const auto ones = philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                  {0xffffffffu, 0xffffffffu});
  CHECK(ones == std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
}

TEST_CASE("streams are reproducible and distinct", "[rng][property]") {
  RngStream a(42, 7), b(42, 7), c(42, 8);
  std::vector<std::uint64_t> xa, xb, xc;
  for (int i = 0; i < 64; ++i) {
    xa.push_back(a());
    xb.push_back(b());
    xc.push_back(c());
  }
  CHECK(xa == xb);
  CHECK(xa != xc);
  RngStream u(1, 1);
  for (int i = 0; i < 10000; ++i) {
    const double v = u.uniform();
    REQUIRE(v > 0.0);
    REQUIRE(v < 1.0);
  }
}

TEST_CASE("sample_poisson", "[sampling]") {
  RngStream rng(1, 0);
  for (int i = 0; i < 100; ++i) CHECK(sample_poisson(0.0, rng) == 0);
  for (double mean : {4.0, 37.5}) {
    const auto m = moments_of(kReps, [&] { return static_cast<double>(sample_poisson(mean, rng)); });
    const double sd = std::sqrt(mean / kReps);
    CHECK(std::fabs(m.mean - mean) < 4.0 * sd);
    // Var of the sample variance for Poisson is (mean + 2 mean^2) / n.
    CHECK(std::fabs(m.var - mean) < 4.0 * std::sqrt((mean + 2.0 * mean * mean) / kReps));
  }
  CHECK_THROWS_AS(sample_poisson(-1.0, rng), Error);
}

TEST_CASE("sample_binomial", "[sampling]") {
  RngStream rng(2, 0);
  CHECK(sample_binomial(0, 0.5, rng) == 0);
  CHECK(sample_binomial(10, 0.0, rng) == 0);
  CHECK(sample_binomial(10, 1.0, rng) == 10);
  for (auto [n, p] : {std::pair{20ull, 0.3}, std::pair{4096ull, 0.002}, std::pair{1000ull, 0.7}}) {
    const auto m = moments_of(kReps, [&] { return static_cast<double>(sample_binomial(n, p, rng)); });
    const double var = n * p * (1 - p);
    CHECK(std::fabs(m.mean - n * p) < 4.0 * std::sqrt(var / kReps));
  }
}

TEST_CASE("box regions", "[sampling]") {
  const auto unit = BoxRegion::rectangle(1.0, 1.0);
  CHECK(unit.measure() == 1.0);
  const BoxRegion shifted{{0.5, 0.0}, {1.5, 1.0}};
  CHECK(intersection_measure(unit, shifted) == 0.5);
  const BoxRegion far{{2.0, 2.0}, {3.0, 3.0}};
  CHECK(intersection_measure(unit, far) == 0.0);
  const BoxRegion bad{{1.0}, {0.0}};
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("sample_point_field counts and locations", "[sampling]") {
  RngStream rng(3, 0);
  const auto unit = BoxRegion::rectangle(1.0, 1.0);
  const auto m = moments_of(kReps, [&] {
    const auto s = sample_point_field(2.0, unit, rng);
    for (std::size_t i = 0; i < s.size(); ++i) REQUIRE(unit.contains(s.point(i)));
    return static_cast<double>(s.size());
  });
  CHECK(std::fabs(m.mean - 2.0) < 4.0 * std::sqrt(2.0 / kReps));

  const auto flat = BoxRegion::rectangle(0.0, 1.0);
  for (int i = 0; i < 100; ++i) CHECK(sample_point_field(5.0, flat, rng).size() == 0);
}

TEST_CASE("disjoint quadrant counts are uncorrelated", "[sampling][property]") {
  RngStream rng(4, 0);
  const auto unit = BoxRegion::rectangle(1.0, 1.0);
  double sxy = 0.0, sx = 0.0, sy = 0.0;
  for (int i = 0; i < kReps; ++i) {
    const auto s = sample_point_field(1.0, unit, rng);
    int q1 = 0, q2 = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      const auto p = s.point(j);
      if (p[0] < 0.5 && p[1] < 0.5) ++q1;
      if (p[0] >= 0.5 && p[1] >= 0.5) ++q2;
    }
    sx += q1;
    sy += q2;
    sxy += q1 * q2;
  }
  const double cov = sxy / kReps - (sx / kReps) * (sy / kReps);
  // Each quadrant is Poisson(1/4); the product has variance about (1/4)^2 + 2 (1/4)^3.
  CHECK(std::fabs(cov) < 4.0 * std::sqrt(0.0625 / kReps) * 1.2);
}

TEST_CASE("count_at", "[sampling]") {
  RngStream rng(5, 0);
  const auto region = BoxRegion::rectangle(2.0, 3.0);
  for (int rep = 0; rep < 200; ++rep) {
    const auto s = sample_point_field(3.0, region, rng);
    CHECK(count_at(s, std::vector<double>{0.0, 0.0}) == 0);
    CHECK(count_at(s, region.upper) == s.size());
    const std::vector<double> c1{0.7, 1.1}, c2{1.4, 1.1}, c3{1.4, 2.9};
    CHECK(count_at(s, c1) <= count_at(s, c2));
    CHECK(count_at(s, c2) <= count_at(s, c3));
  }
}

TEST_CASE("stable draws have the right Laplace transform", "[sampling]") {
  RngStream rng(6, 0);
  for (auto [alpha, u] : {std::pair{0.5, 1.0}, std::pair{0.8, 2.0}}) {
    const auto m = moments_of(kReps, [&] {
      const double h = sample_stable_unit(alpha, rng);
      REQUIRE(h > 0.0);
      return std::exp(-u * h);
    });
    const double target = std::exp(-std::pow(u, alpha));
    const double var = std::exp(-std::pow(2.0 * u, alpha)) - target * target;
    CHECK(std::fabs(m.mean - target) < 4.0 * std::sqrt(var / kReps));
  }
}

TEST_CASE("inverse subordinator single-point law", "[sampling]") {
  RngStream rng(7, 0);
  CHECK(sample_inverse_subordinator(1.0, 3.7, rng) == 3.7);
  const double alpha = 0.6;
  const auto m = moments_of(kReps, [&] { return sample_inverse_subordinator(alpha, 1.0, rng); });
  const double mean = inv_gamma(1.6);
  const double var = 2.0 * inv_gamma(2.2) - mean * mean;
  CHECK(std::fabs(m.mean - mean) < 4.0 * std::sqrt(var / kReps));
  // Sample variance check with a generous fourth-moment bound.
  CHECK(std::fabs(m.var - var) < 4.0 * var * std::sqrt(4.0 / kReps));

  for (double u : {0.5, 1.0, 2.0}) {
    RngStream r2(8, static_cast<std::uint64_t>(u * 10));
    const auto lt = moments_of(kReps, [&] { return std::exp(-u * sample_inverse_subordinator(alpha, 1.0, r2)); });
    const double target = specfun::mittag_leffler2(alpha, -u);
    const double v = specfun::mittag_leffler2(alpha, -2.0 * u) - target * target;
    CHECK(std::fabs(lt.mean - target) < 4.0 * std::sqrt(v / kReps));
  }
}

TEST_CASE("inverse subordinator path", "[sampling]") {
  RngStream rng(9, 0);
  const std::vector<double> grid{0.25, 0.5, 1.0, 1.5};
  CHECK(sample_inverse_subordinator_path(1.0, grid, 0.01, rng) == grid);
  for (int rep = 0; rep < 2000; ++rep) {
    const auto path = sample_inverse_subordinator_path(0.7, grid, default_path_step(0.7, 1.5), rng);
    REQUIRE(path.size() == grid.size());
    REQUIRE(std::is_sorted(path.begin(), path.end()));
  }
  const std::vector<double> single{1.0};
  const int reps = 20000;
  const auto m = moments_of(reps, [&] { return sample_inverse_subordinator_path(0.6, single, 1e-3, rng)[0]; });
  const double mean = inv_gamma(1.6);
  const double var = 2.0 * inv_gamma(2.2) - mean * mean;
  CHECK(std::fabs(m.mean - mean) < 4.0 * std::sqrt(var / reps));
  const std::vector<double> unsorted{1.0, 0.5};
  CHECK_THROWS_AS(sample_inverse_subordinator_path(0.6, unsorted, 1e-3, rng), Error);
}

TEST_CASE("stable subordinator path is nondecreasing from zero", "[sampling]") {
  RngStream rng(10, 0);
  const std::vector<double> grid{0.0, 0.1, 0.2, 0.5, 1.0};
  const auto path = sample_stable_subordinator_path(0.5, grid, rng);
  REQUIRE(path.values.size() == grid.size());
  CHECK(path.values[0] == 0.0);
  CHECK(std::is_sorted(path.values.begin(), path.values.end()));
  CHECK_NOTHROW(path.validate());
}
