// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "skellam/error.hpp"
#include "skellam/field_integrals.hpp"
#include "skellam/pmf_table.hpp"
#include "skellam/rng.hpp"
#include "skellam/skellam_field.hpp"

namespace skellam::verify {

struct McConfig {
  std::uint64_t replicates = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  /// First stream id; replicate i draws from stream stream_offset + i.
  std::uint64_t stream_offset = 0;

  void validate() const;
};

enum class Metric { tv, cf_sup, moment_z, abs_error };

std::string_view to_string(Metric metric) noexcept;

struct ComparisonReport {
  Metric metric = Metric::tv;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  nlohmann::json metadata = nlohmann::json::object();

  /// pass is value <= threshold; a NaN value fails.
  static ComparisonReport make(Metric metric, double value, double threshold,
                               nlohmann::json metadata = nlohmann::json::object());
};

nlohmann::json to_json(const ComparisonReport& report);
nlohmann::json to_json(const std::vector<ComparisonReport>& reports);

/// Runs draw(rng) for every replicate, replicate i on RngStream(seed,
/// stream_offset + i). Results are stored by index, so they do not depend on
/// the number of workers.
template <class T, class Draw>
std::vector<T> run_replicates(const McConfig& cfg, Draw draw) {
  cfg.validate();
  std::vector<T> out(cfg.replicates);
  const std::uint64_t workers =
      std::min<std::uint64_t>(std::max(1u, cfg.workers), cfg.replicates);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      RngStream rng(cfg.seed, cfg.stream_offset + i);
      out[i] = draw(rng);
    }
  };
  if (workers == 1) {
    work(0, cfg.replicates);
    return out;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (cfg.replicates + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(cfg.replicates, begin + chunk);
    pool.emplace_back([&, begin, end] {
      try {
        work(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// Relative frequencies on [n_min, n_max]; the tail is the out-of-window share.
PmfTable empirical_pmf(std::span<const std::int64_t> samples, int n_min, int n_max);

/// Half the l1 distance over the window plus half the tail difference.
double tv_distance(const PmfTable& p, const PmfTable& q);

/// Expected TV between `reference` and an empirical pmf of `replicates` draws
/// from it, from the normal approximation of each cell count.
double tv_noise_floor(const PmfTable& reference, std::uint64_t replicates);

std::vector<std::complex<double>> empirical_cf(std::span<const double> samples,
                                               const integrals::CfGrid& grid);

/// z = |mean - analytic_mean| / sqrt(analytic_var / N).
ComparisonReport moment_z_check(std::span<const double> samples, double analytic_mean,
                                 double analytic_var, double threshold = 4.0);

/// z of the sample variance against analytic_var, with the standard error
/// estimated from the sample fourth central moment.
ComparisonReport variance_z_check(std::span<const double> samples, double analytic_var,
                                  double threshold = 4.0);

/// z of mean((x - mean_x)(y - mean_y)) against analytic_cov, using the
/// analytic means.
ComparisonReport covariance_z_check(std::span<const double> xs, std::span<const double> ys,
                                    double mean_x, double mean_y, double analytic_cov,
                                    double threshold = 4.0);

/// Per-k TV between the empirical lattice pmf and the target law: the exact
/// Skellam table for two-jump {+1, -1} parameters, otherwise an empirical
/// table of `cfg.replicates` direct draws. Metadata carries k and the noise floor.
std::vector<ComparisonReport> convergence_study(const field::GsrfParams& params, double s,
                                                double t, const std::vector<int>& k_values,
                                                const McConfig& cfg, int n_min = -30,
                                                int n_max = 30, double threshold = 0.05);

}  // namespace skellam::verify
