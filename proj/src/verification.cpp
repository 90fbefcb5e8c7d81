// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#include "skellam/verification.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "detail/series.hpp"

namespace skellam::verify {

void McConfig::validate() const {
  if (replicates < 1) throw Error(ErrorKind::validation, "replicates: must be >= 1");
  if (workers < 1) throw Error(ErrorKind::validation, "workers: must be >= 1");
}

std::string_view to_string(Metric metric) noexcept {
  switch (metric) {
    case Metric::tv: return "TV";
    case Metric::cf_sup: return "CF_SUP";
    case Metric::moment_z: return "MOMENT_Z";
    case Metric::abs_error: return "ABS_ERROR";
  }
  return "UNKNOWN";
}

ComparisonReport ComparisonReport::make(Metric metric, double value, double threshold,
                                        nlohmann::json metadata) {
  ComparisonReport r;
  r.metric = metric;
  r.value = value;
  r.threshold = threshold;
  r.pass = value <= threshold;
  r.metadata = std::move(metadata);
  return r;
}

nlohmann::json to_json(const ComparisonReport& report) {
  return {{"metric", std::string(to_string(report.metric))},
          {"value", report.value},
          {"threshold", report.threshold},
          {"pass", report.pass},
          {"metadata", report.metadata}};
}

nlohmann::json to_json(const std::vector<ComparisonReport>& reports) {
  auto arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

PmfTable empirical_pmf(std::span<const std::int64_t> samples, int n_min, int n_max) {
  if (samples.empty()) throw Error(ErrorKind::empty_sample, "empirical_pmf: no samples");
  if (n_min > n_max) throw Error(ErrorKind::validation, "n_min: must be <= n_max");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_max - n_min) + 1, 0);
  std::uint64_t outside = 0;
  for (const auto x : samples) {
    if (x < n_min || x > n_max) {
      ++outside;
    } else {
      ++counts[static_cast<std::size_t>(x - n_min)];
    }
  }
  const double total = static_cast<double>(samples.size());
  PmfTable table;
  table.n_min = n_min;
  table.n_max = n_max;
  table.probs.reserve(counts.size());
  for (const auto c : counts) table.probs.push_back(static_cast<double>(c) / total);
  table.tail_mass = static_cast<double>(outside) / total;
  return table;
}

double tv_distance(const PmfTable& p, const PmfTable& q) {
  if (p.n_min != q.n_min || p.n_max != q.n_max || p.probs.size() != q.probs.size()) {
    throw Error(ErrorKind::window_mismatch,
                "tv_distance: windows [" + std::to_string(p.n_min) + "," + std::to_string(p.n_max) +
                    "] and [" + std::to_string(q.n_min) + "," + std::to_string(q.n_max) + "]");
  }
  detail::CompensatedSum<> acc;
  for (std::size_t i = 0; i < p.probs.size(); ++i) acc.add(std::fabs(p.probs[i] - q.probs[i]));
  acc.add(std::fabs(p.tail_mass - q.tail_mass));
  return 0.5 * static_cast<double>(acc.value());
}

double tv_noise_floor(const PmfTable& reference, std::uint64_t replicates) {
  if (replicates < 1) throw Error(ErrorKind::validation, "replicates: must be >= 1");
  // E|X - Np| ~ sqrt(2 N p (1-p) / pi) for a binomial cell count.
  const double n = static_cast<double>(replicates);
  auto cell = [n](double p) { return std::sqrt(2.0 * p * (1.0 - p) / (std::numbers::pi * n)); };
  double sum = cell(reference.tail_mass);
  for (double p : reference.probs) sum += cell(p);
  return 0.5 * sum;
}

std::vector<std::complex<double>> empirical_cf(std::span<const double> samples,
                                               const integrals::CfGrid& grid) {
  if (samples.empty()) throw Error(ErrorKind::empty_sample, "empirical_cf: no samples");
  grid.validate();
  std::vector<std::complex<double>> out;
  out.reserve(grid.xi_values.size());
  for (double xi : grid.xi_values) {
    if (xi == 0.0) {
      out.emplace_back(1.0, 0.0);
      continue;
    }
    detail::CompensatedSum<> re, im;
    for (double x : samples) {
      re.add(std::cos(xi * x));
      im.add(std::sin(xi * x));
    }
    const double n = static_cast<double>(samples.size());
    out.emplace_back(static_cast<double>(re.value()) / n, static_cast<double>(im.value()) / n);
  }
  return out;
}

namespace {

struct SampleStats {
  double mean = 0.0;
  double m2 = 0.0;  // central moments, normalized by N
  double m4 = 0.0;
};

SampleStats stats(std::span<const double> xs) {
  SampleStats st;
  const double n = static_cast<double>(xs.size());
  detail::CompensatedSum<> sum;
  for (double x : xs) sum.add(x);
  st.mean = static_cast<double>(sum.value()) / n;
  detail::CompensatedSum<> s2, s4;
  for (double x : xs) {
    const double d = x - st.mean;
    s2.add(d * d);
    s4.add(d * d * d * d);
  }
  st.m2 = static_cast<double>(s2.value()) / n;
  st.m4 = static_cast<double>(s4.value()) / n;
  return st;
}

double z_score(double diff, double stderr_) {
  if (stderr_ > 0.0) return std::fabs(diff) / stderr_;
  return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace

ComparisonReport moment_z_check(std::span<const double> samples, double analytic_mean,
                                double analytic_var, double threshold) {
  if (samples.empty()) throw Error(ErrorKind::empty_sample, "moment_z_check: no samples");
  if (!(analytic_var > 0.0)) throw Error(ErrorKind::validation, "analytic_var: must be > 0");
  const auto st = stats(samples);
  const double n = static_cast<double>(samples.size());
  const double z = z_score(st.mean - analytic_mean, std::sqrt(analytic_var / n));
  return ComparisonReport::make(Metric::moment_z, z, threshold,
                                {{"statistic", "mean"},
                                 {"sample_mean", st.mean},
                                 {"analytic_mean", analytic_mean},
                                 {"analytic_var", analytic_var},
                                 {"n", samples.size()}});
}

ComparisonReport variance_z_check(std::span<const double> samples, double analytic_var,
                                  double threshold) {
  if (samples.size() < 2) throw Error(ErrorKind::empty_sample, "variance_z_check: need 2 samples");
  const auto st = stats(samples);
  const double n = static_cast<double>(samples.size());
  const double sample_var = st.m2 * n / (n - 1.0);
  const double z = z_score(sample_var - analytic_var, std::sqrt(std::max(0.0, st.m4 - st.m2 * st.m2) / n));
  return ComparisonReport::make(Metric::moment_z, z, threshold,
                                {{"statistic", "variance"},
                                 {"sample_var", sample_var},
                                 {"analytic_var", analytic_var},
                                 {"n", samples.size()}});
}

ComparisonReport covariance_z_check(std::span<const double> xs, std::span<const double> ys,
                                    double mean_x, double mean_y, double analytic_cov,
                                    double threshold) {
  if (xs.size() != ys.size()) throw Error(ErrorKind::validation, "xs, ys: lengths differ");
  if (xs.size() < 2) throw Error(ErrorKind::empty_sample, "covariance_z_check: need 2 samples");
  std::vector<double> products(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) products[i] = (xs[i] - mean_x) * (ys[i] - mean_y);
  const auto st = stats(products);
  const double n = static_cast<double>(xs.size());
  const double z = z_score(st.mean - analytic_cov, std::sqrt(st.m2 / n));
  return ComparisonReport::make(Metric::moment_z, z, threshold,
                                {{"statistic", "covariance"},
                                 {"sample_cov", st.mean},
                                 {"analytic_cov", analytic_cov},
                                 {"n", xs.size()}});
}

std::vector<ComparisonReport> convergence_study(const field::GsrfParams& params, double s,
                                                double t, const std::vector<int>& k_values,
                                                const McConfig& cfg, int n_min, int n_max,
                                                double threshold) {
  params.validate();
  cfg.validate();
  for (const auto& j : params.jumps) {
    if (j.size != std::round(j.size)) {
      throw Error(ErrorKind::validation, "jumps: convergence study needs integer jump sizes");
    }
  }
  for (std::size_t i = 1; i < k_values.size(); ++i) {
    if (k_values[i] <= k_values[i - 1]) {
      throw Error(ErrorKind::validation, "k_values: must be strictly increasing");
    }
  }
  auto to_counts = [](const std::vector<double>& xs) {
    std::vector<std::int64_t> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = std::llround(xs[i]);
    return out;
  };

  PmfTable reference;
  std::string reference_kind;
  if (const auto sk = field::as_skellam(params)) {
    reference = field::srf_pmf_table(*sk, s, t, n_min, n_max);
    reference_kind = "exact";
  } else {
    McConfig ref_cfg = cfg;
    // Streams disjoint from every lattice run.
    ref_cfg.stream_offset = cfg.stream_offset + cfg.replicates * (k_values.size() + 1);
    const auto region = sampling::BoxRegion::rectangle(s, t);
    const auto draws = run_replicates<double>(
        ref_cfg, [&](RngStream& rng) { return field::gsrf_count(params, region, rng); });
    reference = empirical_pmf(to_counts(draws), n_min, n_max);
    reference_kind = "monte_carlo";
  }
  const double floor = tv_noise_floor(reference, cfg.replicates) *
                       (reference_kind == "exact" ? 1.0 : std::numbers::sqrt2);

  std::vector<ComparisonReport> reports;
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    const int k = k_values[i];
    const auto spec = field::LatticeSpec::default_rule(k, params);
    field::validate_lattice(spec, params, s, t);
    McConfig run = cfg;
    run.stream_offset = cfg.stream_offset + cfg.replicates * i;
    const auto draws = run_replicates<double>(
        run, [&](RngStream& rng) { return field::lattice_sample(spec, params, s, t, rng); });
    const double tv = tv_distance(empirical_pmf(to_counts(draws), n_min, n_max), reference);
    reports.push_back(ComparisonReport::make(
        Metric::tv, tv, threshold,
        {{"k", k}, {"noise_floor", floor}, {"reference", reference_kind}, {"replicates", cfg.replicates}}));
  }
  return reports;
}

}  // namespace skellam::verify
