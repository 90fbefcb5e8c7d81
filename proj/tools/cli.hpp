// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skellam/field_integrals.hpp"
#include "skellam/fractional_field.hpp"
#include "skellam/skellam_field.hpp"
#include "skellam/specfun.hpp"
#include "skellam/verification.hpp"

namespace skellam::cli {

enum class Model { prf, fprf, gsrf, srf, fsrf1, fsrf2, fsrf3, integral };
enum class Format { csv, json };

using KeyValues = std::map<std::string, std::string>;

/// Parses `key = value` lines. Blank lines and lines starting with '#' are
/// skipped; a repeated key keeps the last value.
KeyValues parse_key_values(std::istream& in, const std::string& source);

/// Splits `key=value`; throws validation when there is no '='.
std::pair<std::string, std::string> split_assignment(const std::string& text);

struct ExperimentConfig {
  Model model = Model::srf;
  double lambda = 1.0;                 // PRF, FPRF, INTEGRAL
  field::SkellamParams skellam;        // SRF, FSRF1-3
  field::GsrfParams jumps;             // GSRF, or INTEGRAL with jumps
  bool integral_over_jumps = false;
  frac::FracOrders orders;             // FPRF, FSRF1-3
  integrals::IntegralOrders integral_orders;
  field::GridPoint point{1.0, 1.0};
  field::GridPoint point2{1.0, 1.0};
  int n_min = -30;
  int n_max = 30;
  verify::McConfig mc;
  specfun::SeriesControl series;
  std::vector<int> k_values{16, 32, 64};
  integrals::CfGrid grid = integrals::CfGrid::standard();
  std::string suite;
  std::optional<std::string> output;
  Format format = Format::csv;

  [[nodiscard]] frac::FsrfModel fsrf_model() const;
};

/// Typed configuration from key/value pairs. Errors name the offending key.
ExperimentConfig build_config(const KeyValues& kv);

std::string to_string(Model model);

// Each command writes its document to `out` and returns the exit status.
int cmd_pmf(const ExperimentConfig& cfg, std::ostream& out);
int cmd_sample(const ExperimentConfig& cfg, std::ostream& out);
int cmd_moments(const ExperimentConfig& cfg, std::ostream& out);
int cmd_cf(const ExperimentConfig& cfg, std::ostream& out);
int cmd_converge(const ExperimentConfig& cfg, std::ostream& out);
/// Writes the JSON report to `out` and a pass/fail table to `table`.
int cmd_verify(const ExperimentConfig& cfg, std::ostream& out, std::ostream& table);

inline constexpr int kExitOk = 0;
inline constexpr int kExitGateFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

/// Full command line: argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skellam::cli
