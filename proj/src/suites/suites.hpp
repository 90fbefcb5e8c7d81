// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "skellam/verification.hpp"

namespace skellam::suites {

struct SuiteOptions {
  std::uint64_t seed = 20261016;
  unsigned workers = 1;
  std::uint64_t replicates = 100000;
};

struct Gate {
  std::string name;
  verify::ComparisonReport report;
};

struct SuiteResult {
  std::string name;
  std::string title;
  std::vector<Gate> gates;
  double seconds = 0.0;
  double budget_seconds = 0.0;

  [[nodiscard]] bool gates_pass() const;
  [[nodiscard]] bool within_budget() const { return seconds <= budget_seconds; }
  [[nodiscard]] bool pass() const { return gates_pass() && within_budget(); }
};

nlohmann::json to_json(const SuiteResult& result);

/// Suite names in acceptance order.
const std::vector<std::string>& suite_names();

/// Throws validation naming the available suites when `name` is unknown.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace skellam::suites
