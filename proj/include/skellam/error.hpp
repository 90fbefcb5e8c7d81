// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skellam {

enum class ErrorKind {
  domain,           // argument outside the mathematical domain
  range,            // argument outside the declared safe evaluation range
  pole,             // Gamma argument hit a nonpositive integer
  non_convergence,  // series term cap reached before the stopping rule fired
  precision,        // cancellation would destroy the requested accuracy
  quadrature,       // node-doubling check failed
  singular,         // evaluation point on an excluded singular set
  invalid_spec,     // lattice rule violates its probability constraints
  validation,       // malformed configuration or parameter object
  window_mismatch,  // pmf tables over different supports
  empty_sample,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace skellam
