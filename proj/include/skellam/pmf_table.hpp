// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <vector>

namespace skellam {

/// Probabilities on the integer window [n_min, n_max] plus the mass outside it.
struct PmfTable {
  int n_min = 0;
  int n_max = 0;
  std::vector<double> probs;
  double tail_mass = 0.0;

  /// Builds a table whose tail is 1 - sum(probs). A tail within 1e-12 below
  /// zero is clamped to 0; anything more negative is a validation error.
  static PmfTable from_probs(int n_min, std::vector<double> probs);

  [[nodiscard]] std::size_t size() const noexcept { return probs.size(); }
  /// Probability at n; 0 outside the window.
  [[nodiscard]] double at(int n) const noexcept;
  [[nodiscard]] double window_mass() const noexcept;
  /// Checks window length, nonnegativity and |sum + tail - 1| <= 1e-9.
  void validate() const;
};

inline constexpr double kTailClamp = 1e-12;

/// CSV with header `n,prob`, LF line endings, 17 significant digits.
void write_csv(const PmfTable& table, std::ostream& out);
/// JSON document {n_min, n_max, tail_mass, rows: [{n, prob}, ...]}.
void write_json(const PmfTable& table, std::ostream& out);

/// Inverse of write_csv; the tail is recomputed from the entries.
PmfTable read_csv(std::istream& in);
PmfTable read_json(std::istream& in);

}  // namespace skellam
