// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#include "skellam/pmf_table.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "detail/series.hpp"
#include "skellam/error.hpp"
#include "skellam/io.hpp"

namespace skellam {

PmfTable PmfTable::from_probs(int n_min, std::vector<double> probs) {
  if (probs.empty()) throw Error(ErrorKind::validation, "pmf table: window is empty");
  detail::CompensatedSum<> acc;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw Error(ErrorKind::validation, "pmf table: entries must be finite and nonnegative");
    }
    acc.add(p);
  }
  double tail = static_cast<double>(1.0L - acc.value());
  if (tail < 0.0) {
    if (tail < -kTailClamp) {
      throw Error(ErrorKind::validation,
                  "pmf table: entries sum to 1 + " + io::format_double(-tail));
    }
    tail = 0.0;
  }
  PmfTable table;
  table.n_min = n_min;
  table.n_max = n_min + static_cast<int>(probs.size()) - 1;
  table.probs = std::move(probs);
  table.tail_mass = tail;
  return table;
}

double PmfTable::at(int n) const noexcept {
  if (n < n_min || n > n_max) return 0.0;
  return probs[static_cast<std::size_t>(n - n_min)];
}

double PmfTable::window_mass() const noexcept {
  detail::CompensatedSum<> acc;
  for (double p : probs) acc.add(p);
  return static_cast<double>(acc.value());
}

void PmfTable::validate() const {
  if (n_max < n_min || probs.size() != static_cast<std::size_t>(n_max - n_min) + 1) {
    throw Error(ErrorKind::validation, "pmf table: window length does not match entries");
  }
  for (double p : probs) {
    if (!(p >= 0.0)) throw Error(ErrorKind::validation, "pmf table: negative entry");
  }
  if (!(tail_mass >= 0.0)) throw Error(ErrorKind::validation, "pmf table: negative tail mass");
  if (std::fabs(window_mass() + tail_mass - 1.0) > 1e-9) {
    throw Error(ErrorKind::validation, "pmf table: total mass differs from 1 by more than 1e-9");
  }
}

void write_csv(const PmfTable& table, std::ostream& out) {
  out << "n,prob\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << table.n_min + static_cast<int>(i) << ',' << io::format_double(table.probs[i]) << '\n';
  }
}

void write_json(const PmfTable& table, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    rows.push_back({{"n", table.n_min + static_cast<int>(i)}, {"prob", table.probs[i]}});
  }
  io::write_json({{"n_min", table.n_min},
                  {"n_max", table.n_max},
                  {"tail_mass", table.tail_mass},
                  {"rows", rows}},
                 out);
}

PmfTable read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "n,prob") {
    throw Error(ErrorKind::validation, "pmf csv: expected header 'n,prob'");
  }
  int n_min = 0;
  int expected = 0;
  std::vector<double> probs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::validation, "pmf csv: missing comma");
    const int n = static_cast<int>(io::parse_double(line.substr(0, comma), "n"));
    if (probs.empty()) {
      n_min = n;
    } else if (n != expected) {
      throw Error(ErrorKind::validation, "pmf csv: rows must be consecutive in n");
    }
    expected = n + 1;
    probs.push_back(io::parse_double(line.substr(comma + 1), "prob"));
  }
  return PmfTable::from_probs(n_min, std::move(probs));
}

PmfTable read_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::validation, std::string("pmf json: ") + e.what());
  }
  PmfTable table;
  try {
    table.n_min = doc.at("n_min").get<int>();
    table.n_max = doc.at("n_max").get<int>();
    table.tail_mass = doc.at("tail_mass").get<double>();
    for (const auto& row : doc.at("rows")) table.probs.push_back(row.at("prob").get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::validation, std::string("pmf json: ") + e.what());
  }
  table.validate();
  return table;
}

}  // namespace skellam
