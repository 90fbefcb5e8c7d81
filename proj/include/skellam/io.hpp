// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace skellam::io {

/// Decimal with 17 significant digits; non-finite values
/// print as nan/inf.
std::string format_double(double x);

/// Writes `doc` as compact UTF-8 JSON with every floating-point number at
/// 17 significant digits, followed by a newline. Non-finite numbers become null.
void write_json(const nlohmann::json& doc, std::ostream& out);

/// Parses a double written by format_double; throws validation on junk.
double parse_double(const std::string& text, const std::string& field);

}  // namespace skellam::io
