// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#include "skellam/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "skellam/error.hpp"

namespace skellam::io {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void emit(const nlohmann::json& node, std::ostream& out) {
  switch (node.type()) {
    case nlohmann::json::value_t::object: {
      out << '{';
      bool first = true;
      for (const auto& [key, value] : node.items()) {
        if (!first) out << ',';
        first = false;
        out << nlohmann::json(key).dump() << ':';
        emit(value, out);
      }
      out << '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      out << '[';
      for (std::size_t i = 0; i < node.size(); ++i) {
        if (i > 0) out << ',';
        emit(node[i], out);
      }
      out << ']';
      break;
    }
    case nlohmann::json::value_t::number_float: {
      const double x = node.get<double>();
      out << (std::isfinite(x) ? format_double(x) : std::string("null"));
      break;
    }
    default:
      out << node.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
  }
}

}  // namespace

void write_json(const nlohmann::json& doc, std::ostream& out) {
  emit(doc, out);
  out << '\n';
}

double parse_double(const std::string& text, const std::string& field) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw Error(ErrorKind::validation, field + ": not a number: '" + text + "'");
  }
  return value;
}

}  // namespace skellam::io
