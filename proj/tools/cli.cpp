// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "skellam/error.hpp"
#include "skellam/io.hpp"
#include "skellam/pmf_table.hpp"
#include "suites.hpp"

namespace skellam::cli {

namespace {

using io::format_double;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

template <class Int>
Int parse_int(const std::string& text, const std::string& field) {
  Int value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorKind::validation, field + ": expected an integer, got '" + text + "'");
  }
  return value;
}

const std::set<std::string>& common_keys() {
  static const std::set<std::string> keys{
      "model", "s",   "t",    "s2",        "t2",        "n_min",    "n_max",
      "replicates", "seed", "workers", "rel_tol", "max_terms", "consecutive_small",
      "output", "format", "k_values", "xi", "suite"};
  return keys;
}

struct ModelInfo {
  Model model;
  const char* name;
  std::vector<std::string> allowed;
  std::vector<std::string> required;
};

const std::vector<ModelInfo>& models() {
  static const std::vector<ModelInfo> table{
      {Model::prf, "PRF", {"lambda"}, {"lambda"}},
      {Model::fprf, "FPRF", {"lambda", "alpha", "beta"}, {"lambda", "alpha", "beta"}},
      {Model::gsrf, "GSRF", {"jumps"}, {"jumps"}},
      {Model::srf, "SRF", {"lambda1", "lambda2"}, {"lambda1", "lambda2"}},
      {Model::fsrf1, "FSRF1", {"lambda1", "lambda2", "alpha", "beta"},
       {"lambda1", "lambda2", "alpha", "beta"}},
      {Model::fsrf2, "FSRF2", {"lambda1", "lambda2", "alpha"}, {"lambda1", "lambda2", "alpha"}},
      {Model::fsrf3, "FSRF3", {"lambda1", "lambda2", "alpha", "beta", "alpha2", "beta2"},
       {"lambda1", "lambda2", "alpha", "beta", "alpha2", "beta2"}},
      {Model::integral, "INTEGRAL", {"lambda", "jumps", "nu1", "nu2"}, {}},
  };
  return table;
}

const ModelInfo& info(Model m) {
  for (const auto& i : models()) {
    if (i.model == m) return i;
  }
  throw Error(ErrorKind::validation, "model: unknown");
}

field::GsrfParams parse_jumps(const std::string& text) {
  field::GsrfParams p;
  for (const auto& item : split_list(text)) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::validation, "jumps: expected size:rate pairs, got '" + item + "'");
    }
    p.jumps.push_back({io::parse_double(trim(item.substr(0, colon)), "jumps"),
                       io::parse_double(trim(item.substr(colon + 1)), "jumps")});
  }
  try {
    p.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::validation, std::string("jumps: ") + e.what());
  }
  return p;
}

bool numeric_failure(ErrorKind k) {
  switch (k) {
    case ErrorKind::validation:
    case ErrorKind::invalid_spec:
    case ErrorKind::window_mismatch:
    case ErrorKind::empty_sample: return false;
    default: return true;
  }
}

void require_model(const ExperimentConfig& cfg, std::initializer_list<Model> allowed,
                   const char* command) {
  if (std::find(allowed.begin(), allowed.end(), cfg.model) != allowed.end()) return;
  throw Error(ErrorKind::validation,
              std::string("model: ") + command + " does not support " + to_string(cfg.model));
}

/// One draw of the configured field at cfg.point.
double draw(const ExperimentConfig& cfg, RngStream& rng) {
  const double s = cfg.point.s, t = cfg.point.t;
  switch (cfg.model) {
    case Model::prf:
      return static_cast<double>(sampling::sample_poisson(cfg.lambda * s * t, rng));
    case Model::fprf:
      return static_cast<double>(frac::fprf_sample(cfg.lambda, cfg.orders.alpha, cfg.orders.beta, s, t, rng));
    case Model::gsrf:
      return field::gsrf_count(cfg.jumps, sampling::BoxRegion::rectangle(s, t), rng);
    case Model::srf:
      return field::gsrf_count(cfg.skellam.as_gsrf(), sampling::BoxRegion::rectangle(s, t), rng);
    case Model::fsrf1:
    case Model::fsrf2:
    case Model::fsrf3:
      return static_cast<double>(frac::fsrf_sample(cfg.fsrf_model(), s, t, rng));
    case Model::integral:
      if (cfg.integral_over_jumps) return integrals::gsrf_integral_sample(cfg.jumps, s, t, rng);
      return integrals::rl_integral_sample(cfg.lambda, cfg.integral_orders, s, t, rng);
  }
  return 0.0;
}

bool integer_valued(const ExperimentConfig& cfg) {
  if (cfg.model == Model::integral) return false;
  if (cfg.model != Model::gsrf) return true;
  return std::all_of(cfg.jumps.jumps.begin(), cfg.jumps.jumps.end(),
                     [](const field::Jump& j) { return j.size == std::round(j.size); });
}

std::string format_value(double x, bool integer) {
  if (integer) return std::to_string(std::llround(x));
  return format_double(x);
}

void write_rows(std::ostream& out, const std::string& header,
                const std::vector<std::vector<std::string>>& rows) {
  out << header << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

}  // namespace

std::string to_string(Model model) { return info(model).name; }

std::pair<std::string, std::string> split_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw Error(ErrorKind::validation, "expected key=value, got '" + text + "'");
  }
  const auto key = trim(text.substr(0, eq));
  if (key.empty()) throw Error(ErrorKind::validation, "empty key in '" + text + "'");
  return {key, trim(text.substr(eq + 1))};
}

KeyValues parse_key_values(std::istream& in, const std::string& source) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    try {
      auto [k, v] = split_assignment(body);
      kv[k] = v;
    } catch (const Error&) {
      throw Error(ErrorKind::validation,
                  source + ":" + std::to_string(lineno) + ": expected key=value");
    }
  }
  return kv;
}

frac::FsrfModel ExperimentConfig::fsrf_model() const {
  frac::FsrfModel m;
  m.params = skellam;
  m.orders = orders;
  switch (model) {
    case Model::fsrf1: m.kind = frac::FsrfKind::one; break;
    case Model::fsrf2: m.kind = frac::FsrfKind::two; break;
    case Model::fsrf3: m.kind = frac::FsrfKind::three; break;
    default: throw Error(ErrorKind::validation, "model: not a fractional Skellam field");
  }
  return m;
}

ExperimentConfig build_config(const KeyValues& kv) {
  ExperimentConfig cfg;
  auto get = [&](const std::string& key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  auto num = [&](const std::string& key, double& dst) {
    if (const auto* v = get(key)) dst = io::parse_double(*v, key);
  };

  if (const auto* m = get("model")) {
    const auto upper = [&] {
      std::string u = *m;
      std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
      return u;
    }();
    const auto it = std::find_if(models().begin(), models().end(),
                                 [&](const ModelInfo& i) { return upper == i.name; });
    if (it == models().end()) {
      throw Error(ErrorKind::validation,
                  "model: unknown '" + *m + "' (PRF, FPRF, GSRF, SRF, FSRF1, FSRF2, FSRF3, INTEGRAL)");
    }
    cfg.model = it->model;
  }
  const auto& mi = info(cfg.model);
  for (const auto& [key, value] : kv) {
    if (common_keys().count(key)) continue;
    if (std::find(mi.allowed.begin(), mi.allowed.end(), key) != mi.allowed.end()) continue;
    throw Error(ErrorKind::validation, key + ": not a parameter of model " + std::string(mi.name));
  }
  if (get("model")) {
    for (const auto& key : mi.required) {
      if (!get(key)) {
        throw Error(ErrorKind::validation, key + ": required by model " + std::string(mi.name));
      }
    }
  }

  num("lambda", cfg.lambda);
  num("lambda1", cfg.skellam.lambda1);
  num("lambda2", cfg.skellam.lambda2);
  num("alpha", cfg.orders.alpha);
  num("beta", cfg.orders.beta);
  if (const auto* v = get("alpha2")) cfg.orders.alpha2 = io::parse_double(*v, "alpha2");
  if (const auto* v = get("beta2")) cfg.orders.beta2 = io::parse_double(*v, "beta2");
  num("nu1", cfg.integral_orders.nu1);
  num("nu2", cfg.integral_orders.nu2);
  num("s", cfg.point.s);
  num("t", cfg.point.t);
  cfg.point2 = cfg.point;
  num("s2", cfg.point2.s);
  num("t2", cfg.point2.t);
  num("rel_tol", cfg.series.rel_tol);
  if (const auto* v = get("jumps")) cfg.jumps = parse_jumps(*v);

  if (cfg.model == Model::fsrf3) {
    cfg.n_min = -frac::kFsrf3MaxAbsN;
    cfg.n_max = frac::kFsrf3MaxAbsN;
  }
  if (const auto* v = get("n_min")) cfg.n_min = parse_int<int>(*v, "n_min");
  if (const auto* v = get("n_max")) cfg.n_max = parse_int<int>(*v, "n_max");
  if (const auto* v = get("replicates")) cfg.mc.replicates = parse_int<std::uint64_t>(*v, "replicates");
  if (const auto* v = get("seed")) cfg.mc.seed = parse_int<std::uint64_t>(*v, "seed");
  if (const auto* v = get("workers")) cfg.mc.workers = parse_int<unsigned>(*v, "workers");
  if (const auto* v = get("max_terms")) cfg.series.max_terms = parse_int<int>(*v, "max_terms");
  if (const auto* v = get("consecutive_small")) {
    cfg.series.consecutive_small = parse_int<int>(*v, "consecutive_small");
  }
  if (const auto* v = get("k_values")) {
    cfg.k_values.clear();
    for (const auto& item : split_list(*v)) cfg.k_values.push_back(parse_int<int>(item, "k_values"));
  }
  if (const auto* v = get("xi")) {
    cfg.grid.xi_values.clear();
    for (const auto& item : split_list(*v)) cfg.grid.xi_values.push_back(io::parse_double(item, "xi"));
  }
  if (const auto* v = get("suite")) cfg.suite = *v;
  if (const auto* v = get("output")) cfg.output = *v;
  if (const auto* v = get("format")) {
    const auto f = lower(*v);
    if (f == "csv") {
      cfg.format = Format::csv;
    } else if (f == "json") {
      cfg.format = Format::json;
    } else {
      throw Error(ErrorKind::validation, "format: expected csv or json, got '" + *v + "'");
    }
  }

  // Field-level validation.
  if (cfg.model == Model::integral) {
    const bool has_lambda = get("lambda") != nullptr;
    const bool has_jumps = get("jumps") != nullptr;
    if (has_lambda && has_jumps) throw Error(ErrorKind::validation, "jumps: give lambda or jumps, not both");
    cfg.integral_over_jumps = has_jumps;
    if (has_jumps && (cfg.integral_orders.nu1 != 1.0 || cfg.integral_orders.nu2 != 1.0)) {
      throw Error(ErrorKind::validation, "nu1: integrals over jump sets support nu1 = nu2 = 1 only");
    }
    cfg.integral_orders.validate();
  }
  if (cfg.model == Model::prf || cfg.model == Model::fprf ||
      (cfg.model == Model::integral && !cfg.integral_over_jumps)) {
    if (!(cfg.lambda > 0.0) || !std::isfinite(cfg.lambda)) {
      throw Error(ErrorKind::validation, "lambda: must be finite and > 0");
    }
  }
  switch (cfg.model) {
    case Model::srf: cfg.skellam.validate(); break;
    case Model::fsrf1:
    case Model::fsrf2:
    case Model::fsrf3: cfg.fsrf_model().validate(); break;
    case Model::fprf: {
      frac::FracOrders o{cfg.orders.alpha, cfg.orders.beta, {}, {}};
      o.validate();
      break;
    }
    default: break;
  }
  cfg.point.validate();
  cfg.point2.validate();
  cfg.mc.validate();
  cfg.series.validate();
  cfg.grid.validate();
  if (cfg.n_min > cfg.n_max) throw Error(ErrorKind::validation, "n_min: must not exceed n_max");
  return cfg;
}

int cmd_pmf(const ExperimentConfig& cfg, std::ostream& out) {
  require_model(cfg, {Model::prf, Model::fprf, Model::gsrf, Model::srf, Model::fsrf1, Model::fsrf2,
                      Model::fsrf3},
                "pmf");
  const double s = cfg.point.s, t = cfg.point.t;
  PmfTable table;
  switch (cfg.model) {
    case Model::srf:
      table = field::srf_pmf_table(cfg.skellam, s, t, cfg.n_min, cfg.n_max, cfg.series);
      break;
    case Model::gsrf: {
      const auto sk = field::as_skellam(cfg.jumps);
      if (!sk) throw Error(ErrorKind::validation, "jumps: pmf is available for jumps {1, -1} only");
      table = field::srf_pmf_table(*sk, s, t, cfg.n_min, cfg.n_max, cfg.series);
      break;
    }
    case Model::prf:
    case Model::fprf: {
      std::vector<double> probs;
      for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        if (n < 0) {
          probs.push_back(0.0);
        } else if (cfg.model == Model::prf) {
          const double mean = cfg.lambda * s * t;
          probs.push_back(mean == 0.0 ? (n == 0 ? 1.0 : 0.0)
                                      : std::exp(n * std::log(mean) - mean - std::lgamma(n + 1.0)));
        } else {
          probs.push_back(frac::fprf_pmf(cfg.lambda, cfg.orders.alpha, cfg.orders.beta, s, t, n, cfg.series));
        }
      }
      table = PmfTable::from_probs(cfg.n_min, std::move(probs));
      break;
    }
    default:
      table = frac::fsrf_pmf_table(cfg.fsrf_model(), s, t, cfg.n_min, cfg.n_max, cfg.series);
  }
  if (cfg.format == Format::csv) {
    write_csv(table, out);
  } else {
    write_json(table, out);
  }
  return kExitOk;
}

int cmd_sample(const ExperimentConfig& cfg, std::ostream& out) {
  const auto values =
      verify::run_replicates<double>(cfg.mc, [&](RngStream& rng) { return draw(cfg, rng); });
  const bool integer = integer_valued(cfg);
  if (cfg.format == Format::csv) {
    out << "value\n";
    for (double v : values) out << format_value(v, integer) << '\n';
  } else {
    auto arr = nlohmann::json::array();
    for (double v : values) {
      if (integer) {
        arr.push_back(std::llround(v));
      } else {
        arr.push_back(v);
      }
    }
    io::write_json({{"model", to_string(cfg.model)},
                    {"seed", cfg.mc.seed},
                    {"replicates", cfg.mc.replicates},
                    {"s", cfg.point.s},
                    {"t", cfg.point.t},
                    {"samples", arr}},
                   out);
  }
  return kExitOk;
}

int cmd_moments(const ExperimentConfig& cfg, std::ostream& out) {
  const auto p1 = cfg.point, p2 = cfg.point2;
  std::optional<double> cov;
  double mean = 0.0, var = 0.0;
  switch (cfg.model) {
    case Model::prf: {
      mean = var = cfg.lambda * p1.s * p1.t;
      cov = cfg.lambda * std::min(p1.s, p2.s) * std::min(p1.t, p2.t);
      break;
    }
    case Model::fprf: {
      const auto m = frac::fprf_moments(cfg.lambda, cfg.orders.alpha, cfg.orders.beta, p1, p2);
      mean = m.mean, var = m.var, cov = m.cov;
      break;
    }
    case Model::gsrf:
    case Model::srf: {
      const auto params = cfg.model == Model::srf ? cfg.skellam.as_gsrf() : cfg.jumps;
      const auto m = field::gsrf_moments(params, sampling::BoxRegion::rectangle(p1.s, p1.t),
                                         sampling::BoxRegion::rectangle(p2.s, p2.t));
      mean = m.mean, var = m.var, cov = m.cov;
      break;
    }
    case Model::integral: {
      const auto m = cfg.integral_over_jumps
                         ? integrals::gsrf_integral_moments(cfg.jumps, p1.s, p1.t)
                         : integrals::rl_integral_moments(cfg.lambda, cfg.integral_orders, p1.s, p1.t);
      mean = m.mean, var = m.var;
      break;
    }
    default: {
      const auto m = frac::fsrf_moments(cfg.fsrf_model(), p1, p2);
      mean = m.mean, var = m.var, cov = m.cov;
    }
  }
  if (cfg.format == Format::csv) {
    std::vector<std::vector<std::string>> rows{{"mean", format_double(mean)}, {"var", format_double(var)}};
    if (cov) rows.push_back({"cov", format_double(*cov)});
    write_rows(out, "statistic,value", rows);
  } else {
    nlohmann::json doc{{"model", to_string(cfg.model)},
                       {"s", p1.s}, {"t", p1.t}, {"s2", p2.s}, {"t2", p2.t},
                       {"mean", mean}, {"var", var}};
    doc["cov"] = cov ? nlohmann::json(*cov) : nlohmann::json(nullptr);
    io::write_json(doc, out);
  }
  return kExitOk;
}

int cmd_cf(const ExperimentConfig& cfg, std::ostream& out) {
  require_model(cfg, {Model::prf, Model::gsrf, Model::srf, Model::integral}, "cf");
  const double s = cfg.point.s, t = cfg.point.t;
  std::function<integrals::Complex(double)> analytic;
  if (cfg.model == Model::integral) {
    if (!cfg.integral_over_jumps &&
        (cfg.integral_orders.nu1 != 1.0 || cfg.integral_orders.nu2 != 1.0)) {
      throw Error(ErrorKind::validation, "nu1: the analytic CF is available for nu1 = nu2 = 1 only");
    }
    const auto log_cf = cfg.integral_over_jumps ? integrals::gsrf_log_cf(cfg.jumps)
                                                : integrals::prf_log_cf(cfg.lambda);
    analytic = [=](double xi) { return integrals::levy_integral_cf(log_cf, s, t, xi); };
  } else {
    const auto log_cf = cfg.model == Model::prf   ? integrals::prf_log_cf(cfg.lambda)
                        : cfg.model == Model::srf ? integrals::gsrf_log_cf(cfg.skellam.as_gsrf())
                                                  : integrals::gsrf_log_cf(cfg.jumps);
    analytic = [=](double xi) { return std::exp(s * t * log_cf(xi)); };
  }
  const auto values =
      verify::run_replicates<double>(cfg.mc, [&](RngStream& rng) { return draw(cfg, rng); });
  const auto report = integrals::make_cf_report(cfg.grid, verify::empirical_cf(values, cfg.grid), analytic);
  if (cfg.format == Format::csv) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : report.rows) {
      rows.push_back({format_double(r.xi), format_double(r.analytic.real()),
                      format_double(r.analytic.imag()), format_double(r.empirical.real()),
                      format_double(r.empirical.imag()), format_double(r.abs_error())});
    }
    write_rows(out, "xi,analytic_re,analytic_im,empirical_re,empirical_im,abs_error", rows);
  } else {
    auto doc = integrals::to_json(report);
    doc["model"] = to_string(cfg.model);
    doc["replicates"] = cfg.mc.replicates;
    doc["seed"] = cfg.mc.seed;
    io::write_json(doc, out);
  }
  return kExitOk;
}

int cmd_converge(const ExperimentConfig& cfg, std::ostream& out) {
  require_model(cfg, {Model::gsrf, Model::srf}, "converge");
  const auto params = cfg.model == Model::srf ? cfg.skellam.as_gsrf() : cfg.jumps;
  const auto reports = verify::convergence_study(params, cfg.point.s, cfg.point.t, cfg.k_values,
                                                 cfg.mc, cfg.n_min, cfg.n_max);
  if (cfg.format == Format::csv) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reports) {
      rows.push_back({r.metadata["k"].dump(), format_double(r.value),
                      format_double(r.metadata["noise_floor"].get<double>()),
                      format_double(r.threshold), r.pass ? "true" : "false"});
    }
    write_rows(out, "k,tv,noise_floor,threshold,pass", rows);
  } else {
    io::write_json({{"model", to_string(cfg.model)}, {"reports", verify::to_json(reports)}}, out);
  }
  return kExitOk;
}

int cmd_verify(const ExperimentConfig& cfg, std::ostream& out, std::ostream& table) {
  if (cfg.suite.empty()) throw Error(ErrorKind::validation, "suite: a suite name is required");
  suites::SuiteOptions opts;
  opts.seed = cfg.mc.seed;
  opts.workers = cfg.mc.workers;
  opts.replicates = cfg.mc.replicates;
  std::vector<std::string> names;
  if (cfg.suite == "all") {
    names = suites::suite_names();
  } else {
    names.push_back(cfg.suite);
  }
  std::vector<suites::SuiteResult> results;
  for (const auto& name : names) results.push_back(suites::run_suite(name, opts));

  bool all_pass = true;
  std::vector<std::vector<std::string>> rows;
  auto docs = nlohmann::json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass();
    docs.push_back(suites::to_json(r));
    table << (r.pass() ? "PASS " : "FAIL ") << r.name << "  (" << format_double(r.seconds)
          << " s, budget " << r.budget_seconds << " s)\n";
    for (const auto& g : r.gates) {
      table << "  " << (g.report.pass ? "pass " : "fail ") << g.name << ": "
            << verify::to_string(g.report.metric) << " " << format_double(g.report.value)
            << " <= " << format_double(g.report.threshold) << '\n';
      rows.push_back({r.name, '"' + g.name + '"', std::string(verify::to_string(g.report.metric)),
                      format_double(g.report.value), format_double(g.report.threshold),
                      g.report.pass ? "true" : "false"});
    }
  }
  if (cfg.format == Format::csv) {
    write_rows(out, "suite,gate,metric,value,threshold,pass", rows);
  } else {
    io::write_json(docs.size() == 1 ? docs[0] : nlohmann::json{{"pass", all_pass}, {"suites", docs}},
                   out);
  }
  return all_pass ? kExitOk : kExitGateFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skellam and fractional Skellam random fields: pmfs, samplers and verification",
               "skellam-fields"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  std::string output;
  std::string format;
  std::string suite;
  app.add_option("--config", config_path, "flat key=value configuration file");
  app.add_option("--set", overrides, "override one configuration key (key=value)");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--output", output, "output path (default: standard output)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--suite", suite, "suite name for verify, or 'all'");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"pmf", "write a truncated pmf table"},
      {"sample", "write Monte Carlo draws, one per line"},
      {"moments", "write mean, variance and covariance"},
      {"cf", "compare empirical and analytic characteristic functions"},
      {"converge", "lattice approximation convergence study"},
      {"verify", "run a named acceptance suite"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    KeyValues kv;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw Error(ErrorKind::validation, "config: cannot open '" + config_path + "'");
      kv = parse_key_values(in, config_path);
    }
    for (const auto& o : overrides) {
      const auto [k, v] = split_assignment(o);
      kv[k] = v;
    }
    if (seed) kv["seed"] = std::to_string(*seed);
    if (workers) kv["workers"] = std::to_string(*workers);
    if (!output.empty()) kv["output"] = output;
    if (!format.empty()) kv["format"] = format;
    if (!suite.empty()) kv["suite"] = suite;
    auto cfg = build_config(kv);
    if (command == "verify" && !kv.count("format")) cfg.format = Format::json;

    std::ostringstream buffer;
    std::ostream& table = cfg.output ? out : err;
    int status = kExitOk;
    if (command == "pmf") status = cmd_pmf(cfg, buffer);
    else if (command == "sample") status = cmd_sample(cfg, buffer);
    else if (command == "moments") status = cmd_moments(cfg, buffer);
    else if (command == "cf") status = cmd_cf(cfg, buffer);
    else if (command == "converge") status = cmd_converge(cfg, buffer);
    else status = cmd_verify(cfg, buffer, table);

    if (cfg.output) {
      std::ofstream file(*cfg.output, std::ios::binary);
      if (!file) throw Error(ErrorKind::validation, "output: cannot open '" + *cfg.output + "'");
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return numeric_failure(e.kind()) ? kExitNumeric : kExitUsage;
  }
}

}  // namespace skellam::cli
