// Copyright 2026 The skellam-fields Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <catch_amalgamated.hpp>

#include "cli.hpp"
#include "skellam/error.hpp"
#include "skellam/pmf_table.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using namespace skellam;
using namespace skellam::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "skellam-fields");
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("skellam-cli-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("key value parsing", "[cli]") {
  std::istringstream in("# comment\n\nmodel = SRF\nlambda1=2\n  lambda2 = 1  \nlambda1 = 3\n");
  const auto kv = parse_key_values(in, "test");
  CHECK(kv.at("model") == "SRF");
  CHECK(kv.at("lambda1") == "3");
  CHECK(kv.at("lambda2") == "1");
  std::istringstream bad("model SRF\n");
  CHECK_THROWS_AS(parse_key_values(bad, "test"), Error);
  CHECK(split_assignment("seed=5") == std::pair<std::string, std::string>{"seed", "5"});
  CHECK_THROWS_AS(split_assignment("seed"), Error);
}

TEST_CASE("config validation names the field", "[cli]") {
  auto message = [](const KeyValues& kv) {
    try {
      build_config(kv);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK_THAT(message({{"model", "SRF"}, {"lambda1", "2"}, {"lambda2", "0"}}), ContainsSubstring("lambda2"));
  CHECK_THAT(message({{"model", "SRF"}, {"lambda1", "2"}}), ContainsSubstring("lambda2"));
  CHECK_THAT(message({{"model", "SRF"}, {"lambda1", "2"}, {"lambda2", "1"}, {"alpha", "0.5"}}),
             ContainsSubstring("alpha"));
  CHECK_THAT(message({{"model", "FSRF3"}, {"lambda1", "2"}, {"lambda2", "1"}, {"alpha", "0.5"}, {"beta", "0.5"}}),
             ContainsSubstring("alpha2"));
  CHECK_THAT(message({{"model", "FPRF"}, {"lambda", "1"}, {"alpha", "1.5"}, {"beta", "0.5"}}),
             ContainsSubstring("alpha"));
  CHECK_THAT(message({{"model", "SRF"}, {"lambda1", "2"}, {"lambda2", "1"}, {"replicates", "0"}}),
             ContainsSubstring("replicates"));
  CHECK_THAT(message({{"model", "GSRF"}, {"jumps", "1:2,-1"}}), ContainsSubstring("jumps"));
  CHECK_THAT(message({{"model", "QRF"}}), ContainsSubstring("model"));
  CHECK_THAT(message({{"bogus", "1"}}), ContainsSubstring("bogus"));

  const auto cfg = build_config({{"model", "GSRF"}, {"jumps", "1:2, -1:1"}, {"k_values", "4,8"}});
  CHECK(cfg.model == Model::gsrf);
  REQUIRE(cfg.jumps.jumps.size() == 2);
  CHECK(cfg.jumps.jumps[1].size == -1.0);
  CHECK(cfg.k_values == std::vector<int>{4, 8});
  const auto f3 = build_config({{"model", "FSRF3"}, {"lambda1", "1"}, {"lambda2", "0.5"}, {"alpha", "0.7"},
                                {"beta", "0.7"}, {"alpha2", "0.9"}, {"beta2", "0.9"}});
  CHECK(f3.n_min == -12);
  CHECK(f3.n_max == 12);
}

TEST_CASE("pmf command", "[cli]") {
  const auto r = invoke({"pmf", "--set", "model=SRF", "--set", "lambda1=2", "--set", "lambda2=1", "--set",
                         "n_min=-10", "--set", "n_max=10"});
  REQUIRE(r.status == kExitOk);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 22);
  CHECK(rows[0] == "n,prob");
  CHECK(r.out.find('\r') == std::string::npos);
  std::istringstream in(r.out);
  const auto table = read_csv(in);
  CHECK(table.window_mass() < 1.0);
  CHECK(table.tail_mass > 0.0);
  CHECK_THAT(table.at(0), WithinAbs(field::srf_pmf({2.0, 1.0}, 1.0, 1.0, 0), 1e-16));

  const auto point = invoke({"pmf", "--set", "model=SRF", "--set", "lambda1=2", "--set", "lambda2=1", "--set",
                             "s=0", "--set", "n_min=0", "--set", "n_max=0"});
  REQUIRE(point.status == kExitOk);
  CHECK(point.out == "n,prob\n0,1\n");

  const auto bad = invoke({"pmf", "--set", "model=SRF", "--set", "lambda1=2", "--set", "lambda2=0"});
  CHECK(bad.status == kExitUsage);
  CHECK_THAT(bad.err, ContainsSubstring("lambda2"));

  const auto json = invoke({"pmf", "--format", "json", "--set", "model=FPRF", "--set", "lambda=1", "--set",
                            "alpha=0.7", "--set", "beta=0.7", "--set", "n_min=0", "--set", "n_max=10"});
  REQUIRE(json.status == kExitOk);
  std::istringstream jin(json.out);
  CHECK(read_json(jin).size() == 11);
}

TEST_CASE("sample command is reproducible", "[cli]") {
  const std::vector<std::string> base{"sample", "--set", "model=FSRF1", "--set", "lambda1=2", "--set", "lambda2=1",
                                      "--set", "alpha=0.7", "--set", "beta=0.7", "--set", "replicates=500"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return invoke(args);
  };
  const auto a = with({"--seed", "42"});
  const auto b = with({"--seed", "42", "--workers", "3"});
  const auto c = with({"--seed", "43"});
  REQUIRE(a.status == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  const auto rows = lines_of(a.out);
  CHECK(rows.size() == 501);
  CHECK(rows[0] == "value");

  const auto zero = with({"--set", "replicates=0"});
  CHECK(zero.status == kExitUsage);
  CHECK_THAT(zero.err, ContainsSubstring("replicates"));
}

TEST_CASE("fsrf1 at order one samples like the integer-order field", "[cli]") {
  auto draws = [](const std::string& seed, const std::vector<std::string>& model) {
    std::vector<std::string> args{"sample", "--seed", seed, "--set", "replicates=100000", "--set", "lambda1=2",
                                  "--set", "lambda2=1"};
    args.insert(args.end(), model.begin(), model.end());
    const auto r = invoke(args);
    REQUIRE(r.status == kExitOk);
    std::vector<std::int64_t> out;
    const auto rows = lines_of(r.out);
    for (std::size_t i = 1; i < rows.size(); ++i) out.push_back(std::stoll(rows[i]));
    return out;
  };
  const auto frac = draws("7", {"--set", "model=FSRF1", "--set", "alpha=1", "--set", "beta=1"});
  const auto plain = draws("8", {"--set", "model=SRF"});
  const double tv = verify::tv_distance(verify::empirical_pmf(frac, -15, 15), verify::empirical_pmf(plain, -15, 15));
  CHECK(tv < 0.01);
}

TEST_CASE("moments, cf and converge commands", "[cli]") {
  const auto m = invoke({"moments", "--set", "model=SRF", "--set", "lambda1=2", "--set", "lambda2=1", "--set",
                         "s2=2", "--set", "t2=0.5"});
  REQUIRE(m.status == kExitOk);
  CHECK(lines_of(m.out) == std::vector<std::string>{"statistic,value", "mean,1", "var,3", "cov,1.5"});

  const auto cf = invoke({"cf", "--format", "json", "--set", "model=INTEGRAL", "--set", "lambda=1", "--set",
                          "replicates=20000"});
  REQUIRE(cf.status == kExitOk);
  const auto doc = nlohmann::json::parse(cf.out);
  CHECK(doc.at("rows").size() == 9);
  CHECK(doc.at("sup_error").get<double>() < 0.05);

  const auto conv = invoke({"converge", "--set", "model=GSRF", "--set", "jumps=1:2,-1:1", "--set",
                            "k_values=16,32", "--set", "replicates=20000"});
  REQUIRE(conv.status == kExitOk);
  const auto rows = lines_of(conv.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "k,tv,noise_floor,threshold,pass");
  CHECK(rows[1].rfind("16,", 0) == 0);

  const auto wrong = invoke({"converge", "--set", "model=FPRF", "--set", "lambda=1", "--set", "alpha=0.5",
                             "--set", "beta=0.5"});
  CHECK(wrong.status == kExitUsage);
}

TEST_CASE("verify command", "[cli]") {
  const auto ok = invoke({"verify", "--suite", "srf-oracle"});
  REQUIRE(ok.status == kExitOk);
  const auto doc = nlohmann::json::parse(ok.out);
  CHECK(doc.at("pass") == true);
  CHECK_THAT(ok.err, ContainsSubstring("PASS"));

  const auto unknown = invoke({"verify", "--suite", "nope"});
  CHECK(unknown.status != kExitOk);
  CHECK_THAT(unknown.err, ContainsSubstring("srf-oracle"));
  CHECK_THAT(unknown.err, ContainsSubstring("theorem31"));
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(invoke({}).status == kExitUsage);
  CHECK(invoke({"frobnicate"}).status == kExitUsage);
  CHECK(invoke({"pmf", "--format", "xml"}).status == kExitUsage);
  CHECK(invoke({"pmf", "--config", "/nonexistent/config.txt"}).status == kExitUsage);
  CHECK(invoke({"--help"}).status == kExitOk);
}

TEST_CASE("binary writes files from a config", "[cli]") {
  const char* exe = std::getenv("SKELLAM_CLI");
  if (exe == nullptr) SKIP("SKELLAM_CLI not set");
  const auto dir = scratch_dir();
  const auto config = dir / "srf.cfg";
  {
    std::ofstream c(config);
    c << "# difference of two Poisson fields\nmodel = SRF\nlambda1 = 2\nlambda2 = 1\nreplicates = 1000\n";
  }
  auto sample_to = [&](const fs::path& out, const std::string& extra) {
    const std::string cmd = std::string(exe) + " sample --config " + config.string() + " --seed 11 --output " +
                            out.string() + " " + extra;
    return std::system(cmd.c_str());
  };
  REQUIRE(sample_to(dir / "a.csv", "") == 0);
  REQUIRE(sample_to(dir / "b.csv", "--workers 2") == 0);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  CHECK(lines_of(slurp(dir / "a.csv")).size() == 1001);

  const std::string json_cmd = std::string(exe) + " pmf --config " + config.string() +
                               " --set n_min=-5 --set n_max=5 --format json --output " + (dir / "p.json").string();
  REQUIRE(std::system(json_cmd.c_str()) == 0);
  std::ifstream jin(dir / "p.json");
  CHECK(read_json(jin).size() == 11);

  const std::string bad = std::string(exe) + " pmf --config " + config.string() + " --set lambda2=0 2>/dev/null";
  CHECK(std::system(bad.c_str()) != 0);
  fs::remove_all(dir);
}
