// Copyright 2026 The mhqmo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli/commands.hpp"

using mhqmo::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("mhqmo_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& body) const {
    const auto p = path_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(CliBuildTest, QubitHalf) {
  const auto r = invoke({"build", "--scenario", "qubit", "--eta", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["elements"].size(), 4u);
  EXPECT_EQ(j["elements"][0]["outcome"], json::parse("[1, 1]"));
  EXPECT_EQ(j["elements"][0]["matrix"]["entries"],
            json::parse("[[0.375, 0.0], [0.125, 0.0], [0.125, 0.0], [0.125, 0.0]]"));
}

TEST(CliBuildTest, QutritAtZeroIsDiagonal) {
  const auto r = invoke({"build", "--scenario", "qutrit", "--eta", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["elements"].size(), 9u);
  for (const auto& e : j["elements"]) {
    EXPECT_EQ(e["matrix"]["dim"], 3);
    const auto& m = e["matrix"]["entries"];
    for (int row = 0; row < 3; ++row)
      for (int col = 0; col < 3; ++col) {
        if (row != col) {
          EXPECT_EQ(m[row * 3 + col][0].get<double>(), 0.0);
        } else {
          EXPECT_EQ(m[row * 3 + col][0], m[0][0]);
        }
      }
  }
}

TEST(CliBuildTest, TwoQubitSharpAndMarginal) {
  const auto r = invoke({"build", "--scenario", "two-qubit", "--eta", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["elements"].size(), 16u);
  const auto m = invoke({"build", "--scenario", "qutrit", "--eta", "0.5", "--marginal", "0"});
  ASSERT_EQ(m.code, 0) << m.err;
  const auto j = json::parse(m.out);
  EXPECT_EQ(j["observable_index"], 0);
  EXPECT_EQ(j["elements"].size(), 3u);
}

TEST(CliThresholdTest, Scenarios) {
  const double expected[] = {1 / std::numbers::sqrt2, std::sqrt(std::numbers::sqrt2 - 1),
                             std::sqrt(std::numbers::sqrt2 - 1)};
  const char* names[] = {"qubit", "qutrit", "two-qubit"};
  for (int i = 0; i < 3; ++i) {
    const auto r = invoke({"threshold", "--scenario", names[i]});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json::parse(r.out)["threshold"].get<double>(), expected[i], 1e-8) << names[i];
  }
}

TEST(CliScanTest, QubitEndpointsCsv) {
  const auto r = invoke({"scan", "--scenario", "qubit", "--steps", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "eta,min_eig\n"
            "0.000000000e+00,2.500000000e-01\n"
            "1.000000000e+00,-1.035533906e-01\n");
}

TEST(CliScanTest, QutritSignChange) {
  const auto r = invoke({"scan", "--scenario", "qutrit", "--min", "0", "--max", "1", "--steps", "101"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  const auto& grid = j["grid"];
  ASSERT_EQ(grid.size(), 101u);
  EXPECT_GE(grid[64]["min_eig"].get<double>(), 0.0);
  EXPECT_LT(grid[65]["min_eig"].get<double>(), 0.0);
  EXPECT_NEAR(j["threshold"].get<double>(), 0.6435943, 1e-6);
}

TEST(CliScanTest, PerElement) {
  const auto csv = invoke({"scan", "--scenario", "qubit", "--steps", "3", "--per-element",
                           "--format", "csv"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  const auto header = csv.out.substr(0, csv.out.find('\n'));
  EXPECT_NE(header.find("eta,min_eig"), std::string::npos);
  EXPECT_NE(header.find("[1]"), std::string::npos);
  const auto js = invoke({"scan", "--scenario", "qubit", "--steps", "3", "--per-element"});
  ASSERT_EQ(js.code, 0) << js.err;
  const auto j = json::parse(js.out);
  EXPECT_EQ(j["grid"][0]["elements"].size(), 4u);
}

TEST(CliExitCodeTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"scan", "--min", "0.5", "--max", "0.5", "--steps", "2"}).code, 2);
  EXPECT_EQ(invoke({"build", "--scenario", "qubit", "--eta", "1.5"}).code, 2);
  EXPECT_EQ(invoke({"build", "--scenario", "qudit"}).code, 2);
  EXPECT_EQ(invoke({"build", "--scenario", "qubit", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"build", "--observables", "/nonexistent/obs.json"}).code, 2);
  EXPECT_EQ(invoke({"scan", "--scenario", "qubit", "--steps", "1"}).code, 2);
  EXPECT_EQ(invoke({"quasiprob", "--scenario", "qubit"}).code, 2);
}

TEST(CliExitCodeTest, ObservableFiles) {
  TempDir dir;
  const auto malformed = dir.write("bad.json", "{ not json");
  EXPECT_EQ(invoke({"build", "--observables", malformed}).code, 2);
  const auto non_hermitian = dir.write(
      "nh.json", R"({"observables": [{"dim": 2, "entries": [[0,0],[1,0],[0,0],[0,0]]}]})");
  const auto r = invoke({"build", "--observables", non_hermitian});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("NotHermitian"), std::string::npos);
  const auto ok = dir.write("ok.json", R"({"observables": [
      {"dim": 2, "entries": [[0,0],[1,0],[1,0],[0,0]]},
      {"dim": 2, "entries": [[1,0],[0,0],[0,0],[-1,0]]}]})");
  const auto t = invoke({"threshold", "--observables", ok});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_NEAR(json::parse(t.out)["threshold"].get<double>(), 1 / std::numbers::sqrt2, 1e-8);
}

TEST(CliQuasiprobTest, States) {
  TempDir dir;
  const auto mixed = dir.write("mixed.json", R"({"dim": 2, "entries": [[0.5,0],[0,0],[0,0],[0.5,0]]})");
  const auto r = invoke({"quasiprob", "--scenario", "qubit", "--state", mixed});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto mixed_table = json::parse(r.out);
  for (const auto& e : mixed_table["entries"]) EXPECT_EQ(e["p"], 0.25);

  // Bloch (1/sqrt2, 0, 1/sqrt2).
  const double a = (1 + 1 / std::numbers::sqrt2) / 2, b = 0.5 / std::numbers::sqrt2;
  const double c = (1 - 1 / std::numbers::sqrt2) / 2;
  const json tilted = {{"dim", 2}, {"entries", {{a, 0}, {b, 0}, {b, 0}, {c, 0}}}};
  const auto t = invoke({"quasiprob", "--scenario", "qubit", "--state", dir.write("t.json", tilted.dump())});
  ASSERT_EQ(t.code, 0) << t.err;
  const auto tilted_table = json::parse(t.out);
  int flagged = 0;
  for (const auto& e : tilted_table["entries"]) {
    if (e.value("negative", false)) {
      ++flagged;
      EXPECT_NEAR(e["p"].get<double>(), (1 - std::numbers::sqrt2) / 4, 1e-9);
    }
  }
  EXPECT_EQ(flagged, 1);

  const double third = 1.0 / 3.0;
  const json i3 = {{"dim", 3},
                   {"entries", {{third, 0}, {0, 0}, {0, 0}, {0, 0}, {third, 0}, {0, 0}, {0, 0}, {0, 0}, {third, 0}}}};
  const auto q = invoke({"quasiprob", "--scenario", "qutrit", "--state", dir.write("i3.json", i3.dump())});
  ASSERT_EQ(q.code, 0) << q.err;
  const auto fam = json::parse(invoke({"build", "--scenario", "qutrit", "--eta", "1"}).out);
  const auto entries = json::parse(q.out)["entries"];
  ASSERT_EQ(entries.size(), 9u);
  for (std::size_t k = 0; k < 9; ++k) {
    const auto& m = fam["elements"][k]["matrix"]["entries"];
    const double tr = m[0][0].get<double>() + m[4][0].get<double>() + m[8][0].get<double>();
    EXPECT_NEAR(entries[k]["p"].get<double>(), tr / 3, 1e-8);
  }

  const auto bad_trace =
      dir.write("bt.json", R"({"dim": 2, "entries": [[0.7,0],[0,0],[0,0],[0.7,0]]})");
  EXPECT_EQ(invoke({"quasiprob", "--scenario", "qubit", "--state", bad_trace}).code, 3);
  const auto not_psd =
      dir.write("np.json", R"({"dim": 2, "entries": [[1.2,0],[0,0],[0,0],[-0.2,0]]})");
  EXPECT_EQ(invoke({"quasiprob", "--scenario", "qubit", "--state", not_psd}).code, 3);
  EXPECT_EQ(invoke({"quasiprob", "--scenario", "two-qubit", "--state", mixed}).code, 3);
}

TEST(CliOutputTest, ByteStable) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"build", "--scenario", "qutrit", "--eta", "0.7"},
           {"scan", "--scenario", "two-qubit", "--steps", "11", "--per-element"},
           {"scan", "--scenario", "qubit", "--steps", "11", "--format", "csv"}}) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(CliOutputTest, OutFileWrittenOnlyOnSuccess) {
  TempDir dir;
  const auto target = (dir.path() / "family.json").string();
  const auto r = invoke({"build", "--scenario", "qubit", "--eta", "0.5", "--out", target});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto direct = invoke({"build", "--scenario", "qubit", "--eta", "0.5"});
  EXPECT_EQ(read_file(target), direct.out);

  const auto failed = (dir.path() / "failed.json").string();
  const auto nh = dir.write(
      "nh.json", R"({"observables": [{"dim": 2, "entries": [[0,0],[1,0],[0,0],[0,0]]}]})");
  EXPECT_EQ(invoke({"build", "--observables", nh, "--out", failed}).code, 3);
  EXPECT_FALSE(std::filesystem::exists(failed));
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& entry : std::filesystem::directory_iterator(dir.path())) ++files;
  EXPECT_EQ(files, 2u);
}

TEST(CliEnvTest, ToleranceOverride) {
  ::setenv("MHQMO_TOL", "not-a-number", 1);
  EXPECT_EQ(invoke({"threshold", "--scenario", "qubit"}).code, 2);
  ::setenv("MHQMO_TOL", "0.01", 1);
  const auto loose = invoke({"threshold", "--scenario", "qubit"});
  ::unsetenv("MHQMO_TOL");
  ASSERT_EQ(loose.code, 0) << loose.err;
  const double t = json::parse(loose.out)["threshold"].get<double>();
  // lambda_minus(t) = -0.01 at the loosened slack.
  EXPECT_NEAR(t, (1 + 0.04) / std::numbers::sqrt2, 1e-8);
}

TEST(CliVerifyTest, AllChecksPass) {
  const auto r = invoke({"verify"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  std::size_t passes = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);)
    if (line.rfind("PASS ", 0) == 0) ++passes;
  EXPECT_GE(passes, 12u);
  EXPECT_NE(r.out.find("charfn-vs-jordan"), std::string::npos);
  EXPECT_NE(r.out.find("qutrit-closed-form"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL "), std::string::npos);
}
