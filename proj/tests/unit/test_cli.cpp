#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("poisson_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the CLI with stderr discarded and returns its exit status.
  int run(const std::string& args, const std::string& env = {}) const {
    const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + POISSON_CLI_PATH + "\" " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const fs::path& path) const {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("eval --n 1 --m 1 --a 1 -o " + path("x.csv")), 3);
  EXPECT_EQ(run("eval --n 2 --m 1 -o " + path("x.csv")), 3);
  EXPECT_EQ(run("eval --n 2 --m 1 --a 1 --repr fourier -o " + path("x.csv")), 3);
  EXPECT_EQ(run("coeffs --m 2 --n 3 --symbolic-n -o " + path("x.json")), 3);
  EXPECT_EQ(run("invert --input " + path("missing.json")), 4);
  EXPECT_EQ(run("eval --n 2 --m 1 --a 1 -o /proc/poisson/denied.csv"), 4);
  EXPECT_EQ(run("eval --n 2 --m 11 --a 1e-7 --repr closed -o " + path("x.csv")), 5);
}

TEST_F(Cli, InvalidJsonInputIsConfigError) {
  std::ofstream(path("bad.json")) << "{\"n\": 2, \"coeffs\": [1, ";
  EXPECT_EQ(run("invert --input " + path("bad.json") + " -o " + path("r.json")), 3);
}

TEST_F(Cli, VerifyFast) {
  ASSERT_EQ(run("verify --n 2 --m 1 --fast -o " + path("v.json")), 0);
  const json doc = json::parse(read(path("v.json")));
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_TRUE(doc["passed"].get<bool>());
  ASSERT_EQ(doc["suites"].size(), 7u);
  for (const json& s : doc["suites"]) EXPECT_TRUE(s["passed"].get<bool>()) << s["module"];
}

TEST_F(Cli, CoeffsSymbolicBaseCase) {
  ASSERT_EQ(run("coeffs --m 2 --symbolic-n -o " + path("c.json")), 0);
  const json doc = json::parse(read(path("c.json")));
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_TRUE(doc["n"].is_null());
  const json& base = doc["lower_orders"][0];
  EXPECT_EQ(base["m"], 1);
  EXPECT_EQ(base["R"][0]["coeffs"], json({"-n - 3", "n - 1"}));
  EXPECT_EQ(base["R"][1]["coeffs"], json({"n + 1", "-n + 3"}));
  EXPECT_EQ(doc["R"].size(), 3u);
  EXPECT_EQ(doc["alpha"][2], json({0, 1, 1}));
}

TEST_F(Cli, CoeffsNumeric) {
  ASSERT_EQ(run("coeffs --m 1 --n 3 -o " + path("c.json")), 0);
  const json doc = json::parse(read(path("c.json")));
  EXPECT_EQ(doc["R"][0]["coeffs"], json({-6, 2}));
  EXPECT_EQ(doc["R"][1]["coeffs"], json({4, 0}));
}

TEST_F(Cli, EvalAllRepresentationsAgree) {
  ASSERT_EQ(run("eval --n 3 --m 2 --a 0.5 --repr all -o " + path("e.csv")), 0);
  const auto rows = parse_csv(read(path("e.csv")));
  ASSERT_EQ(rows.size(), 101u);
  ASSERT_EQ(rows[0].size(), 7u);
  EXPECT_EQ(rows[0][0], "theta");
  EXPECT_EQ(rows[0][6], "max_pairwise_rel_err");
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(std::stod(rows[i][6]), 1e-9);
}

TEST_F(Cli, DeterministicOutputs) {
  const std::string args = "invert --n 3 --m 1 --flavor linear --band-limit 8 --seed 11 -o ";
  ASSERT_EQ(run(args + path("a.json")), 0);
  ASSERT_EQ(run(args + path("b.json")), 0);
  EXPECT_EQ(read(path("a.json")), read(path("b.json")));

  const std::string t = "transform --n 2 --band-limit 5 --m 2 --a-count 30 --theta-grid 9 ";
  ASSERT_EQ(run(t + "--threads 1 -o " + path("t1.csv")), 0);
  ASSERT_EQ(run(t + "--threads 3 -o " + path("t3.csv")), 0);
  EXPECT_EQ(read(path("t1.csv")), read(path("t3.csv")));
  EXPECT_EQ(parse_csv(read(path("t1.csv")))[0], (std::vector<std::string>{"a", "theta", "value"}));
}

TEST_F(Cli, OutputDirectoryFromEnvironment) {
  ASSERT_EQ(run("euclid --n 2 --m 1", "POISSON_OUT_DIR=\"" + dir_.string() + "\""), 0);
  EXPECT_TRUE(fs::exists(dir_ / "euclid.json"));
  EXPECT_TRUE(fs::exists(dir_ / "euclid_profile.csv"));
  const json doc = json::parse(read(dir_ / "euclid.json"));
  EXPECT_TRUE(doc["monotone"].get<bool>());
  EXPECT_EQ(doc["schema_version"], 1);
}

TEST_F(Cli, InvertFromJsonInput) {
  std::ofstream(path("f.json")) << R"({"n": 2, "coeffs": [0.5, 1.0, -0.25, 0.125]})";
  ASSERT_EQ(run("invert --input " + path("f.json") + " --m 2 --path spatial --quad-count 6 -o " + path("r.json")), 0);
  const json doc = json::parse(read(path("r.json")));
  EXPECT_EQ(doc["path"], "spatial");
  EXPECT_EQ(doc["per_degree_ratio"][0].get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(doc["dropped_degree0"].get<double>(), 0.5);
  for (int l = 1; l <= 3; ++l) EXPECT_NEAR(doc["per_degree_ratio"][l].get<double>(), 1.0, 1e-3);
}
