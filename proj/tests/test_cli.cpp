#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SYZOLVE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t k = std::fread(buf, 1, sizeof buf, p)) out.append(buf, k);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("syzolve_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

const char* kFixture = R"({"kind": "toeplitz", "n": 2, "diagonals": ["1", "2", "3"]})";
const char* kIdentity2 = R"({"kind": "toeplitz", "n": 2, "diagonals": ["0", "1", "0"]})";

}  // namespace

TEST_F(Cli, GenRoundTripAndDeterminism) {
  ASSERT_EQ(run("gen --kind toeplitz --n 4 --seed 1 --out " + path("a.json")).code, 0);
  ASSERT_EQ(run("gen --kind toeplitz --n 4 --seed 1 --out " + path("b.json")).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  const auto j = json::parse(slurp(path("a.json")));
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["diagonals"].size(), 7u);
  EXPECT_EQ(run("solve " + path("a.json") + " --rhs-seed 3").code, 0);
}

TEST_F(Cli, GenTbtGrid) {
  ASSERT_EQ(run("gen --kind tbt --m 2 --n 2 --seed 7 --out " + path("t.json")).code, 0);
  const auto j = json::parse(slurp(path("t.json")));
  ASSERT_EQ(j["diagonals"].size(), 3u);
  EXPECT_EQ(j["diagonals"][0].size(), 3u);
}

TEST_F(Cli, SolveFixture) {
  const auto inst = write("t.json", kFixture);
  const auto rhs = write("g.json", R"({"g": ["1", "0"]})");
  const auto r = run("solve " + inst + " --rhs " + rhs);
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["u"], json({"2", "-3"}));
  EXPECT_EQ(j["residual_norm"], 0.0);
}

TEST_F(Cli, SolveIdentity) {
  const auto inst = write("i.json", kIdentity2);
  const auto rhs = write("g.json", R"({"g": ["1", "0"]})");
  const auto r = run("solve " + inst + " --rhs " + rhs);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["u"], json({"1", "0"}));
}

TEST_F(Cli, SolveExitCodes) {
  const auto inst = write("t.json", kFixture);
  EXPECT_EQ(run("solve " + inst + " --rhs " + write("g.json", R"({"g": ["1"]})")).code, 2);
  EXPECT_EQ(run("solve " + write("bad.json", "{not json")).code, 2);
  const auto sing = write("s.json", R"({"kind": "toeplitz", "n": 2, "diagonals": ["1", "1", "1"]})");
  EXPECT_EQ(run("solve " + sing + " --rhs-seed 1").code, 3);
  EXPECT_EQ(run("solve " + sing + " --rhs-seed 1 --no-fallback").code, 4);
  EXPECT_EQ(run("solve " + sing + " --rhs-seed 1 --route dense").code, 3);
}

TEST_F(Cli, BasisIdentity) {
  const auto r = run("basis " + write("i.json", kIdentity2));
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["rho1"]["u"], json({"0", "0", "1"}));
  EXPECT_EQ(j["rho1"]["v"], json({"-1"}));
  EXPECT_EQ(j["rho2"]["w"], json({"-1"}));
  EXPECT_EQ(j["mu_degrees"], json({"2", "2"}));
}

TEST_F(Cli, BasisTbtCount) {
  const auto r = run("basis " + write("t.json", R"({"kind": "tbt", "m": 1, "n": 1, "diagonals": [["1"]]})"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["count"], 8);
}

TEST_F(Cli, Verify) {
  const auto inst = write("t.json", kFixture);
  EXPECT_EQ(run("verify " + inst + " " + write("ok.json", R"({"u": ["2", "-3"], "g": ["1", "0"]})")).code, 0);
  EXPECT_EQ(run("verify " + inst + " " + write("bad.json", R"({"u": ["2", "-2"], "g": ["1", "0"]})")).code, 1);
  EXPECT_EQ(run("verify " + inst + " " + write("short.json", R"({"u": ["2"], "g": ["1", "0"]})")).code, 2);
}

TEST_F(Cli, SolveThenVerifyFloat) {
  ASSERT_EQ(run("gen --kind toeplitz --n 50 --seed 2 --field float64 --out " + path("f.json")).code, 0);
  ASSERT_EQ(run("solve " + path("f.json") + " --rhs-seed 5 --out " + path("sol.json")).code, 0);
  EXPECT_EQ(run("verify " + path("f.json") + " " + path("sol.json")).code, 0);
}

TEST_F(Cli, BenchRowsAndDeterminism) {
  const std::string args = "bench --sizes 32,64,128 --trials 3 --seed 9 --routes dense,oracle";
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  std::istringstream in(a.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "kind,m,n,route,trial,seed,basis_s,reduce_s,total_s,scaled_residual");
  std::size_t rows = 0;
  std::vector<std::string> resid_a, resid_b;
  while (std::getline(in, line)) {
    ++rows;
    resid_a.push_back(line.substr(line.rfind(',') + 1));
  }
  EXPECT_EQ(rows, 18u);
  std::istringstream in2(b.out);
  std::getline(in2, line);
  while (std::getline(in2, line)) resid_b.push_back(line.substr(line.rfind(',') + 1));
  EXPECT_EQ(resid_a, resid_b);
}
