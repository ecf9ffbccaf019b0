#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "monocomp_cli.hpp"

using namespace monocomp;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  std::map<std::string, std::string> keys;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  std::istringstream is(o.out);
  for (std::string line; std::getline(is, line);) {
    auto pos = line.find(": ");
    if (pos != std::string::npos) o.keys.emplace(line.substr(0, pos), line.substr(pos + 2));
  }
  return o;
}

std::string strip_elapsed(const std::string& s) { return s.substr(0, s.rfind("elapsed-ms:")); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("monocomp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ConstructThenAnalyzeGyarfas) {
  Outcome c = run_cli({"construct", "gyarfas", "--r", "4", "--out", path("g.txt")});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(parse_coloring(slurp(path("g.txt"))), gyarfas_coloring(4));
  Outcome a = run_cli({"analyze", path("g.txt")});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.keys["components"], "12");
  EXPECT_EQ(a.keys["max-edges"], "3");
  EXPECT_EQ(a.keys["max-edge-fraction"], "1/12");
  EXPECT_EQ(a.keys["command"].rfind("monocomp analyze", 0), 0u);
  EXPECT_EQ(a.keys["input-digest"].rfind("sha256:", 0), 0u);
}

TEST_F(CliTest, ConstructToStdout) {
  Outcome c = run_cli({"construct", "two-color", "--n", "7"});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(c.out, to_text(two_color_extremal(7)));
}

TEST_F(CliTest, ParseErrorsReportTheLine) {
  std::string text = to_text(gyarfas_coloring(3));
  std::string bad = text.substr(0, text.find("0 2 0")) + "0 2 x\n" + text.substr(text.find("0 2 0") + 6);
  std::ofstream(path("bad.txt")) << bad;
  Outcome a = run_cli({"analyze", path("bad.txt")});
  EXPECT_EQ(a.code, 2);
  EXPECT_NE(a.err.find("line 3"), std::string::npos) << a.err;
  Outcome missing = run_cli({"analyze", path("nope.txt")});
  EXPECT_EQ(missing.code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"construct", "gyarfas"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"construct", "gyarfas", "--r", "7"}).code, 2);  // 6 is not a prime power
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(CliTest, BoundSweepAndGamma) {
  run_cli({"construct", "gyarfas", "--r", "4", "--out", path("g.txt")});
  Outcome s = run_cli({"bound", path("g.txt"), "--sweep", "--grid", "4", "--out", path("sweep.csv")});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.keys["best-z"], "1/12");
  EXPECT_EQ(s.keys["best-gamma"], "4");
  EXPECT_EQ(s.keys["bound-vs-actual"], "equal");
  // Every rational in the CSV parses back.
  std::istringstream csv(slurp(path("sweep.csv")));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "gamma,x,z,z_decimal");
  int rows = 0;
  while (std::getline(csv, line)) {
    std::istringstream row(line);
    std::string gamma, x;
    std::getline(row, gamma, ',');
    std::getline(row, x, ',');
    Rational g = parse_rational(gamma), xv = parse_rational(x);
    EXPECT_EQ(xv, 3 * g);
    ++rows;
  }
  EXPECT_EQ(rows, 2);

  Outcome g = run_cli({"bound", path("g.txt"), "--gamma", "2"});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(g.keys["lp-optimum"], "6");
  EXPECT_EQ(g.keys["lp-certificate"], "valid");
  EXPECT_EQ(run_cli({"bound", path("g.txt"), "--gamma", "5"}).code, 2);
}

TEST_F(CliTest, BoundWeightsAndRounding) {
  run_cli({"construct", "gyarfas", "--r", "4", "--out", path("g.txt")});
  std::ofstream w(path("w.txt"));
  for (int i = 0; i < 12; ++i) w << i << " 1/4\n";
  w.close();
  Outcome o = run_cli({"bound", path("g.txt"), "--weights", path("w.txt"), "--z", "1/16"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.keys["weights-x"], "3");
  EXPECT_EQ(o.keys["weights-gamma-total"], "1");
  std::ofstream(path("bad_w.txt")) << "0 1/4\n1 x\n";
  Outcome bad = run_cli({"bound", path("g.txt"), "--weights", path("bad_w.txt")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
}

TEST_F(CliTest, ClassifyExitCodes) {
  run_cli({"construct", "gyarfas", "--r", "4", "--out", path("g.txt")});
  Outcome grid = run_cli({"classify", path("g.txt"), "--grid"});
  EXPECT_EQ(grid.code, 0);
  EXPECT_EQ(grid.keys["grid"], "found");
  Outcome pair = run_cli({"classify", path("g.txt"), "--disjoint-pair"});
  EXPECT_EQ(pair.code, 1);
  EXPECT_EQ(pair.keys["disjoint-pair"], "none");
  EXPECT_EQ(run_cli({"classify", path("g.txt")}).code, 2);
  EXPECT_EQ(run_cli({"classify", path("g.txt"), "--r3-case"}).code, 2);

  run_cli({"construct", "gyarfas", "--r", "3", "--out", path("g3.txt")});
  Outcome r3 = run_cli({"classify", path("g3.txt"), "--r3-case"});
  EXPECT_EQ(r3.code, 0);
  EXPECT_EQ(r3.keys["r3-case"], "b");
  Outcome bip = run_cli({"classify", path("g3.txt"), "--bipartite", "0", "1"});
  EXPECT_EQ(bip.code, 0) << bip.err;
  EXPECT_EQ(bip.keys["certificate-valid"], "yes");
}

TEST_F(CliTest, SearchAndBudget) {
  Outcome s = run_cli({"search", "--n", "4", "--r", "2", "--out", path("w.txt")});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.keys["value"], "3");
  EXPECT_EQ(decompose(parse_coloring(slurp(path("w.txt")))).max_edges(), 3);
  Outcome b = run_cli({"search", "--n", "9", "--r", "4"});
  EXPECT_EQ(b.code, 3);
  EXPECT_NE(b.err.find("refused"), std::string::npos);
  EXPECT_EQ(run_cli({"search", "--n", "4", "--r", "2", "--symmetry", "mirror"}).code, 2);
}

TEST_F(CliTest, ReportBodyIsDeterministic) {
  run_cli({"construct", "blowup", "--r", "4", "--k", "2", "--out", path("b.txt")});
  Outcome one = run_cli({"analyze", path("b.txt")});
  Outcome two = run_cli({"analyze", path("b.txt")});
  EXPECT_EQ(strip_elapsed(one.out), strip_elapsed(two.out));
  EXPECT_NE(one.out.find("elapsed-ms:"), std::string::npos);
}

TEST_F(CliTest, AnalyzeCsvRationalsParseBack) {
  run_cli({"construct", "two-color", "--n", "10", "--out", path("t.txt")});
  ASSERT_EQ(run_cli({"analyze", path("t.txt"), "--out", path("c.csv")}).code, 0);
  std::istringstream csv(slurp(path("c.csv")));
  std::string line;
  std::getline(csv, line);
  Rational total = 0;
  while (std::getline(csv, line)) {
    std::istringstream row(line);
    std::string field;
    for (int i = 0; i < 5; ++i) std::getline(row, field, ',');
    total += parse_rational(field);
  }
  EXPECT_EQ(total, 1);  // edge fractions sum to 1
}

TEST_F(CliTest, RandomSeedFromEnvironment) {
  ::setenv("MONOCOMP_SEED", "42", 1);
  Outcome env = run_cli({"construct", "random", "--n", "5", "--r", "3"});
  ::unsetenv("MONOCOMP_SEED");
  Outcome flag = run_cli({"construct", "random", "--n", "5", "--r", "3", "--seed", "42"});
  Outcome def = run_cli({"construct", "random", "--n", "5", "--r", "3"});
  EXPECT_EQ(env.out, flag.out);
  EXPECT_EQ(env.out, to_text(random_coloring(5, 3, 42)));
  EXPECT_EQ(def.out, to_text(random_coloring(5, 3, 1)));
}

TEST_F(CliTest, VerifySmallRun) {
  Outcome v = run_cli({"verify", "--n-max", "3", "--r-max", "2", "--samples", "5", "--random-n", "8", "--subsets", "10",
                       "--a-max", "2", "--b-max", "2"});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(v.keys["soundness-violations"], "0");
  EXPECT_EQ(v.keys["bipartite-failures"], "0");
}

TEST(CliBinary, ExitCodeOfInstalledTool) {
  std::string cmd = std::string("\"") + MONOCOMP_BINARY + "\" search --n 9 --r 4 >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 3);
}
