#include "fanfree/io.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fanfree;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" FANFREE_CLI_PATH "\" " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("fanfree_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, CheckReportsTheFanFixture) {
  write_json_file(path("fan.json"), to_json(fixtures::fan_fixture()));
  const auto r = run("check --k 2 --input " + path("fan.json") + " --json " + path("w.json"));
  EXPECT_EQ(r.code, 1) << r.out;
  const auto payload = read_json_file(path("w.json"));
  ASSERT_EQ(payload.at("witnesses").size(), 1u);
  EXPECT_EQ(payload.at("witnesses")[0].at("apex"), 0);
  EXPECT_EQ(run("check --k 3 --input " + path("fan.json")).code, 0);
}

TEST_F(Cli, GeneratedCompleteSixIsFanFree) {
  EXPECT_EQ(run("gen --family straight-extremal --n 6 --out " + path("k6.json")).code, 0);
  const auto r = run("check --k 2 --input " + path("k6.json"));
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST_F(Cli, StarSearchPrintsTheMaximum) {
  auto r = run("star-search --m 3 --k 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  r = run("star-search --m 4 --k 2");
  EXPECT_EQ(r.out, "2\n");
  r = run("star-search --m 6 --k 2 --long-only");
  EXPECT_EQ(r.out, "4\n");
}

TEST_F(Cli, BudgetExhaustionExitsThree) {
  EXPECT_EQ(run("star-search --m 6 --k 2 --budget 1").code, 3);
  EXPECT_EQ(run("star-search --m 6 --k 2", "FANFREE_BUDGET=1").code, 3);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("check").code, 2);
  EXPECT_EQ(run("gen --family hexagons --n 5").code, 2);
  EXPECT_EQ(run("check --k 2 --input " + path("missing.json")).code, 2);
  EXPECT_EQ(run("gen --family quad-extremal --n 9").code, 2);
}

TEST_F(Cli, AuditWritesAReport) {
  ASSERT_EQ(run("gen --family quad-extremal --n 10 --out " + path("q.json")).code, 0);
  const auto r = run("audit --k 2 --input " + path("q.json") + " --report " + path("report.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  const auto report = read_json_file(path("report.json"));
  EXPECT_EQ(report.at("schema"), 1);
  EXPECT_EQ(report.at("falsified"), false);
  EXPECT_EQ(report.at("global").at("twice_edges"), 64);
}

TEST_F(Cli, BoundsReport) {
  auto r = run("bounds --n 7 --k 2");
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("upper_bound"), 20);
  EXPECT_EQ(j.at("exact"), 19);

  std::ofstream(path("k7.json")) << R"({"schema": 1, "n": 7, "edges": [)"
                                 << R"([0,1],[0,2],[0,3],[0,4],[0,5],[0,6],[1,2],[1,3],[1,4],[1,5],[1,6],)"
                                 << R"([2,3],[2,4],[2,5],[2,6],[3,4],[3,5],[3,6],[4,5],[4,6],[5,6]]})";
  r = run("bounds --k 2 --input " + path("k7.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cannot be fan-crossing free"), std::string::npos);
}

TEST_F(Cli, RenderEmitsSvg) {
  ASSERT_EQ(run("gen --family k6 --out " + path("k6.json")).code, 0);
  EXPECT_EQ(run("render --input " + path("k6.json") + " --out " + path("k6.svg")).code, 0);
  std::ifstream in(path("k6.svg"));
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("<svg"), std::string::npos);
  ASSERT_EQ(run("gen --family quad-extremal --n 8 --out " + path("q.json")).code, 0);
  EXPECT_EQ(run("render --input " + path("q.json")).code, 2);
}

TEST_F(Cli, GenIsDeterministic) {
  ASSERT_EQ(run("gen --family kq-subdivision --q 5 --out " + path("a.json")).code, 0);
  ASSERT_EQ(run("gen --family kq-subdivision --q 5 --out " + path("b.json")).code, 0);
  std::ifstream a(path("a.json")), b(path("b.json"));
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
}

TEST_F(Cli, ReproFaultInjectionFails) {
  const auto r = run("repro --only 8,10 --inject-bound-offset -1 --counterexample-dir " + path("cx"));
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("FALSIFICATION"), std::string::npos);
  EXPECT_FALSE(fs::is_empty(path("cx")));
}

TEST_F(Cli, ReproWithBudgetOneIsInconclusive) {
  const auto r = run("repro --only 1,2 --budget 1");
  EXPECT_EQ(r.code, 3) << r.out;
  EXPECT_NE(r.out.find("INCONCLUSIVE"), std::string::npos);
}

TEST_F(Cli, ReproPassingRowsExitZero) {
  const auto r = run("repro --only 1,4,8 --counterexample-dir " + path("cx"));
  EXPECT_EQ(r.code, 0) << r.out;
}
