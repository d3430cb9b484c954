#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// stderr is folded into the captured text so diagnostics can be checked.
Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(KLEINIAN_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<nlohmann::json> lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST(Cli, SectionsEmitsMonomialList) {
  const auto r = run("sections --n 2 --b 1 --box 10");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = lines(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["n"], 2);
  EXPECT_EQ(j[0]["box"]["max_r"], 10);
  EXPECT_FALSE(j[0]["monomials"].empty());
  EXPECT_EQ(j[0]["monomials"][0], nlohmann::json::array({0, 0}));
}

TEST(Cli, DominantReportsCulprit) {
  const auto r = run("dominant --n 2 --k -1");
  EXPECT_EQ(r.status, 2);
  const auto j = lines(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_FALSE(j[0]["dominant"]["ok"].get<bool>());
  EXPECT_EQ(j[0]["dominant"]["culprits"][0]["root"], nlohmann::json::array({1, 2}));
  EXPECT_EQ(run("dominant --n 3 --k 1/2,1/3").status, 0);
}

TEST(Cli, AllPassesForZeroParameters) {
  const auto r = run("all --n 2 --k 0 --window 12");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = lines(r.out);
  ASSERT_GE(j.size(), 10u);
  for (std::size_t i = 0; i + 1 < j.size(); ++i) EXPECT_EQ(j[i]["outcome"], "pass") << j[i].dump();
  EXPECT_EQ(j.back()["summary"]["fail"], 0);
}

TEST(Cli, OutputIsDeterministic) {
  const auto a = run("all --n 3 --k 1/2,-1/3 --window 8 --seed 5");
  const auto b = run("all --n 3 --k 1/2,-1/3 --window 8 --seed 5");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.status, b.status);
}

TEST(Cli, MutatedRunsFail) {
  for (const char* cmd : {"expand --n 2 --b 1", "krs --n 2 --b 1", "obar --n 2 --b 1", "bteng --n 2 --b 1",
                          "hodges --n 2", "cbh --n 3", "morita --n 3", "identities --n 2"}) {
    EXPECT_EQ(run(std::string(cmd) + " --mutate").status, 2) << cmd;
    EXPECT_EQ(run(cmd).status, 0) << cmd;
  }
}

TEST(Cli, DistinctDiagnostics) {
  const auto bad_fraction = run("hodges --n 2 --k 1/x");
  EXPECT_EQ(bad_fraction.status, 1);
  EXPECT_NE(bad_fraction.out.find("malformed fraction"), std::string::npos);
  const auto mismatch = run("hodges --n 3 --k 1");
  EXPECT_EQ(mismatch.status, 1);
  EXPECT_NE(mismatch.out.find("dimension mismatch"), std::string::npos);
  const auto unknown = run("frobnicate --n 2");
  EXPECT_EQ(unknown.status, 1);
  EXPECT_NE(unknown.out.find("unknown command"), std::string::npos);
}

TEST(Cli, InconclusiveHasItsOwnExitCode) {
  EXPECT_EQ(run("obar --n 3 --b 1,1 --window 20 --order 1").status, 3);
}

TEST(Cli, TsvTables) {
  const auto r = run("obar --n 2 --b 1 --window 6 --format tsv");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("degree\tdimension"), std::string::npos);
  EXPECT_NE(r.out.find("\n2\t2\n"), std::string::npos);
}

TEST(Cli, FanAndSeries) {
  const auto fan = lines(run("fan --n 3").out);
  ASSERT_EQ(fan.size(), 1u);
  EXPECT_EQ(fan[0]["rays"].size(), 4u);
  for (const auto& d : fan[0]["determinants"]) EXPECT_EQ(d, 1);
  const auto series = lines(run("abl-series --n 2 --b 0").out);
  ASSERT_EQ(series.size(), 1u);
  EXPECT_EQ(series[0]["charts"].size(), 2u);
}
