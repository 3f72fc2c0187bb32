#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
  int status;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = (env.empty() ? "" : env + " ") + std::string(SPRINGER_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::json row_for(const nlohmann::json& rows, const std::string& cls) {
  for (const auto& r : rows)
    if (r["class"] == cls) return r;
  return {};
}

}  // namespace

TEST(Cli, GreenJsonRoundTrip) {
  const CliResult r = run("green --n 4 --mu 2,2 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.dump(2) + "\n", r.out);
  EXPECT_EQ(row_for(j["rows"], "(1,1,1,1)")["coefficients"], nlohmann::json({"1", "3", "2"}));
  EXPECT_EQ(row_for(j["rows"], "(4)")["coefficients"], nlohmann::json({"1", "-1"}));
}

TEST(Cli, GreenSmallCases) {
  const CliResult two = run("green --mu 1,1 --format csv");
  EXPECT_EQ(two.out, "class,coefficients\n\"(1,1)\",1 1\n(2),1 -1\n");
  const CliResult one = run("green --mu 1 --format csv");
  EXPECT_EQ(one.out, "class,coefficients\n(1),1\n");
}

TEST(Cli, EvalValues) {
  const CliResult r = run("eval --n 4 --mu 2,2 --e 2 --format json");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto rows = nlohmann::json::parse(r.out)["rows"];
  EXPECT_EQ(row_for(rows, "(2,2)")["values"], nlohmann::json({"2", "4"}));
  EXPECT_EQ(row_for(rows, "(4)")["values"], nlohmann::json({"0", "2"}));
  EXPECT_EQ(row_for(rows, "(1,1,1,1)")["values"], nlohmann::json({"6", "0"}));
}

TEST(Cli, EvalWithCosetCounts) {
  const CliResult r = run("eval --mu 1,1,1,1 --e 4 --m 1 --format json");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto row = row_for(nlohmann::json::parse(r.out)["rows"], "(4)");
  EXPECT_EQ(row["values"][1], "4");
  EXPECT_EQ(row["counts"][1], "4");
}

TEST(Cli, VerifyChecks) {
  EXPECT_EQ(run("verify prop37 --n 4 --mu 2,2 --e 2").status, 0);
  const CliResult r = run("verify remark38 --m 2 --e 2 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["notes"][0], "amended reading matches; printed reading differs on classes [(4), (1,1,1,1)]");
  EXPECT_TRUE(j["elapsed_ms"].is_number_integer());
  const CliResult f4 = run("verify lemma15 --family F --rank 4");
  EXPECT_EQ(f4.status, 0);
  EXPECT_NE(f4.out.find("no L-regular elements"), std::string::npos);
}

TEST(Cli, VerifyFailureExitsOne) {
  const CliResult b = run("verify lemma15 --family B --rank 4 --format csv");
  EXPECT_EQ(b.status, 1);
  EXPECT_NE(b.out.find("lemma15,fail,"), std::string::npos);
}

TEST(Cli, RegularElements) {
  EXPECT_EQ(run("regular --family A --rank 5 --e 3 --variant a").out, "(123)(456), regular, a(e)=2\n");
  EXPECT_EQ(run("regular --family B --rank 2 --e 4 --variant b").out, "-(12), regular, a(e)=1\n");
  const CliResult d = run("regular --family D --rank 4 --e 2 --variant c");
  EXPECT_EQ(d.status, 0);
  EXPECT_EQ(d.out, "-(1)-(2)-(3)-(4), regular, a(e)=4\n");
}

TEST(Cli, ConfigValidate) {
  EXPECT_EQ(run("config-validate --n 4 --pi-L 1,3 --a \"(13)(24)\" --e 2 --nu 2:2").status, 0);
  EXPECT_EQ(run("config-validate --n 4 --pi-L 1,3 --a \"(13)(24)\" --e 3").status, 2);
  EXPECT_EQ(run("config-validate --n 6 --pi-L 5 --a \"(123)\" --e 3").status, 2);
}

TEST(Cli, UsageAndBoundErrorsExitTwo) {
  EXPECT_EQ(run("green").status, 2);
  EXPECT_EQ(run("regular --family A --rank 5 --e 4 --variant a").status, 2);
  EXPECT_EQ(run("verify nonsense").status, 2);
  EXPECT_EQ(run("green --mu 2,2 --bound 10").status, 2);
  EXPECT_EQ(run("green --mu 2,2", "SPRINGER_ENUM_BOUND=10").status, 2);
  EXPECT_EQ(run("green --mu 2,2 --bound 100", "SPRINGER_ENUM_BOUND=10").status, 0);
}

TEST(Cli, JobsDoNotChangeOutput) {
  auto strip = [](std::string s) {
    const auto j = nlohmann::json::parse(s);
    auto k = j;
    k.erase("elapsed_ms");
    return k.dump();
  };
  const CliResult one = run("verify cor35 --mu 2,2,1 --e 2 --format json --jobs 1");
  const CliResult two = run("verify cor35 --mu 2,2,1 --e 2 --format json --jobs 2");
  ASSERT_EQ(one.status, 0);
  EXPECT_EQ(strip(one.out), strip(two.out));
}
